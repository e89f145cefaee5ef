//! Integer-coordinate lattice vectors at global scale 1/√8.

use std::fmt;

use crate::exact::{rat_i, Rational};

/// A 24-dimensional lattice vector with integer coordinates, denoting
/// `coords/√8`. Coordinates of every vector in this crate fit in `i8`
/// (minimal vectors use [-4, 4], frame vectors at most ±8); inner products
/// accumulate in wider integers before the division by 8.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledVector {
    coords: [i8; 24],
}

impl ScaledVector {
    pub const DIM: usize = 24;

    pub fn new(coords: [i8; 24]) -> Self {
        ScaledVector { coords }
    }

    pub fn zero() -> Self {
        ScaledVector { coords: [0; 24] }
    }

    pub fn coords(&self) -> &[i8; 24] {
        &self.coords
    }

    /// Integer dot product Σ cᵢdᵢ (8 times the exact inner product).
    /// Accumulated in 64 bits; the result of any two stored vectors is
    /// bounded by 24·127² and always fits an `i32`.
    #[inline]
    pub fn dot_int(&self, other: &ScaledVector) -> i32 {
        let mut acc = 0i64;
        for i in 0..24 {
            acc += self.coords[i] as i64 * other.coords[i] as i64;
        }
        acc as i32
    }

    /// Integer norm Σ cᵢ² (8 times the exact norm).
    #[inline]
    pub fn norm_int(&self) -> i32 {
        self.dot_int(self)
    }

    /// Exact inner product (Σ cᵢdᵢ)/8.
    pub fn inner(&self, other: &ScaledVector) -> Rational {
        rat_i(self.dot_int(other) as i64) / rat_i(8)
    }

    /// Exact norm (Σ cᵢ²)/8.
    pub fn norm(&self) -> Rational {
        self.inner(self)
    }

    pub fn neg(&self) -> ScaledVector {
        let mut c = [0i8; 24];
        for i in 0..24 {
            c[i] = -self.coords[i];
        }
        ScaledVector { coords: c }
    }

    pub fn add(&self, other: &ScaledVector) -> ScaledVector {
        let mut c = [0i8; 24];
        for i in 0..24 {
            let v = self.coords[i] as i16 + other.coords[i] as i16;
            c[i] = i8::try_from(v).expect("coordinate overflow");
        }
        ScaledVector { coords: c }
    }

    pub fn sub(&self, other: &ScaledVector) -> ScaledVector {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: i8) -> ScaledVector {
        let mut c = [0i8; 24];
        for i in 0..24 {
            let v = self.coords[i] as i16 * s as i16;
            c[i] = i8::try_from(v).expect("coordinate overflow");
        }
        ScaledVector { coords: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn coords_i64(&self) -> Vec<i64> {
        self.coords.iter().map(|&x| x as i64).collect()
    }
}

impl fmt::Debug for ScaledVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")/√8")
    }
}

impl fmt::Display for ScaledVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
