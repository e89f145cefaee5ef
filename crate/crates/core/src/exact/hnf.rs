//! Integer lattices via Hermite normal form.
//!
//! `IntLattice` maintains an integer row basis in echelon form (pivot
//! columns strictly increasing) under incremental insertion of generators.
//! Insertions use extended-gcd row combinations, so after any sequence of
//! inserts the rows are a basis of the lattice generated by everything
//! inserted so far. Entries are kept reduced, which keeps them small for
//! every lattice in this crate.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HnfError {
    /// Generators do not span full rank; reported, not fatal.
    #[error("rank deficient: rank {rank} of {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("sublattice is not contained in the ambient lattice")]
    NotASublattice,
    #[error("generator has wrong dimension: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

/// An integer lattice given by a row basis in Hermite-style echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl IntLattice {
    pub fn new(dim: usize) -> Self {
        IntLattice {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn basis(&self) -> &[Vec<i128>] {
        &self.rows
    }

    /// Inserts a generator, returning true if the lattice grew (in rank or
    /// in index).
    pub fn insert(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim, "generator has wrong dimension");
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut changed = false;
        let mut k = 0;
        let mut col = 0;
        while col < self.dim {
            if v.iter().take(col).any(|&x| x != 0) {
                unreachable!("columns below {col} already cleared");
            }
            if v[col] == 0 {
                col += 1;
                if k < self.pivots.len() && self.pivots[k] < col {
                    k += 1;
                }
                continue;
            }
            if k < self.pivots.len() && self.pivots[k] == col {
                let p = self.rows[k][col];
                if v[col] % p == 0 {
                    let f = v[col] / p;
                    for j in col..self.dim {
                        v[j] -= f * self.rows[k][j];
                    }
                } else {
                    // combine row and v so the row keeps gcd at the pivot
                    let (g, x, y) = egcd(p, v[col]);
                    let (pf, vf) = (p / g, v[col] / g);
                    for j in col..self.dim {
                        let r = self.rows[k][j];
                        let w = v[j];
                        self.rows[k][j] = x * r + y * w;
                        v[j] = pf * w - vf * r;
                    }
                    debug_assert_eq!(self.rows[k][col], g);
                    debug_assert_eq!(v[col], 0);
                    changed = true;
                }
                k += 1;
                col += 1;
            } else {
                // new pivot column
                if v[col] < 0 {
                    for x in v.iter_mut() {
                        *x = -*x;
                    }
                }
                self.rows.insert(k, v);
                self.pivots.insert(k, col);
                self.reduce_upward();
                return true;
            }
        }
        if changed {
            self.reduce_upward();
        }
        changed
    }

    /// Restores positive pivots and reduces entries above each pivot to the
    /// range [0, pivot).
    fn reduce_upward(&mut self) {
        for k in 0..self.rows.len() {
            if self.rows[k][self.pivots[k]] < 0 {
                for x in self.rows[k].iter_mut() {
                    *x = -*x;
                }
            }
        }
        // increasing pivot order: reducing by a later row only touches
        // columns at or beyond its pivot, so earlier columns stay reduced
        for k in 0..self.rows.len() {
            let col = self.pivots[k];
            let p = self.rows[k][col];
            for i in 0..k {
                let f = self.rows[i][col].div_euclid(p);
                if f != 0 {
                    for j in col..self.dim {
                        let sub = f * self.rows[k][j];
                        self.rows[i][j] -= sub;
                    }
                }
            }
        }
    }

    /// Membership test by exact reduction.
    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (k, &col) in self.pivots.iter().enumerate() {
            if v[..col].iter().any(|&x| x != 0) {
                return false;
            }
            if v[col] == 0 {
                continue;
            }
            let p = self.rows[k][col];
            if v[col] % p != 0 {
                return false;
            }
            let f = v[col] / p;
            for j in col..self.dim {
                v[j] -= f * self.rows[k][j];
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// |det| of the basis (product of pivots); full rank required.
    pub fn det_abs(&self) -> Result<BigInt, HnfError> {
        if !self.is_full_rank() {
            return Err(HnfError::RankDeficient {
                rank: self.rank(),
                dim: self.dim,
            });
        }
        let mut d = BigInt::one();
        for (k, &col) in self.pivots.iter().enumerate() {
            d *= BigInt::from(self.rows[k][col]);
        }
        Ok(d)
    }

    /// Index of `self` as a sublattice of `ambient`.
    ///
    /// Verifies containment of every basis row first, so the returned
    /// quotient of determinants is a genuine group index.
    pub fn index_in(&self, ambient: &IntLattice) -> Result<BigInt, HnfError> {
        let d_sub = self.det_abs()?;
        let d_amb = ambient.det_abs()?;
        for row in &self.rows {
            let as_i64: Vec<i64> = row.iter().map(|&x| x as i64).collect();
            if !ambient.contains(&as_i64) {
                return Err(HnfError::NotASublattice);
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&d_sub, &d_amb);
        debug_assert!(num_traits::Zero::is_zero(&r));
        Ok(q)
    }
}

/// Hermite-form basis of the lattice generated by integer vectors.
///
/// Returns the lattice even when rank-deficient; callers that need full
/// rank check [`IntLattice::is_full_rank`] or take the error from
/// [`IntLattice::det_abs`].
pub fn hermite_normal_form(gens: &[Vec<i64>]) -> Result<IntLattice, HnfError> {
    let dim = match gens.first() {
        None => return Ok(IntLattice::new(0)),
        Some(g) => g.len(),
    };
    let mut lat = IntLattice::new(dim);
    for g in gens {
        if g.len() != dim {
            return Err(HnfError::Dimension {
                expected: dim,
                got: g.len(),
            });
        }
        lat.insert(g);
    }
    Ok(lat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn standard_basis_z2() {
        let lat = hermite_normal_form(&[vec![1, 0], vec![0, 1]]).unwrap();
        let ambient = hermite_normal_form(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(lat.index_in(&ambient).unwrap(), BigInt::from(1));
    }

    #[test]
    fn index_two_in_z2() {
        let sub = hermite_normal_form(&[vec![2, 0], vec![0, 1]]).unwrap();
        let ambient = hermite_normal_form(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(sub.index_in(&ambient).unwrap(), BigInt::from(2));
        assert!(ambient.index_in(&sub).is_err());
    }

    #[test]
    fn rank_deficient_reported() {
        let lat = hermite_normal_form(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(
            lat.det_abs(),
            Err(HnfError::RankDeficient { rank: 1, dim: 3 })
        );
    }

    #[test]
    fn generates_same_lattice() {
        let gens = vec![
            vec![6, 9, 3],
            vec![4, 2, 8],
            vec![10, 5, 15],
            vec![2, 7, -5],
        ];
        let lat = hermite_normal_form(&gens).unwrap();
        // every generator is in the lattice of the basis
        for g in &gens {
            assert!(lat.contains(g));
        }
        // and every basis row is an integer combination of the generators:
        // rebuilding from basis rows gives the identical echelon form
        let rows: Vec<Vec<i64>> = lat
            .basis()
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        let rebuilt = hermite_normal_form(&rows).unwrap();
        assert_eq!(rebuilt, lat);
    }

    #[test]
    fn gcd_combination_path() {
        // rows 2e1 and 3e1 generate e1
        let lat = hermite_normal_form(&[vec![2, 0], vec![3, 0]]).unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.basis()[0], vec![1, 0]);
        assert!(lat.contains(&[7, 0]));
        assert!(!lat.contains(&[0, 1]));
    }

    #[test]
    fn negative_entries_normalized() {
        let lat = hermite_normal_form(&[vec![-3, 1], vec![0, -5]]).unwrap();
        assert_eq!(lat.det_abs().unwrap(), BigInt::from(15));
        for row in lat.basis() {
            let pivot = row.iter().find(|&&x| x != 0).unwrap();
            assert!(*pivot > 0);
        }
    }
}
