//! Exact linear solving over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    /// det(A) = 0; for moment systems this signals duplicate inner-product
    /// values.
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: matrix is {rows}x{cols}, rhs has {rhs}")]
    Shape {
        rows: usize,
        cols: usize,
        rhs: usize,
    },
}

/// Solves `A x = b` exactly for square invertible `A`.
///
/// Rows are first scaled to integers, then eliminated fraction-free
/// (Bareiss): all intermediate entries stay integral, which bounds
/// coefficient growth; the only divisions happen in back-substitution and
/// are exact by construction.
pub fn solve_linear_system(
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Result<Vec<Rational>, LinAlgError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(LinAlgError::Shape {
            rows: n,
            cols: a.first().map_or(0, Vec::len),
            rhs: b.len(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    // clear denominators row by row: solution is unchanged
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (row, rhs) in a.iter().zip(b) {
        let mut lcm = BigInt::one();
        for x in row.iter().chain(std::iter::once(rhs)) {
            lcm = lcm.lcm(x.denom());
        }
        let scaled = row
            .iter()
            .chain(std::iter::once(rhs))
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        m.push(scaled);
    }

    // fraction-free forward elimination
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    // row swap flips the sign of every subsequent 2x2
                    // determinant; compensate to keep divisions exact
                    for c in m[k].iter_mut() {
                        *c = -&*c;
                    }
                }
                None => return Err(LinAlgError::SingularMatrix),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if m[n - 1][n - 1].is_zero() {
        return Err(LinAlgError::SingularMatrix);
    }

    // back-substitution over rationals
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}
