//! Linear programming and packing bounds for binary codes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::exact::{krawtchouk, rat_i, Rational};

use super::simplex::{simplex_solve, Constraint, LinearProgram, Relation, SimplexOutcome};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("invalid parameters: minimum distance {d} exceeds 2w = {int_bound}")]
    InvalidParameters { d: u32, int_bound: u32 },
    #[error("allowed distances must lie in 1..=n")]
    DistanceOutOfRange,
}

/// Result of a binary-code LP bound: the exact rational optimum of
/// 1 + max Σ B_i, and its integer floor. Reporting the exact value keeps
/// near-integrality visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpBound {
    pub exact: Rational,
    pub bound: BigInt,
}

/// Delsarte LP bound for binary codes of length `n` whose nonzero pairwise
/// distances all lie in `allowed_distances`: maximizes Σ B_i over B_i ≥ 0
/// supported on the allowed distances, subject to the Krawtchouk
/// constraints Σ_i B_i K_k(i) ≥ -C(n,k) for k = 1..n, exactly.
pub fn binary_code_lp_bound(n: u32, allowed_distances: &[u32]) -> Result<LpBound, BoundError> {
    if allowed_distances.iter().any(|&d| d == 0 || d > n) {
        return Err(BoundError::DistanceOutOfRange);
    }
    let mut dists: Vec<u32> = allowed_distances.to_vec();
    dists.sort_unstable();
    dists.dedup();
    let mut constraints = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let kraw = krawtchouk(n, k);
        let coeffs: Vec<Rational> = dists.iter().map(|&i| kraw.eval(&rat_i(i as i64))).collect();
        constraints.push(Constraint {
            coeffs,
            rel: Relation::Ge,
            rhs: -kraw.eval(&rat_i(0)),
        });
    }
    let lp = LinearProgram {
        objective: vec![rat_i(1); dists.len()],
        constraints,
    };
    match simplex_solve(&lp) {
        SimplexOutcome::Optimal { value, .. } => {
            let exact = value + rat_i(1);
            let bound = exact.numer().div_floor(exact.denom());
            Ok(LpBound { exact, bound })
        }
        SimplexOutcome::Infeasible { .. } => {
            // B = 0 is always feasible, so this cannot happen
            unreachable!("binary LP has the feasible point B = 0")
        }
        SimplexOutcome::Unbounded { .. } => {
            unreachable!("binary LP is bounded by the k = n constraint")
        }
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Packing bound for constant-weight codes: N ≤ C(n, s+1)/C(w, s+1) with
/// s = w - d/2. Words of weight w at pairwise distance ≥ d intersect in at
/// most s points, so their (s+1)-subsets are disjoint.
pub fn constant_weight_bound(n: u32, d: u32, w: u32) -> Result<BigInt, BoundError> {
    assert!(d % 2 == 0, "constant-weight distances are even");
    assert!(w <= n);
    if d > 2 * w {
        return Err(BoundError::InvalidParameters {
            d,
            int_bound: 2 * w,
        });
    }
    let s = w - d / 2;
    let num = binom(n as u64, s as u64 + 1);
    let den = binom(w as u64, s as u64 + 1);
    Ok(num.div_floor(&den))
}
