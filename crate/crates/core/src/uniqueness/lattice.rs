//! Lattice-level checks: integrality and evenness of the generated
//! lattice, inner-product closure, and the sublattice index in the Leech
//! lattice via Hermite normal forms.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{HnfError, IntLattice};
use crate::leech::{LeechSet, ScaledVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("generators {i} and {j} have non-integral inner product")]
    NotIntegral { i: usize, j: usize },
    #[error("generator {i} has odd norm")]
    NotEven { i: usize },
    #[error(transparent)]
    Hnf(#[from] HnfError),
}

/// The generator list of the lattice L spanned by the members and anchors,
/// verified even and integral.
#[derive(Debug, Clone)]
pub struct AssembledLattice {
    pub generators: Vec<ScaledVector>,
    /// Distinct integer dot products observed among the generators.
    pub product_values: Vec<i32>,
}

/// Verifies that all pairwise inner products among the generators are
/// integers and all norms are even, returning the generator list and the
/// observed inner-product values.
pub fn assemble_lattice(
    members: &[ScaledVector],
    anchors: &[ScaledVector],
) -> Result<AssembledLattice, LatticeError> {
    let mut generators: Vec<ScaledVector> = Vec::with_capacity(members.len() + anchors.len());
    generators.extend_from_slice(anchors);
    generators.extend_from_slice(members);
    // products are integral iff every dot ≡ 0 (mod 8); norms even iff
    // ≡ 0 (mod 16)
    for (i, g) in generators.iter().enumerate() {
        if g.norm_int() % 16 != 0 {
            return Err(LatticeError::NotEven { i });
        }
    }
    let violation = generators.par_iter().enumerate().find_map_first(|(i, a)| {
        for (j, b) in generators.iter().enumerate().skip(i + 1) {
            if a.dot_int(b) % 8 != 0 {
                return Some((i, j));
            }
        }
        None
    });
    if let Some((i, j)) = violation {
        return Err(LatticeError::NotIntegral { i, j });
    }
    let mut values: Vec<i32> = generators
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut local: Vec<i32> = generators[i + 1..].iter().map(|b| a.dot_int(b)).collect();
            local.sort_unstable();
            local.dedup();
            local
        })
        .reduce(Vec::new, |mut acc, mut l| {
            acc.append(&mut l);
            acc.sort_unstable();
            acc.dedup();
            acc
        });
    values.sort_unstable();
    Ok(AssembledLattice {
        generators,
        product_values: values,
    })
}

/// True iff every pairwise inner product among the generators and their
/// negatives lies in {0, ±1, ±2, ±4}.
pub fn minimal_ip_closure_check(lattice: &AssembledLattice) -> bool {
    // products with negated generators are the negated products, so the
    // symmetric condition reduces to |dot| ∈ {0, 8, 16, 32}
    lattice
        .product_values
        .iter()
        .all(|d| matches!(d.abs(), 0 | 8 | 16 | 32))
}

/// The index of the lattice spanned by `generators` inside the Leech
/// lattice (itself presented by the lattice its minimal vectors generate).
pub fn index_in_leech(
    generators: &[ScaledVector],
    leech: &LeechSet,
) -> Result<BigInt, LatticeError> {
    let ambient = leech_lattice_hnf(leech);
    let mut sub = IntLattice::new(24);
    for g in generators {
        sub.insert(&g.coords_i64());
    }
    Ok(sub.index_in(&ambient)?)
}

/// Hermite basis of the lattice generated by all minimal vectors.
pub fn leech_lattice_hnf(leech: &LeechSet) -> IntLattice {
    let mut lat = IntLattice::new(24);
    for v in leech.vectors() {
        lat.insert(&v.coords_i64());
    }
    lat
}

/// A minimal vector with odd inner product with `v0`, if one exists; such
/// a witness shows the generated lattice is proper inside the Leech
/// lattice when every generator has even inner product with `v0`.
pub fn odd_product_witness<'a>(leech: &'a LeechSet, v0: &ScaledVector) -> Option<&'a ScaledVector> {
    leech
        .vectors()
        .iter()
        .find(|v| (v.dot_int(v0) / 8) % 2 != 0)
}
