//! Derived spherical codes and their exact invariants.
//!
//! A derived code is represented by ambient Leech vectors plus an anchor
//! chain, never by explicit irrational projected coordinates: every
//! quantity of interest is a rational function of the integer inner
//! products. Projecting one level maps a normalized inner product s to
//! (s - t²)/(1 - t²), where t is that level's maximal inner product, so
//! pairwise inner products of the projected code are obtained by folding
//! the level maps over the ambient value.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{gegenbauer, rat_i, solve_linear_system, LinAlgError, Rational};
use crate::leech::{ScaledVector, VectorSection};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodesError {
    #[error("base vector is not a member of the code")]
    BaseNotMember,
    /// No member attains the maximal inner product with the base.
    #[error("empty neighborhood: no member at the maximal inner product")]
    EmptyNeighborhood,
    #[error("odd dimensions are not supported by the sphere moment formula")]
    OddDimensionUnsupported,
    #[error("duplicate inner-product values make the moment system singular")]
    SingularMatrix,
    #[error("design strength {strength} is too low for {alphas} inner products")]
    InsufficientStrength { strength: usize, alphas: usize },
    #[error(
        "not an association scheme: pairs ({i},{j}) and ({k},{l}) at the same \
         inner product have different intersection counts"
    )]
    NotAScheme {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("spectrum has {0} classes; intersection numbers limited to 5")]
    SpectrumTooLarge(usize),
    #[error("anchors are inconsistent: member inner products with an anchor differ")]
    InconsistentAnchors,
}

/// A spherical code cut out of the Leech minimal vectors by an anchor
/// chain. With `k` anchors the code lives on a sphere in dimension `24-k`.
#[derive(Debug, Clone)]
pub struct DerivedCode {
    anchors: Vec<ScaledVector>,
    members: Vec<ScaledVector>,
    /// Maximal projected inner product consumed at each derivation level.
    level_params: Vec<Rational>,
}

impl DerivedCode {
    /// The root configuration: a set of norm-4 vectors viewed on the unit
    /// sphere in dimension 24 (each vector scaled by 1/2).
    pub fn root(members: Vec<ScaledVector>) -> Self {
        let mut members = members;
        members.sort_unstable();
        DerivedCode {
            anchors: Vec::new(),
            members,
            level_params: Vec::new(),
        }
    }

    /// Builds a derived code from known parts without consistency checks;
    /// the verification pipelines use this so that corrupted member sets
    /// flow into the downstream checks instead of failing construction.
    pub fn with_params(
        anchors: Vec<ScaledVector>,
        members: Vec<ScaledVector>,
        level_params: Vec<Rational>,
    ) -> Self {
        let mut members = members;
        members.sort_unstable();
        DerivedCode {
            anchors,
            members,
            level_params,
        }
    }

    /// Reassembles a derived code from anchors and members (as read from a
    /// file), recomputing the level parameters and verifying that every
    /// member has the same inner product with every anchor.
    pub fn from_parts(
        anchors: Vec<ScaledVector>,
        members: Vec<ScaledVector>,
    ) -> Result<Self, CodesError> {
        let mut code = DerivedCode::root(members);
        for anchor in anchors {
            let t = code
                .members
                .first()
                .map(|m| code.project(ambient_normalized(m, &anchor)))
                .ok_or(CodesError::EmptyNeighborhood)?;
            if code
                .members
                .iter()
                .any(|m| code.project(ambient_normalized(m, &anchor)) != t)
            {
                return Err(CodesError::InconsistentAnchors);
            }
            code.anchors.push(anchor);
            code.level_params.push(t);
        }
        Ok(code)
    }

    pub fn anchors(&self) -> &[ScaledVector] {
        &self.anchors
    }

    pub fn members(&self) -> &[ScaledVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn level_params(&self) -> &[Rational] {
        &self.level_params
    }

    /// Effective dimension: 24 minus the number of anchors.
    pub fn dim(&self) -> u32 {
        24 - self.anchors.len() as u32
    }

    /// Folds the level maps over an ambient normalized inner product.
    pub fn project(&self, mut s: Rational) -> Rational {
        for t in &self.level_params {
            let t2 = t * t;
            s = (s - &t2) / (rat_i(1) - &t2);
        }
        s
    }

    /// Exact projected inner product between two ambient vectors.
    pub fn projected_inner(&self, v: &ScaledVector, w: &ScaledVector) -> Rational {
        self.project(ambient_normalized(v, w))
    }

    /// Derives the kissing configuration at `base`: the sub-code of members
    /// at the maximal projected inner product t from `base`, one dimension
    /// down, with the projected products following s ↦ (s-t²)/(1-t²).
    pub fn derive_kissing(&self, base: &ScaledVector) -> Result<DerivedCode, CodesError> {
        if self.members.binary_search(base).is_err() {
            return Err(CodesError::BaseNotMember);
        }
        let mut best: Option<i32> = None;
        for m in &self.members {
            if m == base {
                continue;
            }
            let d = m.dot_int(base);
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        let best = best.ok_or(CodesError::EmptyNeighborhood)?;
        let t = self.project(rat_i(best as i64) / rat_i(32));
        let members: Vec<ScaledVector> = self
            .members
            .iter()
            .filter(|m| *m != base && m.dot_int(base) == best)
            .copied()
            .collect();
        let mut anchors = self.anchors.clone();
        anchors.push(*base);
        let mut level_params = self.level_params.clone();
        level_params.push(t);
        Ok(DerivedCode {
            anchors,
            members,
            level_params,
        })
    }

    /// Maximal projected inner product over distinct members.
    pub fn max_inner(&self) -> Option<Rational> {
        self.int_pair_histogram()
            .keys()
            .next_back()
            .map(|&d| self.project(rat_i(d as i64) / rat_i(32)))
    }

    /// Histogram of integer ambient dot products over unordered distinct
    /// member pairs. All projected statistics derive from this. The scan
    /// is chunk-parallel with array-indexed counters (Cauchy-Schwarz
    /// bounds every dot by the maximal norm), so it stays usable on the
    /// full minimal-vector configuration.
    pub fn int_pair_histogram(&self) -> BTreeMap<i32, u64> {
        let bound = self
            .members
            .iter()
            .map(ScaledVector::norm_int)
            .max()
            .unwrap_or(0) as usize;
        let width = 2 * bound + 1;
        let hist = self
            .members
            .par_iter()
            .enumerate()
            .fold(
                || vec![0u64; width],
                |mut acc, (i, v)| {
                    for w in &self.members[i + 1..] {
                        acc[(v.dot_int(w) + bound as i32) as usize] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; width],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        *x += y;
                    }
                    a
                },
            );
        hist.into_iter()
            .enumerate()
            .filter(|&(_, count)| count > 0)
            .map(|(idx, count)| (idx as i32 - bound as i32, count))
            .collect()
    }

    /// Multiset of exact projected inner products over unordered distinct
    /// pairs.
    pub fn spectrum(&self) -> BTreeMap<Rational, u64> {
        self.int_pair_histogram()
            .into_iter()
            .map(|(d, n)| (self.project(rat_i(d as i64) / rat_i(32)), n))
            .collect()
    }

    /// Largest t ≤ k_max with Σ_{x,y} G_k(⟨x,y⟩) = 0 exactly for all
    /// 1 ≤ k ≤ t, the sum running over ordered pairs including x = y.
    pub fn design_strength(&self, k_max: u32) -> u32 {
        let hist = self.int_pair_histogram();
        design_strength_from_histogram(self.dim(), self.len() as u64, &hist, k_max, |d| {
            self.project(rat_i(d as i64) / rat_i(32))
        })
    }

    /// Partitions members by their individual inner-product histograms.
    /// Returns the classes, largest first, as member indices.
    pub fn orbit_split_by_histogram(&self) -> Vec<Vec<usize>> {
        let keys: Vec<Vec<(i32, u32)>> = self
            .members
            .par_iter()
            .map(|v| {
                let mut h = BTreeMap::new();
                for w in &self.members {
                    if w != v {
                        *h.entry(v.dot_int(w)).or_insert(0u32) += 1;
                    }
                }
                h.into_iter().collect()
            })
            .collect();
        let mut classes: HashMap<&[(i32, u32)], Vec<usize>> = HashMap::new();
        for (i, k) in keys.iter().enumerate() {
            classes.entry(k.as_slice()).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = classes.into_values().collect();
        out.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first().copied()));
        out
    }

    /// Intersection numbers P_γ(α,β) with full constancy verification over
    /// every ordered pair (the association-scheme property).
    pub fn intersection_numbers(&self) -> Result<IntersectionTable, CodesError> {
        let n = self.len();
        let hist = self.int_pair_histogram();
        let mut dots: Vec<i32> = hist.keys().copied().collect();
        dots.sort_unstable_by(|a, b| b.cmp(a)); // decreasing inner product
        if dots.len() > 4 {
            return Err(CodesError::SpectrumTooLarge(dots.len() + 1));
        }
        // class 0 = the diagonal (inner product 1); classes 1.. follow dots
        let class_of = |d: i32| -> u8 {
            1 + dots
                .iter()
                .position(|&x| x == d)
                .expect("product in spectrum") as u8
        };
        let cls: Vec<Vec<u8>> = self
            .members
            .par_iter()
            .enumerate()
            .map(|(i, v)| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            0
                        } else {
                            class_of(v.dot_int(&self.members[j]))
                        }
                    })
                    .collect()
            })
            .collect();
        let nc = dots.len() + 1;
        let count_pair = |i: usize, j: usize| -> Vec<u64> {
            let mut counts = vec![0u64; nc * nc];
            let (ri, rj) = (&cls[i], &cls[j]);
            for k in 0..n {
                counts[ri[k] as usize * nc + rj[k] as usize] += 1;
            }
            counts
        };
        // expected tables from the first pair of each class, scanned in row
        // order so the reference choice is deterministic
        let mut expected: Vec<Option<(usize, usize, Vec<u64>)>> = vec![None; nc];
        for i in 0..n {
            for j in 0..n {
                let g = cls[i][j] as usize;
                if expected[g].is_none() {
                    expected[g] = Some((i, j, count_pair(i, j)));
                }
            }
            if expected.iter().all(Option::is_some) {
                break;
            }
        }
        // full O(N³) verification, chunk-parallel over the first index
        let violation = (0..n).into_par_iter().find_map_first(|i| {
            for j in 0..n {
                let g = cls[i][j] as usize;
                let (ei, ej, ref table) = *expected[g].as_ref().unwrap();
                if &count_pair(i, j) != table {
                    return Some((i, j, ei, ej));
                }
            }
            None
        });
        if let Some((i, j, k, l)) = violation {
            return Err(CodesError::NotAScheme { i, j, k, l });
        }
        let values: Vec<Rational> = std::iter::once(rat_i(1))
            .chain(
                dots.iter()
                    .map(|&d| self.project(rat_i(d as i64) / rat_i(32))),
            )
            .collect();
        let tables = expected
            .into_iter()
            .map(|e| e.unwrap().2)
            .collect::<Vec<_>>();
        Ok(IntersectionTable { values, tables })
    }
}

fn ambient_normalized(v: &ScaledVector, w: &ScaledVector) -> Rational {
    rat_i(v.dot_int(w) as i64) / rat_i(32)
}

/// Design-strength computation shared by [`DerivedCode::design_strength`]
/// and the histogram path for the full minimal-vector configuration: one
/// pairwise pass reduced to a weighted sum over the distinct products.
pub fn design_strength_from_histogram(
    dim: u32,
    n_points: u64,
    hist: &BTreeMap<i32, u64>,
    k_max: u32,
    project: impl Fn(i32) -> Rational,
) -> u32 {
    let values: Vec<(Rational, u64)> = hist.iter().map(|(&d, &c)| (project(d), c)).collect();
    let mut strength = 0;
    for k in 1..=k_max {
        let g = gegenbauer(dim, k);
        // ordered pairs double the unordered counts; the diagonal adds
        // N·G_k(1) = N
        let mut sum = rat_i(n_points as i64);
        for (val, count) in &values {
            sum += rat_i(2) * rat_i(*count as i64) * g.eval(val);
        }
        if !sum.is_zero() {
            break;
        }
        strength = k;
    }
    strength
}

/// Positive-semidefiniteness check: Σ_{x,y} G_k(⟨x,y⟩) ≥ 0 for all k up to
/// `k_max`. Any exact negative sum indicates a bug.
pub fn gegenbauer_sums_nonnegative(code: &DerivedCode, k_max: u32) -> bool {
    let hist = code.int_pair_histogram();
    let n = code.len() as i64;
    for k in 1..=k_max {
        let g = gegenbauer(code.dim(), k);
        let mut sum = rat_i(n);
        for (&d, &count) in &hist {
            sum +=
                rat_i(2) * rat_i(count as i64) * g.eval(&code.project(rat_i(d as i64) / rat_i(32)));
        }
        if sum.is_negative() {
            return false;
        }
    }
    true
}

/// Exact value of ∫ ⟨z,u⟩^i dμ(z) over the unit sphere S^{n-1} with μ
/// normalized to total volume 1 and |u|² = r_sq. Odd moments vanish; even
/// moments are |u|^i · i! (n/2-1)! / ((i/2+n/2-1)! (i/2)! 2^i).
pub fn sphere_moment(n: u32, i: u32, r_sq: &Rational) -> Result<Rational, CodesError> {
    if n % 2 != 0 {
        return Err(CodesError::OddDimensionUnsupported);
    }
    if i % 2 == 1 {
        return Ok(rat_i(0));
    }
    let h = n / 2;
    let k = i / 2;
    // i! (h-1)! / ((k+h-1)! k! 2^i), with the factorial quotient reduced to
    // (h-1)!/(k+h-1)! = 1/(h(h+1)...(h+k-1))
    let mut acc = Rational::one();
    for j in 1..=i {
        acc *= rat_i(j as i64);
    }
    for j in 0..k {
        acc /= rat_i((h + j) as i64);
    }
    for j in 1..=k {
        acc /= rat_i(j as i64);
    }
    for _ in 0..i {
        acc /= rat_i(2);
    }
    // |u|^i = r_sq^{i/2}
    let mut scale = Rational::one();
    for _ in 0..k {
        scale *= r_sq;
    }
    Ok(acc * scale)
}

/// Exact solution N_α of the moment system Σ_α N_α α^i = N·m_i(n, r_sq)
/// for i = 0..alphas.len()-1. Values may be negative or non-integral;
/// that is the point of the contradiction argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionCounts {
    pub alphas: Vec<Rational>,
    pub counts: Vec<Rational>,
}

impl DistributionCounts {
    pub fn count_for(&self, alpha: &Rational) -> Option<&Rational> {
        self.alphas
            .iter()
            .position(|a| a == alpha)
            .map(|i| &self.counts[i])
    }

    pub fn any_negative(&self) -> bool {
        self.counts.iter().any(Signed::is_negative)
    }
}

pub fn solve_distribution(
    n_points: u64,
    dim: u32,
    r_sq: &Rational,
    alphas: &[Rational],
    design_strength: u32,
) -> Result<DistributionCounts, CodesError> {
    if alphas.len() > design_strength as usize + 1 {
        return Err(CodesError::InsufficientStrength {
            strength: design_strength as usize,
            alphas: alphas.len(),
        });
    }
    let m = alphas.len();
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for i in 0..m {
        // α^0 = 1 for every α, including α = 0
        let row: Vec<Rational> = alphas
            .iter()
            .map(|alpha| {
                let mut p = Rational::one();
                for _ in 0..i {
                    p *= alpha;
                }
                p
            })
            .collect();
        a.push(row);
        b.push(rat_i(n_points as i64) * sphere_moment(dim, i as u32, r_sq)?);
    }
    let counts = solve_linear_system(&a, &b).map_err(|e| match e {
        LinAlgError::SingularMatrix => CodesError::SingularMatrix,
        LinAlgError::Shape { .. } => unreachable!("square by construction"),
    })?;
    Ok(DistributionCounts {
        alphas: alphas.to_vec(),
        counts,
    })
}

/// Association-scheme intersection numbers. `values[0]` is always 1 (the
/// diagonal class); `values[1..]` are the distinct inner products in
/// decreasing order. `P_γ(α,β)` is `tables[γ][α·nc+β]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTable {
    values: Vec<Rational>,
    tables: Vec<Vec<u64>>,
}

impl IntersectionTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, gamma: &Rational, alpha: &Rational, beta: &Rational) -> Option<u64> {
        let nc = self.values.len();
        let gi = self.values.iter().position(|v| v == gamma)?;
        let ai = self.values.iter().position(|v| v == alpha)?;
        let bi = self.values.iter().position(|v| v == beta)?;
        Some(self.tables[gi][ai * nc + bi])
    }

    /// Symmetry, Kronecker-delta and valency consistency of the table.
    pub fn verify_invariants(&self) -> bool {
        let nc = self.values.len();
        let valency = |a: usize| -> u64 { self.tables[0][a * nc + a] };
        for g in 0..nc {
            for a in 0..nc {
                // P_γ(α,1) = δ_{α,γ}: class 0 is the diagonal value 1
                if self.tables[g][a * nc] != u64::from(a == g) {
                    return false;
                }
                for b in 0..nc {
                    if self.tables[g][a * nc + b] != self.tables[g][b * nc + a] {
                        return false;
                    }
                }
                // row sums: Σ_β P_γ(α,β) = P_1(α,α)
                let sum: u64 = (0..nc).map(|b| self.tables[g][a * nc + b]).sum();
                if sum != valency(a) {
                    return false;
                }
            }
        }
        // P_1(α,β) = 0 off the diagonal
        for a in 0..nc {
            for b in 0..nc {
                if a != b && self.tables[0][a * nc + b] != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Serializes a derived code as two sections: anchors, then members.
pub fn code_sections(code: &DerivedCode) -> Vec<VectorSection> {
    vec![
        VectorSection {
            role: Some("anchor".into()),
            vectors: code.anchors().to_vec(),
        },
        VectorSection {
            role: None,
            vectors: code.members().to_vec(),
        },
    ]
}

/// Rebuilds a derived code from sections written by [`code_sections`].
pub fn code_from_sections(sections: Vec<VectorSection>) -> Result<DerivedCode, CodesError> {
    let mut anchors = Vec::new();
    let mut members = Vec::new();
    for s in sections {
        if s.role.as_deref() == Some("anchor") {
            anchors.extend(s.vectors);
        } else {
            members.extend(s.vectors);
        }
    }
    DerivedCode::from_parts(anchors, members)
}
