//! The binary Golay code and the minimal vectors of the Leech lattice.
//!
//! Vectors carry integer coordinates with a global scale of 1/√8: a stored
//! coordinate vector `c` denotes the point `c/√8`, so the minimal vectors
//! have integer norm 32 and exact norm 4. Inner products of stored vectors
//! are `Σ cᵢdᵢ / 8`, which is an integer for any two lattice vectors.
//!
//! The 196560 minimal vectors decompose into three shapes:
//!
//! | shape                | count  | construction                                   |
//! |----------------------|--------|------------------------------------------------|
//! | (±4, ±4, 0²²)        | 1104   | two positions, all four sign pairs             |
//! | (±2⁸, 0¹⁶)           | 97152  | ±2 on a Golay octad, evenly many minus signs   |
//! | (∓3, ±1²³)           | 98304  | sign pattern from a Golay codeword, one special |
//!
//! Every vector lies in one of the two standard congruence cosets: all
//! coordinates even with `x/2 mod 2` a Golay word and `Σx ≡ 0 (mod 8)`, or
//! all coordinates odd with `(x-1)/2 mod 2` a Golay word and `Σx ≡ 4 (mod 8)`.

mod files;
mod golay;
mod vector;

pub use files::{
    read_vector_sections, read_vector_set, write_vector_sections, write_vector_set, FileError,
    VectorSection,
};
pub use golay::{build_golay, BinaryCode};
pub use vector::ScaledVector;

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::exact::Rational;

/// The 196560 minimal vectors of the Leech lattice, sorted lexicographically,
/// together with the Golay code that produced them.
#[derive(Debug, Clone)]
pub struct LeechSet {
    vectors: Vec<ScaledVector>,
    golay: BinaryCode,
}

impl LeechSet {
    /// Builds all minimal vectors. Deterministic; the result is sorted.
    pub fn build() -> Self {
        let golay = build_golay();
        let mut vectors = Vec::with_capacity(196_560);

        // (±4, ±4, 0^22)
        for i in 0..24usize {
            for j in i + 1..24 {
                for signs in 0..4u8 {
                    let mut c = [0i8; 24];
                    c[i] = if signs & 1 == 0 { 4 } else { -4 };
                    c[j] = if signs & 2 == 0 { 4 } else { -4 };
                    vectors.push(ScaledVector::new(c));
                }
            }
        }

        // (±2^8, 0^16) on octads, even number of minus signs
        for octad in golay.octads() {
            let positions: Vec<usize> = (0..24).filter(|&i| octad >> i & 1 == 1).collect();
            debug_assert_eq!(positions.len(), 8);
            for sign_bits in 0..256u32 {
                if sign_bits.count_ones() % 2 == 1 {
                    continue;
                }
                let mut c = [0i8; 24];
                for (bit, &p) in positions.iter().enumerate() {
                    c[p] = if sign_bits >> bit & 1 == 0 { 2 } else { -2 };
                }
                vectors.push(ScaledVector::new(c));
            }
        }

        // (∓3, ±1^23): one per (position, codeword) pair
        for special in 0..24usize {
            for &word in golay.words() {
                let mut c = [0i8; 24];
                for (i, ci) in c.iter_mut().enumerate() {
                    let bit = word >> i & 1;
                    *ci = if i == special {
                        if bit == 1 {
                            3
                        } else {
                            -3
                        }
                    } else if bit == 1 {
                        -1
                    } else {
                        1
                    };
                }
                vectors.push(ScaledVector::new(c));
            }
        }

        vectors.sort_unstable();
        debug_assert!(vectors.windows(2).all(|w| w[0] < w[1]));
        LeechSet { vectors, golay }
    }

    /// Rebuilds from a cached vector list, re-deriving the Golay code.
    pub fn from_vectors(mut vectors: Vec<ScaledVector>) -> Self {
        vectors.sort_unstable();
        LeechSet {
            vectors,
            golay: build_golay(),
        }
    }

    pub fn vectors(&self) -> &[ScaledVector] {
        &self.vectors
    }

    pub fn golay(&self) -> &BinaryCode {
        &self.golay
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Counts per shape class: ((±4,±4,0²²), (±2⁸,0¹⁶), (∓3,±1²³)).
    pub fn shape_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0usize, 0usize, 0usize);
        for v in &self.vectors {
            match v.coords().iter().map(|&x| x.abs()).max().unwrap() {
                4 => counts.0 += 1,
                2 => counts.1 += 1,
                3 => counts.2 += 1,
                _ => unreachable!("minimal vector outside the three shapes"),
            }
        }
        counts
    }

    /// Histogram of integer inner products (Σcᵢdᵢ, i.e. 8× the rational
    /// inner product) of every vector in the set against `anchor`.
    pub fn histogram_with(&self, anchor: &ScaledVector) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for v in &self.vectors {
            *out.entry(v.dot_int(anchor)).or_insert(0) += 1;
        }
        out
    }

    /// Exact per-vector membership in the Leech congruence cosets.
    pub fn congruence_certified(&self) -> bool {
        self.vectors.par_iter().all(|v| self.is_congruent(v))
    }

    fn is_congruent(&self, v: &ScaledVector) -> bool {
        let c = v.coords();
        let sum: i32 = c.iter().map(|&x| x as i32).sum();
        if c.iter().all(|&x| x % 2 == 0) {
            let word = (0..24).fold(0u32, |w, i| {
                w | ((((c[i] as i32 / 2).rem_euclid(2)) as u32) << i)
            });
            self.golay.contains(word) && sum.rem_euclid(8) == 0
        } else if c.iter().all(|&x| x % 2 != 0) {
            let word = (0..24).fold(0u32, |w, i| {
                w | (((((c[i] as i32 - 1) / 2).rem_euclid(2)) as u32) << i)
            });
            self.golay.contains(word) && sum.rem_euclid(8) == 4
        } else {
            false
        }
    }

    /// Certifies that the congruence lattice contains no vector of integer
    /// norm 16 (norm 2 in lattice scale), by enumerating every integer
    /// shape of norm 16 and checking it against the coset conditions.
    ///
    /// Together with per-vector congruence membership and closure of the
    /// cosets under subtraction, this rules out inner product ±3 between
    /// any two minimal vectors: ⟨v,w⟩ = ±3 would make v∓w a norm-2 vector.
    pub fn no_norm2_vectors_certified(&self) -> bool {
        // Norm-16 integer vectors with all coordinates even come in exactly
        // two shapes, (±4, 0²³) and (±2⁴, 0²⁰); all-odd vectors have norm
        // at least 24. Shape one, checked literally over all 48 vectors:
        for pos in 0..24usize {
            for sign in [4i8, -4] {
                let mut c = [0i8; 24];
                c[pos] = sign;
                if self.is_congruent(&ScaledVector::new(c)) {
                    return false;
                }
            }
        }
        // Shape two: the coset condition requires x/2 mod 2 (the weight-4
        // support indicator, independent of the sign pattern) to be a
        // Golay word. Checked over every 4-element support.
        let mut supports = 0u64;
        for a in 0..24u32 {
            for b in a + 1..24 {
                for c in b + 1..24 {
                    for d in c + 1..24 {
                        let word = (1 << a) | (1 << b) | (1 << c) | (1 << d);
                        if self.golay.contains(word) {
                            return false;
                        }
                        supports += 1;
                    }
                }
            }
        }
        debug_assert_eq!(supports, 10_626);
        true
    }

    /// Global histogram of integer inner products over unordered distinct
    /// pairs. One full pairwise pass, chunk-parallel; the scan exploits
    /// closure under negation (products against -w mirror those against w).
    pub fn global_pair_histogram(&self) -> BTreeMap<i32, u64> {
        // representatives: one vector per antipodal class {v, -v}
        let reps: Vec<&ScaledVector> = self
            .vectors
            .iter()
            .filter(|v| v.coords().iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .collect();
        let n = reps.len();
        debug_assert_eq!(n * 2, self.vectors.len());
        let hist = reps
            .par_iter()
            .enumerate()
            .fold(
                || [0u64; 65],
                |mut acc, (i, v)| {
                    for w in &reps[i + 1..] {
                        acc[(v.dot_int(w) + 32) as usize] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || [0u64; 65],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b.iter()) {
                        *x += y;
                    }
                    a
                },
            );
        // cross-class pairs {±v}×{±w} contribute two pairs at +p and two at -p;
        // within-class pairs {v,-v} contribute one pair at -32 each.
        let mut out = BTreeMap::new();
        for (idx, &count) in hist.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let p = idx as i32 - 32;
            *out.entry(p).or_insert(0) += 2 * count;
            *out.entry(-p).or_insert(0) += 2 * count;
        }
        *out.entry(-32).or_insert(0) += n as u64;
        out
    }
}

/// The subset of `pool` whose exact inner product with `anchor` equals
/// `target`.
pub fn neighbors<'a>(
    pool: &'a [ScaledVector],
    anchor: &ScaledVector,
    target: &Rational,
) -> Vec<&'a ScaledVector> {
    pool.iter().filter(|v| &v.inner(anchor) == target).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_i};

    fn set() -> &'static LeechSet {
        use std::sync::OnceLock;
        static SET: OnceLock<LeechSet> = OnceLock::new();
        SET.get_or_init(LeechSet::build)
    }

    #[test]
    fn count_and_shapes() {
        let s = set();
        assert_eq!(s.len(), 196_560);
        // shape sizes: 2^2 C(24,2), 759·2^7, 24·2^12
        assert_eq!(s.shape_counts(), (1104, 97_152, 98_304));
        assert_eq!(1104 + 97_152 + 98_304, 196_560);
    }

    #[test]
    fn all_norms_are_four() {
        let s = set();
        assert!(s.vectors().iter().all(|v| v.norm_int() == 32));
        assert_eq!(s.vectors()[0].inner(&s.vectors()[0]), rat_i(4));
    }

    #[test]
    fn closed_under_negation_and_distinct() {
        let s = set();
        assert!(s.vectors().windows(2).all(|w| w[0] < w[1]));
        for v in s.vectors().iter().step_by(997) {
            let neg = v.neg();
            assert!(s.vectors().binary_search(&neg).is_ok());
        }
    }

    #[test]
    fn congruence_and_norm2_certificates() {
        let s = set();
        assert!(s.congruence_certified());
        assert!(s.no_norm2_vectors_certified());
    }

    #[test]
    fn histogram_against_fixed_vector() {
        let s = set();
        let z = &s.vectors()[0];
        let h = s.histogram_with(z);
        let expected: BTreeMap<i32, u64> = [
            (-32, 1),
            (-16, 4600),
            (-8, 47_104),
            (0, 93_150),
            (8, 47_104),
            (16, 4600),
            (32, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(h, expected);
        // same histogram from a different anchor
        let z2 = &s.vectors()[123_456];
        assert_eq!(s.histogram_with(z2), expected);
    }

    #[test]
    fn neighbors_at_target() {
        let s = set();
        let z = &s.vectors()[0];
        let kissing = neighbors(s.vectors(), z, &rat_i(2));
        assert_eq!(kissing.len(), 4600);
        let only_self = neighbors(s.vectors(), z, &rat_i(4));
        assert_eq!(only_self.len(), 1);
        assert_eq!(only_self[0], z);
        assert!(neighbors(s.vectors(), z, &rat(1, 2)).is_empty());
    }

    #[test]
    fn coordinate_sum_parity() {
        // even-shape vectors have coordinate sum ≡ 0 (mod 8), odd-shape ≡ 4
        let s = set();
        for v in s.vectors().iter().step_by(503) {
            let sum: i32 = v.coords().iter().map(|&x| x as i32).sum();
            if v.coords()[0] % 2 == 0 {
                assert_eq!(sum.rem_euclid(8), 0);
            } else {
                assert_eq!(sum.rem_euclid(8), 4);
            }
        }
    }
}
