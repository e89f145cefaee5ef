//! Binary codes as packed word sets, and the [24,12,8] Golay code.

use std::collections::BTreeMap;

/// A binary code: a set of GF(2) words of a fixed length, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    words: Vec<u32>,
}

impl BinaryCode {
    pub fn new(length: usize, mut words: Vec<u32>) -> Self {
        assert!(length <= 32);
        let mask = if length == 32 {
            u32::MAX
        } else {
            (1u32 << length) - 1
        };
        assert!(words.iter().all(|w| w & !mask == 0), "word exceeds length");
        words.sort_unstable();
        words.dedup();
        BinaryCode { length, words }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: u32) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    /// Weight histogram: weight → number of words.
    pub fn weight_distribution(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for w in &self.words {
            *out.entry(w.count_ones()).or_insert(0) += 1;
        }
        out
    }

    /// Minimum pairwise Hamming distance; `None` for fewer than two words.
    pub fn min_distance(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = (a ^ b).count_ones();
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best
    }
}

/// The octads of a \[24,12,8\] code: its weight-8 words.
impl BinaryCode {
    pub fn octads(&self) -> Vec<u32> {
        self.words
            .iter()
            .copied()
            .filter(|w| w.count_ones() == 8)
            .collect()
    }
}

/// Builds the binary Golay code as the extended quadratic-residue code of
/// length 23: the cyclic code generated by
/// g(x) = x^11 + x^9 + x^7 + x^6 + x^5 + x + 1, extended by an overall
/// parity bit. The construction is gated by the weight-distribution check
/// below, so correctness does not rest on the generator chosen.
pub fn build_golay() -> BinaryCode {
    const GEN: u32 = 0b1010_1110_0011; // coefficients of g, degree 11
    let mut basis = [0u32; 12];
    for (i, b) in basis.iter_mut().enumerate() {
        let w = GEN << i; // degree ≤ 22, no reduction mod x^23 - 1 needed
        let parity = w.count_ones() % 2;
        *b = w | (parity << 23);
    }
    let mut words = Vec::with_capacity(4096);
    for m in 0..4096u32 {
        let mut w = 0u32;
        for (i, b) in basis.iter().enumerate() {
            if m >> i & 1 == 1 {
                w ^= b;
            }
        }
        words.push(w);
    }
    let code = BinaryCode::new(24, words);
    let dist = code.weight_distribution();
    assert_eq!(code.len(), 4096, "Golay code must have 2^12 words");
    let expected: BTreeMap<u32, u64> = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]
        .into_iter()
        .collect();
    assert_eq!(dist, expected, "Golay weight distribution check failed");
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_weight_distribution() {
        let g = build_golay();
        assert_eq!(g.len(), 4096);
        assert_eq!(g.octads().len(), 759);
        assert!(g.contains(0));
        assert!(g.contains((1u32 << 24) - 1)); // all-ones word
        let dist = g.weight_distribution();
        assert_eq!(dist[&8], 759);
        assert_eq!(dist[&12], 2576);
        assert_eq!(dist[&16], 759);
    }

    #[test]
    fn golay_min_distance_is_8() {
        // linear code: min distance = min nonzero weight; cross-check the
        // pairwise definition on a subsample
        let g = build_golay();
        assert_eq!(
            g.weight_distribution().keys().filter(|&&w| w > 0).min(),
            Some(&8)
        );
        let sample: Vec<u32> = g.words().iter().copied().step_by(37).collect();
        let sub = BinaryCode::new(24, sample);
        assert!(sub.min_distance().unwrap() >= 8);
    }

    #[test]
    fn golay_is_linear_spot_check() {
        let g = build_golay();
        let a = g.words()[17];
        let b = g.words()[4011];
        assert!(g.contains(a ^ b));
    }

    #[test]
    fn octad_intersections_are_even() {
        // any two octads meet in 0, 2, 4, or 8 positions
        let g = build_golay();
        let octads = g.octads();
        for (i, a) in octads.iter().enumerate().step_by(7) {
            for b in octads.iter().skip(i + 1).step_by(11) {
                let m = (a & b).count_ones();
                assert!(matches!(m, 0 | 2 | 4 | 8), "octads meet in {m}");
            }
        }
    }
}
