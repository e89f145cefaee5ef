//! Steiner systems and binary-code distance profiles.
//!
//! S(2,5,21) is the projective plane over the four-element field: points
//! are the 21 normalized homogeneous triples, lines the supports of the
//! incidence relation. S(3,6,22) is its one-point extension: the 21 lines
//! each extended by the new point, plus one of the three classes of 56
//! hyperovals. Both constructions are gated by [`verify_steiner`], so no
//! correctness rests on the construction chosen.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::leech::BinaryCode;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SteinerError {
    #[error("block {block:#x} has weight {weight}, expected {expected}")]
    WrongBlockWeight {
        block: u32,
        weight: u32,
        expected: u32,
    },
    #[error("{count} blocks contain the {t}-subset {subset:?} (expected exactly 1)")]
    CoverageViolation {
        subset: Vec<u32>,
        t: u32,
        count: u32,
    },
    #[error("block count {found} differs from C(v,t)/C(k,t) = {expected}")]
    BlockCount { found: usize, expected: usize },
}

/// A Steiner system S(t,k,v): k-subsets of a v-set covering every t-subset
/// exactly once, blocks stored as GF(2) words of weight k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    pub t: u32,
    pub k: u32,
    pub v: u32,
    pub blocks: BinaryCode,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Checks that every t-subset of the v points lies in exactly one block.
/// On failure the error carries a witness subset covered 0 or ≥ 2 times.
pub fn verify_steiner(blocks: &BinaryCode, t: u32, k: u32, v: u32) -> Result<(), SteinerError> {
    for &b in blocks.words() {
        let w = b.count_ones();
        if w != k {
            return Err(SteinerError::WrongBlockWeight {
                block: b,
                weight: w,
                expected: k,
            });
        }
    }
    let expected_blocks = (binom(v as u64, t as u64) / binom(k as u64, t as u64)) as usize;
    if blocks.len() != expected_blocks {
        return Err(SteinerError::BlockCount {
            found: blocks.len(),
            expected: expected_blocks,
        });
    }
    // count coverage of every t-subset
    let mut counts: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for &b in blocks.words() {
        let points: Vec<u32> = (0..v).filter(|&i| b >> i & 1 == 1).collect();
        let mut subset = vec![0u32; t as usize];
        count_subsets(&points, t as usize, 0, &mut subset, 0, &mut counts);
    }
    let total = binom(v as u64, t as u64);
    if counts.len() as u64 != total {
        // some t-subset is uncovered; find one
        let mut idx = vec![0u32; t as usize];
        if let Some(missing) = first_uncovered(v, t as usize, 0, &mut idx, 0, &counts) {
            return Err(SteinerError::CoverageViolation {
                subset: missing,
                t,
                count: 0,
            });
        }
    }
    for (subset, count) in counts {
        if count != 1 {
            return Err(SteinerError::CoverageViolation { subset, t, count });
        }
    }
    Ok(())
}

fn count_subsets(
    points: &[u32],
    t: usize,
    start: usize,
    subset: &mut Vec<u32>,
    depth: usize,
    counts: &mut BTreeMap<Vec<u32>, u32>,
) {
    if depth == t {
        *counts.entry(subset.clone()).or_insert(0) += 1;
        return;
    }
    for i in start..points.len() {
        subset[depth] = points[i];
        count_subsets(points, t, i + 1, subset, depth + 1, counts);
    }
}

fn first_uncovered(
    v: u32,
    t: usize,
    start: u32,
    idx: &mut Vec<u32>,
    depth: usize,
    counts: &BTreeMap<Vec<u32>, u32>,
) -> Option<Vec<u32>> {
    if depth == t {
        if !counts.contains_key(idx) {
            return Some(idx.clone());
        }
        return None;
    }
    for i in start..v {
        idx[depth] = i;
        if let Some(found) = first_uncovered(v, t, i + 1, idx, depth + 1, counts) {
            return Some(found);
        }
    }
    None
}

// GF(4) as {0, 1, ω, ω²} encoded 0..=3 with xor addition and
// multiplication through discrete logs (1↦0, ω↦1, ω²↦2).
fn f4_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    let log = |x: u8| x - 1;
    match (log(a) + log(b)) % 3 {
        0 => 1,
        1 => 2,
        _ => 3,
    }
}

fn pg24_points() -> Vec<[u8; 3]> {
    let mut pts = Vec::with_capacity(21);
    for x in 0..4u8 {
        for y in 0..4u8 {
            pts.push([1, x, y]);
        }
    }
    for y in 0..4u8 {
        pts.push([0, 1, y]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// The projective plane over the four-element field as an S(2,5,21): the
/// 21 lines, each the support of a linear form over the 21 points.
pub fn build_pg24() -> SteinerSystem {
    let pts = pg24_points();
    let mut blocks = Vec::with_capacity(21);
    for form in &pts {
        let mut word = 0u32;
        for (i, p) in pts.iter().enumerate() {
            let val = f4_mul(form[0], p[0]) ^ f4_mul(form[1], p[1]) ^ f4_mul(form[2], p[2]);
            if val == 0 {
                word |= 1 << i;
            }
        }
        blocks.push(word);
    }
    let system = SteinerSystem {
        t: 2,
        k: 5,
        v: 21,
        blocks: BinaryCode::new(21, blocks),
    };
    verify_steiner(&system.blocks, 2, 5, 21).expect("PG(2,4) construction failed its gate");
    system
}

/// The one-point extension of PG(2,4) to an S(3,6,22).
///
/// The 168 hyperovals of the plane (6-point sets meeting every line in 0
/// or 2 points) split into three classes of 56 under the even-intersection
/// relation; the lines extended by the new point 21 together with any one
/// class form the extension. The class containing the lexicographically
/// smallest hyperoval is chosen, and the result is gated by
/// [`verify_steiner`], so the class structure is verified rather than
/// assumed.
pub fn build_s3622() -> SteinerSystem {
    let plane = build_pg24();
    let lines = plane.blocks.words();
    // enumerate hyperovals: 6-subsets meeting every line in 0 or 2 points
    let mut hyperovals: Vec<u32> = Vec::new();
    let mut stack: Vec<(u32, u32, u32)> = vec![(0, 0, 0)]; // (word, count, next)
    while let Some((word, count, next)) = stack.pop() {
        if count == 6 {
            if lines.iter().all(|&l| (l & word).count_ones() % 2 == 0) {
                hyperovals.push(word);
            }
            continue;
        }
        for i in next..(21 - (5 - count)) {
            let cand = word | 1 << i;
            // prune: no line may already meet the partial set in 3 points
            if lines.iter().all(|&l| (l & cand).count_ones() <= 2) {
                stack.push((cand, count + 1, i + 1));
            }
        }
    }
    hyperovals.sort_unstable();
    assert_eq!(
        hyperovals.len(),
        168,
        "hyperoval enumeration failed its gate"
    );
    // the class of the smallest hyperoval under even intersection
    let seed = hyperovals[0];
    let class: Vec<u32> = hyperovals
        .iter()
        .copied()
        .filter(|&h| (h & seed).count_ones() % 2 == 0)
        .collect();
    assert_eq!(class.len(), 56, "hyperoval class split failed its gate");
    let mut blocks: Vec<u32> = lines.iter().map(|&l| l | 1 << 21).collect();
    blocks.extend(&class);
    let system = SteinerSystem {
        t: 3,
        k: 6,
        v: 22,
        blocks: BinaryCode::new(22, blocks),
    };
    verify_steiner(&system.blocks, 3, 6, 22).expect("S(3,6,22) extension failed its gate");
    system
}

/// Exact multiset of pairwise Hamming distances.
pub fn distance_profile(code: &BinaryCode) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    let words = code.words();
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            *out.entry((a ^ b).count_ones()).or_insert(0) += 1;
        }
    }
    out
}

/// Writes a Steiner system as sorted point-index lists, one block per
/// line, under a `steiner t k v count` header.
pub fn write_steiner_system(path: &std::path::Path, s: &SteinerSystem) -> std::io::Result<()> {
    use std::io::Write;
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(w, "steiner {} {} {} {}", s.t, s.k, s.v, s.blocks.len())?;
    for &b in s.blocks.words() {
        let points: Vec<String> = (0..s.v)
            .filter(|&i| b >> i & 1 == 1)
            .map(|i| i.to_string())
            .collect();
        writeln!(w, "{}", points.join(" "))?;
    }
    w.flush()
}

/// Reads a Steiner system written by [`write_steiner_system`] and gates it
/// through [`verify_steiner`].
pub fn read_steiner_system(path: &std::path::Path) -> Result<SteinerSystem, SteinerReadError> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(SteinerReadError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (t, k, v, count) = match fields.as_slice() {
        ["steiner", t, k, v, count] => (
            t.parse().map_err(|_| SteinerReadError::BadHeader)?,
            k.parse().map_err(|_| SteinerReadError::BadHeader)?,
            v.parse().map_err(|_| SteinerReadError::BadHeader)?,
            count
                .parse::<usize>()
                .map_err(|_| SteinerReadError::BadHeader)?,
        ),
        _ => return Err(SteinerReadError::BadHeader),
    };
    let mut blocks = Vec::with_capacity(count);
    for line in lines {
        let mut word = 0u32;
        for tok in line.split_whitespace() {
            let p: u32 = tok.parse().map_err(|_| SteinerReadError::BadBlock)?;
            if p >= v {
                return Err(SteinerReadError::BadBlock);
            }
            word |= 1 << p;
        }
        blocks.push(word);
    }
    if blocks.len() != count {
        return Err(SteinerReadError::CountMismatch {
            declared: count,
            found: blocks.len(),
        });
    }
    let system = SteinerSystem {
        t,
        k,
        v,
        blocks: BinaryCode::new(v as usize, blocks),
    };
    verify_steiner(&system.blocks, t, k, v)?;
    Ok(system)
}

#[derive(Debug, Error)]
pub enum SteinerReadError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("missing `steiner t k v count` header")]
    MissingHeader,
    #[error("malformed `steiner t k v count` header")]
    BadHeader,
    #[error("malformed block line")]
    BadBlock,
    #[error("header declared {declared} blocks, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    NotASteinerSystem(#[from] SteinerError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{f2_rank, F2Matrix};

    #[test]
    fn pg24_is_steiner() {
        let s = build_pg24();
        assert_eq!(s.blocks.len(), 21);
        assert!(verify_steiner(&s.blocks, 2, 5, 21).is_ok());
    }

    #[test]
    fn pg24_lines_meet_in_one_point() {
        let s = build_pg24();
        let words = s.blocks.words();
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                assert_eq!((a & b).count_ones(), 1);
            }
        }
    }

    #[test]
    fn pg24_incidence_rank_10() {
        let s = build_pg24();
        let rows: Vec<u64> = s.blocks.words().iter().map(|&w| w as u64).collect();
        assert_eq!(f2_rank(&F2Matrix::new(21, rows)), 10);
    }

    #[test]
    fn s3622_is_steiner_with_rank_11() {
        let s = build_s3622();
        assert_eq!(s.blocks.len(), 77);
        assert!(verify_steiner(&s.blocks, 3, 6, 22).is_ok());
        let rows: Vec<u64> = s.blocks.words().iter().map(|&w| w as u64).collect();
        assert_eq!(f2_rank(&F2Matrix::new(22, rows)), 11);
    }

    #[test]
    fn steiner_failure_produces_witness() {
        // drop one block from the plane: block count fails
        let s = build_pg24();
        let mut words = s.blocks.words().to_vec();
        words.pop();
        let code = BinaryCode::new(21, words);
        match verify_steiner(&code, 2, 5, 21) {
            Err(SteinerError::BlockCount {
                found: 20,
                expected: 21,
            }) => {}
            other => panic!("expected block-count failure, got {other:?}"),
        }
        // distort one block instead: some pair loses its unique cover
        let mut tweaked = s.blocks.words().to_vec();
        tweaked[0] ^= 0b11;
        let tweaked_code = BinaryCode::new(21, tweaked);
        assert!(verify_steiner(&tweaked_code, 2, 5, 21).is_err());
    }

    #[test]
    fn prefixed_plane_words_span_512_zero_prefix_words() {
        // the span of the 21 words 111d (d a line of the plane) contains
        // exactly 2^(10-1) = 512 words of the form 000c
        use crate::exact::f2_span_count_with_prefix;
        let s = build_pg24();
        let rows: Vec<u64> = s
            .blocks
            .words()
            .iter()
            .map(|&w| ((w as u64) << 3) | 0b111)
            .collect();
        assert_eq!(f2_span_count_with_prefix(&rows, 0b000, 3), 512);
        // and the extension's words 11d span 2^(11-1) = 1024 words 00c
        let ext = build_s3622();
        let rows: Vec<u64> = ext
            .blocks
            .words()
            .iter()
            .map(|&w| ((w as u64) << 2) | 0b11)
            .collect();
        assert_eq!(f2_span_count_with_prefix(&rows, 0b00, 2), 1024);
    }

    #[test]
    fn distance_profile_invariant_under_permutation() {
        let s = build_pg24();
        let profile = distance_profile(&s.blocks);
        // swap two coordinates in every block
        let swapped: Vec<u32> = s
            .blocks
            .words()
            .iter()
            .map(|&w| {
                let b0 = w & 1;
                let b7 = (w >> 7) & 1;
                (w & !(1 | 1 << 7)) | (b7) | (b0 << 7)
            })
            .collect();
        let code = BinaryCode::new(21, swapped);
        assert_eq!(distance_profile(&code), profile);
    }

    #[test]
    fn distance_profile_basics() {
        let single = BinaryCode::new(8, vec![0b1010]);
        assert!(distance_profile(&single).is_empty());
        let pair = BinaryCode::new(8, vec![0b1010, 0b0101]);
        assert_eq!(distance_profile(&pair), [(4, 1)].into_iter().collect());
    }

    #[test]
    fn steiner_file_round_trip() {
        let path =
            std::env::temp_dir().join(format!("spherecode-steiner-{}.txt", std::process::id()));
        let s = build_s3622();
        write_steiner_system(&path, &s).unwrap();
        let back = read_steiner_system(&path).unwrap();
        assert_eq!(back, s);
        // the reader gates through verify_steiner
        let text = std::fs::read_to_string(&path).unwrap();
        let broken = text.replacen("steiner 3 6 22 77", "steiner 2 6 22 77", 1);
        std::fs::write(&path, broken).unwrap();
        assert!(matches!(
            read_steiner_system(&path),
            Err(SteinerReadError::NotASteinerSystem(_))
        ));
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn verify_rejects_wrong_weight() {
        let code = BinaryCode::new(21, vec![0b1111]);
        assert!(matches!(
            verify_steiner(&code, 2, 5, 21),
            Err(SteinerError::WrongBlockWeight { weight: 4, .. })
        ));
    }
}
