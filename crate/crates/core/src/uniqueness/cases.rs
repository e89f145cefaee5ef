//! Case classification of the member vectors in normalized frame
//! coordinates, sign-parity checks, and the GF(2) generation argument.
//!
//! In the normalized frame every member W satisfies Σwᵢ² = 32,
//! (wᵢ ± wⱼ)/2 ∈ {0, ±1, ±2, ±4} and (w₁+w₂)/2 = 2 (the 891 pipeline adds
//! (w₁+w₃)/2 = 2), which forces one of the case templates below. The
//! support code 𝒟 is extracted from the ±2 positions of Case III and the
//! sign code ℰ from the +1 positions of Case IV.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::{rat_i, SpanBasis};
use crate::leech::{BinaryCode, ScaledVector};
use crate::uniqueness::{D24Frame, FrameError, PipelineKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("member {index} matches no case template")]
    UnclassifiableVector { index: usize },
    #[error("member {index} violates side constraint `{constraint}`")]
    SideConstraint {
        index: usize,
        constraint: &'static str,
    },
    #[error("Case III member {index} has {minus_count} minus signs; expected {expected} parity")]
    ParityViolation {
        index: usize,
        minus_count: u32,
        expected: &'static str,
    },
    #[error("codeword {support:#x} carries {found} sign patterns, expected {expected}")]
    SignPatternCount {
        support: u32,
        found: u64,
        expected: u64,
    },
    #[error("inner product with the reference vector disagrees with the sign-count formula")]
    InnerProductFormula,
    #[error("no Case IV member is in the standard all-minus position")]
    NoStandardRepresentative,
    #[error("span word {word:#x} not derived from the classified members")]
    SpanMismatch { word: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::I => "I",
            CaseLabel::II => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
            CaseLabel::V => "V",
        };
        f.write_str(s)
    }
}

/// Classified members with the codes extracted from their coordinates.
#[derive(Debug, Clone)]
pub struct Classification {
    pub kind: PipelineKind,
    /// Frame coordinates per member, aligned with the member slice.
    pub coords: Vec<[i32; 24]>,
    pub labels: Vec<CaseLabel>,
    pub counts: BTreeMap<CaseLabel, usize>,
    /// Case III supports over the trailing coordinates.
    pub code_d: BinaryCode,
    /// Case IV sign words (+1 positions) over the trailing coordinates.
    pub code_e: BinaryCode,
}

impl Classification {
    /// Number of trailing coordinates carrying the codes (21 or 22).
    pub fn code_len(&self) -> usize {
        match self.kind {
            PipelineKind::Code891 => 21,
            PipelineKind::Code4600 => 22,
        }
    }

    fn code_start(&self) -> usize {
        24 - self.code_len()
    }

    pub fn members_with_label(&self, label: CaseLabel) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter_map(move |(i, &l)| (l == label).then_some(i))
    }
}

fn classify_one(kind: PipelineKind, w: &[i32; 24]) -> Option<CaseLabel> {
    let start = match kind {
        PipelineKind::Code891 => 3,
        PipelineKind::Code4600 => 2,
    };
    let head = &w[..start];
    let tail = &w[start..];
    let tail_all = |v: &[i32], pred: fn(i32) -> bool| v.iter().all(|&x| pred(x));
    let tail_count = |v: &[i32], val: i32| v.iter().filter(|&&x| x.abs() == val).count();
    match kind {
        PipelineKind::Code891 => {
            if head == [4, 0, 0]
                && tail_count(tail, 4) == 1
                && tail_all(tail, |x| x == 0 || x.abs() == 4)
            {
                return Some(CaseLabel::I);
            }
            if head == [0, 4, 4] && tail_all(tail, |x| x == 0) {
                return Some(CaseLabel::II);
            }
            if head == [2, 2, 2]
                && tail_count(tail, 2) == 5
                && tail_all(tail, |x| x == 0 || x.abs() == 2)
            {
                return Some(CaseLabel::III);
            }
            if head == [3, 1, 1] && tail_all(tail, |x| x.abs() == 1) {
                return Some(CaseLabel::IV);
            }
            None
        }
        PipelineKind::Code4600 => {
            if head == [4, 0]
                && tail_count(tail, 4) == 1
                && tail_all(tail, |x| x == 0 || x.abs() == 4)
            {
                return Some(CaseLabel::I);
            }
            if head == [0, 4]
                && tail_count(tail, 4) == 1
                && tail_all(tail, |x| x == 0 || x.abs() == 4)
            {
                return Some(CaseLabel::II);
            }
            if head == [2, 2]
                && tail_count(tail, 2) == 6
                && tail_all(tail, |x| x == 0 || x.abs() == 2)
            {
                return Some(CaseLabel::III);
            }
            if head == [3, 1] && tail_all(tail, |x| x.abs() == 1) {
                return Some(CaseLabel::IV);
            }
            if head == [1, 3] && tail_all(tail, |x| x.abs() == 1) {
                return Some(CaseLabel::V);
            }
            None
        }
    }
}

/// Classifies every member into exactly one case template, after checking
/// the coordinate side constraints, and extracts the codes 𝒟 and ℰ.
pub fn classify_cases(
    members: &[ScaledVector],
    frame: &D24Frame,
    kind: PipelineKind,
) -> Result<Classification, CaseError> {
    let code_start = match kind {
        PipelineKind::Code891 => 3usize,
        PipelineKind::Code4600 => 2,
    };
    let code_len = 24 - code_start;
    let mut coords = Vec::with_capacity(members.len());
    let mut labels = Vec::with_capacity(members.len());
    let mut counts = BTreeMap::new();
    let mut d_words = Vec::new();
    let mut e_words = Vec::new();
    for (index, m) in members.iter().enumerate() {
        let w = frame.coords(m)?;
        if w.iter().map(|x| x * x).sum::<i32>() != 32 {
            return Err(CaseError::SideConstraint {
                index,
                constraint: "sum w_i^2 = 32",
            });
        }
        for i in 0..24 {
            for j in i + 1..24 {
                let ok = |v: i32| matches!(v.abs(), 0 | 2 | 4 | 8);
                if !ok(w[i] + w[j]) || !ok(w[i] - w[j]) {
                    return Err(CaseError::SideConstraint {
                        index,
                        constraint: "(w_i ± w_j)/2 in {0, ±1, ±2, ±4}",
                    });
                }
            }
        }
        if w[0] + w[1] != 4 {
            return Err(CaseError::SideConstraint {
                index,
                constraint: "(w_1 + w_2)/2 = 2",
            });
        }
        if kind == PipelineKind::Code891 && w[0] + w[2] != 4 {
            return Err(CaseError::SideConstraint {
                index,
                constraint: "(w_1 + w_3)/2 = 2",
            });
        }
        let label = classify_one(kind, &w).ok_or(CaseError::UnclassifiableVector { index })?;
        match label {
            CaseLabel::III => {
                let mut word = 0u32;
                for (bit, &x) in w[code_start..].iter().enumerate() {
                    if x.abs() == 2 {
                        word |= 1 << bit;
                    }
                }
                d_words.push(word);
            }
            CaseLabel::IV => {
                let mut word = 0u32;
                for (bit, &x) in w[code_start..].iter().enumerate() {
                    if x == 1 {
                        word |= 1 << bit;
                    }
                }
                e_words.push(word);
            }
            _ => {}
        }
        *counts.entry(label).or_insert(0) += 1;
        coords.push(w);
        labels.push(label);
    }
    Ok(Classification {
        kind,
        coords,
        labels,
        counts,
        code_d: BinaryCode::new(code_len, d_words),
        code_e: BinaryCode::new(code_len, e_words),
    })
}

/// Sign-parity verification for Case III.
///
/// Each Case III vector with r minus signs among its ±2 entries must have
/// r even (891 pipeline) or r odd (4600 pipeline), each codeword of 𝒟 must
/// carry exactly half of the possible sign patterns (16 of 2⁵, or 32 of
/// 2⁶), and the inner product with the standard Case IV representative W₀
/// must reproduce the counting formula (4r/8, or (-4+4r)/8) exactly.
pub fn parity_check(
    classification: &Classification,
    members: &[ScaledVector],
) -> Result<(), CaseError> {
    let kind = classification.kind;
    let start = classification.code_start();
    // the standard representative: every trailing coordinate -1
    let w0_index = classification
        .members_with_label(CaseLabel::IV)
        .find(|&i| classification.coords[i][start..].iter().all(|&x| x == -1))
        .ok_or(CaseError::NoStandardRepresentative)?;
    let w0 = &members[w0_index];
    let mut per_support: BTreeMap<u32, u64> = BTreeMap::new();
    for i in classification.members_with_label(CaseLabel::III) {
        let w = &classification.coords[i];
        let r = w[start..].iter().filter(|&&x| x == -2).count() as u32;
        let ok = match kind {
            PipelineKind::Code891 => r % 2 == 0,
            PipelineKind::Code4600 => r % 2 == 1,
        };
        if !ok {
            return Err(CaseError::ParityViolation {
                index: i,
                minus_count: r,
                expected: match kind {
                    PipelineKind::Code891 => "even",
                    PipelineKind::Code4600 => "odd",
                },
            });
        }
        // ⟨W₀, V⟩ from the sign count: 4r/8 (891) or (-4+4r)/8 (4600)
        let expected = match kind {
            PipelineKind::Code891 => rat_i(4 * r as i64) / rat_i(8),
            PipelineKind::Code4600 => rat_i(-4 + 4 * r as i64) / rat_i(8),
        };
        if w0.inner(&members[i]) != expected {
            return Err(CaseError::InnerProductFormula);
        }
        let mut support = 0u32;
        for (bit, &x) in w[start..].iter().enumerate() {
            if x.abs() == 2 {
                support |= 1 << bit;
            }
        }
        *per_support.entry(support).or_insert(0) += 1;
    }
    let expected_patterns = match kind {
        PipelineKind::Code891 => 16,
        PipelineKind::Code4600 => 32,
    };
    for (&support, &found) in &per_support {
        if found != expected_patterns {
            return Err(CaseError::SignPatternCount {
                support,
                found,
                expected: expected_patterns,
            });
        }
    }
    Ok(())
}

/// Outcome of the GF(2) generation argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationSummary {
    /// Words of the form 0…0c in the span of the prefixed codewords.
    pub span_count: u64,
    pub case_iv_count: usize,
    /// Every extracted Case IV word has weight divisible by 4.
    pub weights_divisible_by_4: bool,
    /// 4600 pipeline: Case V equals V₀ - Case IV as a set.
    pub case_v_matches: Option<bool>,
}

/// Verifies that every Case IV sign word, prefixed with zeros, lies in the
/// GF(2) span of the prefixed codewords of 𝒟 (111d, or 11d), counts the
/// zero-prefix span words, and (4600) checks Case V = V₀ - Case IV.
pub fn generation_check(
    classification: &Classification,
    members: &[ScaledVector],
    v0: &ScaledVector,
) -> Result<GenerationSummary, CaseError> {
    let kind = classification.kind;
    let (prefix_len, prefix_bits) = match kind {
        PipelineKind::Code891 => (3usize, 0b111u32),
        PipelineKind::Code4600 => (2, 0b11),
    };
    let basis = SpanBasis::from_words(
        classification
            .code_d
            .words()
            .iter()
            .map(|&d| ((d as u64) << prefix_len) | prefix_bits as u64),
    );
    let span_count = basis.count_with_prefix(0, prefix_len);
    let mut weights_ok = true;
    for &e in classification.code_e.words() {
        if e.count_ones() % 4 != 0 {
            weights_ok = false;
        }
        let word = (e as u64) << prefix_len;
        if !basis.contains(word) {
            return Err(CaseError::SpanMismatch { word: e });
        }
    }
    let case_v_matches = match kind {
        PipelineKind::Code891 => None,
        PipelineKind::Code4600 => {
            let mut from_iv: Vec<ScaledVector> = classification
                .members_with_label(CaseLabel::IV)
                .map(|i| v0.sub(&members[i]))
                .collect();
            from_iv.sort_unstable();
            let mut case_v: Vec<ScaledVector> = classification
                .members_with_label(CaseLabel::V)
                .map(|i| members[i])
                .collect();
            case_v.sort_unstable();
            Some(from_iv == case_v)
        }
    };
    Ok(GenerationSummary {
        span_count,
        case_iv_count: classification
            .counts
            .get(&CaseLabel::IV)
            .copied()
            .unwrap_or(0),
        weights_divisible_by_4: weights_ok,
        case_v_matches,
    })
}
