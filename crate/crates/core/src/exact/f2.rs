//! Bit-packed linear algebra over GF(2).
//!
//! Words are `u64` bit vectors with coordinate `i` stored in bit `i`;
//! every code in this crate has width at most 24. The pivot of a row is
//! its lowest set bit, so a row with pivot at column `c` is zero on all
//! columns below `c`, the property the prefix-counting argument relies on.

/// A matrix over GF(2) with rows packed into `u64`s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    width: usize,
    rows: Vec<u64>,
}

impl F2Matrix {
    pub fn new(width: usize, rows: Vec<u64>) -> Self {
        assert!(width <= 64, "width above 64 is not supported");
        let mask = mask(width);
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row exceeds declared width"
        );
        F2Matrix { width, rows }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        SpanBasis::from_words(self.rows.iter().copied()).rank()
    }
}

fn mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// GF(2) rank by elimination.
pub fn f2_rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// A reduced basis of a GF(2) row space, rows ordered by pivot column
/// (pivot = lowest set bit).
#[derive(Debug, Clone, Default)]
pub struct SpanBasis {
    rows: Vec<u64>,
}

impl SpanBasis {
    pub fn from_words(words: impl IntoIterator<Item = u64>) -> Self {
        let mut basis = SpanBasis::default();
        for w in words {
            basis.insert(w);
        }
        basis
    }

    pub fn insert(&mut self, word: u64) -> bool {
        let rem = self.reduce(word);
        if rem == 0 {
            return false;
        }
        let pos = self
            .rows
            .partition_point(|r| r.trailing_zeros() < rem.trailing_zeros());
        self.rows.insert(pos, rem);
        true
    }

    /// Reduces a word against the basis; zero iff the word is in the span.
    pub fn reduce(&self, mut word: u64) -> u64 {
        for &r in &self.rows {
            if word & (1 << r.trailing_zeros()) != 0 {
                word ^= r;
            }
        }
        word
    }

    pub fn contains(&self, word: u64) -> bool {
        self.reduce(word) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of span elements whose lowest `prefix_len` coordinates equal
    /// `prefix`, computed by elimination rather than span enumeration.
    ///
    /// Rows with pivot at or above `prefix_len` are zero on the prefix
    /// coordinates, so the prefix of a span element is determined by the
    /// rows with pivot inside the prefix region alone. If the target prefix
    /// is reachable, each of the remaining basis rows doubles the count.
    pub fn count_with_prefix(&self, prefix: u64, prefix_len: usize) -> u64 {
        assert!(prefix_len <= 64);
        let pmask = mask(prefix_len);
        assert!(prefix & !pmask == 0, "prefix exceeds its declared length");
        let mut target = prefix;
        let mut inside = 0usize;
        for &r in &self.rows {
            if (r.trailing_zeros() as usize) < prefix_len {
                inside += 1;
                if target & (1 << r.trailing_zeros()) != 0 {
                    target ^= r & pmask;
                }
            }
        }
        if target != 0 {
            0
        } else {
            1u64 << (self.rank() - inside)
        }
    }
}

/// Number of words in the GF(2) span of `rows` whose leading coordinates
/// equal `prefix`.
///
/// ```
/// use spherecode::exact::f2_span_count_with_prefix;
/// // the empty span contains only the zero word
/// assert_eq!(f2_span_count_with_prefix(&[], 0b000, 3), 1);
/// assert_eq!(f2_span_count_with_prefix(&[], 0b010, 3), 0);
/// ```
pub fn f2_span_count_with_prefix(rows: &[u64], prefix: u64, prefix_len: usize) -> u64 {
    SpanBasis::from_words(rows.iter().copied()).count_with_prefix(prefix, prefix_len)
}
