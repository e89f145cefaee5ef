//! Exact sign analysis of rational polynomials on intervals.
//!
//! Sign conditions like "p ≤ 0 everywhere on [-1, t]" are universally
//! quantified, so sampling cannot certify them. The routines here decide
//! them exactly with Sturm sequences: the maximum of p on a closed interval
//! is attained at an endpoint or at a critical point, and the sign of p at
//! each (possibly irrational) critical point is determined by isolating it
//! and shrinking the isolating interval until it is free of roots of p.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::{rat_i, Rational};

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    polys: Vec<Poly>,
}

impl SturmChain {
    fn new(p: &Poly) -> Self {
        let mut polys = vec![p.clone(), p.derivative()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            let rem = polys[n - 2].div_rem(&polys[n - 1]).1;
            if rem.is_zero() {
                break;
            }
            // scale by a positive constant to keep coefficients small
            let neg = -&rem;
            let lead = neg.leading().unwrap().abs();
            polys.push(neg.scale(&(rat_i(1) / lead)));
        }
        SturmChain { polys }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.polys {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Number of distinct roots in `(a, b]`; requires `a < b`.
    fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// A root of a square-free polynomial, either exactly rational or isolated
/// in an open interval with non-root endpoints.
enum IsolatedRoot {
    Exact(Rational),
    Interval(Rational, Rational),
}

/// Isolates the roots of square-free `q` in the open interval `(lo, hi)`.
/// Requires `q(lo) != 0` and `q(hi) != 0`.
fn isolate_roots(q: &Poly, lo: &Rational, hi: &Rational) -> Vec<IsolatedRoot> {
    debug_assert!(!q.eval(lo).is_zero() && !q.eval(hi).is_zero());
    let chain = SturmChain::new(q);
    let mut out = Vec::new();
    subdivide(q, &chain, lo, hi, &mut out);
    out
}

fn subdivide(
    q: &Poly,
    chain: &SturmChain,
    a: &Rational,
    b: &Rational,
    out: &mut Vec<IsolatedRoot>,
) {
    match chain.count_half_open(a, b) {
        0 => {}
        1 => out.push(IsolatedRoot::Interval(a.clone(), b.clone())),
        _ => {
            let m = (a + b) / rat_i(2);
            if q.eval(&m).is_zero() {
                // rational root found; deflate and recurse on both halves
                out.push(IsolatedRoot::Exact(m.clone()));
                let reduced = q.div_rem(&Poly::linear(-m.clone(), rat_i(1))).0;
                let chain2 = SturmChain::new(&reduced);
                subdivide(&reduced, &chain2, a, &m, out);
                subdivide(&reduced, &chain2, &m, b, out);
            } else {
                subdivide(q, chain, a, &m, out);
                subdivide(q, chain, &m, b, out);
            }
        }
    }
}

/// Returns a rational point in `[lo, hi]` where `p > 0`, if one exists.
///
/// This is the negation witness for [`nonpositive_on_interval`]; `None`
/// certifies `p(s) <= 0` for every `s` in the closed interval.
pub fn find_positive_point(p: &Poly, lo: &Rational, hi: &Rational) -> Option<Rational> {
    assert!(lo <= hi, "empty interval");
    if p.is_zero() {
        return None;
    }
    if p.eval(lo).is_positive() {
        return Some(lo.clone());
    }
    if p.eval(hi).is_positive() {
        return Some(hi.clone());
    }
    if lo == hi {
        return None;
    }
    // Interior maxima sit at roots of p'.
    let mut q = p.derivative().square_free();
    for e in [lo, hi] {
        while !q.is_zero() && q.eval(e).is_zero() {
            q = q.div_rem(&Poly::linear(-e.clone(), rat_i(1))).0;
        }
    }
    if q.degree().map_or(true, |d| d == 0) {
        return None;
    }
    let p_sf = p.square_free();
    let p_chain = SturmChain::new(&p_sf);
    let common = p_sf.gcd(&q);
    let common_chain = SturmChain::new(&common);
    for root in isolate_roots(&q, lo, hi) {
        match root {
            IsolatedRoot::Exact(r) => {
                if p.eval(&r).is_positive() {
                    return Some(r);
                }
            }
            IsolatedRoot::Interval(mut a, mut b) => {
                // p vanishes at the critical point iff gcd(p, p') does
                if common.degree().unwrap_or(0) >= 1 && common_chain.count_half_open(&a, &b) > 0 {
                    continue;
                }
                // shrink until the interval is free of roots of p, then the
                // sign of p at the critical point is the sign at any
                // interior sample
                loop {
                    if p_chain.count_half_open(&a, &b) == 0 {
                        let m = (&a + &b) / rat_i(2);
                        debug_assert!(!p.eval(&m).is_zero());
                        if p.eval(&m).is_positive() {
                            return Some(m);
                        }
                        break;
                    }
                    let m = (&a + &b) / rat_i(2);
                    if q.eval(&m).is_zero() {
                        // the critical point itself is rational
                        if p.eval(&m).is_positive() {
                            return Some(m);
                        }
                        break;
                    }
                    // keep the half containing the sign change of q
                    if q.eval(&a).is_positive() != q.eval(&m).is_positive() {
                        b = m;
                    } else {
                        a = m;
                    }
                }
            }
        }
    }
    None
}

/// Exact decision of `p(s) <= 0` for all `s` in `[lo, hi]`.
///
/// ```
/// use spherecode::exact::{nonpositive_on_interval, rat, rat_i, Poly};
/// let p = Poly::linear(rat_i(-1), rat_i(1)); // x - 1
/// assert!(nonpositive_on_interval(&p, &rat_i(-1), &rat(1, 4)));
/// let q = Poly::x().pow(2); // x^2 > 0 away from 0
/// assert!(!nonpositive_on_interval(&q, &rat_i(-1), &rat(1, 4)));
/// ```
pub fn nonpositive_on_interval(p: &Poly, lo: &Rational, hi: &Rational) -> bool {
    find_positive_point(p, lo, hi).is_none()
}

/// The rational with the smallest denominator in the open interval `(a, b)`.
fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b);
    let zero = rat_i(0);
    if *a < zero && *b > zero {
        return zero;
    }
    if *a >= zero {
        simplest_nonneg(a, b)
    } else {
        -simplest_nonneg(&-b.clone(), &-a.clone())
    }
}

fn simplest_nonneg(a: &Rational, b: &Rational) -> Rational {
    let fa = a.floor();
    if a == &fa {
        // integer left endpoint: either a+1 fits, or recurse on (0, b-a)
        let next = &fa + rat_i(1);
        if next < *b {
            return next;
        }
        let c = b - a;
        // smallest k with 1/k < c
        let inv = rat_i(1) / &c;
        let mut k = inv.floor() + rat_i(1);
        if rat_i(1) / &k >= c {
            k += rat_i(1);
        }
        return a + rat_i(1) / k;
    }
    let ca = a.ceil();
    if ca < *b {
        return ca;
    }
    // same integer part: invert the fractional parts
    &fa + rat_i(1) / simplest_nonneg(&(rat_i(1) / (b - &fa)), &(rat_i(1) / (a - &fa)))
}

/// All rational roots of `p` in `[lo, hi]`, in increasing order.
///
/// Roots are located by Sturm isolation and identified by probing each
/// isolating interval with its smallest-denominator rational; every
/// returned value satisfies `p(r) == 0` exactly. Irrational roots are
/// ignored; rational roots of astronomically large height would exhaust
/// the refinement budget and be skipped, which no polynomial in this crate
/// comes close to.
pub fn rational_roots_in(p: &Poly, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    assert!(lo <= hi);
    let mut out = Vec::new();
    if p.is_zero() || p.degree() == Some(0) {
        return out;
    }
    let mut sf = p.square_free();
    for e in [lo, hi] {
        if sf.eval(e).is_zero() {
            out.push(e.clone());
            while sf.eval(e).is_zero() {
                sf = sf.div_rem(&Poly::linear(-e.clone(), rat_i(1))).0;
            }
        }
    }
    if sf.degree().map_or(false, |d| d >= 1) && lo < hi {
        for root in isolate_roots(&sf, lo, hi) {
            match root {
                IsolatedRoot::Exact(r) => out.push(r),
                IsolatedRoot::Interval(mut a, mut b) => {
                    for _ in 0..128 {
                        let probe = simplest_between(&a, &b);
                        let v = sf.eval(&probe);
                        if v.is_zero() {
                            out.push(probe);
                            break;
                        }
                        if sf.eval(&a).is_positive() != v.is_positive() {
                            b = probe;
                        } else {
                            a = probe;
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
