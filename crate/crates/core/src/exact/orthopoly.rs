//! Gegenbauer and Krawtchouk polynomial families.
//!
//! The Gegenbauer family used throughout is the ultraspherical family with
//! parameter (n-2)/2, orthogonal on [-1, 1] against the weight
//! (1-x^2)^((n-3)/2), and normalized so that G_k(1) = 1. That normalization
//! makes the linear programming bound read N <= f(1)/f_0 with no residual
//! Jacobi constants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{rat_i, Rational};

fn binom_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Degree-`k` Gegenbauer polynomial for dimension `n`, normalized so that
/// its value at 1 is exactly 1.
///
/// ```
/// use spherecode::exact::{gegenbauer, rat, rat_i, Poly};
/// assert_eq!(gegenbauer(22, 0), Poly::one());
/// assert_eq!(gegenbauer(22, 1), Poly::x());
/// // G_2 for n = 22 is (22x^2 - 1)/21
/// let g2 = gegenbauer(22, 2);
/// assert_eq!(g2.coeffs(), &[rat(-1, 21), rat_i(0), rat(22, 21)]);
/// assert_eq!(g2.eval(&rat_i(1)), rat_i(1));
/// ```
pub fn gegenbauer(n: u32, k: u32) -> Poly {
    assert!(n >= 2, "dimension must be at least 2");
    if k == 0 {
        return Poly::one();
    }
    if k == 1 {
        return Poly::x();
    }
    if n == 2 {
        // Chebyshev limit: T_{k+1} = 2x T_k - T_{k-1}, T_k(1) = 1
        let mut prev = Poly::one();
        let mut cur = Poly::x();
        for _ in 2..=k {
            let two_x = Poly::linear(rat_i(0), rat_i(2));
            let next = &(&two_x * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // Unnormalized C_k with lambda = (n-2)/2 satisfies
    //   k C_k = 2x (k + lambda - 1) C_{k-1} - (k + 2 lambda - 2) C_{k-2},
    // and C_k(1) = binom(k + n - 3, k). Dividing through by the values at 1
    // gives a recurrence for the normalized family directly.
    let c1 =
        |j: u32| -> Rational { Rational::from_integer(binom_big((j + n - 3) as u64, j as u64)) };
    let lambda = Rational::new(BigInt::from(n as i64 - 2), BigInt::from(2));
    let mut prev = Poly::one();
    let mut cur = Poly::x();
    for j in 2..=k {
        let jr = rat_i(j as i64);
        let a = rat_i(2) * (&jr + &lambda - rat_i(1)) * c1(j - 1) / (&jr * c1(j));
        let b = (&jr + rat_i(2) * &lambda - rat_i(2)) * c1(j - 2) / (&jr * c1(j));
        let next = &(&Poly::linear(rat_i(0), a) * &cur) - &prev.scale(&b);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur.eval(&rat_i(1)), rat_i(1));
    cur
}

/// Expands `p` in the Gegenbauer basis for dimension `n`, returning
/// coefficients `f_0..f_deg(p)` with `p = sum f_k G_k` exactly.
///
/// ```
/// use spherecode::exact::{gegenbauer_expand, rat, rat_i, Poly};
/// // x^2 = 1/22 G_0 + 21/22 G_2 in dimension 22
/// let f = gegenbauer_expand(&Poly::x().pow(2), 22);
/// assert_eq!(f, vec![rat(1, 22), rat_i(0), rat(21, 22)]);
/// ```
pub fn gegenbauer_expand(p: &Poly, n: u32) -> Vec<Rational> {
    let deg = match p.degree() {
        None => return Vec::new(),
        Some(d) => d,
    };
    let mut rem = p.clone();
    let mut out = vec![rat_i(0); deg + 1];
    for k in (0..=deg).rev() {
        let g = gegenbauer(n, k as u32);
        let fk = rem.coeff(k) / g.leading().unwrap();
        if !fk.is_zero() {
            rem = &rem - &g.scale(&fk);
        }
        out[k] = fk;
    }
    debug_assert!(rem.is_zero());
    out
}

/// Krawtchouk polynomial `K_k(x; n) = sum_j (-1)^j C(x, j) C(n-x, k-j)`,
/// as an exact polynomial in `x` of degree `k`.
pub fn krawtchouk(n: u32, k: u32) -> Poly {
    assert!(k <= n);
    // C(x, j) as a polynomial: x(x-1)...(x-j+1)/j!
    let falling = |shifts: &mut dyn Iterator<Item = Rational>, j: u32| -> Poly {
        let mut p = Poly::one();
        for _ in 0..j {
            let s = shifts.next().unwrap();
            p = &p * &Poly::linear(s, rat_i(1));
        }
        p
    };
    let mut acc = Poly::zero();
    for j in 0..=k {
        // C(x, j)
        let mut sh1 = (0..).map(|i| rat_i(-i));
        let mut cj = falling(&mut sh1, j);
        for i in 1..=j {
            cj = cj.scale(&(rat_i(1) / rat_i(i as i64)));
        }
        // C(n - x, k - j): product over i of (n - i - x)/(k-j)!
        let mut p2 = Poly::one();
        for i in 0..(k - j) {
            p2 = &p2 * &Poly::linear(rat_i((n - i) as i64), rat_i(-1));
        }
        for i in 1..=(k - j) {
            p2 = p2.scale(&(rat_i(1) / rat_i(i as i64)));
        }
        let term = &cj * &p2;
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Normalized even moment of the Gegenbauer weight: the exact value of
/// `∫ x^i (1-x^2)^((n-3)/2) dx / ∫ (1-x^2)^((n-3)/2) dx` over [-1, 1].
/// Odd moments vanish; the even ones satisfy m_{2a}/m_{2a-2} = (2a-1)/(n+2a-2).
pub fn weight_moment(n: u32, i: u32) -> Rational {
    assert!(n >= 2);
    if i % 2 == 1 {
        return rat_i(0);
    }
    let mut m = rat_i(1);
    let mut a = 2u32;
    while a <= i {
        m = m * rat_i(a as i64 - 1) / rat_i((n + a - 2) as i64);
        a += 2;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Independent construction of the normalized Gegenbauer family by
    /// Gram-Schmidt against the exact weight moments.
    fn gegenbauer_by_gram_schmidt(n: u32, k: u32) -> Poly {
        let ip = |p: &Poly, q: &Poly| -> Rational {
            let prod = p * q;
            let mut acc = rat_i(0);
            for (i, c) in prod.coeffs().iter().enumerate() {
                acc += c * weight_moment(n, i as u32);
            }
            acc
        };
        let mut basis: Vec<Poly> = Vec::new();
        for d in 0..=k {
            let mut v = Poly::x().pow(d);
            for b in &basis {
                let coef = ip(&v, b) / ip(b, b);
                v = &v - &b.scale(&coef);
            }
            basis.push(v);
        }
        let g = basis.pop().unwrap();
        let at_one = g.eval(&rat_i(1));
        g.scale(&(rat_i(1) / at_one))
    }

    #[test]
    fn matches_gram_schmidt_oracle() {
        for n in [3, 4, 22, 23, 24] {
            for k in 0..=6 {
                assert_eq!(
                    gegenbauer(n, k),
                    gegenbauer_by_gram_schmidt(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn normalized_at_one() {
        for n in [2, 3, 20, 21, 22, 23, 24] {
            for k in 0..=10 {
                assert_eq!(gegenbauer(n, k).eval(&rat_i(1)), rat_i(1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn dimension_22_degree_2() {
        assert_eq!(
            gegenbauer(22, 2),
            Poly::from_coeffs(vec![rat(-1, 21), rat_i(0), rat(22, 21)])
        );
    }

    #[test]
    fn orthogonality_under_exact_weight_integral() {
        for n in [3, 22, 23] {
            let ip = |p: &Poly, q: &Poly| -> Rational {
                let prod = p * q;
                let mut acc = rat_i(0);
                for (i, c) in prod.coeffs().iter().enumerate() {
                    acc += c * weight_moment(n, i as u32);
                }
                acc
            };
            for j in 0..=8u32 {
                for k in 0..=8u32 {
                    let v = ip(&gegenbauer(n, j), &gegenbauer(n, k));
                    if j == k {
                        assert!(v > rat_i(0), "n={n} j={j}");
                    } else {
                        assert!(v.is_zero(), "n={n} j={j} k={k}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn expand_basis_element() {
        assert_eq!(gegenbauer_expand(&Poly::x(), 22), vec![rat_i(0), rat_i(1)]);
    }

    #[test]
    fn expand_x_squared_cross_checked_by_evaluation() {
        // Oracle: solve for (f0, f1, f2) by evaluating at x = 0, 1/2, 1 and
        // compare against the triangular expansion.
        let f = gegenbauer_expand(&Poly::x().pow(2), 22);
        assert_eq!(f, vec![rat(1, 22), rat_i(0), rat(21, 22)]);
        for x in [rat_i(0), rat(1, 2), rat_i(1)] {
            let lhs = &x * &x;
            let rhs: Rational = (0..=2)
                .map(|k| &f[k] * gegenbauer(22, k as u32).eval(&x))
                .sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn expansion_round_trip_degree_6() {
        let p = Poly::from_coeffs(vec![
            rat(1, 3),
            rat(-2, 7),
            rat_i(0),
            rat(5, 2),
            rat_i(-1),
            rat(1, 11),
            rat(3, 4),
        ]);
        for n in [3, 22, 24] {
            let f = gegenbauer_expand(&p, n);
            let mut rec = Poly::zero();
            for (k, fk) in f.iter().enumerate() {
                rec = &rec + &gegenbauer(n, k as u32).scale(fk);
            }
            assert_eq!(rec, p);
        }
    }

    #[test]
    fn krawtchouk_basics() {
        // K_0 = 1 and K_1(x; n) = n - 2x
        assert_eq!(krawtchouk(21, 0), Poly::one());
        assert_eq!(krawtchouk(4, 1), Poly::linear(rat_i(4), rat_i(-2)));
    }

    /// Brute-force oracle: K_k(w; n) = sum over weight-k words y of
    /// (-1)^{<x,y>} for any fixed weight-w word x.
    fn krawtchouk_brute(n: u32, k: u32, w: u32) -> i64 {
        let x: u64 = (1u64 << w) - 1;
        let mut total = 0i64;
        // iterate over all weight-k subsets of n bits
        fn rec(n: u32, k: u32, start: u32, y: u64, x: u64, total: &mut i64) {
            if k == 0 {
                *total += if (x & y).count_ones() % 2 == 0 { 1 } else { -1 };
                return;
            }
            for i in start..=(n - k) {
                rec(n, k - 1, i + 1, y | (1u64 << i), x, total);
            }
        }
        rec(n, k, 0, 0, x, &mut total);
        total
    }

    #[test]
    fn krawtchouk_matches_character_sum() {
        for (n, k, w) in [(21, 2, 8), (21, 2, 7), (10, 3, 4), (8, 4, 3)] {
            let poly = krawtchouk(n, k);
            let val = poly.eval(&rat_i(w as i64));
            assert_eq!(val, rat_i(krawtchouk_brute(n, k, w)), "n={n} k={k} w={w}");
        }
        // frozen values from the character-sum oracle
        assert_eq!(krawtchouk(21, 2).eval(&rat_i(8)), rat_i(2));
        assert_eq!(krawtchouk(21, 2).eval(&rat_i(7)), rat_i(14));
    }

    #[test]
    fn moment_ratios() {
        // n = 3 is the uniform weight on [-1,1]: m_2 = 1/3, m_4 = 1/5
        assert_eq!(weight_moment(3, 2), rat(1, 3));
        assert_eq!(weight_moment(3, 4), rat(1, 5));
        assert_eq!(weight_moment(22, 3), rat_i(0));
    }
}
