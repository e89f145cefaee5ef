//! Delsarte linear programming certificates for spherical codes.
//!
//! A polynomial f with Gegenbauer expansion f = Σ f_k G_k certifies
//! N ≤ f(1)/f₀ for every code with maximal inner product t in S^{n-1},
//! provided f₀ > 0, f_k ≥ 0 for k ≥ 1, and f ≤ 0 on [-1, t]. Equality
//! forces every occurring inner product to be a root of f in [-1, t] and
//! the code to be a spherical design of strength deg f.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::exact::{
    find_positive_point, gegenbauer, gegenbauer_expand, rat_i, rational_roots_in, Poly, Rational,
};

use super::simplex::{simplex_solve, Constraint, LinearProgram, Relation, SimplexOutcome};

#[derive(Debug, Error, PartialEq)]
pub enum CertificateError {
    #[error("constant Gegenbauer coefficient f_0 = {value} is not positive")]
    NonpositiveConstant { value: Rational },
    #[error("Gegenbauer coefficient f_{k} = {value} is negative")]
    NegativeCoefficient { k: usize, value: Rational },
    #[error("polynomial is positive at s = {witness} inside [-1, t]")]
    PositiveOnInterval { witness: Rational },
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("no verified certificate found (search exhausted degrees 1..={degree})")]
    NoCertificateFound { degree: u32 },
}

/// A fully verified spherical LP certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalCertificate {
    pub polynomial: Poly,
    pub dimension: u32,
    pub threshold: Rational,
    /// Gegenbauer coefficients f_0..f_deg.
    pub expansion: Vec<Rational>,
    /// The code-size bound f(1)/f₀, exact.
    pub bound: Rational,
    /// Rational roots of the polynomial in [-1, t]: the inner products a
    /// bound-attaining code is allowed to use.
    pub equality_inner_products: Vec<Rational>,
    /// A bound-attaining code must be a spherical design of this strength.
    pub design_strength_required: u32,
    pub valid: bool,
}

impl SphericalCertificate {
    /// Largest code size compatible with the bound.
    pub fn bound_floor(&self) -> BigInt {
        self.bound.numer().div_floor(self.bound.denom())
    }
}

/// Verifies the three certificate conditions exactly and assembles the
/// certificate data. The returned bound is `p(1)/f₀`.
pub fn check_spherical_certificate(
    p: &Poly,
    n: u32,
    t: &Rational,
) -> Result<SphericalCertificate, CertificateError> {
    if p.degree().map_or(true, |d| d < 1) {
        return Err(CertificateError::DegreeTooSmall);
    }
    let expansion = gegenbauer_expand(p, n);
    if !expansion[0].is_positive() {
        return Err(CertificateError::NonpositiveConstant {
            value: expansion[0].clone(),
        });
    }
    for (k, f) in expansion.iter().enumerate().skip(1) {
        if f.is_negative() {
            return Err(CertificateError::NegativeCoefficient {
                k,
                value: f.clone(),
            });
        }
    }
    let minus_one = rat_i(-1);
    if let Some(witness) = find_positive_point(p, &minus_one, t) {
        return Err(CertificateError::PositiveOnInterval { witness });
    }
    let bound = p.eval(&rat_i(1)) / &expansion[0];
    let equality_inner_products = rational_roots_in(p, &minus_one, t);
    Ok(SphericalCertificate {
        polynomial: p.clone(),
        dimension: n,
        threshold: t.clone(),
        design_strength_required: p.degree().unwrap() as u32,
        expansion,
        bound,
        equality_inner_products,
        valid: true,
    })
}

/// Searches for a certificate of degree at most `degree` whose roots are
/// the given nodes: the LP minimizes f(1)/f₀ over expansions with f₀ = 1,
/// f_k ≥ 0, f(s) = 0 at every node and f'(s) = 0 at interior nodes (double
/// roots). Candidates are re-verified with [`check_spherical_certificate`];
/// only a fully verified certificate is returned.
pub fn find_spherical_certificate(
    n: u32,
    t: &Rational,
    degree: u32,
    node_set: &[Rational],
) -> Result<SphericalCertificate, CertificateError> {
    assert!(degree >= 1 && degree <= 10, "search degree out of range");
    let minus_one = rat_i(-1);
    assert!(
        node_set.iter().all(|s| *s >= minus_one && s <= t),
        "nodes must lie in [-1, t]"
    );
    for d in (1..=degree).rev() {
        let gs: Vec<Poly> = (0..=d).map(|k| gegenbauer(n, k)).collect();
        let derivs: Vec<Poly> = gs.iter().map(Poly::derivative).collect();
        let mut constraints = Vec::new();
        for s in node_set {
            // p(s) = 0 with f_0 = 1: sum_{k>=1} f_k G_k(s) = -1
            constraints.push(Constraint {
                coeffs: (1..=d as usize).map(|k| gs[k].eval(s)).collect(),
                rel: Relation::Eq,
                rhs: rat_i(-1),
            });
            if *s > minus_one && s < t {
                constraints.push(Constraint {
                    coeffs: (1..=d as usize).map(|k| derivs[k].eval(s)).collect(),
                    rel: Relation::Eq,
                    rhs: -derivs[0].eval(s),
                });
            }
        }
        // minimize 1 + sum f_k  ==  maximize -(sum f_k)
        let lp = LinearProgram {
            objective: vec![rat_i(-1); d as usize],
            constraints,
        };
        let f_tail = match simplex_solve(&lp) {
            SimplexOutcome::Optimal { solution, .. } => solution,
            _ => continue,
        };
        let mut p = gs[0].clone();
        for (k, fk) in f_tail.iter().enumerate() {
            p = &p + &gs[k + 1].scale(fk);
        }
        if let Ok(cert) = check_spherical_certificate(&p, n, t) {
            return Ok(cert);
        }
    }
    Err(CertificateError::NoCertificateFound { degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    pub(crate) fn aux_poly_891() -> Poly {
        let a = Poly::linear(rat(1, 2), rat_i(1)).pow(2);
        let b = Poly::linear(rat(1, 8), rat_i(1)).pow(2);
        let c = Poly::linear(rat(-1, 4), rat_i(1));
        &(&a * &b) * &c
    }

    #[test]
    fn certificate_for_891() {
        let cert = check_spherical_certificate(&aux_poly_891(), 22, &rat(1, 4)).unwrap();
        assert_eq!(cert.bound, rat_i(891));
        assert_eq!(cert.bound_floor(), 891.into());
        assert_eq!(
            cert.equality_inner_products,
            vec![rat(-1, 2), rat(-1, 8), rat(1, 4)]
        );
        assert_eq!(cert.design_strength_required, 5);
        // bound · f_0 = p(1) exactly
        assert_eq!(
            &cert.bound * &cert.expansion[0],
            cert.polynomial.eval(&rat_i(1))
        );
        // expansion reconstructs the polynomial
        let mut rec = Poly::zero();
        for (k, f) in cert.expansion.iter().enumerate() {
            rec = &rec + &gegenbauer(22, k as u32).scale(f);
        }
        assert_eq!(rec, cert.polynomial);
    }

    #[test]
    fn expansion_coefficients_match_projection_oracle() {
        // second algebraic route: f_k = <p, G_k>_w / <G_k, G_k>_w with the
        // exact weight moments
        use crate::exact::weight_moment;
        let p = aux_poly_891();
        let cert = check_spherical_certificate(&p, 22, &rat(1, 4)).unwrap();
        let ip = |a: &Poly, b: &Poly| -> Rational {
            let prod = a * b;
            prod.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * weight_moment(22, i as u32))
                .sum()
        };
        for (k, fk) in cert.expansion.iter().enumerate() {
            let g = gegenbauer(22, k as u32);
            assert_eq!(*fk, ip(&p, &g) / ip(&g, &g), "coefficient {k}");
        }
        // explicitly: f_0 = 27/11264 > 0
        assert_eq!(cert.expansion[0], rat(27, 11264));
    }

    #[test]
    fn antipodal_bound() {
        // x + 1 certifies at most 2 points at inner product -1
        let p = Poly::linear(rat_i(1), rat_i(1));
        for n in [3u32, 22, 23] {
            let cert = check_spherical_certificate(&p, n, &rat_i(-1)).unwrap();
            assert_eq!(cert.bound, rat_i(2));
        }
    }

    #[test]
    fn scaling_invariance() {
        let p = aux_poly_891();
        let scaled = p.scale(&rat(7, 3));
        let a = check_spherical_certificate(&p, 22, &rat(1, 4)).unwrap();
        let b = check_spherical_certificate(&scaled, 22, &rat(1, 4)).unwrap();
        assert_eq!(a.bound, b.bound);
        assert_eq!(a.equality_inner_products, b.equality_inner_products);
    }

    #[test]
    fn rejects_bad_certificates() {
        // x alone has f_0 = 0
        assert!(matches!(
            check_spherical_certificate(&Poly::x(), 22, &rat(1, 4)),
            Err(CertificateError::NonpositiveConstant { .. })
        ));
        // x^2 is positive inside the interval
        match check_spherical_certificate(&Poly::x().pow(2), 22, &rat(1, 4)) {
            Err(CertificateError::PositiveOnInterval { witness }) => {
                assert!(Poly::x().pow(2).eval(&witness).is_positive());
            }
            other => panic!("expected sign violation, got {other:?}"),
        }
    }

    #[test]
    fn search_recovers_891_polynomial() {
        let nodes = vec![rat(-1, 2), rat(-1, 8), rat(1, 4)];
        let cert = find_spherical_certificate(22, &rat(1, 4), 5, &nodes).unwrap();
        assert_eq!(cert.bound, rat_i(891));
        // proportional to the hand-built polynomial: same roots
        assert_eq!(
            cert.equality_inner_products,
            vec![rat(-1, 2), rat(-1, 8), rat(1, 4)]
        );
        let aux = aux_poly_891();
        let cross = &cert.polynomial.scale(aux.leading().unwrap())
            - &aux.scale(cert.polynomial.leading().unwrap());
        assert!(
            cross.is_zero(),
            "polynomial is not proportional to the optimum"
        );
    }

    #[test]
    fn search_finds_4600_certificate() {
        let nodes = vec![rat_i(-1), rat(-1, 3), rat_i(0), rat(1, 3)];
        let cert = find_spherical_certificate(23, &rat(1, 3), 7, &nodes).unwrap();
        assert_eq!(cert.bound, rat_i(4600));
    }

    #[test]
    fn trivial_degree_one_search() {
        let cert = find_spherical_certificate(5, &rat_i(-1), 1, &[rat_i(-1)]).unwrap();
        assert_eq!(cert.bound, rat_i(2));
    }
}
