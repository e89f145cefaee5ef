//! Polynomial expression parsing for the command line.
//!
//! Two forms are accepted: a comma-separated coefficient list of rationals
//! in increasing degree (`-1/4,0,1`), or a product of linear factors with
//! rational shifts and integer exponents (`(x+1/2)^2*(x+1/8)^2*(x-1/4)`).
//! A bare rational is a constant factor.

use thiserror::Error;

use crate::exact::{parse_rational, rat_i, Poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty polynomial expression")]
    Empty,
    #[error("invalid coefficient `{0}`")]
    Coefficient(String),
    #[error("malformed factor near `{0}`")]
    Factor(String),
    #[error("unexpected trailing input `{0}`")]
    Trailing(String),
}

pub fn parse_polynomial(expr: &str) -> Result<Poly, PolyParseError> {
    let expr = expr.trim();
    if expr.is_empty() {
        return Err(PolyParseError::Empty);
    }
    if expr.contains('(') || expr.to_ascii_lowercase().contains('x') {
        parse_factored(expr)
    } else if expr.contains(',') {
        parse_coefficients(expr)
    } else {
        // a single token: either a constant or invalid
        parse_rational(expr)
            .map(Poly::constant)
            .map_err(|_| PolyParseError::Coefficient(expr.to_string()))
    }
}

fn parse_coefficients(expr: &str) -> Result<Poly, PolyParseError> {
    let coeffs = expr
        .split(',')
        .map(|tok| {
            parse_rational(tok).map_err(|_| PolyParseError::Coefficient(tok.trim().to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

fn parse_factored(expr: &str) -> Result<Poly, PolyParseError> {
    let mut acc = Poly::one();
    for factor in expr.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(PolyParseError::Factor(factor.to_string()));
        }
        acc = &acc * &parse_factor(factor)?;
    }
    Ok(acc)
}

fn parse_factor(tok: &str) -> Result<Poly, PolyParseError> {
    let bad = || PolyParseError::Factor(tok.to_string());
    let (base, exp) = match tok.split_once('^') {
        None => (tok, 1u32),
        Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
    };
    let base_poly = if let Some(inner) = base.strip_prefix('(') {
        let inner = inner.strip_suffix(')').ok_or_else(bad)?.trim();
        parse_linear(inner).ok_or_else(bad)?
    } else if base.eq_ignore_ascii_case("x") {
        Poly::x()
    } else {
        parse_rational(base)
            .map(Poly::constant)
            .map_err(|_| bad())?
    };
    Ok(base_poly.pow(exp))
}

/// `x`, `x+p/q`, or `x-p/q` (whitespace tolerated).
fn parse_linear(inner: &str) -> Option<Poly> {
    let inner: String = inner.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = inner.strip_prefix('x')?;
    if rest.is_empty() {
        return Some(Poly::x());
    }
    let (sign, tail) = match rest.as_bytes()[0] {
        b'+' => (1i64, &rest[1..]),
        b'-' => (-1i64, &rest[1..]),
        _ => return None,
    };
    let shift = parse_rational(tail).ok()?;
    Some(Poly::linear(shift * rat_i(sign), rat_i(1)))
}
