//! Exact Delsarte linear programming machinery: spherical LP certificates,
//! an exact rational simplex solver, Krawtchouk LP bounds for binary codes,
//! and constant-weight packing bounds.

mod binary;
mod certificate;
mod parse;
mod simplex;

pub use binary::{binary_code_lp_bound, constant_weight_bound, BoundError, LpBound};
pub use certificate::{
    check_spherical_certificate, find_spherical_certificate, CertificateError, SphericalCertificate,
};
pub use parse::{parse_polynomial, PolyParseError};
pub use simplex::{
    simplex_solve, verify_feasible, Constraint, LinearProgram, Relation, SimplexOutcome,
};
