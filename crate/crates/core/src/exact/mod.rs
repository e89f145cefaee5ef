//! Exact arithmetic substrate.
//!
//! Everything downstream reduces to a handful of primitives implemented
//! here: arbitrary-precision rationals, dense rational polynomials with
//! Sturm-sequence sign analysis, Gegenbauer and Krawtchouk families,
//! fraction-free linear solving, bit-packed GF(2) row spaces, and integer
//! lattice normal forms. All types are immutable after construction and all
//! operations are pure functions.

mod f2;
mod hnf;
mod linalg;
mod orthopoly;
mod poly;
mod rational;
mod sturm;

pub use f2::{f2_rank, f2_span_count_with_prefix, F2Matrix, SpanBasis};
pub use hnf::{hermite_normal_form, HnfError, IntLattice};
pub use linalg::{solve_linear_system, LinAlgError};
pub use orthopoly::{gegenbauer, gegenbauer_expand, krawtchouk, weight_moment};
pub use poly::Poly;
pub use rational::{big, parse_rational, rat, rat_i, ParseRationalError, Rational};
pub use sturm::{find_positive_point, nonpositive_on_interval, rational_roots_in};
