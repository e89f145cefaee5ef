//! Exact-arithmetic construction and verification of lattice-derived
//! spherical codes.
//!
//! The crate builds the 196560 minimal vectors of the Leech lattice in
//! integer coordinates, derives the chain of kissing configurations
//! (24,196560,1/2) → (23,4600,1/3) → (22,891,1/4) → (21,336,1/5) →
//! (20,170,1/6), and certifies the structural facts those codes satisfy:
//! linear programming bounds, spherical design strength, association-scheme
//! intersection numbers, Steiner systems, GF(2) span arguments and sublattice
//! indices. Every check runs in exact rational arithmetic; no floating point
//! is used anywhere.
//!
//! Modules map onto the main subsystems:
//!
//! * [`exact`]: rationals, polynomials, Sturm sign analysis, orthogonal
//!   polynomial families, exact linear algebra, GF(2) and integer lattices.
//! * [`leech`]: the binary Golay code and the Leech minimal vectors.
//! * [`codes`]: derived spherical codes, spectra, designs, moments and
//!   intersection numbers.
//! * [`bounds`]: Delsarte linear programming machinery and binary-code
//!   bounds, backed by an exact rational simplex solver.
//! * [`combinatorics`]: Steiner systems S(2,5,21) and S(3,6,22).
//! * [`uniqueness`]: the two structure-verification pipelines and their
//!   machine-readable certificate reports.

pub mod bounds;
pub mod codes;
pub mod combinatorics;
pub mod exact;
pub mod leech;
pub mod uniqueness;

// The guide chapters under book/src contain runnable snippets; compiling
// them as doc-tests keeps the book in sync with the public API.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(ExactArithmetic, "../../../book/src/exact-arithmetic.md");
    chapter!(
        OrthogonalPolynomials,
        "../../../book/src/orthogonal-polynomials.md"
    );
    chapter!(LpBounds, "../../../book/src/lp-bounds.md");
    chapter!(LeechLattice, "../../../book/src/leech-lattice.md");
    chapter!(
        DesignsAndSchemes,
        "../../../book/src/designs-and-schemes.md"
    );
    chapter!(SteinerSystems, "../../../book/src/steiner-systems.md");
    chapter!(
        UniquenessPipelines,
        "../../../book/src/uniqueness-pipelines.md"
    );
    chapter!(CommandLine, "../../../book/src/cli.md");
}
