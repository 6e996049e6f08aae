//! Exact enumeration and generating-function analysis of directed
//! bond-animals on the square lattice.
//!
//! The crate is organised around five subsystems:
//!
//! * [`algebra`] — an exact arithmetic kernel: big rationals, dense
//!   univariate and bivariate polynomials, rational functions, cyclotomic
//!   factorization, truncated series (including square roots), partial
//!   fractions over monomial pole bases and the restricted Hadamard
//!   product.
//! * [`animals`] — directed bond-animals: canonical representation,
//!   brute-force growth enumeration, a fixed-vertical-count transfer
//!   enumerator, and the 2-directed / primitive classifiers.
//! * [`haruspicy`] — the section calculus: section lines, pages,
//!   duplicate-section deletion and reduction to section-minimal animals.
//! * [`temperley`] — the row-by-row recurrence engine for 2-directed
//!   animals: building-block generating functions, the Hadamard-product
//!   step, degenerate specialisations, and pole certificates.
//! * [`analysis`] — series-to-structure analysis: site-animal expansions,
//!   exact Padé reconstruction, the denominator conjecture and the
//!   pole-accumulation (D-finiteness) report.
//!
//! All computations are exact; floating point appears only in the numeric
//! root localisation used by the unit-circle check, and that step never
//! adjudicates a borderline root (exact ±1 factors are removed first).

pub mod algebra;
pub mod analysis;
pub mod animals;
pub mod haruspicy;
pub mod json;
pub mod temperley;

pub use algebra::{
    cyclotomic, BiPoly, BiRat, CycloFactorization, PartialFractionForm, Poly, Rat,
    RationalFunction, Series,
};
pub use animals::{Bond, BondAnimal, Orientation, SeriesTable};
pub use haruspicy::SectionDecomposition;
