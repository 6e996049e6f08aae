//! Exact arithmetic kernel.
//!
//! Everything here is immutable after construction and safe to share across
//! threads; all operations are pure functions. Rational functions are kept
//! fully reduced at all times — the degenerate substitutions elsewhere in
//! the crate are only correct if cancellable factors have actually been
//! cancelled.

mod bipoly;
mod birat;
mod cyclo;
mod field;
mod hadamard;
mod linsolve;
mod partfrac;
mod poly;
mod ratfun;
mod series;
mod upoly;

pub use bipoly::BiPoly;
pub use birat::{BiRat, SubstTarget};
pub use cyclo::{cyclo_factorize, cyclotomic, CycloFactorization};
pub use field::Field;
pub use hadamard::hadamard;
pub use linsolve::solve_linear_system;
pub use partfrac::{partial_fractions, PartialFractionForm, PfTerm};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use series::{series_of_ratio, series_sqrt, Series};
pub use upoly::UPoly;

use thiserror::Error;

/// A big rational number; the coefficient field for every series in the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for an exact integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// Series expansion requested where the denominator vanishes at the
    /// expansion point.
    #[error("denominator vanishes at the expansion point; series does not exist")]
    NonExpandable,
    /// `series_sqrt` requires the constant term to be one.
    #[error("series square root requires constant term 1, found {0}")]
    SqrtConstantTerm(String),
    /// A genuine pole survived reduction at a substitution target.
    #[error("pole at substitution target {target}: denominator {denominator} vanishes")]
    PoleAtTarget { target: String, denominator: String },
    /// Partial fractions only support denominators that split into the
    /// supplied `(1 - alpha t)` factors.
    #[error("denominator has a factor outside the monomial pole basis: {0}")]
    UnsupportedPole(String),
    /// Evaluation of a rational function hit a pole.
    #[error("evaluation pole: denominator vanishes at {0}")]
    EvaluationPole(String),
    /// Division by zero in a field operation.
    #[error("division by zero")]
    DivisionByZero,
}
