//! Exact arithmetic: symbolic-rank exponents, q,a-integers and Laurent polynomials.

pub mod bracket;
pub mod exponent;
pub mod format;
pub mod laurent;

use thiserror::Error;

pub use bracket::{bracket_to_fraction, quantum_int, Bracket, BracketProduct, FactoredFraction, FactoredSum, FactoredTerm};
pub use exponent::{sym_to_qa, SymExponent, SymMonomial};
pub use format::{parse_poly, write_poly, PolyFile};
pub use laurent::{int, rat, Exps, Laurent, LaurentQ, LaurentQA, LaurentQTA, Subst};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QExactError {
    #[error("exponent {exponent} still depends on the rank (N² or 1/N part did not cancel)")]
    ResidualRank { exponent: String },
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("signed substitution into fractional exponent {exponent}")]
    FractionalSignedExponent { exponent: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Exact division; free-function form of [`Laurent::exact_divide`].
pub fn exact_divide<const K: usize>(n: &Laurent<K>, d: &Laurent<K>) -> Result<Laurent<K>, QExactError> {
    n.exact_divide(d)
}

/// Free-function form of [`Laurent::substitute`].
pub fn substitute<const K: usize, const L: usize>(
    p: &Laurent<K>,
    map: &[Subst<L>; K],
) -> Result<Laurent<L>, QExactError> {
    p.substitute(map)
}

/// Free-function form of [`Laurent::tilde_normalize`].
pub fn tilde_normalize<const K: usize>(p: &Laurent<K>) -> (Laurent<K>, Exps<K>) {
    p.tilde_normalize()
}
