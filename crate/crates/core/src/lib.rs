//! Composite HOMFLY-PT polynomials of torus knots, computed exactly, together
//! with the symmetric-function and Macdonald machinery behind them and a suite
//! of checks against transcribed superpolynomials.

pub mod partitions;
pub mod macdonald;
pub mod qexact;
pub mod rosso;
pub mod symfunc;
pub mod verify;
