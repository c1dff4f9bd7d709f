//! The composite Rosso-Jones engine.

pub mod eigen;
pub mod engine;
pub mod oracle;
pub mod qdim;

use thiserror::Error;

use crate::partitions::PartitionError;
use crate::qexact::QExactError;

pub use eigen::braiding_eigenvalue;
pub use engine::{classical_homfly, composite_homfly, InvariantResult, Summand, TorusKnot};
pub use oracle::finite_n_oracle;
pub use qdim::quantum_dimension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RossoError {
    #[error("({r},{s}) is not a torus knot (need coprime r ≥ 2, s ≥ 1)")]
    InvalidKnot { r: usize, s: usize },
    #[error("summand {key}: exponent {exponent} keeps a rank-dependent part")]
    RankCancellation { key: String, exponent: String },
    #[error("normalized invariant has fractional exponents: {0}")]
    NonIntegral(String),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    QExact(#[from] QExactError),
}
