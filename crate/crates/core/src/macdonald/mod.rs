//! Type-A Macdonald polynomials at small rank, with their evaluation and
//! duality identities.
//!
//! Variables are `GL_n` coordinates. `P_λ` is produced by orthogonalizing the
//! monomial basis under the power-sum pairing
//! `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ ∏ (1 − q^{λ_i}) / (1 − t^{λ_i})`.

pub mod eval;
pub mod fraction;
pub mod poly;

use thiserror::Error;

pub use eval::{dual_partition, duality_check, evaluation_formula, principal_specialization, rho_point, DualityReport};
pub use fraction::QTFraction;
pub use poly::{macdonald_p, schur_polynomial, SymLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacdonaldError {
    #[error("partition of size {size} in {n} variables is outside the supported range (n ≤ 4, size ≤ 4, rows ≤ n)")]
    RankBound { size: usize, n: usize },
    #[error("substitution failed: {0}")]
    Substitution(String),
}
