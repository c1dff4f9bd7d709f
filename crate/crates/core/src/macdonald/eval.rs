//! Principal specialization, the product evaluation formula, and duality.

use num_rational::Rational64;

use crate::partitions::Partition;
use crate::qexact::LaurentQTA;

use super::fraction::{one_minus, qt, QTFraction};
use super::poly::{macdonald_p, padded, SymLaurent};
use super::MacdonaldError;

/// The centered point `x_i = t^{(n+1−2i)/2}`, `i = 1..n`.
pub fn rho_point(n: usize) -> Vec<Rational64> {
    (1..=n as i64).map(|i| Rational64::new(n as i64 + 1 - 2 * i, 2)).collect()
}

/// `P(t^{ρ})` for `P` in `n` variables.
pub fn principal_specialization(p: &SymLaurent, n: usize) -> QTFraction {
    assert_eq!(p.nvars(), n, "variable count");
    p.eval_t_powers(&rho_point(n))
}

/// The product formula for the value of `P_b` at `t^{ρ}` in type `A_n`
/// (`n + 1` variables; `b` given as a partition with at most `n` rows):
/// `t^{−(ρ,b)} ∏_{i<j} ∏_{k=0}^{b_i−b_j−1} (1 − q^k t^{j−i+1}) / (1 − q^k t^{j−i})`.
pub fn evaluation_formula(b: &Partition, n: usize) -> Result<QTFraction, MacdonaldError> {
    if b.len() > n {
        return Err(MacdonaldError::RankBound { size: b.size(), n });
    }
    let vars = n + 1;
    let rho = rho_point(vars);
    let pair: Rational64 = (0..vars).map(|i| Rational64::from_integer(b.part(i) as i64) * rho[i]).sum();
    let mut num = qt(1, Rational64::from_integer(0), -pair);
    let mut den = LaurentQTA::one();
    for i in 0..vars {
        for j in i + 1..vars {
            let d = (j - i) as i64;
            for k in 0..(b.part(i) - b.part(j)) as i64 {
                num = &num * &one_minus(k, d + 1);
                den = &den * &one_minus(k, d);
            }
        }
    }
    Ok(QTFraction::new(num, den))
}

/// `(λ₁ − λ_n, …, λ₁ − λ₁)`: the diagram of the dual weight in `n` variables.
pub fn dual_partition(lambda: &Partition, n: usize) -> Partition {
    let l1 = lambda.first();
    Partition::new((0..n).map(|i| l1 - lambda.part(n - 1 - i)).collect())
}

/// Outcome of [`duality_check`]; both flags must hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub lambda: Partition,
    pub n: usize,
    /// `P_λ(x⁻¹) = (x₁⋯x_n)^{−λ₁} P_{λ*}(x)`.
    pub inversion: bool,
    /// `P_λ(t^{−ρ}) = P_λ(t^{ρ})`.
    pub evaluation: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.inversion && self.evaluation
    }
}

pub fn duality_check(lambda: &Partition, n: usize) -> Result<DualityReport, MacdonaldError> {
    let p = macdonald_p(lambda, n)?;
    let dual = macdonald_p(&dual_partition(lambda, n), n)?;
    let inversion = p.invert() == dual.shift(-(lambda.first() as i64));
    let point = rho_point(n);
    let neg: Vec<Rational64> = point.iter().map(|x| -x).collect();
    let evaluation = p.eval_t_powers(&neg) == p.eval_t_powers(&point);
    Ok(DualityReport {
        lambda: lambda.clone(),
        n,
        inversion,
        evaluation,
    })
}

/// Key of the orbit sum `m_λ` in `n` variables.
pub fn orbit_key(lambda: &Partition, n: usize) -> Vec<i64> {
    padded(lambda, n)
}
