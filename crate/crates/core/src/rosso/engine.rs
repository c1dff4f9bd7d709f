//! Assembly of composite HOMFLY-PT polynomials of torus knots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use rayon::prelude::*;

use crate::partitions::{CompositeDiagram, Partition};
use crate::qexact::{BracketProduct, FactoredFraction, FactoredSum, LaurentQA, SymExponent, SymMonomial};
use crate::symfunc::{adams_coefficients, composite_adams};

use super::eigen::braiding_eigenvalue;
use super::qdim::{hook_content_dimension, quantum_dimension};
use super::RossoError;

/// The `(r, s)` torus knot, stored with `r > s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    r: usize,
    s: usize,
}

impl TorusKnot {
    pub fn new(r: usize, s: usize) -> Result<Self, RossoError> {
        let (r, s) = if r >= s { (r, s) } else { (s, r) };
        if s < 1 || r < 2 || r.gcd(&s) != 1 {
            return Err(RossoError::InvalidKnot { r, s });
        }
        Ok(TorusKnot { r, s })
    }

    pub fn trefoil() -> Self {
        TorusKnot { r: 3, s: 2 }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of strands used for the Adams operation (`min(r, s)`).
    pub fn strands(&self) -> usize {
        self.s
    }

    /// The exponent `max/min` applied to summand eigenvalues.
    pub fn twist(&self) -> Rational64 {
        Rational64::new(self.r as i64, self.s as i64)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.r, self.s)
    }
}

/// One summand `c · θ_{[λ,μ]}^{−rs} θ_{[β,γ]}^{max/min} · dim V_{[β,γ]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub key: CompositeDiagram,
    pub coefficient: i64,
    pub theta: SymMonomial,
    pub dim: BracketProduct,
    /// Exponent of `θ_{[λ,μ]}^{−rs} θ_{[β,γ]}^{max/min}`, free of `N²` and `1/N`.
    pub combined: SymExponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub knot: TorusKnot,
    pub color: CompositeDiagram,
    /// Normalized polynomial (value 1 on the unknot).
    pub normalized: LaurentQA,
    /// Unnormalized invariant, term by term.
    pub summands: Vec<Summand>,
    /// The unnormalized invariant over its common bracket denominator.
    pub unnormalized: FactoredFraction,
    pub dim: BracketProduct,
}

impl InvariantResult {
    /// Human-readable per-term cancellation report.
    pub fn diagnostics(&self) -> String {
        let mut s = format!(
            "{} color {}: {} summands, all N^2 and 1/N exponent parts cancelled\n",
            self.knot,
            self.color,
            self.summands.len()
        );
        for t in &self.summands {
            s.push_str(&format!("  {}\tc={}\tcombined q^({})\n", t.key, t.coefficient, t.combined));
        }
        s
    }
}

/// Normalized and unnormalized composite invariant of a torus knot.
pub fn composite_homfly(k: TorusKnot, lambda: &Partition, mu: &Partition) -> Result<InvariantResult, RossoError> {
    let m = k.strands();
    let expansion = composite_adams(lambda, mu, m);
    let theta = braiding_eigenvalue(lambda, mu);
    let terms: Vec<(CompositeDiagram, i64, SymMonomial, BracketProduct)> = expansion
        .iter()
        .map(|(key, c)| {
            (
                key.clone(),
                *c,
                braiding_eigenvalue(&key.lambda, &key.mu),
                quantum_dimension(&key.lambda, &key.mu),
            )
        })
        .collect();
    assemble(k, CompositeDiagram::new(lambda.clone(), mu.clone()), theta, terms, quantum_dimension(lambda, mu))
}

/// The one-diagram formula: Adams coefficients of `λ`, one-diagram eigenvalues
/// and hook-content dimensions.
pub fn classical_homfly(k: TorusKnot, lambda: &Partition) -> Result<InvariantResult, RossoError> {
    let m = k.strands();
    let theta = single_eigenvalue(lambda);
    let terms = adams_coefficients(lambda, m)
        .iter()
        .map(|(nu, c)| {
            (
                CompositeDiagram::new(Partition::empty(), nu.clone()),
                *c,
                single_eigenvalue(nu),
                hook_content_dimension(nu),
            )
        })
        .collect();
    assemble(
        k,
        CompositeDiagram::new(Partition::empty(), lambda.clone()),
        theta,
        terms,
        hook_content_dimension(lambda),
    )
}

/// `θ_ν = q^{−(κ_ν + |ν|N − |ν|²/N)/2}` directly from the one-diagram formula.
fn single_eigenvalue(nu: &Partition) -> SymMonomial {
    let n = Rational64::from_integer(nu.size() as i64);
    let half = Rational64::new(-1, 2);
    SymMonomial::q_power(SymExponent::new(
        Rational64::from_integer(0),
        n * half,
        Rational64::from_integer(nu.kappa()) * half,
        -(n * n) * half,
    ))
}

fn assemble(
    k: TorusKnot,
    color: CompositeDiagram,
    theta: SymMonomial,
    terms: Vec<(CompositeDiagram, i64, SymMonomial, BracketProduct)>,
    dim: BracketProduct,
) -> Result<InvariantResult, RossoError> {
    let rs = Rational64::from_integer((k.r * k.s) as i64);
    let outer = theta.pow(-rs)?;
    let mut summands = Vec::with_capacity(terms.len());
    for (key, c, th, d) in terms {
        let combined = outer * th.pow(k.twist())?;
        if !combined.exponent.is_rank_free() {
            return Err(RossoError::RankCancellation {
                key: key.to_string(),
                exponent: combined.exponent.to_string(),
            });
        }
        summands.push(Summand {
            key,
            coefficient: c,
            theta: th,
            dim: d,
            combined: combined.exponent,
        });
    }
    let factored: Vec<_> = summands
        .par_iter()
        .map(|t| {
            t.dim
                .with_exponent(t.combined)
                .to_term(&BigInt::from(t.coefficient))
        })
        .collect::<Result<_, _>>()?;
    let unnormalized = FactoredSum::from_terms(factored).combine();
    let dim_term = dim.to_term(&BigInt::from(1))?;
    if !dim_term.monomial.is_one() {
        return Err(RossoError::Internal(format!("dimension {dim} carries a prefactor")));
    }
    let extra: BTreeMap<(i64, i64), i32> = dim_term.factors.iter().map(|(f, e)| (*f, -*e)).collect();
    let normalized = unnormalized.divide_by(&extra)?;
    if !normalized.has_integer_exponents() {
        return Err(RossoError::NonIntegral(normalized.to_string()));
    }
    Ok(InvariantResult {
        knot: k,
        color,
        normalized,
        summands,
        unnormalized,
        dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::qexact::int;

    fn qa(terms: &[(i64, i64, i64)]) -> LaurentQA {
        terms
            .iter()
            .fold(LaurentQA::zero(), |acc, &(c, q, a)| acc + LaurentQA::qa(c, int(q), int(a)))
    }

    #[test]
    fn knots() {
        assert_eq!(TorusKnot::new(2, 3).unwrap(), TorusKnot::trefoil());
        assert!(TorusKnot::new(4, 2).is_err());
        assert!(TorusKnot::new(1, 1).is_err());
        assert!(TorusKnot::new(2, 1).is_ok());
    }

    #[test]
    fn trefoil_fundamental() {
        let expect = qa(&[(1, -1, 1), (-1, 0, 2), (1, 1, 1)]);
        let res = composite_homfly(TorusKnot::trefoil(), &part![], &part![1]).unwrap();
        assert_eq!(res.normalized, expect);
        let res = classical_homfly(TorusKnot::trefoil(), &part![1]).unwrap();
        assert_eq!(res.normalized, expect);
    }

    #[test]
    fn trefoil_adjoint() {
        let expect = qa(&[
            (1, -2, 2), (1, 2, 2), (2, 0, 2),
            (-2, -2, 3), (1, -1, 3), (1, 1, 3), (-2, 2, 3), (-2, 0, 3),
            (1, -2, 4), (-2, -1, 4), (-2, 1, 4), (1, 2, 4), (3, 0, 4),
            (1, -1, 5), (1, 1, 5), (-2, 0, 5),
        ]);
        let res = composite_homfly(TorusKnot::trefoil(), &part![1], &part![1]).unwrap();
        assert_eq!(res.normalized, expect);
        assert_eq!(res.summands.len(), 5);
    }

    #[test]
    fn trivial_colors_and_unknot() {
        let one = LaurentQA::one();
        for k in [TorusKnot::trefoil(), TorusKnot::new(4, 3).unwrap()] {
            assert_eq!(composite_homfly(k, &part![], &part![]).unwrap().normalized, one);
        }
        let unknot = TorusKnot::new(2, 1).unwrap();
        for (l, m) in [(part![1], part![1]), (part![], part![2]), (part![2], part![1, 1])] {
            assert_eq!(composite_homfly(unknot, &l, &m).unwrap().normalized, one);
        }
    }
}
