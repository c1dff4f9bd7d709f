//! Independent evaluation of the normalized invariant at a concrete rank.
//!
//! Works with the single diagram `[λ,μ]_N` as an `SL_N` representation: Adams
//! coefficients truncated to at most `N` rows, full columns stripped, one-diagram
//! eigenvalues and the root-product dimension at that rank.

use num_bigint::BigInt;
use num_rational::Rational64;

use crate::partitions::{compose_at_n, Partition};
use crate::qexact::LaurentQ;
use crate::symfunc::adams_bounded;

use super::eigen::eigenvalue_exponent_at_rank;
use super::engine::TorusKnot;
use super::qdim::dim_at_rank;
use super::RossoError;

/// Removes columns of height `n`.
fn strip_full_columns(nu: &Partition, n: usize) -> Partition {
    if nu.len() < n {
        return nu.clone();
    }
    let k = nu.part(n - 1);
    Partition::new(nu.rows().iter().map(|r| r - k).collect())
}

/// The normalized invariant of color `[λ,μ]` at `a = q^N`, as a polynomial in `q`.
pub fn finite_n_oracle(k: TorusKnot, lambda: &Partition, mu: &Partition, n: usize) -> Result<LaurentQ, RossoError> {
    let p = compose_at_n(lambda, mu, n)?;
    let rank = n as i64;
    let m = k.strands();
    let rs = Rational64::from_integer((k.r() * k.s()) as i64);
    let outer = -rs * eigenvalue_exponent_at_rank(&p, rank);
    let mut total = LaurentQ::zero();
    for (nu, c) in adams_bounded(&p, m, n).iter() {
        let nu = strip_full_columns(nu, n);
        let e = outer + k.twist() * eigenvalue_exponent_at_rank(&nu, rank);
        let d = dim_at_rank(&nu, n)?;
        total += &d.mul_monomial(&BigInt::from(*c), &[e]);
    }
    Ok(total.exact_divide(&dim_at_rank(&p, n)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::qexact::int;

    #[test]
    fn trefoil_jones() {
        // a q^-1 - a^2 + a q at a = q^2
        let j = finite_n_oracle(TorusKnot::trefoil(), &part![], &part![1], 2).unwrap();
        let expect = LaurentQ::q(1, int(1)) + LaurentQ::q(1, int(3)) - LaurentQ::q(1, int(4));
        assert_eq!(j, expect);
        for n in 1..4 {
            assert!(finite_n_oracle(TorusKnot::trefoil(), &part![], &part![], n).unwrap().is_one());
        }
        assert!(finite_n_oracle(TorusKnot::trefoil(), &part![1], &part![1], 1).is_err());
    }
}
