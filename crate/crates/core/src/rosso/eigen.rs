//! Braiding eigenvalues `θ_{[λ,μ]}`.

use num_rational::Rational64;

use crate::partitions::{kappa_composite, Partition};
use crate::qexact::{SymExponent, SymMonomial};

/// `θ_{[λ,μ]} = q^{−(κ + cN − c²/N)/2}` with `c = |μ| − |λ| + λ₁N`.
pub fn braiding_eigenvalue(lambda: &Partition, mu: &Partition) -> SymMonomial {
    let kappa = kappa_composite(lambda, mu);
    let c0 = Rational64::from_integer(mu.size() as i64 - lambda.size() as i64);
    let c1 = Rational64::from_integer(lambda.first() as i64);
    let half = Rational64::new(-1, 2);
    // κ + cN − c²/N, collected by powers of N
    let e2 = kappa.coeff(2) + c1;
    let e1 = kappa.coeff(1) + c0 - c1 * c1;
    let e0 = kappa.coeff(0) - Rational64::from_integer(2) * c0 * c1;
    let em1 = -(c0 * c0);
    SymMonomial::q_power(SymExponent::new(e2 * half, e1 * half, e0 * half, em1 * half))
}

/// `θ` of a single diagram at a concrete rank, as a rational `q`-exponent.
pub fn eigenvalue_exponent_at_rank(nu: &Partition, n: i64) -> Rational64 {
    let c = Rational64::from_integer(nu.size() as i64);
    let n = Rational64::from_integer(n);
    let k = Rational64::from_integer(nu.kappa());
    -(k + c * n - c * c / n) / Rational64::from_integer(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::qexact::{int, rat};

    #[test]
    fn table_entries() {
        let t = braiding_eigenvalue(&part![], &part![1]).exponent;
        assert_eq!(t, SymExponent::new(int(0), rat(-1, 2), int(0), rat(1, 2)));
        let t = braiding_eigenvalue(&part![], &part![1, 1]).exponent;
        assert_eq!(t, SymExponent::new(int(0), int(-1), int(1), int(2)));
        let t = braiding_eigenvalue(&part![], &part![2]).exponent;
        assert_eq!(t, SymExponent::new(int(0), int(-1), int(-1), int(2)));
        let t = braiding_eigenvalue(&part![1], &part![1]).exponent;
        assert_eq!(t, SymExponent::new(int(0), int(-1), int(0), int(0)));
        assert_eq!(braiding_eigenvalue(&part![], &part![]).exponent, SymExponent::zero());
        let t = braiding_eigenvalue(&part![2], &part![2]).exponent;
        assert_eq!(t, SymExponent::new(int(0), int(-2), int(-2), int(0)));
        let t = braiding_eigenvalue(&part![1, 1], &part![1, 1]).exponent;
        assert_eq!(t, SymExponent::new(int(0), int(-2), int(2), int(0)));
    }

    #[test]
    fn agrees_with_single_diagram_at_rank() {
        for n in 3..7 {
            let p = crate::partitions::compose_at_n(&part![2], &part![1, 1], n as usize).unwrap();
            let sym = braiding_eigenvalue(&part![2], &part![1, 1]).exponent.eval(n);
            assert_eq!(sym, eigenvalue_exponent_at_rank(&p, n));
        }
    }
}
