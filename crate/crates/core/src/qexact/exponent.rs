//! q-exponents depending on a symbolic rank `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use super::laurent::LaurentQA;
use super::QExactError;

/// The exponent `e2·N² + e1·N + e0 + em1/N` of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymExponent {
    pub e2: Rational64,
    pub e1: Rational64,
    pub e0: Rational64,
    pub em1: Rational64,
}

impl SymExponent {
    pub fn new(e2: Rational64, e1: Rational64, e0: Rational64, em1: Rational64) -> Self {
        SymExponent { e2, e1, e0, em1 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Self::new(self.e2 * k, self.e1 * k, self.e0 * k, self.em1 * k)
    }

    /// Whether the exponent can be written in `q` and `a = q^N` alone.
    pub fn is_rank_free(&self) -> bool {
        self.e2.is_zero() && self.em1.is_zero()
    }

    /// Value at a concrete rank.
    pub fn eval(&self, n: i64) -> Rational64 {
        let n = Rational64::from_integer(n);
        self.e2 * n * n + self.e1 * n + self.e0 + self.em1 / n
    }
}

impl Add for SymExponent {
    type Output = SymExponent;
    fn add(self, r: Self) -> Self {
        Self::new(self.e2 + r.e2, self.e1 + r.e1, self.e0 + r.e0, self.em1 + r.em1)
    }
}

impl Sub for SymExponent {
    type Output = SymExponent;
    fn sub(self, r: Self) -> Self {
        self + (-r)
    }
}

impl Neg for SymExponent {
    type Output = SymExponent;
    fn neg(self) -> Self {
        self.scale(-Rational64::one())
    }
}

impl fmt::Display for SymExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            (self.e2, "N^2"),
            (self.e1, "N"),
            (self.e0, ""),
            (self.em1, "/N"),
        ]
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, v)| match *v {
            "" => format!("{c}"),
            "/N" => format!("({c})/N"),
            v => format!("({c}){v}"),
        })
        .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `sign · q^exponent`, with `q^N` read as `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymMonomial {
    pub sign: i8,
    pub exponent: SymExponent,
}

impl Default for SymMonomial {
    fn default() -> Self {
        Self::one()
    }
}

impl SymMonomial {
    pub fn new(sign: i8, exponent: SymExponent) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        SymMonomial { sign, exponent }
    }

    pub fn one() -> Self {
        Self::new(1, SymExponent::zero())
    }

    pub fn q_power(exponent: SymExponent) -> Self {
        Self::new(1, exponent)
    }

    /// Raises to a rational power; a negative sign needs an integer power.
    pub fn pow(&self, k: Rational64) -> Result<Self, QExactError> {
        let sign = if self.sign < 0 {
            if !k.is_integer() {
                return Err(QExactError::FractionalSignedExponent { exponent: k.to_string() });
            }
            if k.to_integer() % 2 == 0 { 1 } else { -1 }
        } else {
            1
        };
        Ok(Self::new(sign, self.exponent.scale(k)))
    }
}

impl Mul for SymMonomial {
    type Output = SymMonomial;
    fn mul(self, r: Self) -> Self {
        Self::new(self.sign * r.sign, self.exponent + r.exponent)
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "q^({})", self.exponent)
    }
}

/// Rewrites `± q^(e1·N + e0)` as `± a^e1 q^e0`.
pub fn sym_to_qa(m: &SymMonomial) -> Result<LaurentQA, QExactError> {
    if !m.exponent.is_rank_free() {
        return Err(QExactError::ResidualRank { exponent: m.exponent.to_string() });
    }
    Ok(LaurentQA::monomial(BigInt::from(m.sign), [m.exponent.e1, m.exponent.e0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qexact::laurent::{int, rat};

    #[test]
    fn to_qa() {
        let e = SymExponent::new(int(0), rat(-1, 2), int(0), rat(1, 2));
        assert!(matches!(sym_to_qa(&SymMonomial::q_power(e)), Err(QExactError::ResidualRank { .. })));
        let e = SymExponent::new(int(0), int(-1), int(0), int(0));
        assert_eq!(sym_to_qa(&SymMonomial::q_power(e)).unwrap(), LaurentQA::qa(1, int(0), int(-1)));
        assert_eq!(sym_to_qa(&SymMonomial::one()).unwrap(), LaurentQA::one());
        let neg = SymMonomial::new(-1, SymExponent::new(int(0), int(2), int(1), int(0)));
        assert_eq!(sym_to_qa(&neg).unwrap(), LaurentQA::qa(-1, int(1), int(2)));
    }

    #[test]
    fn powers() {
        let m = SymMonomial::new(-1, SymExponent::new(int(0), int(1), int(0), int(0)));
        assert_eq!(m.pow(int(2)).unwrap().sign, 1);
        assert!(m.pow(rat(1, 2)).is_err());
        let p = SymMonomial::q_power(SymExponent::new(int(0), int(1), int(0), rat(1, 3)));
        assert_eq!(p.pow(rat(3, 2)).unwrap().exponent.em1, rat(1, 2));
        assert_eq!((m * m).exponent.e1, int(2));
    }
}
