//! Rational functions in `q, t` with integer coefficients.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::qexact::laurent::{Subst, A, Q, T};
use crate::qexact::{LaurentQTA, QExactError};

/// `numerator / denominator`, both Laurent polynomials in `q, t` (no `a`).
///
/// Not kept in lowest terms: common content, common monomials and common
/// factors `1 − q^i t^j` are divided out when found. Equality is by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct QTFraction {
    num: LaurentQTA,
    den: LaurentQTA,
}

/// `c · q^qexp · t^texp`.
pub fn qt(c: i64, qexp: Rational64, texp: Rational64) -> LaurentQTA {
    LaurentQTA::qta(c, qexp, texp, Rational64::zero())
}

/// `1 − q^i t^j`.
pub fn one_minus(i: i64, j: i64) -> LaurentQTA {
    LaurentQTA::one() - qt(1, Rational64::from_integer(i), Rational64::from_integer(j))
}

impl QTFraction {
    pub fn new(num: LaurentQTA, den: LaurentQTA) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = QTFraction { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(p: LaurentQTA) -> Self {
        QTFraction { num: p, den: LaurentQTA::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentQTA::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentQTA::one())
    }

    pub fn numerator(&self) -> &LaurentQTA {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentQTA {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentQTA::one();
            return;
        }
        // monomial part of the denominator goes to the numerator
        let (den, mono) = self.den.tilde_normalize();
        let neg = [-mono[A], -mono[Q], -mono[T]];
        self.num = self.num.mul_monomial(&BigInt::one(), &neg);
        self.den = den;
        // integer content and sign
        let g = self
            .num
            .terms()
            .chain(self.den.terms())
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let lead_neg = self.den.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let g = if lead_neg { -g } else { g };
        if !g.is_one() {
            let div = LaurentQTA::constant(g);
            self.num = self.num.exact_divide(&div).expect("content divides");
            self.den = self.den.exact_divide(&div).expect("content divides");
        }
        if self.den.len() == 1 {
            return;
        }
        for i in 0..=6 {
            for j in 0..=8 {
                if i == 0 && j == 0 {
                    continue;
                }
                let f = one_minus(i, j);
                while self.den.len() > 1 {
                    match (self.den.exact_divide(&f), self.num.exact_divide(&f)) {
                        (Ok(d), Ok(n)) => {
                            self.den = d;
                            self.num = n;
                        }
                        _ => break,
                    }
                }
            }
        }
        if self.den.len() == 1 {
            if let Ok(n) = self.num.exact_divide(&self.den) {
                self.num = n;
                self.den = LaurentQTA::one();
            }
        }
    }

    /// Substitutes into both parts; errors if the denominator vanishes.
    pub fn substitute(&self, map: &[Subst<3>; 3]) -> Result<QTFraction, MacdonaldSubstError> {
        let num = self.num.substitute(map)?;
        let den = self.den.substitute(map)?;
        if den.is_zero() {
            return Err(MacdonaldSubstError::VanishingDenominator);
        }
        Ok(QTFraction::new(num, den))
    }

    pub fn inverse(&self) -> Self {
        QTFraction::new(self.den.clone(), self.num.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MacdonaldSubstError {
    #[error("denominator vanishes under the substitution")]
    VanishingDenominator,
    #[error(transparent)]
    QExact(#[from] QExactError),
}

impl PartialEq for QTFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QTFraction {}

impl Add for &QTFraction {
    type Output = QTFraction;
    fn add(self, r: &QTFraction) -> QTFraction {
        if self.den == r.den {
            return QTFraction::new(&self.num + &r.num, self.den.clone());
        }
        QTFraction::new(&self.num * &r.den + &r.num * &self.den, &self.den * &r.den)
    }
}

impl Sub for &QTFraction {
    type Output = QTFraction;
    fn sub(self, r: &QTFraction) -> QTFraction {
        self + &(-r)
    }
}

impl Mul for &QTFraction {
    type Output = QTFraction;
    fn mul(self, r: &QTFraction) -> QTFraction {
        QTFraction::new(&self.num * &r.num, &self.den * &r.den)
    }
}

impl Div for &QTFraction {
    type Output = QTFraction;
    fn div(self, r: &QTFraction) -> QTFraction {
        assert!(!r.is_zero(), "division by zero fraction");
        QTFraction::new(&self.num * &r.den, &self.den * &r.num)
    }
}

impl Neg for &QTFraction {
    type Output = QTFraction;
    fn neg(self) -> QTFraction {
        QTFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qexact::int;

    #[test]
    fn arithmetic_and_reduction() {
        // (1 - t^2)/(1 - t) = 1 + t
        let f = QTFraction::new(one_minus(0, 2), one_minus(0, 1));
        assert!(f.denominator().is_one());
        assert_eq!(f, QTFraction::from_poly(LaurentQTA::one() + qt(1, int(0), int(1))));
        let g = QTFraction::new(one_minus(1, 0), one_minus(1, 1));
        let h = &(&f * &g) / &g;
        assert_eq!(h, f);
        assert_eq!(&(&f - &f) + &g, g);
        assert!((&g - &g).is_zero());
        // sign and content normalization
        let k = QTFraction::new(qt(2, int(0), int(0)), qt(-4, int(1), int(0)));
        assert_eq!(k.denominator(), &qt(2, int(0), int(0)));
        assert_eq!(k.numerator(), &qt(-1, int(-1), int(0)));
    }
}
