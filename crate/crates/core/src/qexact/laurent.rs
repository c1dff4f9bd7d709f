//! Sparse multivariate Laurent polynomials with rational exponents.
//!
//! A `Laurent<K>` maps exponent vectors to nonzero big-integer coefficients.
//! Terms are kept in a `BTreeMap`, so iteration order is lexicographic on the
//! exponent vector. The variable order is `(a, q)` for [`LaurentQA`] and
//! `(a, q, t)` for [`LaurentQTA`]; the canonical order of printed output follows.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QExactError;

pub type Exps<const K: usize> = [Rational64; K];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<const K: usize> {
    terms: BTreeMap<Exps<K>, BigInt>,
}

/// Polynomial in `a, q` (index 0 is `a`, index 1 is `q`).
pub type LaurentQA = Laurent<2>;
/// Polynomial in `a, q, t` (indices 0, 1, 2).
pub type LaurentQTA = Laurent<3>;
/// Polynomial in `q` alone.
pub type LaurentQ = Laurent<1>;

pub const A: usize = 0;
pub const Q: usize = 1;
pub const T: usize = 2;

/// Image of one variable under [`Laurent::substitute`]: `sign · x^exps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subst<const L: usize> {
    pub sign: i8,
    pub exps: Exps<L>,
}

impl<const L: usize> Subst<L> {
    pub fn new(sign: i8, exps: Exps<L>) -> Self {
        Subst { sign, exps }
    }

    /// The variable `index` of the target ring, unchanged.
    pub fn var(index: usize) -> Self {
        let mut exps = [Rational64::zero(); L];
        exps[index] = Rational64::one();
        Subst { sign: 1, exps }
    }

    /// The constant `sign` (used for evaluations such as `t = 1`, `a = -1`).
    pub fn constant(sign: i8) -> Self {
        Subst { sign, exps: [Rational64::zero(); L] }
    }
}

pub fn rat(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

pub fn int(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

impl<const K: usize> Default for Laurent<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const K: usize> Laurent<K> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, [Rational64::zero(); K])
    }

    pub fn monomial(c: BigInt, exps: Exps<K>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Laurent { terms }
    }

    /// Builds a polynomial from possibly repeated terms; duplicates are summed.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Exps<K>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|x| x.is_zero()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps<K>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exps<K>) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: Exps<K>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exps<K>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn min_exp(&self, var: usize) -> Option<Rational64> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn max_exp(&self, var: usize) -> Option<Rational64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Whether every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x.is_integer()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `c · x^exps`.
    pub fn mul_monomial(&self, c: &BigInt, exps: &Exps<K>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (add_exps(e, exps), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Exact quotient `self / d`.
    ///
    /// Repeatedly cancels the leading term of the remainder. A quotient term whose
    /// exponent leaves the range forced by the degree bounds, or a coefficient that
    /// does not divide, proves the division inexact.
    pub fn exact_divide(&self, d: &Self) -> Result<Self, QExactError> {
        let (d_lead_e, d_lead_c) = d.leading_term().ok_or(QExactError::DivisionByZero)?;
        let (d_lead_e, d_lead_c) = (*d_lead_e, d_lead_c.clone());
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if d.len() == 1 {
            let neg: Exps<K> = std::array::from_fn(|i| -d_lead_e[i]);
            let mut out = Self::zero();
            for (e, c) in &self.terms {
                let (qc, rc) = c.div_rem(&d_lead_c);
                if !rc.is_zero() {
                    return Err(self.inexact(self.clone()));
                }
                out.terms.insert(add_exps(e, &neg), qc);
            }
            return Ok(out);
        }
        let lo: Exps<K> = std::array::from_fn(|i| self.min_exp(i).unwrap() - d.min_exp(i).unwrap());
        let hi: Exps<K> = std::array::from_fn(|i| self.max_exp(i).unwrap() - d.max_exp(i).unwrap());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading_term() {
            let e: Exps<K> = std::array::from_fn(|i| re[i] - d_lead_e[i]);
            let (qc, r) = rc.div_rem(&d_lead_c);
            if !r.is_zero() || (0..K).any(|i| e[i] < lo[i] || e[i] > hi[i]) {
                return Err(self.inexact(rem));
            }
            for (de, dc) in &d.terms {
                rem.add_term(add_exps(de, &e), -(dc * &qc));
            }
            quot.add_term(e, qc);
        }
        Ok(quot)
    }

    fn inexact(&self, rem: Self) -> QExactError {
        QExactError::InexactDivision {
            remainder: rem.to_pretty(&default_names::<K>()),
        }
    }

    /// Replaces variable `i` by `map[i]`, a signed monomial in the target ring.
    pub fn substitute<const L: usize>(&self, map: &[Subst<L>; K]) -> Result<Laurent<L>, QExactError> {
        let mut out = Laurent::<L>::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = [Rational64::zero(); L];
            for i in 0..K {
                let s = &map[i];
                if s.sign < 0 && !e[i].is_zero() {
                    if !e[i].is_integer() {
                        return Err(QExactError::FractionalSignedExponent { exponent: e[i].to_string() });
                    }
                    if e[i].to_integer().is_odd() {
                        coeff = -coeff;
                    }
                }
                for j in 0..L {
                    exps[j] += e[i] * s.exps[j];
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Divides out the lowest power of each variable separately; returns the
    /// normalized polynomial and the exponents of the extracted monomial.
    pub fn tilde_normalize(&self) -> (Self, Exps<K>) {
        let mins: Exps<K> = std::array::from_fn(|i| self.min_exp(i).unwrap_or_default());
        let neg: Exps<K> = std::array::from_fn(|i| -mins[i]);
        (self.mul_monomial(&BigInt::one(), &neg), mins)
    }

    /// Sum of the coefficients (value at all variables equal to 1).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Formats with the given variable names, terms in canonical order.
    pub fn to_pretty(&self, names: &[&str; K]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = (0..K)
                .filter(|&j| !e[j].is_zero())
                .map(|j| {
                    if e[j].is_one() {
                        names[j].to_string()
                    } else if e[j].is_integer() {
                        format!("{}^{}", names[j], e[j])
                    } else {
                        format!("{}^({})", names[j], e[j])
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

fn default_names<const K: usize>() -> [&'static str; K] {
    const NAMES: [&str; 3] = ["a", "q", "t"];
    std::array::from_fn(|i| if K == 1 { "q" } else { NAMES.get(i).copied().unwrap_or("x") })
}

fn add_exps<const K: usize>(x: &Exps<K>, y: &Exps<K>) -> Exps<K> {
    std::array::from_fn(|i| x[i] + y[i])
}

impl LaurentQA {
    /// `c · q^qexp · a^aexp`.
    pub fn qa(c: i64, qexp: Rational64, aexp: Rational64) -> Self {
        Self::monomial(BigInt::from(c), [aexp, qexp])
    }

    /// Embeds into the `a, q, t` ring with `t` absent.
    pub fn to_qta(&self) -> LaurentQTA {
        LaurentQTA::from_terms(self.terms().map(|(e, c)| ([e[A], e[Q], Rational64::zero()], c.clone())))
    }
}

impl LaurentQTA {
    /// `c · q^qexp · t^texp · a^aexp`.
    pub fn qta(c: i64, qexp: Rational64, texp: Rational64, aexp: Rational64) -> Self {
        Self::monomial(BigInt::from(c), [aexp, qexp, texp])
    }
}

impl LaurentQ {
    pub fn q(c: i64, qexp: Rational64) -> Self {
        Self::monomial(BigInt::from(c), [qexp])
    }
}

impl fmt::Display for Laurent<1> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(&["q"]))
    }
}

impl fmt::Display for Laurent<2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(&["a", "q"]))
    }
}

impl fmt::Display for Laurent<3> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(&["a", "q", "t"]))
    }
}

impl<const K: usize> AddAssign<&Laurent<K>> for Laurent<K> {
    fn add_assign(&mut self, rhs: &Laurent<K>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const K: usize> SubAssign<&Laurent<K>> for Laurent<K> {
    fn sub_assign(&mut self, rhs: &Laurent<K>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<const K: usize> Add<&Laurent<K>> for &Laurent<K> {
    type Output = Laurent<K>;
    fn add(self, rhs: &Laurent<K>) -> Laurent<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const K: usize> Sub<&Laurent<K>> for &Laurent<K> {
    type Output = Laurent<K>;
    fn sub(self, rhs: &Laurent<K>) -> Laurent<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<const K: usize> Mul<&Laurent<K>> for &Laurent<K> {
    type Output = Laurent<K>;
    fn mul(self, rhs: &Laurent<K>) -> Laurent<K> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl<const K: usize> Neg for &Laurent<K> {
    type Output = Laurent<K>;
    fn neg(self) -> Laurent<K> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const K: usize> $tr<Laurent<K>> for Laurent<K> {
            type Output = Laurent<K>;
            fn $m(self, rhs: Laurent<K>) -> Laurent<K> {
                (&self).$m(&rhs)
            }
        }
        impl<const K: usize> $tr<&Laurent<K>> for Laurent<K> {
            type Output = Laurent<K>;
            fn $m(self, rhs: &Laurent<K>) -> Laurent<K> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const K: usize> Neg for Laurent<K> {
    type Output = Laurent<K>;
    fn neg(self) -> Laurent<K> {
        -&self
    }
}

/// Integer value of an integral rational exponent, for callers that have checked integrality.
pub fn exp_to_i64(e: &Rational64) -> Option<i64> {
    if e.is_integer() {
        e.to_integer().to_i64()
    } else {
        None
    }
}
