//! q,a-integers `[uN+v]` and their products and sums.
//!
//! Every bracket is `B(u,v)/z` with `B(u,v) = a^{u/2}q^{v/2} − a^{−u/2}q^{−v/2}`
//! and `z = B(0,1)`. Sums of bracket products are combined over a common
//! denominator of `B` factors, so the only polynomial division ever performed
//! is an exact division by a binomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::One;

use super::exponent::{sym_to_qa, SymExponent, SymMonomial};
use super::laurent::{LaurentQ, LaurentQA, Subst, A, Q};
use super::QExactError;

/// The q,a-integer `[uN + v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bracket {
    pub u: i64,
    pub v: i64,
}

impl Bracket {
    pub fn new(u: i64, v: i64) -> Self {
        Bracket { u, v }
    }

    /// A constant bracket `[v]`.
    pub fn int(v: i64) -> Self {
        Bracket { u: 0, v }
    }

    /// `[N + v]`.
    pub fn n_plus(v: i64) -> Self {
        Bracket { u: 1, v }
    }

    pub fn is_zero(&self) -> bool {
        self.u == 0 && self.v == 0
    }

    pub fn is_unit(&self) -> bool {
        self.u == 0 && self.v == 1
    }

    /// Sign and representative with `u > 0`, or `u = 0, v > 0`, using `[−x] = −[x]`.
    pub fn canonical(&self) -> (i8, Bracket) {
        if self.u < 0 || (self.u == 0 && self.v < 0) {
            (-1, Bracket::new(-self.u, -self.v))
        } else {
            (1, *self)
        }
    }

    /// The numerator `B(u,v)`.
    pub fn numerator(&self) -> LaurentQA {
        b_poly(self.u, self.v)
    }

    /// Ordinary quantum integer at a concrete rank, as a polynomial in `q`.
    pub fn eval_at_rank(&self, n: i64) -> LaurentQ {
        let m = self.u * n + self.v;
        quantum_int(m)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self.u {
            0 => return write!(f, "[{}]", self.v),
            1 => "N".to_string(),
            -1 => "-N".to_string(),
            u => format!("{u}N"),
        };
        match self.v {
            0 => write!(f, "[{n}]"),
            v if v > 0 => write!(f, "[{n}+{v}]"),
            v => write!(f, "[{n}{v}]"),
        }
    }
}

/// `[m]_q = (q^{m/2} − q^{−m/2}) / (q^{1/2} − q^{−1/2})` expanded.
pub fn quantum_int(m: i64) -> LaurentQ {
    let sign = if m < 0 { -1 } else { 1 };
    let m = m.abs();
    LaurentQ::from_terms((0..m).map(|k| ([Rational64::new(m - 1 - 2 * k, 2)], sign)))
}

fn b_poly(u: i64, v: i64) -> LaurentQA {
    let e = [Rational64::new(u, 2), Rational64::new(v, 2)];
    LaurentQA::monomial(BigInt::one(), e) - LaurentQA::monomial(BigInt::one(), [-e[0], -e[1]])
}

/// Numerator and count of universal denominators `(q^{1/2} − q^{−1/2})` for `[uN+v]`.
pub fn bracket_to_fraction(b: Bracket) -> (LaurentQA, i32) {
    (b.numerator(), 1)
}

/// `prefactor · ∏ numerator / ∏ denominator`, with common brackets cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketProduct {
    pub prefactor: SymMonomial,
    numerator: BTreeMap<Bracket, u32>,
    denominator: BTreeMap<Bracket, u32>,
}

impl Default for BracketProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl BracketProduct {
    pub fn one() -> Self {
        BracketProduct {
            prefactor: SymMonomial::one(),
            numerator: BTreeMap::new(),
            denominator: BTreeMap::new(),
        }
    }

    /// Canonicalizes signs into the prefactor, drops unit brackets and cancels
    /// brackets common to numerator and denominator.
    ///
    /// Panics on a zero bracket in the denominator.
    pub fn new<I, J>(prefactor: SymMonomial, numerator: I, denominator: J) -> Self
    where
        I: IntoIterator<Item = Bracket>,
        J: IntoIterator<Item = Bracket>,
    {
        let mut sign = prefactor.sign;
        let mut count: BTreeMap<Bracket, i64> = BTreeMap::new();
        for b in numerator {
            let (s, c) = b.canonical();
            sign *= s;
            *count.entry(c).or_default() += 1;
        }
        for b in denominator {
            assert!(!b.is_zero(), "zero bracket in a denominator");
            let (s, c) = b.canonical();
            sign *= s;
            *count.entry(c).or_default() -= 1;
        }
        let mut out = BracketProduct {
            prefactor: SymMonomial::new(sign, prefactor.exponent),
            numerator: BTreeMap::new(),
            denominator: BTreeMap::new(),
        };
        for (b, k) in count {
            if b.is_unit() || k == 0 {
                continue;
            }
            if k > 0 {
                out.numerator.insert(b, k as u32);
            } else {
                out.denominator.insert(b, (-k) as u32);
            }
        }
        out
    }

    pub fn from_brackets(numerator: &[Bracket], denominator: &[Bracket]) -> Self {
        Self::new(SymMonomial::one(), numerator.iter().copied(), denominator.iter().copied())
    }

    pub fn numerator(&self) -> &BTreeMap<Bracket, u32> {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<Bracket, u32> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.keys().any(|b| b.is_zero())
    }

    /// Every bracket, numerator and denominator, with its signed multiplicity.
    pub fn brackets(&self) -> impl Iterator<Item = (Bracket, i64)> + '_ {
        self.numerator
            .iter()
            .map(|(b, k)| (*b, *k as i64))
            .chain(self.denominator.iter().map(|(b, k)| (*b, -(*k as i64))))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rep = |m: &BTreeMap<Bracket, u32>| -> Vec<Bracket> {
            m.iter().flat_map(|(b, k)| std::iter::repeat_n(*b, *k as usize)).collect()
        };
        let mut num = rep(&self.numerator);
        num.extend(rep(&other.numerator));
        let mut den = rep(&self.denominator);
        den.extend(rep(&other.denominator));
        Self::new(self.prefactor * other.prefactor, num, den)
    }

    /// Multiplies the prefactor by `q^e`.
    pub fn with_exponent(&self, e: SymExponent) -> Self {
        let mut out = self.clone();
        out.prefactor = out.prefactor * SymMonomial::q_power(e);
        out
    }

    /// The product as a `B`-factor term; the prefactor must be free of `N²` and `1/N`.
    pub fn to_term(&self, coeff: &BigInt) -> Result<FactoredTerm, QExactError> {
        let mono = sym_to_qa(&self.prefactor)?;
        let mut factors: BTreeMap<(i64, i64), i32> = BTreeMap::new();
        let mut z = 0i32;
        for (b, k) in self.brackets() {
            let k = k as i32;
            *factors.entry((b.u, b.v)).or_default() += k;
            z -= k;
        }
        *factors.entry((0, 1)).or_default() += z;
        factors.retain(|_, k| *k != 0);
        Ok(FactoredTerm {
            coeff: coeff.clone(),
            monomial: mono,
            factors,
        })
    }

    /// Expanded value as a Laurent polynomial in `q, a` (exact; errors if not polynomial).
    pub fn eval_qa(&self) -> Result<LaurentQA, QExactError> {
        FactoredSum::from_terms(vec![self.to_term(&BigInt::one())?]).to_polynomial()
    }

    /// Value at a concrete rank with `a = q^n`, including `N²` and `1/N` prefactor parts.
    pub fn eval_at_rank(&self, n: i64) -> Result<LaurentQ, QExactError> {
        let e = self.prefactor.exponent.eval(n);
        let mut num = LaurentQ::monomial(BigInt::from(self.prefactor.sign), [e]);
        let mut den = LaurentQ::one();
        for (b, k) in &self.numerator {
            num = &num * &b.eval_at_rank(n).pow(*k);
        }
        for (b, k) in &self.denominator {
            den = &den * &b.eval_at_rank(n).pow(*k);
        }
        num.exact_divide(&den)
    }
}

impl fmt::Display for BracketProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &BTreeMap<Bracket, u32>| -> String {
            m.iter()
                .map(|(b, k)| if *k == 1 { b.to_string() } else { format!("{b}^{k}") })
                .collect()
        };
        let mut s = String::new();
        if self.prefactor.sign < 0 {
            s.push('-');
        }
        if self.prefactor.exponent != SymExponent::zero() {
            s.push_str(&format!("q^({})", self.prefactor.exponent));
        }
        let num = show(&self.numerator);
        if num.is_empty() && !self.denominator.is_empty() || num.is_empty() && s.len() <= 1 {
            s.push('1');
        }
        s.push_str(&num);
        if !self.denominator.is_empty() {
            s.push('/');
            s.push_str(&show(&self.denominator));
        }
        write!(f, "{s}")
    }
}

/// `coeff · monomial · ∏ B(u,v)^k` with signed integer multiplicities `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredTerm {
    pub coeff: BigInt,
    pub monomial: LaurentQA,
    pub factors: BTreeMap<(i64, i64), i32>,
}

/// A sum of factored terms; expands over the least common `B`-denominator.
#[derive(Clone, Debug, Default)]
pub struct FactoredSum {
    pub terms: Vec<FactoredTerm>,
}

/// `numer / ∏ B(u,v)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFraction {
    pub numer: LaurentQA,
    pub denom: BTreeMap<(i64, i64), u32>,
}

impl FactoredSum {
    pub fn from_terms(terms: Vec<FactoredTerm>) -> Self {
        FactoredSum { terms }
    }

    pub fn combine(&self) -> FactoredFraction {
        let mut denom: BTreeMap<(i64, i64), u32> = BTreeMap::new();
        for t in &self.terms {
            for (f, k) in &t.factors {
                if *k < 0 {
                    let d = denom.entry(*f).or_default();
                    *d = (*d).max((-k) as u32);
                }
            }
        }
        let mut cache: HashMap<((i64, i64), u32), LaurentQA> = HashMap::new();
        let mut numer = LaurentQA::zero();
        for t in &self.terms {
            let mut p = t.monomial.scale(&t.coeff);
            let mut keys: BTreeMap<(i64, i64), i64> =
                denom.iter().map(|(f, k)| (*f, *k as i64)).collect();
            for (f, k) in &t.factors {
                *keys.entry(*f).or_default() += *k as i64;
            }
            for (f, k) in keys {
                if k > 0 {
                    let pw = cache
                        .entry((f, k as u32))
                        .or_insert_with(|| b_poly(f.0, f.1).pow(k as u32));
                    p = &p * pw;
                }
            }
            numer += &p;
        }
        FactoredFraction { numer, denom }
    }

    /// The sum as a Laurent polynomial; errors if it is not one.
    pub fn to_polynomial(&self) -> Result<LaurentQA, QExactError> {
        self.combine().divide_by(&BTreeMap::new())
    }
}

impl FactoredFraction {
    /// `numer · ∏ B^{extra} / denom` where `extra` carries signed multiplicities;
    /// must come out as a Laurent polynomial.
    pub fn divide_by(&self, extra: &BTreeMap<(i64, i64), i32>) -> Result<LaurentQA, QExactError> {
        let mut total: BTreeMap<(i64, i64), i64> =
            self.denom.iter().map(|(f, k)| (*f, -(*k as i64))).collect();
        for (f, k) in extra {
            *total.entry(*f).or_default() += *k as i64;
        }
        let mut p = self.numer.clone();
        for (f, k) in &total {
            if *k > 0 {
                p = &p * &b_poly(f.0, f.1).pow(*k as u32);
            }
        }
        for (f, k) in &total {
            if *k < 0 {
                let d = b_poly(f.0, f.1);
                for _ in 0..(-k) {
                    p = p.exact_divide(&d)?;
                }
            }
        }
        Ok(p)
    }
}

/// Substitution `a = q^n` as a map from the `q, a` ring to the `q` ring.
pub fn at_rank_map(n: i64) -> [Subst<1>; 2] {
    let mut m = [Subst::var(0); 2];
    m[A] = Subst::new(1, [Rational64::from_integer(n)]);
    m[Q] = Subst::var(0);
    m
}
