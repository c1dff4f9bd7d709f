//! Symmetric Laurent polynomials over `Q(q,t)` and Macdonald polynomials `P_λ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::partitions::Partition;
use crate::qexact::LaurentQTA;
use crate::symfunc::{kostka, z_mu};

use super::fraction::{one_minus, QTFraction};
use super::MacdonaldError;

pub const MAX_RANK: usize = 4;
pub const MAX_SIZE: usize = 4;

/// A symmetric Laurent polynomial in `n` variables, stored as coefficients of
/// monomial orbit sums keyed by weakly decreasing exponent vectors.
#[derive(Clone, Debug)]
pub struct SymLaurent {
    n: usize,
    terms: BTreeMap<Vec<i64>, QTFraction>,
}

impl SymLaurent {
    pub fn zero(n: usize) -> Self {
        SymLaurent { n, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Adds `c · m_key`; `key` is sorted into dominant order first.
    pub fn add_orbit(&mut self, mut key: Vec<i64>, c: &QTFraction) {
        assert_eq!(key.len(), self.n, "exponent vector length");
        key.sort_unstable_by(|a, b| b.cmp(a));
        let entry = self.terms.entry(key.clone()).or_insert_with(QTFraction::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient of the orbit sum of `key` (any order).
    pub fn coeff(&self, key: &[i64]) -> QTFraction {
        let mut k = key.to_vec();
        k.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&k).cloned().unwrap_or_else(QTFraction::zero)
    }

    pub fn orbits(&self) -> impl Iterator<Item = (&Vec<i64>, &QTFraction)> {
        self.terms.iter()
    }

    /// `f(x₁⁻¹, …, x_n⁻¹)`.
    pub fn invert(&self) -> Self {
        let mut out = SymLaurent::zero(self.n);
        for (k, c) in &self.terms {
            out.add_orbit(k.iter().map(|e| -e).collect(), c);
        }
        out
    }

    /// Multiplies by `(x₁⋯x_n)^k`.
    pub fn shift(&self, k: i64) -> Self {
        SymLaurent {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(key, c)| (key.iter().map(|e| e + k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Every monomial with its coefficient (orbits expanded).
    pub fn monomials(&self) -> BTreeMap<Vec<i64>, QTFraction> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            for perm in distinct_permutations(k) {
                out.insert(perm, c.clone());
            }
        }
        out
    }

    /// Rebuilds from monomials; `None` unless the coefficients are symmetric.
    pub fn from_monomials(n: usize, monos: &BTreeMap<Vec<i64>, QTFraction>) -> Option<Self> {
        let mut out = SymLaurent::zero(n);
        for (k, c) in monos {
            let mut sorted = k.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            for perm in distinct_permutations(&sorted) {
                match monos.get(&perm) {
                    Some(d) if d == c => {}
                    _ => return None,
                }
            }
            if *k == sorted {
                out.add_orbit(sorted, c);
            }
        }
        Some(out)
    }

    /// Value at `x_i = t^{point[i]}`.
    pub fn eval_t_powers(&self, point: &[Rational64]) -> QTFraction {
        assert_eq!(point.len(), self.n);
        let mut total = QTFraction::zero();
        for (k, c) in &self.terms {
            let mut orbit = LaurentQTA::zero();
            for perm in distinct_permutations(k) {
                let e: Rational64 = perm
                    .iter()
                    .zip(point)
                    .map(|(a, p)| Rational64::from_integer(*a) * p)
                    .sum();
                orbit += &LaurentQTA::qta(1, Rational64::zero(), e, Rational64::zero());
            }
            total = &total + &(c * &QTFraction::from_poly(orbit));
        }
        total
    }

    /// Substitutes `t = q` in every coefficient.
    pub fn at_t_equals_q(&self) -> Result<Self, MacdonaldError> {
        use crate::qexact::laurent::{Subst, Q};
        let map = [Subst::var(0), Subst::var(Q), Subst::var(Q)];
        let mut out = SymLaurent::zero(self.n);
        for (k, c) in &self.terms {
            let v = c.substitute(&map).map_err(|e| MacdonaldError::Substitution(e.to_string()))?;
            out.add_orbit(k.clone(), &v);
        }
        Ok(out)
    }
}

impl PartialEq for SymLaurent {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.terms.len() == other.terms.len()
            && self.terms.iter().all(|(k, c)| other.terms.get(k).is_some_and(|d| d == c))
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let key: Vec<String> = k.iter().map(|e| e.to_string()).collect();
                format!("({c})*m[{}]", key.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All distinct rearrangements of `v`.
pub fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur: Vec<i64> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Coefficient of `m_μ` in `p_ρ`: assignments of the parts of `ρ` to rows summing to `μ`.
fn p_to_m(rho: &Partition, mu: &Partition) -> i64 {
    fn go(parts: &[usize], i: usize, rem: &mut Vec<usize>) -> i64 {
        if i == parts.len() {
            return i64::from(rem.iter().all(|&r| r == 0));
        }
        let mut total = 0;
        for j in 0..rem.len() {
            if rem[j] >= parts[i] {
                rem[j] -= parts[i];
                total += go(parts, i + 1, rem);
                rem[j] += parts[i];
            }
        }
        total
    }
    go(rho.rows(), 0, &mut mu.rows().to_vec())
}

fn invert_rational(m: &[Vec<Rational64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Fraction-free determinant (Bareiss) of a square polynomial matrix.
pub fn bareiss_det(mut m: Vec<Vec<LaurentQTA>>) -> LaurentQTA {
    let n = m.len();
    if n == 0 {
        return LaurentQTA::one();
    }
    let mut sign = 1;
    let mut prev = LaurentQTA::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentQTA::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.exact_divide(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Gram matrix `⟨m_μ, m_ν⟩_{q,t}` on all partitions of `d`, scaled to polynomials.
fn scaled_gram(parts: &[Partition]) -> Vec<Vec<LaurentQTA>> {
    let d = parts.first().map(|p| p.size()).unwrap_or(0);
    let k = parts.len();
    let r: Vec<Vec<Rational64>> = parts
        .iter()
        .map(|rho| parts.iter().map(|mu| Rational64::from_integer(p_to_m(rho, mu))).collect())
        .collect();
    // rows of r are p_ρ in the m basis, so m_μ = Σ_ρ inv[μ][ρ] p_ρ
    let inv = invert_rational(&r);
    let lcm = inv
        .iter()
        .flatten()
        .fold(1i64, |l, x| l.lcm(x.denom()));
    // common denominator for all ∏(1 − t^{ρ_i})
    let mut common = LaurentQTA::one();
    for part in 1..=d {
        for _ in 0..d / part {
            common = &common * &one_minus(0, part as i64);
        }
    }
    let zqt: Vec<LaurentQTA> = parts
        .iter()
        .map(|rho| {
            let mut num = LaurentQTA::constant(z_mu(rho));
            let mut den = LaurentQTA::one();
            for &p in rho.rows() {
                num = &num * &one_minus(p as i64, 0);
                den = &den * &one_minus(0, p as i64);
            }
            &num * &common.exact_divide(&den).expect("common denominator")
        })
        .collect();
    let mut g = vec![vec![LaurentQTA::zero(); k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut s = LaurentQTA::zero();
            for (rho, z) in zqt.iter().enumerate() {
                let c = inv[a][rho] * inv[b][rho] * Rational64::from_integer(lcm * lcm);
                if !c.is_zero() {
                    assert!(c.is_integer());
                    s += &z.scale(&BigInt::from(c.to_integer()));
                }
            }
            g[a][b] = s;
        }
    }
    g
}

/// Coefficients of `P_λ` on `m_μ`, `μ ⊢ |λ|`, in infinitely many variables.
fn macdonald_coefficients(lambda: &Partition) -> BTreeMap<Partition, QTFraction> {
    // reverse lexicographic listing; lex order refines dominance
    let mut parts = Partition::all_of_size(lambda.size());
    parts.sort_by(|a, b| a.rows().cmp(b.rows()));
    let pos = parts.iter().position(|p| p == lambda).expect("λ listed");
    let g = scaled_gram(&parts);
    let lower: Vec<usize> = (0..pos).collect();
    let mut out = BTreeMap::new();
    out.insert(lambda.clone(), QTFraction::one());
    if lower.is_empty() {
        return out;
    }
    // Σ_μ c_μ ⟨m_μ, m_ν⟩ = −⟨m_λ, m_ν⟩ for ν < λ; Cramer's rule with Bareiss determinants
    let matrix: Vec<Vec<LaurentQTA>> = lower
        .iter()
        .map(|&nu| lower.iter().map(|&mu| g[mu][nu].clone()).collect())
        .collect();
    let rhs: Vec<LaurentQTA> = lower.iter().map(|&nu| -&g[pos][nu]).collect();
    let det = bareiss_det(matrix.clone());
    assert!(!det.is_zero(), "degenerate Gram matrix");
    for (col, &mu) in lower.iter().enumerate() {
        let mut mcol = matrix.clone();
        for (row, v) in rhs.iter().enumerate() {
            mcol[row][col] = v.clone();
        }
        let c = QTFraction::new(bareiss_det(mcol), det.clone());
        if !c.is_zero() {
            out.insert(parts[mu].clone(), c);
        }
    }
    out
}

/// `P_λ(x₁, …, x_n)`.
pub fn macdonald_p(lambda: &Partition, n: usize) -> Result<SymLaurent, MacdonaldError> {
    if n > MAX_RANK || lambda.size() > MAX_SIZE || lambda.len() > n {
        return Err(MacdonaldError::RankBound {
            size: lambda.size(),
            n,
        });
    }
    let mut out = SymLaurent::zero(n);
    for (mu, c) in macdonald_coefficients(lambda) {
        if mu.len() <= n {
            out.add_orbit(padded(&mu, n), &c);
        }
    }
    Ok(out)
}

/// `s_λ(x₁, …, x_n) = Σ_μ K_{λμ} m_μ`.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> SymLaurent {
    let mut out = SymLaurent::zero(n);
    for mu in Partition::all_of_size_with_max_len(lambda.size(), n) {
        let k = kostka(lambda, mu.rows());
        if k != 0 {
            let c = QTFraction::from_poly(LaurentQTA::constant(BigInt::from(k)));
            out.add_orbit(padded(&mu, n), &c);
        }
    }
    out
}

pub fn padded(mu: &Partition, n: usize) -> Vec<i64> {
    (0..n).map(|i| mu.part(i) as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::qexact::int;
    use super::super::fraction::qt;

    #[test]
    fn small_cases() {
        let p = macdonald_p(&part![1], 3).unwrap();
        assert_eq!(p.orbits().count(), 1);
        assert_eq!(p.coeff(&[1, 0, 0]), QTFraction::one());
        let p = macdonald_p(&part![2], 2).unwrap();
        let expect = QTFraction::new(
            &(LaurentQTA::one() + qt(1, int(1), int(0))) * &one_minus(0, 1),
            one_minus(1, 1),
        );
        assert_eq!(p.coeff(&[1, 1]), expect);
        assert_eq!(p.coeff(&[2, 0]), QTFraction::one());
        let e2 = macdonald_p(&part![1, 1], 3).unwrap().at_t_equals_q().unwrap();
        assert_eq!(e2, schur_polynomial(&part![1, 1], 3));
        assert!(macdonald_p(&part![1, 1, 1], 2).is_err());
        assert!(macdonald_p(&part![5], 2).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[1, 1]).len(), 1);
        assert_eq!(p_to_m(&part![1, 1], &part![2]), 1);
        assert_eq!(p_to_m(&part![1, 1], &part![1, 1]), 2);
        assert_eq!(p_to_m(&part![2], &part![1, 1]), 0);
    }

    #[test]
    fn determinant() {
        let c = |v: i64| LaurentQTA::constant(BigInt::from(v));
        let m = vec![vec![c(0), c(2), c(1)], vec![c(1), c(1), c(0)], vec![c(3), c(0), c(1)]];
        assert_eq!(bareiss_det(m), c(-5));
    }
}
