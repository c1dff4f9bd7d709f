//! Partitions, Young diagrams and composite diagrams.
//!
//! Every other module works with [`Partition`] values: they are canonical at
//! construction (weakly decreasing, no zero rows), so structural equality is
//! diagram equality and partitions can be used directly as map keys.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("rank {rank} is too small for this composite diagram (need at least {required})")]
    RankTooSmall { rank: usize, required: usize },
}

/// A Young diagram, stored as its nonzero row lengths in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary row lengths: rows are sorted and zeros dropped.
    pub fn new(mut rows: Vec<usize>) -> Self {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// The one-box diagram.
    pub fn box1() -> Self {
        Partition { rows: vec![1] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Row `i` (0-indexed); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row (0 for the empty diagram).
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Boxes as 1-indexed `(row, column)` pairs in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let rows = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition { rows }
    }

    /// Twice the total content: sum over boxes of `2(j - i)`.
    pub fn kappa(&self) -> i64 {
        self.cells().map(|(i, j)| 2 * (j as i64 - i as i64)).sum()
    }

    /// Whether `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(o, s)| o <= s)
    }

    /// The smallest diagram containing both (componentwise maximum of rows).
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::new((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// Every row multiplied by `r`; the cycle type `rμ` of an `r`-th power.
    pub fn scale(&self, r: usize) -> Partition {
        Partition::new(self.rows.iter().map(|&x| x * r).collect())
    }

    /// Multiplicities `m_i` of each part size `i`, as `(i, m_i)` pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &r in &self.rows {
            match out.last_mut() {
                Some((p, m)) if *p == r => *m += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }

    /// Dominance order; `None` when the sizes differ or the diagrams are incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut ge, mut le) = (true, true);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// All partitions of `n`, in reverse lexicographic order (`[n]` first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, usize::MAX)
    }

    /// All partitions of `n` with at most `max_len` rows.
    pub fn all_of_size_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
        Self::bounded(n, n, max_len)
    }

    /// Partitions of `n` with parts at most `max_part` and at most `max_len` rows.
    fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        fn go(
            rem: usize,
            max_part: usize,
            max_len: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(rem)).rev() {
                cur.push(p);
                go(rem - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All diagrams contained in this one (including ∅ and itself).
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for r in 0..=outer[i].min(bound) {
                cur.push(r);
                go(outer, i + 1, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.rows, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: by size, then lexicographically on rows. Used for canonical output order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated row lengths; `""`, `"0"` and `"∅"` denote the empty diagram.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut rows = Vec::new();
        for piece in t.split(',') {
            let r: usize = piece
                .trim()
                .parse()
                .map_err(|_| PartitionError::Parse(s.to_string()))?;
            rows.push(r);
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Parse(s.to_string()));
        }
        Ok(Partition::new(rows))
    }
}

impl From<&[usize]> for Partition {
    fn from(rows: &[usize]) -> Self {
        Partition::new(rows.to_vec())
    }
}

/// Shorthand for building partitions in code and tests.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($r:expr),+ $(,)?) => { $crate::partitions::Partition::new(vec![$($r),+]) };
}

/// An ordered pair `[λ, μ]` of diagrams labelling a composite representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CompositeDiagram {
    pub lambda: Partition,
    pub mu: Partition,
}

impl CompositeDiagram {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        CompositeDiagram { lambda, mu }
    }

    pub fn swapped(&self) -> Self {
        CompositeDiagram::new(self.mu.clone(), self.lambda.clone())
    }

    pub fn transposed(&self) -> Self {
        CompositeDiagram::new(self.lambda.conjugate(), self.mu.conjugate())
    }

    /// Smallest rank `N` for which `[λ, μ]_N` is defined.
    pub fn min_rank(&self) -> usize {
        self.lambda.len() + self.mu.len()
    }

    /// Size `c = |μ| − |λ| + λ₁N` of `[λ, μ]_N`, as a polynomial in `N`.
    pub fn size_poly(&self) -> NPolynomial {
        NPolynomial::new(
            Rational64::from_integer(self.mu.size() as i64 - self.lambda.size() as i64),
            Rational64::from_integer(self.lambda.first() as i64),
            Rational64::zero(),
        )
    }

    pub fn compose_at(&self, n: usize) -> Result<Partition, PartitionError> {
        compose_at_n(&self.lambda, &self.mu, n)
    }
}

impl fmt::Display for CompositeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

impl FromStr for CompositeDiagram {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (l, m) = s
            .split_once('|')
            .ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        Ok(CompositeDiagram::new(l.parse()?, m.parse()?))
    }
}

/// Exact polynomial `c0 + c1·N + c2·N²` in the symbolic rank.
///
/// Capped at degree two; a product that would exceed it panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct NPolynomial {
    coeffs: [Rational64; 3],
}

impl NPolynomial {
    pub fn new(c0: Rational64, c1: Rational64, c2: Rational64) -> Self {
        NPolynomial { coeffs: [c0, c1, c2] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(c0.into(), c1.into(), c2.into())
    }

    pub fn constant(c: Rational64) -> Self {
        Self::new(c, Rational64::zero(), Rational64::zero())
    }

    /// The symbolic rank `N` itself.
    pub fn n() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// Coefficient of `N^k`, `k ∈ {0, 1, 2}`.
    pub fn coeff(&self, k: usize) -> Rational64 {
        self.coeffs[k]
    }

    pub fn eval(&self, n: i64) -> Rational64 {
        let n = Rational64::from_integer(n);
        self.coeffs[0] + self.coeffs[1] * n + self.coeffs[2] * n * n
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Self::new(self.coeffs[0] * k, self.coeffs[1] * k, self.coeffs[2] * k)
    }
}

impl Add for NPolynomial {
    type Output = NPolynomial;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.coeffs[0] + rhs.coeffs[0],
            self.coeffs[1] + rhs.coeffs[1],
            self.coeffs[2] + rhs.coeffs[2],
        )
    }
}

impl Sub for NPolynomial {
    type Output = NPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for NPolynomial {
    type Output = NPolynomial;
    fn neg(self) -> Self {
        self.scale(-Rational64::one())
    }
}

impl Mul for NPolynomial {
    type Output = NPolynomial;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [Rational64::zero(); 5];
        for i in 0..3 {
            for j in 0..3 {
                out[i + j] += self.coeffs[i] * rhs.coeffs[j];
            }
        }
        assert!(
            out[3].is_zero() && out[4].is_zero(),
            "NPolynomial product exceeds degree 2 in N"
        );
        Self::new(out[0], out[1], out[2])
    }
}

impl fmt::Display for NPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "N".to_string(),
                _ => "N^2".to_string(),
            };
            parts.push(if var.is_empty() {
                c.to_string()
            } else if *c == Rational64::one() {
                var
            } else if *c == -Rational64::one() {
                format!("-{var}")
            } else {
                format!("{c}{var}")
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn kappa(lambda: &Partition) -> i64 {
    lambda.kappa()
}

pub fn join(lambda: &Partition, mu: &Partition) -> Partition {
    lambda.join(mu)
}

/// `κ_{[λ,μ]}` as a polynomial in `N`; agrees with `kappa(compose_at_n(λ, μ, k))` at `N = k`.
pub fn kappa_composite(lambda: &Partition, mu: &Partition) -> NPolynomial {
    let l1 = lambda.first() as i64;
    let sl = lambda.size() as i64;
    let sm = mu.size() as i64;
    let n = NPolynomial::n();
    let constant = |c: i64| NPolynomial::from_ints(c, 0, 0);
    constant(lambda.kappa() + mu.kappa())
        + n.scale((l1 * (l1 + 1)).into())
        - (n * (n + constant(1))).scale(l1.into())
        + constant(2 * l1 * sm)
        - (constant(l1) - n).scale((2 * sl).into())
}

/// The single diagram `[λ, μ]_N`: `μ` placed on top of `λ₁` full columns with the
/// rotated complement of `λ` cut from the bottom. Has fewer than `N` rows when `λ ≠ ∅`.
pub fn compose_at_n(lambda: &Partition, mu: &Partition, n: usize) -> Result<Partition, PartitionError> {
    let required = lambda.len() + mu.len();
    if n < required {
        return Err(PartitionError::RankTooSmall { rank: n, required });
    }
    let l1 = lambda.first();
    let rows = (1..=n)
        .map(|k| {
            if k <= mu.len() {
                mu.part(k - 1) + l1
            } else if k <= n - lambda.len() {
                l1
            } else {
                l1 - lambda.part(n - k)
            }
        })
        .collect();
    Ok(Partition::new(rows))
}
