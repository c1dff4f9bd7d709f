//! Quantum dimensions of composite representations with symbolic rank.

use crate::partitions::Partition;
use crate::qexact::{Bracket, BracketProduct, LaurentQ, QExactError};
use crate::qexact::bracket::quantum_int;

/// `dim_{q,a} V_{[β,γ]}` as a product of brackets independent of `N`.
///
/// Rows of `[β,γ]_N`, shifted by `−β₁`, split into a head (the `ℓ(γ)` rows of `γ`),
/// a flat middle, and a tail (the `ℓ(β)` rows `−β_b`, counted from the bottom).
/// Pairs of rows inside the middle cancel; pairs involving the middle telescope
/// to finitely many brackets.
pub fn quantum_dimension(beta: &Partition, gamma: &Partition) -> BracketProduct {
    let h = gamma.len() as i64;
    let t = beta.len() as i64;
    let g = |i: i64| gamma.part((i - 1) as usize) as i64;
    let b = |k: i64| beta.part((k - 1) as usize) as i64;
    let mut num = Vec::new();
    let mut den = Vec::new();
    // head-head
    for i in 1..=h {
        for j in i + 1..=h {
            num.push(Bracket::int(g(i) - g(j) + j - i));
            den.push(Bracket::int(j - i));
        }
    }
    // tail-tail: rows N+1-k and N+1-l with k > l
    for k in 1..=t {
        for l in 1..k {
            num.push(Bracket::int(b(l) - b(k) + k - l));
            den.push(Bracket::int(k - l));
        }
    }
    // head-tail: [γ_i + β_k + N + 1 − k − i] / [N + 1 − k − i]
    for i in 1..=h {
        for k in 1..=t {
            num.push(Bracket::n_plus(g(i) + b(k) + 1 - k - i));
            den.push(Bracket::n_plus(1 - k - i));
        }
    }
    // head-middle: ∏_{m=A}^{B} [m+γ_i]/[m], A = h+1−i, B = N−t−i
    for i in 1..=h {
        for k in 1..=g(i) {
            num.push(Bracket::n_plus(-t - i + k));
            den.push(Bracket::int(h - i + k));
        }
    }
    // middle-tail: ∏_{m=t+1−k}^{N−k−h} [m+β_k]/[m]
    for k in 1..=t {
        for j in 1..=b(k) {
            num.push(Bracket::n_plus(-k - h + j));
            den.push(Bracket::int(t - k + j));
        }
    }
    BracketProduct::from_brackets(&num, &den)
}

/// `dim_q V_ν` for `GL_n`/`SL_n` at a concrete rank, by the product over positive roots.
pub fn dim_at_rank(nu: &Partition, n: usize) -> Result<LaurentQ, QExactError> {
    let mut num = LaurentQ::one();
    let mut den = LaurentQ::one();
    for i in 0..n {
        for j in i + 1..n {
            let a = nu.part(i) as i64 - nu.part(j) as i64 + (j - i) as i64;
            num = &num * &quantum_int(a);
            den = &den * &quantum_int((j - i) as i64);
        }
    }
    num.exact_divide(&den)
}

/// `∏_{x∈ν} [N + c(x)] / [h(x)]`: the one-diagram dimension by hook contents.
pub fn hook_content_dimension(nu: &Partition) -> BracketProduct {
    let conj = nu.conjugate();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, j) in nu.cells() {
        num.push(Bracket::n_plus(j as i64 - i as i64));
        let arm = nu.part(i - 1) - j;
        let leg = conj.part(j - 1) - i;
        den.push(Bracket::int((arm + leg + 1) as i64));
    }
    BracketProduct::from_brackets(&num, &den)
}
