//! Littlewood-Richardson coefficients by LR-tableau enumeration, and Kostka numbers.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partitions::Partition;

use super::SchurExpansion;

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `N^ν_{λμ}`: the multiplicity of `s_ν` in `s_λ s_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() || lambda.is_empty() {
        return 1;
    }
    // fill the skew shape with the smaller content
    let (inner, content) = if lambda.size() >= mu.size() { (lambda, mu) } else { (mu, lambda) };
    let key = (inner.clone(), content.clone(), nu.clone());
    if let Some(v) = lr_cache().read().unwrap().get(&key) {
        return *v;
    }
    let v = count_lr_tableaux(inner, content, nu);
    lr_cache().write().unwrap().insert(key, v);
    v
}

/// Counts semistandard fillings of `ν/λ` with content `μ` whose reverse reading
/// word (rows top to bottom, each right to left) is a lattice word.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.len();
    let k = mu.len();
    let mut used = vec![0usize; k + 1];
    let mut prev_row: Vec<usize> = Vec::new();
    go(lambda, mu, nu, 0, rows, &mut used, &mut prev_row)
}

fn go(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    i: usize,
    rows: usize,
    used: &mut Vec<usize>,
    prev_row: &mut Vec<usize>,
) -> u64 {
    if i == rows {
        return u64::from((1..used.len()).all(|v| used[v] == mu.part(v - 1)));
    }
    let start = lambda.part(i);
    let width = nu.part(i) - start;
    let k = mu.len();
    // entries of row i occupy columns start..start+width (0-indexed)
    let mut row = vec![0usize; width];
    let mut total = 0;
    fill_row(lambda, mu, nu, i, rows, 0, 1, &mut row, used, prev_row, k, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    i: usize,
    rows: usize,
    pos: usize,
    min_val: usize,
    row: &mut Vec<usize>,
    used: &mut Vec<usize>,
    prev_row: &mut Vec<usize>,
    k: usize,
    total: &mut u64,
) {
    let width = row.len();
    if pos == width {
        // lattice check: reading right to left, value v placed after all larger values of
        // this row, so used[v] (already including this row) must not exceed used[v-1]
        // before this row's (v-1)s are read.
        let mut in_row = vec![0usize; k + 1];
        for &v in row.iter() {
            in_row[v] += 1;
        }
        for v in 2..=k {
            if used[v] > used[v - 1] - in_row[v - 1] {
                return;
            }
        }
        let start = lambda.part(i);
        let mut full = vec![0usize; nu.part(i)];
        full[start..].copy_from_slice(row);
        let saved = std::mem::replace(prev_row, full);
        *total += go(lambda, mu, nu, i + 1, rows, used, prev_row);
        *prev_row = saved;
        return;
    }
    let col = lambda.part(i) + pos;
    let above = if col < prev_row.len() { prev_row[col] } else { 0 };
    let lo = min_val.max(above + 1);
    // an entry in row i (0-indexed) is at most i+1
    let hi = k.min(i + 1);
    for v in lo..=hi {
        if used[v] == mu.part(v - 1) {
            continue;
        }
        row[pos] = v;
        used[v] += 1;
        fill_row(lambda, mu, nu, i, rows, pos + 1, v, row, used, prev_row, k, total);
        used[v] -= 1;
    }
}

/// Full expansion of `s_λ s_μ`.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let n = lambda.size() + mu.size();
    let max_len = lambda.len() + mu.len();
    SchurExpansion::from_iter(
        Partition::all_of_size_with_max_len(n, max_len)
            .into_iter()
            .filter(|nu| nu.contains(lambda) && nu.contains(mu))
            .map(|nu| {
                let c = lr_coefficient(lambda, mu, &nu) as i64;
                (nu, c)
            }),
    )
}

/// Kostka number `K_{λα}`: semistandard tableaux of shape `λ` and content `α`
/// (any composition order; the count is symmetric in the content).
pub fn kostka(lambda: &Partition, content: &[usize]) -> u64 {
    let total: usize = content.iter().sum();
    if total != lambda.size() {
        return 0;
    }
    let mut memo: HashMap<(usize, Partition), u64> = HashMap::new();
    kostka_rec(lambda, content, content.len(), &mut memo)
}

// Remove a horizontal strip of size content[k-1] (the largest letter) from lambda.
fn kostka_rec(
    lambda: &Partition,
    content: &[usize],
    k: usize,
    memo: &mut HashMap<(usize, Partition), u64>,
) -> u64 {
    if k == 0 {
        return u64::from(lambda.is_empty());
    }
    if lambda.len() > k {
        return 0;
    }
    let key = (k, lambda.clone());
    if let Some(v) = memo.get(&key) {
        return *v;
    }
    let strip = content[k - 1];
    let mut total = 0;
    for inner in horizontal_strip_removals(lambda, strip) {
        total += kostka_rec(&inner, content, k - 1, memo);
    }
    memo.insert(key, total);
    total
}

/// All `μ ⊆ λ` with `λ/μ` a horizontal strip of `size` boxes.
pub fn horizontal_strip_removals(lambda: &Partition, size: usize) -> Vec<Partition> {
    let rows = lambda.rows();
    let mut out = Vec::new();
    let mut cur = vec![0usize; rows.len()];
    fn go(rows: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rows.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let next = rows.get(i + 1).copied().unwrap_or(0);
        // row i keeps between rows[i+1] and rows[i] boxes
        for keep in (next..=rows[i]).rev() {
            let removed = rows[i] - keep;
            if removed > left {
                break;
            }
            cur[i] = keep;
            go(rows, i + 1, left - removed, cur, out);
        }
    }
    go(rows, 0, size, &mut cur, &mut out);
    out
}
