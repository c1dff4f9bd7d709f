//! Symmetric-group characters by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::partitions::Partition;

use super::SymFuncError;

/// Memo table for `χ^λ(C_μ)`. Reads take a shared lock; inserts are idempotent,
/// so concurrent fills of the same key store the same value.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), i64>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache used by [`sym_character`].
    pub fn global() -> &'static CharacterCache {
        static CACHE: OnceLock<CharacterCache> = OnceLock::new();
        CACHE.get_or_init(CharacterCache::new)
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<i64, SymFuncError> {
        if lambda.size() != mu.size() {
            return Err(SymFuncError::SizeMismatch {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        Ok(self.lookup(lambda, mu))
    }

    fn lookup(&self, lambda: &Partition, mu: &Partition) -> i64 {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.table.read().unwrap().get(&key) {
            return *v;
        }
        let v = self.compute(lambda, mu);
        self.table.write().unwrap().insert(key, v);
        v
    }

    // Strip a rim hook of length μ₁ and recurse on the remaining cycle type.
    fn compute(&self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let r = mu.first();
        let rest = Partition::new(mu.rows()[1..].to_vec());
        rim_hook_removals(lambda, r)
            .into_iter()
            .map(|(sign, inner)| sign * self.lookup(&inner, &rest))
            .sum()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn remove(&self, lambda: &Partition, mu: &Partition) -> bool {
        self.table
            .write()
            .unwrap()
            .remove(&(lambda.clone(), mu.clone()))
            .is_some()
    }

    pub fn clear(&self) {
        self.table.write().unwrap().clear();
    }

    /// Snapshot of the cached keys.
    pub fn keys(&self) -> Vec<(Partition, Partition)> {
        self.table.read().unwrap().keys().cloned().collect()
    }
}

/// All ways to remove a rim hook of length `r` from `λ`, with the sign `(−1)^{height}`.
///
/// Works on the beta-set `{λ_i + ℓ − i}`: a hook removal moves one bead from
/// `b` to `b − r`, and the height is the number of beads strictly between.
pub fn rim_hook_removals(lambda: &Partition, r: usize) -> Vec<(i64, Partition)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + l - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let rows = (0..l).map(|i| nb[i] - (l - 1 - i)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(rows)));
    }
    out
}

/// `χ^λ(C_μ)` using the global cache.
pub fn sym_character(lambda: &Partition, mu: &Partition) -> Result<i64, SymFuncError> {
    CharacterCache::global().get(lambda, mu)
}

/// `z_μ = ∏ i^{m_i} m_i!`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, m) in mu.multiplicities() {
        for k in 1..=m {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `|C_μ| = n!/z_μ`.
pub fn conjugacy_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / z_mu(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn values() {
        for mu in Partition::all_of_size(4) {
            assert_eq!(sym_character(&part![4], &mu).unwrap(), 1);
        }
        assert_eq!(sym_character(&part![1, 1], &part![2]).unwrap(), -1);
        assert_eq!(sym_character(&part![2, 1], &part![1, 1, 1]).unwrap(), 2);
        assert_eq!(sym_character(&part![2, 2], &part![2, 2]).unwrap(), 2);
        assert_eq!(sym_character(&part![3, 1, 1], &part![1, 1, 1, 1, 1]).unwrap(), 6);
        assert_eq!(sym_character(&part![], &part![]).unwrap(), 1);
        assert!(matches!(
            sym_character(&part![2], &part![1]),
            Err(SymFuncError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(conjugacy_size(&part![1, 1, 1, 1]), BigInt::from(1));
        assert_eq!(conjugacy_size(&part![2]), BigInt::from(1));
        assert_eq!(conjugacy_size(&part![2, 1]), BigInt::from(3));
        assert_eq!(z_mu(&part![2, 2, 1]), BigInt::from(8));
    }

    #[test]
    fn column_orthogonality() {
        // Σ_λ χ^λ(μ)² = z_μ
        for mu in Partition::all_of_size(6) {
            let s: i64 = Partition::all_of_size(6)
                .iter()
                .map(|l| sym_character(l, &mu).unwrap().pow(2))
                .sum();
            assert_eq!(BigInt::from(s), z_mu(&mu));
        }
    }
}
