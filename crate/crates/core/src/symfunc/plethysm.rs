//! Schur expansion of the Adams operation `s_λ(x^r)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::partitions::Partition;

use super::characters::{conjugacy_size, factorial, sym_character};
use super::SchurExpansion;

type AdamsKey = (Partition, usize, usize);

fn adams_cache() -> &'static RwLock<HashMap<AdamsKey, Arc<SchurExpansion>>> {
    static CACHE: OnceLock<RwLock<HashMap<AdamsKey, Arc<SchurExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^ν_{λ;r}` for all `ν ⊢ r|λ|`:
/// `Σ_{μ⊢|λ|} χ^λ(C_μ) χ^ν(C_{rμ}) / z_μ`.
pub fn adams_coefficients(lambda: &Partition, r: usize) -> SchurExpansion {
    (*adams_bounded(lambda, r, usize::MAX)).clone()
}

/// As [`adams_coefficients`], keeping only `ν` with at most `max_len` rows.
pub fn adams_bounded(lambda: &Partition, r: usize, max_len: usize) -> Arc<SchurExpansion> {
    assert!(r >= 1, "Adams operation needs r ≥ 1");
    let key = (lambda.clone(), r, max_len);
    if let Some(v) = adams_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let n = lambda.size();
    let weights: Vec<(Partition, BigInt)> = Partition::all_of_size(n)
        .into_iter()
        .filter_map(|mu| {
            let chi = sym_character(lambda, &mu).expect("sizes agree");
            (chi != 0).then(|| {
                let w = BigInt::from(chi) * conjugacy_size(&mu);
                (mu.scale(r), w)
            })
        })
        .collect();
    let nfact = factorial(n);
    let nus = Partition::all_of_size_with_max_len(r * n, max_len);
    let coeffs: Vec<(Partition, i64)> = nus
        .into_par_iter()
        .map(|nu| {
            let mut s = BigInt::zero();
            for (rmu, w) in &weights {
                let chi = sym_character(&nu, rmu).expect("sizes agree");
                if chi != 0 {
                    s += w * BigInt::from(chi);
                }
            }
            let (q, rem) = s.div_rem(&nfact);
            assert!(rem.is_zero(), "non-integral Adams coefficient");
            (nu, q.to_i64().expect("Adams coefficient fits in i64"))
        })
        .collect();
    let out = Arc::new(SchurExpansion::from_iter(coeffs));
    adams_cache().write().unwrap().insert(key, out.clone());
    out
}
