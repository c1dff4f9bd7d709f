//! Composite (rational) Schur functions `s_{[λ,μ]}` in terms of ordinary ones.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{CompositeDiagram, Partition};

use super::lr::lr_coefficient;
use super::plethysm::adams_bounded;
use super::CompositeExpansion;

fn intersection(a: &Partition, b: &Partition) -> Partition {
    Partition::new((0..a.len().min(b.len())).map(|i| a.part(i).min(b.part(i))).collect())
}

fn subdiagrams_of_size(outer: &Partition, size: usize) -> Vec<Partition> {
    outer.subdiagrams().into_iter().filter(|p| p.size() == size).collect()
}

/// Coefficients of `s_ν(x) s_ξ(y)` in `s_{[λ,μ]}`:
/// `Σ_τ (−1)^{|τ|} N^λ_{ντ} N^μ_{τ'ξ}`, with `τ'` the transpose of `τ`.
///
/// The transpose is what makes this the inverse of
/// [`composite_product_expansion`]; it only matters once `τ` can have two
/// boxes in a row or column.
pub fn composite_character_expansion(lambda: &Partition, mu: &Partition) -> BTreeMap<(Partition, Partition), i64> {
    let mut out: BTreeMap<(Partition, Partition), i64> = BTreeMap::new();
    for tau in intersection(lambda, &mu.conjugate()).subdiagrams() {
        let sign = if tau.size() % 2 == 0 { 1 } else { -1 };
        let tau_t = tau.conjugate();
        let nus = subdiagrams_of_size(lambda, lambda.size() - tau.size());
        let xis = subdiagrams_of_size(mu, mu.size() - tau.size());
        for nu in &nus {
            let a = lr_coefficient(nu, &tau, lambda) as i64;
            if a == 0 {
                continue;
            }
            for xi in &xis {
                let b = lr_coefficient(&tau_t, xi, mu) as i64;
                if b != 0 {
                    *out.entry((nu.clone(), xi.clone())).or_default() += sign * a * b;
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn product_cache() -> &'static RwLock<HashMap<(Partition, Partition), Arc<CompositeExpansion>>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Arc<CompositeExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_η(x) s_δ(y) = Σ_{β,γ} (Σ_α N^η_{βα} N^δ_{γα}) s_{[β,γ]}`.
pub fn composite_product_expansion(eta: &Partition, delta: &Partition) -> CompositeExpansion {
    (*product_cached(eta, delta)).clone()
}

fn product_cached(eta: &Partition, delta: &Partition) -> Arc<CompositeExpansion> {
    let key = (eta.clone(), delta.clone());
    if let Some(v) = product_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = CompositeExpansion::new();
    for alpha in intersection(eta, delta).subdiagrams() {
        let betas = subdiagrams_of_size(eta, eta.size() - alpha.size());
        let gammas = subdiagrams_of_size(delta, delta.size() - alpha.size());
        for beta in &betas {
            let a = lr_coefficient(beta, &alpha, eta) as i64;
            if a == 0 {
                continue;
            }
            for gamma in &gammas {
                let b = lr_coefficient(gamma, &alpha, delta) as i64;
                if b != 0 {
                    out.add(CompositeDiagram::new(beta.clone(), gamma.clone()), a * b);
                }
            }
        }
    }
    let out = Arc::new(out);
    product_cache().write().unwrap().insert(key, out.clone());
    out
}

/// `c^{[β,γ]}_{[λ,μ];r}`: the expansion of `s_{[λ,μ]}(x^r, y^r)` in composite Schur functions.
pub fn composite_adams(lambda: &Partition, mu: &Partition, r: usize) -> CompositeExpansion {
    let mut out = CompositeExpansion::new();
    for ((nu, xi), c1) in composite_character_expansion(lambda, mu) {
        let an = adams_bounded(&nu, r, usize::MAX);
        let ax = adams_bounded(&xi, r, usize::MAX);
        for (eta, c2) in an.iter() {
            for (delta, c3) in ax.iter() {
                let coef = c1 * c2 * c3;
                for (key, c4) in product_cached(eta, delta).iter() {
                    out.add(key.clone(), coef * c4);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::symfunc::adams_coefficients;

    fn cd(l: Partition, m: Partition) -> CompositeDiagram {
        CompositeDiagram::new(l, m)
    }

    #[test]
    fn character_expansion() {
        let e = composite_character_expansion(&part![], &part![2, 1]);
        assert_eq!(e.len(), 1);
        assert_eq!(e[&(part![], part![2, 1])], 1);
        let e = composite_character_expansion(&part![1], &part![1]);
        assert_eq!(e.len(), 2);
        assert_eq!(e[&(part![1], part![1])], 1);
        assert_eq!(e[&(part![], part![])], -1);
        let e = composite_character_expansion(&part![1], &part![2]);
        assert_eq!(e[&(part![1], part![2])], 1);
        assert_eq!(e[&(part![], part![1])], -1);
        assert_eq!(e.len(), 2);
        let e = composite_character_expansion(&part![1, 1], &part![1, 1]);
        assert_eq!(e.get(&(part![], part![])), None);
        let e = composite_character_expansion(&part![1, 1], &part![2]);
        assert_eq!(e[&(part![], part![])], 1);
    }

    #[test]
    fn product_expansion() {
        let e = composite_product_expansion(&part![], &part![2]);
        assert_eq!(e.to_string(), "0|2\t1\n");
        let e = composite_product_expansion(&part![1], &part![1]);
        assert_eq!(e.get(&cd(part![1], part![1])), 1);
        assert_eq!(e.get(&cd(part![], part![])), 1);
        assert_eq!(e.len(), 2);
        assert_eq!(composite_product_expansion(&part![1], &part![]).to_string(), "1|0\t1\n");
    }

    #[test]
    fn adams_of_adjoint() {
        let e = composite_adams(&part![1], &part![1], 2);
        assert_eq!(e.get(&cd(part![], part![])), 1);
        assert_eq!(e.get(&cd(part![2], part![2])), 1);
        assert_eq!(e.get(&cd(part![1, 1], part![1, 1])), 1);
        assert_eq!(e.get(&cd(part![2], part![1, 1])), -1);
        assert_eq!(e.get(&cd(part![1, 1], part![2])), -1);
        assert_eq!(e.get(&cd(part![1], part![1])), 0);
        assert_eq!(e.len(), 5);
    }

    #[test]
    fn empty_slot_reduces() {
        let a = adams_coefficients(&part![2, 1], 2);
        let c = composite_adams(&part![], &part![2, 1], 2);
        assert_eq!(a.len(), c.len());
        for (nu, k) in a.iter() {
            assert_eq!(c.get(&cd(part![], nu.clone())), *k);
        }
    }
}
