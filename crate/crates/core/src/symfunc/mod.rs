//! Symmetric-function combinatorics: Littlewood-Richardson coefficients,
//! symmetric-group characters, Adams operations and composite characters.

pub mod characters;
pub mod composite;
pub mod lr;
pub mod plethysm;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::partitions::{CompositeDiagram, Partition};

pub use characters::{conjugacy_size, sym_character, z_mu, CharacterCache};
pub use composite::{composite_adams, composite_character_expansion, composite_product_expansion};
pub use lr::{kostka, lr_coefficient, schur_product};
pub use plethysm::{adams_bounded, adams_coefficients};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("character χ^{lambda}(C_{mu}) needs partitions of equal size")]
    SizeMismatch { lambda: String, mu: String },
}

/// Finitely supported integer combination, keyed canonically, zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expansion<K: Ord> {
    map: BTreeMap<K, i64>,
}

/// `Σ c_ν s_ν`.
pub type SchurExpansion = Expansion<Partition>;
/// `Σ c_{[β,γ]} s_{[β,γ]}`.
pub type CompositeExpansion = Expansion<CompositeDiagram>;

impl<K: Ord + Clone> Expansion<K> {
    pub fn new() -> Self {
        Expansion { map: BTreeMap::new() }
    }

    pub fn add(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.map.entry(k.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.map.remove(&k);
        }
    }

    pub fn get(&self, k: &K) -> i64 {
        self.map.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &i64)> {
        self.map.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.map.keys()
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for Expansion<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut e = Expansion::new();
        for (k, c) in iter {
            e.add(k, c);
        }
        e
    }
}

/// One `key<TAB>coefficient` line per term, in canonical key order.
impl<K: Ord + fmt::Display> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.map {
            writeln!(f, "{k}\t{c}")?;
        }
        Ok(())
    }
}
