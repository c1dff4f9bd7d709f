//! Transcribed polynomials: parsing, integrity and lookup.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::partitions::CompositeDiagram;
use crate::qexact::format::{parse_poly, term_lines, write_poly};
use crate::qexact::LaurentQTA;
use crate::rosso::TorusKnot;

use super::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureKind {
    /// Composite or single-diagram superpolynomial in `q, t, a`.
    Super,
    /// Normalized HOMFLY-PT polynomial in `q, a`.
    Homfly,
    /// Single-diagram factor at `t = 1`, in `q, a`.
    FactorT1,
    /// Adjoint exceptional hyperpolynomial.
    Hyper,
    /// DAHA-Jones polynomial of one exceptional group, in `q, t`.
    Jones,
}

impl FixtureKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "super" => FixtureKind::Super,
            "homfly" => FixtureKind::Homfly,
            "factor-t1" => FixtureKind::FactorT1,
            "hyper" => FixtureKind::Hyper,
            "jd" => FixtureKind::Jones,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureColor {
    Composite(CompositeDiagram),
    /// Exceptional labels such as `ad`, `E8`.
    Tag(String),
}

impl fmt::Display for FixtureColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureColor::Composite(c) => write!(f, "{c}"),
            FixtureColor::Tag(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    /// Path relative to the fixture root, e.g. `t3_2/w1,w1.poly`.
    pub path: String,
    pub knot: TorusKnot,
    pub kind: FixtureKind,
    pub color: FixtureColor,
    pub poly: LaurentQTA,
    pub two_var: bool,
    pub source: String,
    pub notes: Vec<String>,
    checksum: Option<String>,
    text: String,
}

/// Outcome of the per-file integrity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrity {
    pub checksum_ok: bool,
    pub reparse_ok: bool,
    pub expected: Option<String>,
    pub actual: String,
}

impl Integrity {
    pub fn ok(&self) -> bool {
        self.checksum_ok && self.reparse_ok
    }
}

/// sha256 over the canonical term lines, newline-terminated.
pub fn term_checksum(poly: &LaurentQTA, two_var: bool) -> String {
    let mut h = Sha256::new();
    for l in term_lines(poly, two_var) {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

impl Fixture {
    pub fn parse(path: &str, text: &str) -> Result<Fixture, VerifyError> {
        let file = parse_poly(text).map_err(|source| VerifyError::Parse { path: path.to_string(), source })?;
        let header = |message: String| VerifyError::Header { path: path.to_string(), message };
        let mut fields: BTreeMap<&str, String> = BTreeMap::new();
        let mut notes = Vec::new();
        for c in &file.comments {
            let (k, v) = c.split_once(' ').unwrap_or((c.as_str(), ""));
            if k == "note" {
                notes.push(v.to_string());
            } else {
                fields.insert(k, v.to_string());
            }
        }
        let get = |k: &str| fields.get(k).cloned().ok_or_else(|| header(format!("missing #{k}")));
        let id = get("id")?;
        let (r, s) = get("knot")?
            .split_once(',')
            .and_then(|(r, s)| Some((r.trim().parse().ok()?, s.trim().parse().ok()?)))
            .ok_or_else(|| header("bad #knot".into()))?;
        let knot = TorusKnot::new(r, s).map_err(|e| header(e.to_string()))?;
        let kind_s = get("kind")?;
        let kind = FixtureKind::parse(&kind_s).ok_or_else(|| header(format!("unknown kind {kind_s:?}")))?;
        let color_s = get("color")?;
        let color = match kind {
            FixtureKind::Hyper | FixtureKind::Jones => FixtureColor::Tag(color_s),
            _ => FixtureColor::Composite(color_s.parse().map_err(|e| header(format!("{e}")))?),
        };
        let source = get("source")?;
        if source.trim().is_empty() {
            return Err(header("empty #source".into()));
        }
        Ok(Fixture {
            id,
            path: path.to_string(),
            knot,
            kind,
            color,
            poly: file.poly,
            two_var: file.two_var,
            source,
            notes,
            checksum: fields.get("sha256").cloned(),
            text: text.to_string(),
        })
    }

    pub fn composite(&self) -> Option<&CompositeDiagram> {
        match &self.color {
            FixtureColor::Composite(c) => Some(c),
            FixtureColor::Tag(_) => None,
        }
    }

    pub fn integrity(&self) -> Integrity {
        let actual = term_checksum(&self.poly, self.two_var);
        let reparse_ok = parse_poly(&self.text).map(|f| write_poly(&f) == self.text).unwrap_or(false);
        Integrity {
            checksum_ok: self.checksum.as_deref() == Some(actual.as_str()),
            reparse_ok,
            expected: self.checksum.clone(),
            actual,
        }
    }
}

const EMBEDDED: &[(&str, &str)] = &[
    ("t3_2/2w1,w1.poly", include_str!("../../fixtures/t3_2/2w1,w1.poly")),
    ("t3_2/2w1.poly", include_str!("../../fixtures/t3_2/2w1.poly")),
    ("t3_2/homfly.2w1,w1.poly", include_str!("../../fixtures/t3_2/homfly.2w1,w1.poly")),
    ("t3_2/homfly.w1+w2,w1.poly", include_str!("../../fixtures/t3_2/homfly.w1+w2,w1.poly")),
    ("t3_2/homfly.w1,w1.poly", include_str!("../../fixtures/t3_2/homfly.w1,w1.poly")),
    ("t3_2/homfly.w1,w2.poly", include_str!("../../fixtures/t3_2/homfly.w1,w2.poly")),
    ("t3_2/homfly.w1,w3.poly", include_str!("../../fixtures/t3_2/homfly.w1,w3.poly")),
    ("t3_2/hyper-ad.poly", include_str!("../../fixtures/t3_2/hyper-ad.poly")),
    ("t3_2/jd-e7.poly", include_str!("../../fixtures/t3_2/jd-e7.poly")),
    ("t3_2/jd-e8.poly", include_str!("../../fixtures/t3_2/jd-e8.poly")),
    ("t3_2/w1+w2,w1.poly", include_str!("../../fixtures/t3_2/w1+w2,w1.poly")),
    ("t3_2/w1+w2.t1.poly", include_str!("../../fixtures/t3_2/w1+w2.t1.poly")),
    ("t3_2/w1,w1.poly", include_str!("../../fixtures/t3_2/w1,w1.poly")),
    ("t3_2/w1,w2.poly", include_str!("../../fixtures/t3_2/w1,w2.poly")),
    ("t3_2/w1,w3.poly", include_str!("../../fixtures/t3_2/w1,w3.poly")),
    ("t3_2/w1.poly", include_str!("../../fixtures/t3_2/w1.poly")),
    ("t3_2/w2,2w1.poly", include_str!("../../fixtures/t3_2/w2,2w1.poly")),
    ("t3_2/w2,w2.poly", include_str!("../../fixtures/t3_2/w2,w2.poly")),
    ("t3_2/w2.poly", include_str!("../../fixtures/t3_2/w2.poly")),
    ("t3_2/w3.t1.poly", include_str!("../../fixtures/t3_2/w3.t1.poly")),
    ("t4_3/homfly.w1,w1.poly", include_str!("../../fixtures/t4_3/homfly.w1,w1.poly")),
    ("t4_3/hyper-ad.poly", include_str!("../../fixtures/t4_3/hyper-ad.poly")),
    ("t4_3/w1,w1.poly", include_str!("../../fixtures/t4_3/w1,w1.poly")),
    ("t4_3/w1.t1.poly", include_str!("../../fixtures/t4_3/w1.t1.poly")),
];

/// The fixture files, keyed by relative path.
#[derive(Clone, Debug, Default)]
pub struct FixtureSet {
    fixtures: BTreeMap<String, Fixture>,
    missing: Vec<String>,
}

impl FixtureSet {
    /// Relative paths of every fixture the suites use.
    pub fn known_paths() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(p, _)| *p)
    }

    /// The copies compiled into the library.
    pub fn embedded() -> FixtureSet {
        let mut set = FixtureSet::default();
        for (path, text) in EMBEDDED {
            set.insert(Fixture::parse(path, text).expect("embedded fixtures parse"));
        }
        set
    }

    /// Reads every known fixture under `dir`; absent files are recorded, not fatal.
    pub fn from_dir(dir: &Path) -> Result<FixtureSet, VerifyError> {
        let mut set = FixtureSet::default();
        for path in Self::known_paths() {
            let full = dir.join(path);
            match std::fs::read_to_string(&full) {
                Ok(text) => set.insert(Fixture::parse(path, &text)?),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => set.missing.push(path.to_string()),
                Err(e) => {
                    return Err(VerifyError::Io {
                        path: full.display().to_string(),
                        message: e.to_string(),
                    })
                }
            }
        }
        Ok(set)
    }

    pub fn insert(&mut self, f: Fixture) {
        self.missing.retain(|p| p != &f.path);
        self.fixtures.insert(f.path.clone(), f);
    }

    pub fn remove(&mut self, path: &str) -> Option<Fixture> {
        let f = self.fixtures.remove(path);
        if f.is_some() {
            self.missing.push(path.to_string());
        }
        f
    }

    pub fn get(&self, path: &str) -> Option<&Fixture> {
        self.fixtures.get(path)
    }

    /// Mutable access, for negative controls.
    pub fn get_mut(&mut self, path: &str) -> Option<&mut Fixture> {
        self.fixtures.get_mut(path)
    }

    pub fn missing(&self) -> &[String] {
        &self.missing
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fixture> {
        self.fixtures.values()
    }

    pub fn len(&self) -> usize {
        self.fixtures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixtures.is_empty()
    }

    /// The fixture of the given kind and color for a knot.
    pub fn find(&self, knot: TorusKnot, kind: FixtureKind, color: &str) -> Option<&Fixture> {
        self.fixtures
            .values()
            .find(|f| f.knot == knot && f.kind == kind && f.color.to_string() == color)
    }
}

/// Directory name used for a knot, e.g. `t3_2`.
pub fn knot_dir(k: TorusKnot) -> String {
    format!("t{}_{}", k.r(), k.s())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_set_is_intact() {
        let set = FixtureSet::embedded();
        assert_eq!(set.len(), EMBEDDED.len());
        for f in set.iter() {
            assert!(f.integrity().ok(), "{}", f.path);
            assert!(f.path.starts_with(&knot_dir(f.knot)));
        }
        let adj = set.find(TorusKnot::trefoil(), FixtureKind::Super, "1|1").unwrap();
        assert_eq!(adj.id, "w1,w1");
        assert_eq!(adj.poly.len(), 19);
    }

    #[test]
    fn header_errors() {
        let text = "#id x\n#knot 3,2\n#kind super\n#color 1|1\n1\t0\t0\t0\n";
        assert!(matches!(Fixture::parse("x.poly", text), Err(VerifyError::Header { .. })));
        let text = "#id x\n#knot 4,2\n#kind super\n#color 1|1\n#source s\n1\t0\t0\t0\n";
        assert!(Fixture::parse("x.poly", text).is_err());
        let text = "#id x\n#knot 3,2\n#kind super\n#color 1|1\n#source s\n1\t0\t0\n";
        assert!(matches!(Fixture::parse("x.poly", text), Err(VerifyError::Parse { .. })));
    }

    #[test]
    fn tampered_checksum() {
        let set = FixtureSet::embedded();
        let f = set.get("t3_2/w1.poly").unwrap();
        let text = f.text.replace("1\t1\t1\t0", "2\t1\t1\t0");
        let g = Fixture::parse(&f.path, &text).unwrap();
        let i = g.integrity();
        assert!(!i.checksum_ok && i.reparse_ok);
    }
}
