//! Check outcomes and suite summaries.

use std::fmt;

use crate::qexact::Laurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One check. A failing report always carries both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    /// Conjecture checks are reported but never fatal.
    pub conjecture: bool,
    pub left: Option<String>,
    pub right: Option<String>,
    /// `left − right` on failure.
    pub diff: Option<String>,
    /// Monomial extracted by tilde-normalization, when one was.
    pub prefactor: Option<String>,
    pub note: Option<String>,
}

impl CheckReport {
    fn new(id: impl Into<String>, status: Status) -> Self {
        CheckReport {
            id: id.into(),
            status,
            conjecture: false,
            left: None,
            right: None,
            diff: None,
            prefactor: None,
            note: None,
        }
    }

    pub fn pass(id: impl Into<String>) -> Self {
        Self::new(id, Status::Pass)
    }

    pub fn skip(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(id, Status::Skip).with_note(reason)
    }

    pub fn fail(id: impl Into<String>, left: impl Into<String>, right: impl Into<String>) -> Self {
        let mut r = Self::new(id, Status::Fail);
        r.left = Some(left.into());
        r.right = Some(right.into());
        r
    }

    /// Exact comparison of two polynomials.
    pub fn compare<const K: usize>(id: impl Into<String>, left: &Laurent<K>, right: &Laurent<K>) -> Self
    where
        Laurent<K>: fmt::Display,
    {
        if left == right {
            Self::pass(id)
        } else {
            let mut r = Self::fail(id, left.to_string(), right.to_string());
            r.diff = Some((left - right).to_string());
            r
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_prefactor(mut self, p: impl Into<String>) -> Self {
        self.prefactor = Some(p.into());
        self
    }

    pub fn as_conjecture(mut self) -> Self {
        self.conjecture = true;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Fails that count against the exit status.
    pub fn is_fatal(&self) -> bool {
        self.status == Status::Fail && !self.conjecture
    }

    /// The multi-line detail block printed for failures.
    pub fn details(&self) -> String {
        let mut out = String::new();
        for (label, v) in [("left", &self.left), ("right", &self.right), ("diff", &self.diff)] {
            if let Some(v) = v {
                out.push_str(&format!("  {label}: {v}\n"));
            }
        }
        out
    }
}

/// `STATUS id` plus annotations on one line.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.id)?;
        if self.conjecture {
            f.write_str(" [conjecture]")?;
        }
        if let Some(p) = &self.prefactor {
            write!(f, " prefactor={p}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn count(&self, s: Status) -> usize {
        self.reports.iter().filter(|r| r.status == s).count()
    }

    pub fn fatal(&self) -> usize {
        self.reports.iter().filter(|r| r.is_fatal()).count()
    }

    pub fn ok(&self) -> bool {
        self.fatal() == 0
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.id == id)
    }

    /// `summary pass=… fail=… skip=… conjecture_fail=…`.
    pub fn summary(&self) -> String {
        let conj = self.reports.iter().filter(|r| r.status == Status::Fail && r.conjecture).count();
        format!(
            "summary pass={} fail={} skip={} conjecture_fail={}",
            self.count(Status::Pass),
            self.fatal(),
            self.count(Status::Skip),
            conj
        )
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qexact::{int, LaurentQA};

    #[test]
    fn lines() {
        let p = LaurentQA::qa(1, int(1), int(0));
        let r = CheckReport::compare("x/y", &p, &p);
        assert_eq!(r.to_string(), "PASS x/y");
        let r = CheckReport::compare("x/z", &p, &LaurentQA::one());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.left.as_deref(), Some("q"));
        assert_eq!(r.diff.as_deref(), Some("-1 + q"));
        let s = SuiteReport {
            reports: vec![r, CheckReport::skip("s", "absent"), CheckReport::fail("c", "1", "2").as_conjecture()],
        };
        assert_eq!(s.summary(), "summary pass=0 fail=1 skip=1 conjecture_fail=1");
        assert!(!s.ok());
    }
}
