//! The exceptional series parameters `ν(G) = h∨/6`.

use num_rational::Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalSeriesEntry {
    pub group: &'static str,
    pub dual_coxeter: i64,
    /// Highest weight of the adjoint representation in Bourbaki labels.
    pub adjoint: &'static str,
}

impl ExceptionalSeriesEntry {
    pub fn nu(&self) -> Rational64 {
        Rational64::new(self.dual_coxeter, 6)
    }
}

/// A₁, A₂, D₄, E₆, E₇, E₈.
pub const EXCEPTIONAL_SERIES: [ExceptionalSeriesEntry; 6] = [
    ExceptionalSeriesEntry { group: "A1", dual_coxeter: 2, adjoint: "2w1" },
    ExceptionalSeriesEntry { group: "A2", dual_coxeter: 3, adjoint: "w1+w2" },
    ExceptionalSeriesEntry { group: "D4", dual_coxeter: 6, adjoint: "w2" },
    ExceptionalSeriesEntry { group: "E6", dual_coxeter: 12, adjoint: "w2" },
    ExceptionalSeriesEntry { group: "E7", dual_coxeter: 18, adjoint: "w1" },
    ExceptionalSeriesEntry { group: "E8", dual_coxeter: 30, adjoint: "w8" },
];

pub fn series_entry(group: &str) -> Option<ExceptionalSeriesEntry> {
    EXCEPTIONAL_SERIES.iter().copied().find(|e| e.group == group)
}
