//! Named groups of checks over a fixture set.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::macdonald::dual_partition;
use crate::partitions::{CompositeDiagram, Partition};
use crate::qexact::{int, LaurentQTA};
use crate::rosso::TorusKnot;

use super::checks::*;
use super::exceptional::series_entry;
use super::fixture::{knot_dir, Fixture, FixtureKind, FixtureSet};
use super::report::{CheckReport, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Connection,
    Duality,
    Evaluation,
    Exceptional,
    Oracle,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Connection, Suite::Duality, Suite::Evaluation, Suite::Exceptional, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Connection => "connection",
            Suite::Duality => "duality",
            Suite::Evaluation => "evaluation",
            Suite::Exceptional => "exceptional",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Composite superpolynomial fixtures with the printed connection prefactor
/// `a^i q^j`, when one is printed.
pub const CONNECTIONS: [(&str, Option<(i64, i64)>); 8] = [
    ("t3_2/w1,w1.poly", Some((2, -2))),
    ("t3_2/2w1,w1.poly", Some((3, -3))),
    ("t3_2/w1,w2.poly", Some((3, -5))),
    ("t3_2/w1,w3.poly", Some((4, -10))),
    ("t3_2/w1+w2,w1.poly", Some((4, -6))),
    ("t3_2/w2,2w1.poly", None),
    ("t3_2/w2,w2.poly", None),
    ("t4_3/w1,w1.poly", Some((6, -6))),
];

/// Super-duality pairs with the ratio `q^i t^j` between the two sides.
pub const DUALITIES: [(&str, &str, Option<(i64, i64)>); 7] = [
    ("t3_2/w1,w1.poly", "t3_2/w1,w1.poly", Some((2, 2))),
    ("t3_2/2w1,w1.poly", "t3_2/w1,w2.poly", Some((5, 3))),
    ("t3_2/w1+w2,w1.poly", "t3_2/w1+w2,w1.poly", Some((6, 6))),
    ("t3_2/w2,2w1.poly", "t3_2/w2,2w1.poly", Some((6, 6))),
    ("t4_3/w1,w1.poly", "t4_3/w1,w1.poly", Some((6, 6))),
    ("t3_2/w1.poly", "t3_2/w1.poly", Some((1, 1))),
    ("t3_2/2w1.poly", "t3_2/w2.poly", Some((4, 2))),
];

fn knot(r: usize, s: usize) -> TorusKnot {
    TorusKnot::new(r, s).expect("valid knot")
}

fn color(s: &str) -> CompositeDiagram {
    s.parse().expect("valid color")
}

/// Colors of the composite fixtures, for engine-only checks.
fn engine_colors() -> Vec<(TorusKnot, CompositeDiagram)> {
    let mut v: Vec<_> = ["1|1", "2|1", "1|1,1", "1|1,1,1", "2,1|1", "1,1|2", "1,1|1,1"]
        .into_iter()
        .map(|c| (TorusKnot::trefoil(), color(c)))
        .collect();
    v.push((knot(4, 3), color("1|1")));
    v
}

enum Job<'a> {
    Connection(&'a Fixture, Option<(i64, i64)>),
    Duality(&'a Fixture, &'a Fixture, Option<(i64, i64)>),
    Ordering(TorusKnot, CompositeDiagram),
    ColorExchange(&'a Fixture),
    Q1(&'a Fixture, &'a FixtureSet),
    T1(&'a Fixture, &'a FixtureSet),
    Adeg(&'a Fixture),
    A0(&'a Fixture),
    MacSchur(Partition, usize),
    MacDuality(Partition, usize),
    MacEval(Partition, usize),
    Exceptional(String, &'a Fixture, &'static str, Result<LaurentQTA, String>),
    Canceling(&'a Fixture, LaurentQTA),
    Homfly(&'a Fixture),
    PrintedConnection(&'a Fixture, &'a Fixture, (i64, i64)),
    HmBridge,
    FiniteN(TorusKnot, CompositeDiagram, usize),
    Report(CheckReport),
}

impl Job<'_> {
    /// Engine outputs the job will ask for.
    fn engine_keys(&self) -> Vec<(TorusKnot, CompositeDiagram)> {
        let of = |f: &Fixture| f.composite().map(|c| (f.knot, c.clone()));
        match self {
            Job::Connection(f, _) | Job::Homfly(f) => of(f).into_iter().collect(),
            Job::Ordering(k, c) => vec![(*k, c.clone()), (*k, c.swapped())],
            Job::FiniteN(k, c, _) => vec![(*k, c.clone())],
            Job::HmBridge => vec![(TorusKnot::trefoil(), color("1|1"))],
            _ => Vec::new(),
        }
    }

    fn run(self, cache: &EngineCache) -> Vec<CheckReport> {
        let one = |r| vec![r];
        match self {
            Job::Connection(f, p) => one(check_connection(f, p, cache)),
            Job::Duality(a, b, p) => one(check_superduality(a, b, p)),
            Job::Ordering(k, c) => {
                let label = c.to_string();
                one(check_ordering(k, &c, &label, cache))
            }
            Job::ColorExchange(f) => check_color_exchange(f),
            Job::Q1(f, set) => one(check_q1_eval(f, set)),
            Job::T1(f, set) => one(check_t1_eval(f, set)),
            Job::Adeg(f) => one(check_adeg(f)),
            Job::A0(f) => one(check_a0_normalized(f)),
            Job::MacSchur(l, n) => one(check_macdonald_schur(&l, n)),
            Job::MacDuality(l, n) => one(check_macdonald_duality(&l, n)),
            Job::MacEval(l, n) => one(check_macdonald_evaluation(&l, n)),
            Job::Exceptional(id, f, group, target) => {
                let entry = series_entry(group).expect("known group");
                one(match target {
                    Ok(t) => check_exceptional(&id, f, &entry, &t),
                    Err(reason) => CheckReport::skip(id, reason),
                })
            }
            Job::Canceling(f, pivot) => {
                let modulus = LaurentQTA::one() - LaurentQTA::qta(1, int(1), int(-1), int(6));
                check_canceling(f, &pivot, &modulus)
            }
            Job::Homfly(h) => one(check_homfly_fixture(h, cache)),
            Job::PrintedConnection(f, h, p) => one(check_printed_connection(f, h, p)),
            Job::HmBridge => one(check_hm_bridge(cache)),
            Job::FiniteN(k, c, n) => {
                let label = c.to_string();
                one(match cache.get(k, &c) {
                    Ok(e) => check_finite_n(k, &c, &e, n, &label),
                    Err(e) => CheckReport::fail(format!("finite-n/{}/{label}/N={n}", knot_dir(k)), "engine", e),
                })
            }
            Job::Report(r) => one(r),
        }
    }
}

fn absent(path: &str) -> CheckReport {
    CheckReport::skip(format!("fixture/{}", path.trim_end_matches(".poly")), "fixture absent")
}

fn jobs<'a>(suite: Suite, set: &'a FixtureSet) -> Vec<Job<'a>> {
    let mut out = Vec::new();
    let get = |p: &str| set.get(p);
    match suite {
        Suite::All => {
            for s in Suite::PARTS {
                out.extend(jobs(s, set));
            }
        }
        Suite::Connection => {
            for (p, pre) in CONNECTIONS {
                out.push(match get(p) {
                    Some(f) => Job::Connection(f, pre),
                    None => Job::Report(absent(p)),
                });
            }
        }
        Suite::Duality => {
            for (a, b, pre) in DUALITIES {
                out.push(match (get(a), get(b)) {
                    (Some(fa), Some(fb)) => Job::Duality(fa, fb, pre),
                    _ => Job::Report(absent(if get(a).is_none() { a } else { b })),
                });
            }
            for (k, c) in engine_colors().into_iter().filter(|(_, c)| c.lambda != c.mu) {
                out.push(Job::Ordering(k, c));
            }
            let p = "t3_2/w2,w2.poly";
            out.push(get(p).map_or_else(|| Job::Report(absent(p)), Job::ColorExchange));
        }
        Suite::Evaluation => {
            for (p, _) in CONNECTIONS {
                match get(p) {
                    Some(f) => out.extend([Job::Q1(f, set), Job::T1(f, set), Job::Adeg(f), Job::A0(f)]),
                    None => out.push(Job::Report(absent(p))),
                }
            }
            for n in 1..=3 {
                for size in 1..=4 {
                    for l in Partition::all_of_size_with_max_len(size, n) {
                        out.push(Job::MacSchur(l.clone(), n));
                        if dual_partition(&l, n).size() <= 4 {
                            out.push(Job::MacDuality(l.clone(), n));
                        }
                        if l.len() < n {
                            out.push(Job::MacEval(l, n));
                        }
                    }
                }
            }
        }
        Suite::Exceptional => exceptional_jobs(set, &mut out),
        Suite::Oracle => {
            for h in set.iter().filter(|f| f.kind == FixtureKind::Homfly) {
                out.push(Job::Homfly(h));
                let sp = h.path.replace("homfly.", "");
                let pre = CONNECTIONS.iter().find(|(p, _)| *p == sp).and_then(|(_, pre)| *pre);
                if let (Some(f), Some(pre)) = (get(&sp), pre) {
                    out.push(Job::PrintedConnection(f, h, pre));
                }
            }
            out.push(Job::HmBridge);
            for (k, c) in engine_colors() {
                let lo = c.min_rank();
                for n in lo..=lo + 3 {
                    out.push(Job::FiniteN(k, c.clone(), n));
                }
            }
        }
    }
    out
}

fn exceptional_jobs<'a>(set: &'a FixtureSet, out: &mut Vec<Job<'a>>) {
    let target = |f: Option<&Fixture>, a: i64| -> Result<LaurentQTA, String> {
        let f = f.ok_or("target fixture absent")?;
        rank_specialization(f, a).ok_or_else(|| "substitution failed".to_string())
    };
    for (dir, k) in [("t3_2", TorusKnot::trefoil()), ("t4_3", knot(4, 3))] {
        let hp = format!("{dir}/hyper-ad.poly");
        let Some(h) = set.get(&hp) else {
            out.push(Job::Report(absent(&hp)));
            continue;
        };
        let id = |g: &str, what: &str| format!("exceptional/{dir}/{g}/{what}");
        for (g, file) in [("E8", "jd-e8"), ("E7", "jd-e7")] {
            let t = set
                .get(&format!("{dir}/{file}.poly"))
                .map(|f| f.poly.clone())
                .ok_or_else(|| format!("no {g} DAHA-Jones polynomial for {k}"));
            out.push(Job::Exceptional(id(g, file), h, g, t));
        }
        let adj = set.get(&format!("{dir}/w1,w1.poly"));
        out.push(Job::Exceptional(id("A2", "w1,w1"), h, "A2", target(adj, 3)));
        out.push(Job::Exceptional(id("A1", "w1,w1"), h, "A1", target(adj, 2)));
        if let Some(f) = set.find(k, FixtureKind::Super, "0|2") {
            out.push(Job::Exceptional(id("A1", "2w1"), h, "A1", target(Some(f), 2)));
        }
        for g in ["D4", "E6"] {
            out.push(Job::Report(CheckReport::skip(id(g, "ad"), format!("no {g} polynomial available"))));
        }
        let pivot = if k == TorusKnot::trefoil() { 3 } else { 7 };
        out.push(Job::Canceling(h, LaurentQTA::qta(1, int(pivot), int(-1), int(6))));
    }
}

/// Runs one suite. Checks run in parallel; report order is fixed.
pub fn run_suite(suite: Suite, set: &FixtureSet) -> SuiteReport {
    run_suite_with(suite, set, &EngineCache::default())
}

pub fn run_suite_with(suite: Suite, set: &FixtureSet, cache: &EngineCache) -> SuiteReport {
    let mut reports = Vec::new();
    if matches!(suite, Suite::All | Suite::Connection) {
        reports.extend(set.iter().filter_map(|f| {
            let i = f.integrity();
            (!i.ok()).then(|| {
                CheckReport::fail(
                    format!("integrity/{}", f.path),
                    i.actual.clone(),
                    i.expected.clone().unwrap_or_else(|| "a #sha256 header".into()),
                )
            })
        }));
    }
    let js = jobs(suite, set);
    let mut keys: Vec<_> = js.iter().flat_map(Job::engine_keys).collect();
    keys.sort_by(|a, b| (a.0.r(), a.0.s(), &a.1).cmp(&(b.0.r(), b.0.s(), &b.1)));
    keys.dedup();
    cache.warm(&keys);
    reports.extend(js.into_par_iter().map(|j| j.run(cache)).collect::<Vec<_>>().into_iter().flatten());
    SuiteReport { reports }
}
