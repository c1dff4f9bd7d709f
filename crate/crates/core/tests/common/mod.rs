//! Independent oracles shared by the property suites and the acceptance target.
#![allow(dead_code)]

use std::collections::BTreeMap;

use compknot::partitions::{compose_at_n, CompositeDiagram, Partition};
use compknot::qexact::bracket::at_rank_map;
use compknot::qexact::{int, quantum_int, rat, Bracket, Exps, LaurentQ, LaurentQTA};
use compknot::rosso::qdim::dim_at_rank;
use compknot::rosso::quantum_dimension;
use compknot::symfunc::{adams_coefficients, composite_adams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

// ---------- brute-force Kostka numbers ----------

/// Semistandard tableaux of shape `shape` and content `content`, counted cell by cell.
pub fn kostka_brute(shape: &[usize], content: &[usize]) -> u64 {
    if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    let mut left = content.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            grid[i][j] = v;
            total += go(k + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Partitions of `n`, lexicographically decreasing.
pub fn partitions_desc(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `s_λ[p_r]` in the Schur basis from its monomial expansion
/// `Σ_κ K_{λκ} m_{rκ}`, unwound by unitriangularity of Kostka numbers.
pub fn plethysm_oracle(lambda: &[usize], r: usize) -> BTreeMap<Vec<usize>, i64> {
    let n = lambda.iter().sum::<usize>();
    let nus = partitions_desc(r * n);
    let monomial = |kappa: &Vec<usize>| -> i64 {
        if kappa.iter().all(|k| k % r == 0) {
            let scaled: Vec<usize> = kappa.iter().map(|k| k / r).collect();
            kostka_brute(lambda, &scaled) as i64
        } else {
            0
        }
    };
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for nu in &nus {
        let mut c = monomial(nu);
        for (prev, pc) in &out {
            c -= pc * kostka_brute(prev, nu) as i64;
        }
        if c != 0 {
            out.insert(nu.clone(), c);
        }
    }
    out
}

pub fn check_plethysm(lambda: &[usize], r: usize) -> Result<(), String> {
    let want = plethysm_oracle(lambda, r);
    let got: BTreeMap<Vec<usize>, i64> = adams_coefficients(&Partition::new(lambda.to_vec()), r)
        .iter()
        .map(|(k, c)| (k.rows().to_vec(), *c))
        .collect();
    if want == got {
        Ok(())
    } else {
        Err(format!("plethysm {lambda:?} r={r}: oracle {want:?} engine {got:?}"))
    }
}

// ---------- Schur values at integer points ----------

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `s_ν(x)` by the bialternant formula, `ν` padded to `x.len()` rows.
pub fn schur_at(nu: &[usize], x: &[BigInt]) -> BigInt {
    let n = x.len();
    let row = |e: &dyn Fn(usize) -> usize| -> Vec<Vec<BigInt>> {
        x.iter().map(|xi| (0..n).map(|j| num_traits::pow(xi.clone(), e(j))).collect()).collect()
    };
    let part = |j: usize| nu.get(j).copied().unwrap_or(0);
    let num = bareiss(row(&|j| part(j) + n - 1 - j));
    let den = bareiss(row(&|j| n - 1 - j));
    assert!((&num % &den).is_zero());
    num / den
}

/// `Σ c_{[β,γ]} χ_{[β,γ]_N}(x)` against `χ_{[λ,μ]_N}(x^r)` for `GL_N` characters
/// at `x = (2, 3, …, N+1)`; `N` large enough that every key is defined.
pub fn check_composite_adams(lambda: &Partition, mu: &Partition, r: usize, n: usize) -> Result<(), String> {
    let x: Vec<BigInt> = (0..n).map(|i| BigInt::from(i + 2)).collect();
    let det: BigInt = x.iter().product();
    let glchar = |beta: &Partition, gamma: &Partition, pts: &[BigInt], d: &BigInt| -> Result<BigRational, String> {
        let p = compose_at_n(beta, gamma, n).map_err(|e| e.to_string())?;
        let s = schur_at(p.rows(), pts);
        Ok(BigRational::new(s, num_traits::pow(d.clone(), beta.first())))
    };
    let xr: Vec<BigInt> = x.iter().map(|v| num_traits::pow(v.clone(), r)).collect();
    let left = glchar(lambda, mu, &xr, &num_traits::pow(det.clone(), r))?;
    let mut right = BigRational::zero();
    for (k, c) in composite_adams(lambda, mu, r).iter() {
        right += glchar(&k.lambda, &k.mu, &x, &det)? * BigRational::from_integer(BigInt::from(*c));
    }
    if left == right {
        Ok(())
    } else {
        Err(format!("composite Adams [{lambda}|{mu}] r={r} N={n}: {left} vs {right}"))
    }
}

// ---------- brackets at concrete rank ----------

/// `(q^{1/2} − q^{−1/2}) [m]_q = q^{m/2} − q^{−m/2}`.
pub fn check_bracket(u: i64, v: i64, n: i64) -> Result<(), String> {
    let m = u * n + v;
    let diff = LaurentQ::q(1, rat(m, 2)) - LaurentQ::q(1, rat(-m, 2));
    let b = Bracket::new(u, v);
    let numer = b.numerator().substitute(&at_rank_map(n)).map_err(|e| e.to_string())?;
    let unit = LaurentQ::q(1, rat(1, 2)) - LaurentQ::q(1, rat(-1, 2));
    let eval = &b.eval_at_rank(n) * &unit;
    if numer == diff && eval == diff && &quantum_int(m) * &unit == diff {
        Ok(())
    } else {
        Err(format!("bracket [{u}N+{v}] at N={n}"))
    }
}

/// Weyl dimension of `GL_N` highest weight `ν`, as an integer.
pub fn weyl_dim(nu: &[usize], n: usize) -> BigInt {
    let part = |i: usize| nu.get(i).copied().unwrap_or(0) as i64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= part(i) - part(j) + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// The symbolic composite dimension at rank `N` against the rank-`N` root product,
/// and its `q = 1` value against the Weyl dimension.
pub fn check_dimension(beta: &Partition, gamma: &Partition, n: usize) -> Result<(), String> {
    let p = compose_at_n(beta, gamma, n).map_err(|e| e.to_string())?;
    let at = quantum_dimension(beta, gamma).eval_at_rank(n as i64).map_err(|e| e.to_string())?;
    let fin = dim_at_rank(&p, n).map_err(|e| e.to_string())?;
    if at != fin {
        return Err(format!("dim [{beta}|{gamma}] N={n}: {at} vs {fin}"));
    }
    let w = weyl_dim(p.rows(), n);
    if fin.coefficient_sum() != w {
        return Err(format!("dim [{beta}|{gamma}] N={n} at q=1: {} vs {w}", fin.coefficient_sum()));
    }
    Ok(())
}

// ---------- exhaustive runs ----------

pub fn small_partitions(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(Partition::all_of_size).collect()
}

pub fn plethysm_all() -> Result<usize, String> {
    let mut n = 0;
    for size in 1..=3 {
        for l in partitions_desc(size) {
            for r in 1..=3 {
                check_plethysm(&l, r)?;
                n += 1;
            }
        }
    }
    Ok(n)
}

pub fn composite_adams_all() -> Result<usize, String> {
    let mut count = 0;
    let ps = small_partitions(2);
    for l in &ps {
        for m in &ps {
            for r in 1..=3 {
                let lo = (r * (l.len() + m.len())).max(2);
                for n in [lo, lo + 1] {
                    check_composite_adams(l, m, r, n)?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

pub fn brackets_all() -> Result<usize, String> {
    let mut count = 0;
    for u in -2..=2 {
        for v in -4..=4 {
            for n in 1..=6 {
                check_bracket(u, v, n)?;
                count += 1;
            }
        }
    }
    let ps = small_partitions(3);
    for b in &ps {
        for g in &ps {
            let lo = (b.len() + g.len()).max(1);
            for n in lo..=lo + 2 {
                check_dimension(b, g, n)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

// ---------- ring laws ----------

pub fn poly3() -> impl Strategy<Value = LaurentQTA> {
    prop::collection::vec((-4i64..=4, -2i64..=2, -6i64..=6, -3i64..=3), 0..6).prop_map(|ts| {
        LaurentQTA::from_terms(ts.into_iter().map(|(c, a, q2, t)| {
            let e: Exps<3> = [int(a), rat(q2, 2), int(t)];
            (e, c)
        }))
    })
}

pub fn nonzero_poly3() -> impl Strategy<Value = LaurentQTA> {
    poly3().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ring_laws(a: &LaurentQTA, b: &LaurentQTA, c: &LaurentQTA) -> Result<(), String> {
    let laws = [
        ("add commutes", &(a + b) == &(b + a)),
        ("mul commutes", &(a * b) == &(b * a)),
        ("add associates", &(&(a + b) + c) == &(a + &(b + c))),
        ("mul associates", &(&(a * b) * c) == &(a * &(b * c))),
        ("distributes", &(a * &(b + c)) == &(&(a * b) + &(a * c))),
        ("additive inverse", (a - a).is_zero() && (a + &(-a)).is_zero()),
        ("unit", &(a * &LaurentQTA::one()) == a),
        ("zero", (a * &LaurentQTA::zero()).is_zero()),
    ];
    match laws.iter().find(|(_, ok)| !ok) {
        None => Ok(()),
        Some((name, _)) => Err(format!("{name} fails for {a}, {b}, {c}")),
    }
}

pub fn division_round_trip(p: &LaurentQTA, d: &LaurentQTA) -> Result<(), String> {
    let prod = p * d;
    match prod.exact_divide(d) {
        Ok(q) if &q == p => Ok(()),
        Ok(q) => Err(format!("({prod}) / ({d}) = {q}, expected {p}")),
        Err(e) => Err(format!("({prod}) / ({d}): {e}")),
    }
}

/// Runs the ring and division laws on `cases` generated inputs.
pub fn run_ring_properties(cases: u32) -> Result<(), String> {
    use proptest::test_runner::{Config, TestRunner};
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(poly3(), poly3(), poly3()), |(a, b, c)| {
            ring_laws(&a, &b, &c).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())?;
    runner
        .run(&(poly3(), nonzero_poly3()), |(p, d)| division_round_trip(&p, &d).map_err(TestCaseError::fail))
        .map_err(|e| e.to_string())
}

pub fn composite(l: &[usize], m: &[usize]) -> CompositeDiagram {
    CompositeDiagram::new(Partition::new(l.to_vec()), Partition::new(m.to_vec()))
}
