//! Term-per-line polynomial files.
//!
//! Each term is `coeff<TAB>qexp<TAB>texp<TAB>aexp`; two-variable files declare
//! `#vars q a` and drop the `texp` column. Other `#` lines are comments and are
//! preserved in order. Terms are written in canonical order, so writing a parsed
//! canonical file reproduces it byte for byte.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;

use super::laurent::{LaurentQTA, A, Q, T};
use super::QExactError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    /// `true` for `q, a` files.
    pub two_var: bool,
    /// Comment lines without the leading `#`.
    pub comments: Vec<String>,
    pub poly: LaurentQTA,
}

const VARS_QA: &str = "#vars q a";

pub fn parse_poly(text: &str) -> Result<PolyFile, QExactError> {
    let mut two_var = false;
    let mut comments = Vec::new();
    let mut poly = LaurentQTA::zero();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if line == VARS_QA {
            two_var = true;
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.to_string());
            continue;
        }
        let err = |message: String| QExactError::Parse { line: i + 1, message };
        let cols: Vec<&str> = line.split_whitespace().collect();
        let want = if two_var { 3 } else { 4 };
        if cols.len() != want {
            return Err(err(format!("expected {want} columns, found {}", cols.len())));
        }
        let coeff: BigInt = cols[0].parse().map_err(|_| err(format!("bad coefficient {:?}", cols[0])))?;
        let exp = |s: &str| -> Result<Rational64, QExactError> {
            s.parse::<Rational64>().map_err(|_| err(format!("bad exponent {s:?}")))
        };
        let q = exp(cols[1])?;
        let (t, a) = if two_var {
            (Rational64::zero(), exp(cols[2])?)
        } else {
            (exp(cols[2])?, exp(cols[3])?)
        };
        let mut e = [Rational64::zero(); 3];
        e[A] = a;
        e[Q] = q;
        e[T] = t;
        poly += &LaurentQTA::monomial(coeff, e);
    }
    Ok(PolyFile { two_var, comments, poly })
}

/// The canonical term lines alone (no comments).
pub fn term_lines(poly: &LaurentQTA, two_var: bool) -> Vec<String> {
    poly.terms()
        .map(|(e, c)| {
            if two_var {
                format!("{c}\t{}\t{}", e[Q], e[A])
            } else {
                format!("{c}\t{}\t{}\t{}", e[Q], e[T], e[A])
            }
        })
        .collect()
}

pub fn write_poly(file: &PolyFile) -> String {
    let mut out = String::new();
    if file.two_var {
        out.push_str(VARS_QA);
        out.push('\n');
    }
    for c in &file.comments {
        out.push('#');
        out.push_str(c);
        out.push('\n');
    }
    for l in term_lines(&file.poly, file.two_var) {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
