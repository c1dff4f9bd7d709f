//! Fundamental-weight notation: `2w1+w3` is the diagram with two columns of
//! height 1 and one of height 3; `λ,μ` pairs give composite colors.

use compknot::partitions::{CompositeDiagram, Partition};

pub fn parse_weight(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Ok(Partition::empty());
    }
    let mut columns: Vec<usize> = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        let (mult, idx) = term
            .split_once('w')
            .ok_or_else(|| format!("bad weight term {term:?}"))?;
        let mult: usize = if mult.is_empty() {
            1
        } else {
            mult.parse().map_err(|_| format!("bad multiplicity in {term:?}"))?
        };
        let idx: usize = idx.parse().map_err(|_| format!("bad index in {term:?}"))?;
        if idx == 0 {
            return Err(format!("fundamental weights start at w1, got {term:?}"));
        }
        columns.extend(std::iter::repeat(idx).take(mult));
    }
    Ok(Partition::new(columns).conjugate())
}

/// `A,B` for `[A, B]`; a single weight `A` means `[∅, A]`.
pub fn parse_composite_weight(s: &str) -> Result<CompositeDiagram, String> {
    match s.split_once(',') {
        Some((l, m)) => Ok(CompositeDiagram::new(parse_weight(l)?, parse_weight(m)?)),
        None => Ok(CompositeDiagram::new(Partition::empty(), parse_weight(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(parse_weight("2w1+w3").unwrap().to_string(), "3,1,1");
        assert_eq!(parse_weight("w1+w2").unwrap().to_string(), "2,1");
        assert_eq!(parse_weight("0").unwrap(), Partition::empty());
        assert_eq!(parse_composite_weight("w2,2w1").unwrap().to_string(), "1,1|2");
        assert_eq!(parse_composite_weight("w1").unwrap().to_string(), "0|1");
        assert!(parse_weight("w0").is_err());
        assert!(parse_weight("2x1").is_err());
    }
}
