//! Turning command-line text into rings, ideals and twist lists.

use std::fs;
use std::path::Path;

use hilbext_core::groebner::Ideal;
use hilbext_core::polyring::{parse_generators, parse_polynomial, FieldSpec, MonomialOrder, PolyRing, Polynomial, RingRef};

use crate::Failure;

/// `q` or `fp:P` (a bare prime is accepted too).
pub fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    let p = match s {
        "q" | "Q" | "0" => 0,
        _ => {
            let digits = s.strip_prefix("fp:").unwrap_or(s);
            digits.parse::<u64>().map_err(|_| Failure::usage(format!("unknown field `{s}`; use q or fp:P")))?
        }
    };
    FieldSpec::new(p).map_err(|e| Failure::usage(e.to_string()))
}

pub fn parse_order(s: &str) -> Result<MonomialOrder, Failure> {
    MonomialOrder::parse(s).map_err(|e| Failure::usage(e.to_string()))
}

/// Signed twists, e.g. `-1,-2`. Whitespace is ignored.
pub fn parse_twists(s: &str) -> Result<Vec<i64>, Failure> {
    let ts: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match ts {
        Ok(ts) if !ts.is_empty() => Ok(ts),
        _ => Err(Failure::usage(format!("bad twist list `{s}`"))),
    }
}

/// `A..B` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, Failure> {
    let bad = || Failure::usage(format!("bad range `{s}`; use A..B"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u32 = a.trim().parse().map_err(|_| bad())?;
            let b: u32 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let a: u32 = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

/// An ideal file, then any extra polynomials given on the command line,
/// all read over one ring.
pub struct IdealInput {
    pub ring: RingRef,
    pub ideal: Ideal,
    pub extra: Vec<Polynomial>,
}

pub fn read_ideal(
    path: &Path,
    extra: &[String],
    vars: Option<&str>,
    field: FieldSpec,
    order: MonomialOrder,
) -> Result<IdealInput, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::usage(format!("stdin: {e}")))?
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    };
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => {
            let mut all = text.clone();
            for e in extra {
                all.push('\n');
                all.push_str(e);
            }
            infer_variables(&all)
        }
    };
    if names.is_empty() {
        return Err(Failure::usage("no variables: pass --vars or use at least one variable".into()));
    }
    let ring = PolyRing::new(&names, field, order).map_err(|e| Failure::usage(e.to_string()))?;
    let gens = parse_generators(&text, &ring).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let ideal = Ideal::new(&ring, gens).map_err(Failure::compute)?;
    let extra = extra
        .iter()
        .map(|e| parse_polynomial(e, &ring).map_err(|err| Failure::usage(format!("`{e}`: {err}"))))
        .collect::<Result<_, _>>()?;
    Ok(IdealInput { ring, ideal, extra })
}

/// Identifiers in the text (comments stripped), in natural order:
/// alphabetic prefix first, then numeric suffix, so `x2 < x10`.
pub fn infer_variables(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let bytes = line.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_alphabetic() || c == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &line[start..i];
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else {
                i += 1;
            }
        }
    }
    names.sort_by(|a, b| natural_key(a).cmp(&natural_key(b)));
    names
}

fn natural_key(name: &str) -> (&str, Option<u64>, &str) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, digits) = name.split_at(split);
    (stem, digits.parse().ok(), name)
}
