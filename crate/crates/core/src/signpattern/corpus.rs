//! Regression entries for sign and vanishing results on known products.
//!
//! Each entry is one text record
//!
//! ```text
//! name | spec | modulus | classes | onset | horizon
//! ```
//!
//! with `classes` over `+-0?`. Blank lines and lines starting with `#` are
//! skipped.

use std::fmt;

use serde::Serialize;

use super::SignPattern;
use crate::error::{Error, Result};
use crate::spec::EtaQuotientSpec;

const RECORDS: &str = "\
# eta quotients with proven periodic signs
period8        | 1^4 2^2 4^-2                              | 8 | +-0+--0+  | 0  | 5000
period9        | 1^9 3^-5                                  | 9 | +-+--++-+ | -1 | 5000
borwein_g5_2   | 2^1 5^-1                                  | 5 | +0-0-     | -1 | 5000
# Rogers-Ramanujan continued fraction and its mod 8 analogue
rogers_ramanujan | 2.5^1 3.5^1 1.5^-1 4.5^-1               | 5 | ++---     | 9  | 5000
mod8_fraction  | 3.8^1 5.8^1 1.8^-1 7.8^-1                 | 4 | ???0      | -1 | 5000
# (-q,-q^4;q^5)(q,q^9;q^10)^3 and (-q^2,-q^3;q^5)(q^3,q^7;q^10)^3
vanishing_a    | 2.10^1 8.10^1 1.5^-1 4.5^-1 1.10^3 9.10^3 | 5 | ??0?0     | -1 | 5000
vanishing_b    | 4.10^1 6.10^1 2.5^-1 3.5^-1 3.10^3 7.10^3 | 5 | ?0??0     | -1 | 5000
";

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: EtaQuotientSpec,
    pub pattern: SignPattern,
    pub horizon: usize,
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {} | {}",
            self.name,
            self.spec,
            self.pattern.modulus,
            self.pattern.class_string(),
            self.pattern.onset,
            self.horizon
        )
    }
}

fn parse_record(line: &str, lineno: usize) -> Result<CorpusEntry> {
    let bad = |reason: String| Error::Record {
        line: lineno,
        reason,
    };
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    let [name, spec, modulus, classes, onset, horizon] = fields[..] else {
        return Err(bad(format!("expected 6 fields, got {}", fields.len())));
    };
    if name.is_empty() {
        return Err(bad("empty name".into()));
    }
    let spec: EtaQuotientSpec = spec.parse().map_err(|e: Error| bad(e.to_string()))?;
    let modulus: usize = modulus
        .parse()
        .map_err(|_| bad(format!("bad modulus `{modulus}`")))?;
    let onset: i64 = onset
        .parse()
        .map_err(|_| bad(format!("bad onset `{onset}`")))?;
    let horizon: usize = horizon
        .parse()
        .map_err(|_| bad(format!("bad horizon `{horizon}`")))?;
    let pattern = SignPattern::parse(classes, onset).map_err(|e| bad(e.to_string()))?;
    if pattern.modulus != modulus {
        return Err(bad(format!(
            "modulus {modulus} but {} classes",
            pattern.modulus
        )));
    }
    Ok(CorpusEntry {
        name: name.to_owned(),
        spec,
        pattern,
        horizon,
    })
}

/// Parses corpus records; errors carry 1-based line numbers.
pub fn parse_records(text: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .map(|(k, l)| parse_record(l, k + 1))
        .collect()
}

pub fn corpus() -> Vec<CorpusEntry> {
    parse_records(RECORDS).expect("built-in corpus parses")
}

/// Whether `n ≡ 2 (mod 3)` and some prime `p ≡ 3 (mod 4)` divides `n` to an
/// odd power.
pub fn vanishing_predicate(n: u64) -> Result<bool> {
    if n < 1 {
        return Err(Error::invalid("n", "need n >= 1"));
    }
    if n % 3 != 2 {
        return Ok(false);
    }
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        if d % 4 == 3 && e % 2 == 1 {
            return Ok(true);
        }
        d += 1;
    }
    Ok(rest > 1 && rest % 4 == 3)
}
