//! Product specifications `prod (q^a; q^b)_inf^delta` and their text form.
//!
//! The grammar is a whitespace-separated list of tokens:
//!
//! * `a.b^d` is `(q^a; q^b)_inf^d`,
//! * `j^d` is shorthand for `(q^j; q^j)_inf^d`,
//! * a missing `^d` means exponent 1.
//!
//! So `"2^5 7^-1"` is `(q^2;q^2)^5 / (q^7;q^7)` and
//! `"2.5^1 3.5^1 1.5^-1 4.5^-1"` is the Rogers-Ramanujan quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(q^a; q^b)_inf^delta`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PochhammerFactor {
    pub a: usize,
    pub b: usize,
    pub delta: i64,
}

impl PochhammerFactor {
    pub fn new(a: usize, b: usize, delta: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::invalid("a", "exponent offset must be at least 1"));
        }
        if b < 1 {
            return Err(Error::invalid("b", "step must be at least 1"));
        }
        Ok(PochhammerFactor { a, b, delta })
    }

    /// `(q^j; q^j)_inf^delta`.
    pub fn eta(j: usize, delta: i64) -> Result<Self> {
        PochhammerFactor::new(j, j, delta)
    }

    pub fn is_eta(&self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for PochhammerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_eta() {
            write!(f, "{}^{}", self.a, self.delta)
        } else {
            write!(f, "{}.{}^{}", self.a, self.b, self.delta)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct EtaQuotientSpec {
    factors: Vec<PochhammerFactor>,
}

impl EtaQuotientSpec {
    pub fn new(factors: Vec<PochhammerFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid(
                "factors",
                "a product needs at least one factor",
            ));
        }
        Ok(EtaQuotientSpec { factors })
    }

    /// Builds `prod f_j^{delta_j}` from `(j, delta_j)` pairs.
    pub fn from_etas(etas: &[(usize, i64)]) -> Result<Self> {
        let factors = etas
            .iter()
            .map(|&(j, d)| PochhammerFactor::eta(j, d))
            .collect::<Result<_>>()?;
        EtaQuotientSpec::new(factors)
    }

    pub fn factors(&self) -> &[PochhammerFactor] {
        &self.factors
    }
}

impl FromStr for EtaQuotientSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: String| Error::Spec {
            input: input.to_owned(),
            reason,
        };
        let mut factors = Vec::new();
        for token in input.split_whitespace() {
            let (base, delta) = match token.split_once('^') {
                Some((base, d)) => {
                    let d = d
                        .parse::<i64>()
                        .map_err(|_| bad(format!("bad exponent in `{token}`")))?;
                    (base, d)
                }
                None => (token, 1),
            };
            let parse_pos = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| bad(format!("bad integer `{s}` in `{token}`")))
            };
            let (a, b) = match base.split_once('.') {
                Some((a, b)) => (parse_pos(a)?, parse_pos(b)?),
                None => {
                    let j = parse_pos(base)?;
                    (j, j)
                }
            };
            let factor = PochhammerFactor::new(a, b, delta).map_err(|e| bad(e.to_string()))?;
            factors.push(factor);
        }
        EtaQuotientSpec::new(factors).map_err(|e| bad(e.to_string()))
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl TryFrom<String> for EtaQuotientSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<EtaQuotientSpec> for String {
    fn from(spec: EtaQuotientSpec) -> String {
        spec.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_shorthand_and_general_tokens() {
        let spec: EtaQuotientSpec = "2^5 7^-1".parse().unwrap();
        assert_eq!(
            spec.factors(),
            &[
                PochhammerFactor {
                    a: 2,
                    b: 2,
                    delta: 5
                },
                PochhammerFactor {
                    a: 7,
                    b: 7,
                    delta: -1
                }
            ]
        );
        let spec: EtaQuotientSpec = "2.5^1 3.5 1.5^-1".parse().unwrap();
        assert_eq!(
            spec.factors()[1],
            PochhammerFactor {
                a: 3,
                b: 5,
                delta: 1
            }
        );
        assert_eq!(spec.to_string(), "2.5^1 3.5^1 1.5^-1");
    }

    #[test]
    fn display_round_trips() {
        for s in ["1^4 2^2 4^-2", "3.8^1 5.8^1 1.8^-1 7.8^-1", "1^9 3^-12"] {
            let spec: EtaQuotientSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed_specs() {
        for s in ["", "0^1", "2.0^1", "x^1", "2^y", "2^", "1.2.3^1", "-1^2"] {
            assert!(
                matches!(s.parse::<EtaQuotientSpec>(), Err(Error::Spec { .. })),
                "{s:?} should not parse"
            );
        }
    }

    #[test]
    fn factor_validation() {
        assert!(PochhammerFactor::new(0, 1, 1).is_err());
        assert!(PochhammerFactor::new(1, 0, 1).is_err());
        assert!(PochhammerFactor::eta(3, -2).unwrap().is_eta());
    }
}
