//! Periodic sign patterns of series coefficients: predicting them from the
//! dissection formulas, detecting them empirically, and checking one against
//! the other.

mod catalog;
mod corpus;
mod theorem1;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{signum, Series};

pub use catalog::{
    square_onset, square_pattern, theorem2_catalog, triangular_onset, triangular_pattern,
    CatalogCase,
};
pub use corpus::{corpus, parse_records, vanishing_predicate, CorpusEntry};
pub use theorem1::{predict_theorem1, Theorem1Certificate};

/// At most this many violations are kept in a [`PatternReport`]; the count is
/// always exact.
pub const MAX_REPORTED_VIOLATIONS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClass {
    Pos,
    Neg,
    Zero,
    /// No constraint.
    Mixed,
}

impl SignClass {
    pub fn symbol(self) -> char {
        match self {
            SignClass::Pos => '+',
            SignClass::Neg => '-',
            SignClass::Zero => '0',
            SignClass::Mixed => '?',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(SignClass::Pos),
            '-' => Some(SignClass::Neg),
            '0' => Some(SignClass::Zero),
            '?' => Some(SignClass::Mixed),
            _ => None,
        }
    }

    /// The class asserted for coefficients of sign `(-1)^e`.
    pub fn from_parity(e: u8) -> Self {
        if e % 2 == 0 {
            SignClass::Pos
        } else {
            SignClass::Neg
        }
    }

    pub fn admits(self, sign: i8) -> bool {
        match self {
            SignClass::Pos => sign > 0,
            SignClass::Neg => sign < 0,
            SignClass::Zero => sign == 0,
            SignClass::Mixed => true,
        }
    }
}

/// Signs of `a_n` by `n mod modulus`, asserted for every `n > onset`.
///
/// An onset of `-1` covers all `n >= 0`; smaller values are allowed and
/// mean the same thing for a series starting at `q^0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SignPattern {
    pub modulus: usize,
    pub classes: Vec<SignClass>,
    pub onset: i64,
}

impl SignPattern {
    pub fn new(classes: Vec<SignClass>, onset: i64) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::invalid(
                "classes",
                "a pattern needs a positive modulus",
            ));
        }
        Ok(SignPattern {
            modulus: classes.len(),
            classes,
            onset,
        })
    }

    /// Parses a class string over `+-0?` such as `"+0-0-"`.
    pub fn parse(classes: &str, onset: i64) -> Result<Self> {
        let classes = classes
            .chars()
            .map(|c| {
                SignClass::from_symbol(c).ok_or_else(|| {
                    Error::invalid(
                        "classes",
                        format!("unknown sign class `{c}` in `{classes}`"),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SignPattern::new(classes, onset)
    }

    pub fn class_string(&self) -> String {
        self.classes.iter().map(|c| c.symbol()).collect()
    }

    pub fn class_at(&self, n: usize) -> SignClass {
        self.classes[n % self.modulus]
    }

    /// Smallest exponent the pattern speaks about.
    pub fn first_checked(&self) -> usize {
        usize::try_from(self.onset + 1).unwrap_or(0)
    }

    pub fn all_mixed(modulus: usize) -> Result<Self> {
        SignPattern::new(vec![SignClass::Mixed; modulus], -1)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} for n > {}",
            self.modulus,
            self.class_string(),
            self.onset
        )
    }
}

impl FromStr for SignClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(SignClass::from_symbol), chars.next()) {
            (Some(c), None) => Ok(c),
            _ => Err(Error::invalid(
                "class",
                format!("expected one of `+-0?`, got `{s}`"),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub n: usize,
    pub expected: SignClass,
    pub actual: i8,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PatternReport {
    pub pattern: SignPattern,
    pub horizon: usize,
    /// The first violations in increasing `n`, at most
    /// [`MAX_REPORTED_VIOLATIONS`] of them.
    pub violations: Vec<Violation>,
    pub violation_count: usize,
    pub verdict: Verdict,
}

impl PatternReport {
    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks every coefficient with `onset < n <= horizon` against `pattern`.
pub fn verify_pattern(
    series: &Series,
    pattern: &SignPattern,
    horizon: usize,
) -> Result<PatternReport> {
    if horizon > series.precision() {
        return Err(Error::BeyondPrecision {
            index: horizon,
            precision: series.precision(),
        });
    }
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for n in pattern.first_checked()..=horizon {
        let expected = pattern.class_at(n);
        let actual = signum(&series.coeffs()[n]);
        if !expected.admits(actual) {
            violation_count += 1;
            if violations.len() < MAX_REPORTED_VIOLATIONS {
                violations.push(Violation {
                    n,
                    expected,
                    actual,
                });
            }
        }
    }
    let verdict = if violation_count == 0 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(PatternReport {
        pattern: pattern.clone(),
        horizon,
        violations,
        violation_count,
        verdict,
    })
}

/// Result of [`detect_pattern`]. Only an estimate: nothing beyond `horizon`
/// has been looked at.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DetectedPattern {
    pub pattern: SignPattern,
    pub horizon: usize,
    /// Exponents past the onset where a `Pos` or `Neg` residue has a zero
    /// coefficient, keyed by residue.
    pub sporadic_zeros: Vec<(usize, Vec<usize>)>,
}

impl DetectedPattern {
    /// First exponent from which the detected classes hold.
    pub fn holds_from(&self) -> usize {
        self.pattern.first_checked()
    }
}

/// Guesses the eventual sign classes mod `modulus` from coefficients up to
/// `horizon`.
///
/// A residue is classified from its tail window, the exponents above
/// `horizon / 2`: `Mixed` if both signs occur there, `Zero` if only zeros do,
/// otherwise the one sign that occurs. Zeros inside a signed residue don't
/// make it `Mixed`; they are listed in `sporadic_zeros`. The onset is the
/// largest exponent contradicting its residue's class.
pub fn detect_pattern(series: &Series, modulus: usize, horizon: usize) -> Result<DetectedPattern> {
    if modulus == 0 {
        return Err(Error::invalid("m", "modulus must be positive"));
    }
    if horizon > series.precision() {
        return Err(Error::BeyondPrecision {
            index: horizon,
            precision: series.precision(),
        });
    }
    let signs: Vec<i8> = series.coeffs()[..=horizon].iter().map(signum).collect();
    let window_start = if horizon / 2 + modulus <= horizon {
        horizon / 2 + 1
    } else {
        0
    };
    let mut classes = Vec::with_capacity(modulus);
    let mut onset: i64 = -1;
    for r in 0..modulus {
        let (mut pos, mut neg) = (false, false);
        for n in (r..=horizon)
            .step_by(modulus)
            .filter(|&n| n >= window_start)
        {
            pos |= signs[n] > 0;
            neg |= signs[n] < 0;
        }
        let class = match (pos, neg) {
            (true, true) => SignClass::Mixed,
            (true, false) => SignClass::Pos,
            (false, true) => SignClass::Neg,
            (false, false) => SignClass::Zero,
        };
        let breaks = |s: i8| match class {
            SignClass::Pos => s < 0,
            SignClass::Neg => s > 0,
            SignClass::Zero => s != 0,
            SignClass::Mixed => false,
        };
        let last_break = (r..=horizon)
            .step_by(modulus)
            .filter(|&n| breaks(signs[n]))
            .last()
            .map_or(-1, |n| n as i64);
        onset = onset.max(last_break);
        classes.push(class);
    }
    let mut sporadic_zeros = Vec::new();
    for (r, &class) in classes.iter().enumerate() {
        if !matches!(class, SignClass::Pos | SignClass::Neg) {
            continue;
        }
        let zeros: Vec<usize> = (r..=horizon)
            .step_by(modulus)
            .filter(|&n| n as i64 > onset && signs[n] == 0)
            .collect();
        if !zeros.is_empty() {
            sporadic_zeros.push((r, zeros));
        }
    }
    Ok(DetectedPattern {
        pattern: SignPattern::new(classes, onset)?,
        horizon,
        sporadic_zeros,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CensusRow {
    pub residue: usize,
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

/// Counts signs of the `K` coefficients at `r, r + m, ..., r + (K-1) m` for
/// every residue `r`.
pub fn sign_census(
    series: &Series,
    modulus: usize,
    terms_per_class: usize,
) -> Result<Vec<CensusRow>> {
    if modulus == 0 {
        return Err(Error::invalid("m", "modulus must be positive"));
    }
    if terms_per_class == 0 {
        return Ok((0..modulus)
            .map(|residue| CensusRow {
                residue,
                negative: 0,
                zero: 0,
                positive: 0,
            })
            .collect());
    }
    let needed = modulus * terms_per_class - 1;
    if needed > series.precision() {
        return Err(Error::BeyondPrecision {
            index: needed,
            precision: series.precision(),
        });
    }
    Ok((0..modulus)
        .map(|residue| {
            let mut row = CensusRow {
                residue,
                negative: 0,
                zero: 0,
                positive: 0,
            };
            for c in series.coeffs()[residue..]
                .iter()
                .step_by(modulus)
                .take(terms_per_class)
            {
                match signum(c) {
                    1 => row.positive += 1,
                    -1 => row.negative += 1,
                    _ => row.zero += 1,
                }
            }
            row
        })
        .collect())
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
