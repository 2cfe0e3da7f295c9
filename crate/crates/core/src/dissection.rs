//! `m`-dissections of quintuple products, of `(q;q)_inf`, and the special
//! 3- and 5-dissections.
//!
//! A dissection writes a product as
//!
//! ```text
//! sum_{r=0}^{m-1} (-1)^{s(r)} q^{L(r)} (q^{t1}, q^{P-t1}, q^P; q^P)_inf (q^{t2}, q^{2P-t2}; q^{2P})_inf
//! ```
//!
//! with `P = m^2 M`. Every component is described by a [`DissectionComponent`]
//! and can be expanded and summed back with [`assemble`], which is how every
//! dissection here is checked against the direct expansion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::products::{check_quintuple, eta_quotient, lambert_cubic, quintuple_product};
use crate::series::Series;
use crate::spec::{EtaQuotientSpec, PochhammerFactor};

/// Precision at which the sign convention of the general formula is confirmed.
const PROBE_PRECISION: usize = 60;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct DissectionComponent {
    pub residue: usize,
    /// The component carries the sign `(-1)^sign_exp`; always 0, 1 or 2.
    pub sign_exp: u8,
    pub offset: usize,
    pub t1: usize,
    pub t2: usize,
    pub period1: usize,
    pub period2: usize,
}

impl DissectionComponent {
    pub fn is_negative(&self) -> bool {
        self.sign_exp % 2 == 1
    }

    fn spec(&self) -> EtaQuotientSpec {
        let (p1, p2) = (self.period1, self.period2);
        let factors = [
            (self.t1, p1),
            (p1 - self.t1, p1),
            (p1, p1),
            (self.t2, p2),
            (p2 - self.t2, p2),
        ]
        .into_iter()
        .map(|(a, b)| PochhammerFactor::new(a, b, 1).expect("validated component"))
        .collect();
        EtaQuotientSpec::new(factors).expect("five factors")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DissectionTarget {
    /// `(q^j, q^{M-j}, q^M; q^M)_inf (q^{M-2j}, q^{M+2j}; q^{2M})_inf`.
    Quintuple { big_m: usize, j: usize },
    /// `(q;q)_inf` through its explicit closed forms.
    EulerProduct,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DissectionExpression {
    pub target: DissectionTarget,
    pub modulus: usize,
    pub components: Vec<DissectionComponent>,
}

impl DissectionExpression {
    /// Direct expansion of the product this expression dissects.
    pub fn target_series(&self, precision: usize) -> Result<Series> {
        match self.target {
            DissectionTarget::Quintuple { big_m, j } => quintuple_product(big_m, j, precision),
            DissectionTarget::EulerProduct => crate::products::pochhammer(1, 1, precision),
        }
    }

    /// Whether the components sum to the target up to `precision`.
    pub fn reassembles(&self, precision: usize) -> Result<bool> {
        Ok(assemble(self, precision) == self.target_series(precision)?)
    }
}

fn check_modulus(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::invalid("m", format!("need m >= 2, got {m}")));
    }
    if m % 3 == 0 {
        return Err(Error::invalid("m", format!("need m coprime to 3, got {m}")));
    }
    Ok(())
}

fn check_residue(m: usize, r: usize) -> Result<()> {
    check_modulus(m)?;
    if r >= m {
        return Err(Error::invalid("r", format!("need 0 <= r < {m}, got {r}")));
    }
    Ok(())
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<i128> {
    if num % den != 0 {
        return Err(Error::Invariant(format!(
            "{what}: {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

fn to_index(v: i128, what: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Invariant(format!("{what} = {v} is negative")))
}

/// `(-1)^{s(r)}` exponent for the general quintuple dissection.
fn quintuple_sign_exponent(big_m: i128, j: i128, m: i128, r: i128) -> u8 {
    let (lo, hi) = if m % 3 == 1 {
        ((2 * m + 1) * big_m - 6 * j, (5 * m + 1) * big_m - 6 * j)
    } else {
        ((m + 1) * big_m - 6 * j, (4 * m + 1) * big_m - 6 * j)
    };
    let scaled = 6 * big_m * r;
    if scaled <= lo {
        0
    } else if scaled <= hi {
        1
    } else {
        2
    }
}

/// Component `r` of the general formula, with `choice = ±1` standing for the
/// `±` signs in the expressions for `t1` and `t2`.
fn quintuple_component(
    big_m: usize,
    j: usize,
    m: usize,
    r: usize,
    choice: i128,
) -> Result<DissectionComponent> {
    let (bm, jj, mm, rr) = (big_m as i128, j as i128, m as i128, r as i128);
    let p = mm * mm * bm;
    let inner = mm + choice * (6 * rr - 1);
    let t1_raw = exact_div(mm * bm * inner, 6, "t1")? + choice * jj * mm;
    let t2_raw = p + 2 * jj * mm + choice * exact_div(bm * inner * mm, 3, "t2")?;
    let t1 = t1_raw.rem_euclid(p);
    let t2 = t2_raw.rem_euclid(2 * p);
    if t1 == 0 || t2 == 0 {
        return Err(Error::Invariant(format!(
            "degenerate parameters t1={t1}, t2={t2} at r={r}"
        )));
    }
    // 48P * L, with every fraction of the closed form cleared
    let base = 14 * mm * mm * bm * bm
        + 24 * mm * mm * jj * (jj - bm)
        + 12 * mm * mm * (bm - 2 * jj) * (-bm - 2 * jj);
    let scaled = 14 * p * p + 24 * t1 * (t1 - p) + 12 * t2 * (t2 - 2 * p) - base;
    let offset = exact_div(scaled, 48 * p, "L(r)")?;
    Ok(DissectionComponent {
        residue: r,
        sign_exp: quintuple_sign_exponent(bm, jj, mm, rr),
        offset: to_index(offset, "L(r)")?,
        t1: t1 as usize,
        t2: t2 as usize,
        period1: p as usize,
        period2: 2 * p as usize,
    })
}

/// `m`-dissection of the quintuple product for `M >= 3`, `1 <= j < M/2`,
/// `m ≡ ±1 (mod 3)`.
///
/// `t1` and `t2` are reduced into `(0, m^2 M)` and `(0, 2 m^2 M)`. The `±` in
/// their formulas follows `m mod 3`; the opposite choice is tried only if
/// that one fails to reassemble at a probe precision.
pub fn quintuple_components(big_m: usize, j: usize, m: usize) -> Result<DissectionExpression> {
    check_quintuple(big_m, j)?;
    check_modulus(m)?;
    let paired: i128 = if m % 3 == 1 { 1 } else { -1 };
    let target = DissectionTarget::Quintuple { big_m, j };
    let mut last_err = None;
    for choice in [paired, -paired] {
        let components = (0..m)
            .map(|r| quintuple_component(big_m, j, m, r, choice))
            .collect::<Result<Vec<_>>>();
        match components {
            Ok(components) => {
                let expr = DissectionExpression {
                    target,
                    modulus: m,
                    components,
                };
                if expr.reassembles(PROBE_PRECISION)? {
                    return Ok(expr);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::Invariant(format!(
            "no sign convention reassembles M={big_m}, j={j}, m={m}"
        ))
    }))
}

/// `L(r)` for the `m`-dissection of `(q;q)_inf`.
// thresholds such as r <= (4m-1)/12 are kept in that shape, scaled by 12
#[allow(clippy::int_plus_one)]
pub fn qq_offset(m: usize, r: usize) -> Result<usize> {
    check_residue(m, r)?;
    let (m, r) = (m as i128, r as i128);
    let base = 6 * r * r + r;
    let value = if m % 3 == 1 {
        if 12 * r <= 4 * m - 1 {
            base
        } else if 12 * r <= 10 * m - 1 {
            base - 8 * m * r + (8 * m * m - 2 * m) / 3
        } else {
            base - 12 * m * r + 6 * m * m - m
        }
    } else if 12 * r <= 2 * m - 1 {
        base
    } else if 12 * r <= 8 * m - 1 {
        base - 4 * m * r + (2 * m * m - m) / 3
    } else {
        base - 12 * m * r + 6 * m * m - m
    };
    to_index(value, "L(r)")
}

/// `s(r)` for the `m`-dissection of `(q;q)_inf`.
pub fn qq_sign_exponent(m: usize, r: usize) -> Result<u8> {
    check_residue(m, r)?;
    let (lo, hi) = if m % 3 == 1 {
        (4 * m - 1, 10 * m - 1)
    } else {
        (2 * m - 1, 8 * m - 1)
    };
    Ok(if 12 * r <= lo {
        0
    } else if 12 * r <= hi {
        1
    } else {
        2
    })
}

fn qq_component(m: usize, r: usize) -> Result<DissectionComponent> {
    let (mi, ri) = (m as i128, r as i128);
    let (t1, t2) = if m % 3 == 1 {
        let t1 = if 12 * ri < 10 * mi - 1 {
            (2 * mi * mi + mi) / 3 + 4 * mi * ri
        } else {
            (-10 * mi * mi + mi) / 3 + 4 * mi * ri
        };
        let t2 = if 12 * ri < 4 * mi - 1 {
            (16 * mi * mi + 2 * mi) / 3 + 8 * mi * ri
        } else {
            (-8 * mi * mi + 2 * mi) / 3 + 8 * mi * ri
        };
        (t1, t2)
    } else {
        let t1 = if 12 * ri < 2 * mi - 1 {
            (2 * mi * mi - mi) / 3 - 4 * mi * ri
        } else {
            (14 * mi * mi - mi) / 3 - 4 * mi * ri
        };
        let t2 = if 12 * ri < 8 * mi - 1 {
            (8 * mi * mi + 2 * mi) / 3 + 8 * mi * ri
        } else {
            (-16 * mi * mi + 2 * mi) / 3 + 8 * mi * ri
        };
        (t1, t2)
    };
    let p = 4 * m * m;
    let c = DissectionComponent {
        residue: r,
        sign_exp: qq_sign_exponent(m, r)?,
        offset: qq_offset(m, r)?,
        t1: to_index(t1, "t1")?,
        t2: to_index(t2, "t2")?,
        period1: p,
        period2: 2 * p,
    };
    if !(0 < c.t1 && c.t1 < p && 0 < c.t2 && c.t2 < 2 * p) {
        return Err(Error::Invariant(format!(
            "t1={}, t2={} outside (0,{p}) x (0,{})",
            c.t1,
            c.t2,
            2 * p
        )));
    }
    if c.t1 == c.t2 {
        return Err(Error::Invariant(format!("t1 = t2 = {} at r={r}", c.t1)));
    }
    Ok(c)
}

/// `m`-dissection of `(q;q)_inf = (q,q^3,q^4;q^4)_inf (q^2,q^6;q^8)_inf`
/// from the explicit closed forms for `t1`, `t2`, `L` and `s`.
///
/// For `m ≡ -1 (mod 3)` and `r > (2m-1)/12` this uses
/// `t1 = (14m^2 - m)/3 - 4mr`, the variant that is integral.
pub fn qq_components(m: usize) -> Result<DissectionExpression> {
    check_modulus(m)?;
    let components = (0..m).map(|r| qq_component(m, r)).collect::<Result<_>>()?;
    Ok(DissectionExpression {
        target: DissectionTarget::EulerProduct,
        modulus: m,
        components,
    })
}

/// `(-1)^s q^L` times the component's five-factor product, truncated at `T`.
pub fn component_series(c: &DissectionComponent, precision: usize) -> Series {
    if c.offset > precision {
        return Series::zero(precision);
    }
    let product = eta_quotient(&c.spec(), precision).expect("positive factors always expand");
    let shifted = product.shift(c.offset);
    if c.is_negative() {
        -shifted
    } else {
        shifted
    }
}

pub fn assemble(d: &DissectionExpression, precision: usize) -> Series {
    d.components.iter().fold(Series::zero(precision), |acc, c| {
        &acc + &component_series(c, precision)
    })
}

fn product(factors: &[(usize, usize, i64)], precision: usize) -> Series {
    let factors = factors
        .iter()
        .map(|&(a, b, d)| PochhammerFactor::new(a, b, d).expect("static factor"))
        .collect();
    let spec = EtaQuotientSpec::new(factors).expect("static spec");
    eta_quotient(&spec, precision).expect("static spec expands")
}

/// The three summands of the 3-dissection
///
/// ```text
/// (q;q) = (q^3;q^3)/(q^3,q^6,q^9,q^18,q^21,q^24;q^27)
///       - q (q^3;q^3)/(q^3,q^9,q^12,q^15,q^18,q^24;q^27)
///       - q^2 (q^3;q^3)/(q^6,q^9,q^12,q^15,q^18,q^21;q^27)
/// ```
///
/// signs included, so that their plain sum is `(q;q)_inf`. Summand `k` lives
/// on exponents `≡ k (mod 3)`. Each quotient reduces to a two-factor product
/// such as `(q^12,q^15,q^27;q^27)`; no `(q^27;q^27)` is divided out.
pub fn three_dissection_qq(precision: usize) -> [Series; 3] {
    let den = |exps: [usize; 6]| {
        let mut f: Vec<(usize, usize, i64)> = exps.iter().map(|&e| (e, 27, -1)).collect();
        f.push((3, 3, 1));
        product(&f, precision)
    };
    [
        den([3, 6, 9, 18, 21, 24]),
        -den([3, 9, 12, 15, 18, 24]).shift(1),
        -den([6, 9, 12, 15, 18, 21]).shift(2),
    ]
}

/// The two summands of
/// `(q;q)^3 = (q^3;q^3) (1 + 6 sum q^{3n}(1-q^{3n})/(1-q^{9n})) - 3q (q^9;q^9)^3`,
/// signs included.
pub fn three_dissection_qq3(precision: usize) -> [Series; 2] {
    let first = &product(&[(3, 3, 1)], precision) * &lambert_cubic(precision);
    let second = product(&[(9, 9, 3)], precision).shift(1).scale(-3);
    [first, second]
}

/// Ramanujan's 5-dissection
/// `(q;q) = (q^25;q^25) [ (q^10,q^15;q^25)/(q^5,q^20;q^25) - q - q^2 (q^5,q^20;q^25)/(q^10,q^15;q^25) ]`,
/// returned as its three signed summands.
pub fn ramanujan5(precision: usize) -> [Series; 3] {
    [
        product(
            &[
                (25, 25, 1),
                (10, 25, 1),
                (15, 25, 1),
                (5, 25, -1),
                (20, 25, -1),
            ],
            precision,
        ),
        -product(&[(25, 25, 1)], precision).shift(1),
        -product(
            &[
                (25, 25, 1),
                (5, 25, 1),
                (20, 25, 1),
                (10, 25, -1),
                (15, 25, -1),
            ],
            precision,
        )
        .shift(2),
    ]
}
