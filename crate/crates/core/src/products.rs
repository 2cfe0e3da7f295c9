//! Infinite products and theta series, expanded to a fixed precision.
//!
//! Factors of the form `(q^a; q^a)_inf` are applied through the sparse
//! pentagonal expansion, which keeps the cost of a whole eta quotient at
//! `O(T sqrt T)` per factor. Other Pochhammer factors are applied one
//! `(1 - q^e)` at a time.

use crate::error::{Error, Result};
use crate::series::{Series, SparseSeries};
use crate::spec::{EtaQuotientSpec, PochhammerFactor};

/// `(q^a; q^b)_inf = prod_{k>=0} (1 - q^{a+kb})` truncated at `T`.
pub fn pochhammer(a: usize, b: usize, precision: usize) -> Result<Series> {
    let factor = PochhammerFactor::new(a, b, 1)?;
    let mut acc = Series::one(precision);
    apply_factor(&mut acc, &factor)?;
    Ok(acc)
}

/// Multiplies `acc` in place by one factor of a product spec.
fn apply_factor(acc: &mut Series, factor: &PochhammerFactor) -> Result<()> {
    let t = acc.precision();
    let times = factor.delta.unsigned_abs();
    if times == 0 || factor.a > t {
        return Ok(());
    }
    if factor.is_eta() {
        let pent = SparseSeries::pentagonal(factor.a, t);
        for _ in 0..times {
            if factor.delta > 0 {
                pent.mul_into(acc);
            } else {
                pent.div_into(acc)?;
            }
        }
    } else {
        for e in (factor.a..=t).step_by(factor.b) {
            for _ in 0..times {
                if factor.delta > 0 {
                    acc.mul_one_minus(e);
                } else {
                    acc.div_one_minus(e);
                }
            }
        }
    }
    Ok(())
}

/// Exact expansion of `prod (q^a; q^b)_inf^delta` to precision `T`.
pub fn eta_quotient(spec: &EtaQuotientSpec, precision: usize) -> Result<Series> {
    let mut acc = Series::one(precision);
    // numerators first: their coefficients stay small, so the big-integer
    // growth from the denominators happens in as few passes as possible
    let (num, den): (Vec<_>, Vec<_>) = spec.factors().iter().partition(|f| f.delta >= 0);
    for factor in num.into_iter().chain(den) {
        apply_factor(&mut acc, factor)?;
    }
    Ok(acc)
}

pub(crate) fn check_quintuple(big_m: usize, j: usize) -> Result<()> {
    if big_m < 3 {
        return Err(Error::invalid("M", format!("need M >= 3, got {big_m}")));
    }
    if j < 1 || 2 * j >= big_m {
        return Err(Error::invalid(
            "j",
            format!("need 1 <= j < M/2, got j={j}, M={big_m}"),
        ));
    }
    Ok(())
}

/// `(q^j, q^{M-j}, q^M; q^M)_inf (q^{M-2j}, q^{M+2j}; q^{2M})_inf`.
pub fn quintuple_product(big_m: usize, j: usize, precision: usize) -> Result<Series> {
    check_quintuple(big_m, j)?;
    let m2 = 2 * big_m;
    let factors = [
        (j, big_m),
        (big_m - j, big_m),
        (big_m, big_m),
        (big_m - 2 * j, m2),
        (big_m + 2 * j, m2),
    ]
    .into_iter()
    .map(|(a, b)| PochhammerFactor::new(a, b, 1))
    .collect::<Result<Vec<_>>>()?;
    eta_quotient(&EtaQuotientSpec::new(factors)?, precision)
}

pub(crate) fn alt_squares_sparse(precision: usize) -> SparseSeries {
    let terms = (1..)
        .map(|n: usize| (n * n, if n % 2 == 1 { -2 } else { 2 }))
        .take_while(|&(e, _)| e <= precision);
    SparseSeries::from_terms(precision, std::iter::once((0, 1)).chain(terms))
}

/// `sum_{n in Z} (-1)^n q^{n^2}`, equal to `(q;q)^2 / (q^2;q^2)`.
pub fn theta_alt_squares(precision: usize) -> Series {
    alt_squares_sparse(precision).to_dense()
}

/// `sum_{n >= 0} q^{n(n+1)/2}`, equal to `(q^2;q^2)^2 / (q;q)`.
pub fn theta_triangular(precision: usize) -> Series {
    let terms = (0..)
        .map(|n: usize| (n * (n + 1) / 2, 1))
        .take_while(|&(e, _)| e <= precision);
    SparseSeries::from_terms(precision, terms).to_dense()
}

/// `sum_{n in Z} q^{n^2}`, equal to `(q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)`.
pub fn theta_squares(precision: usize) -> Series {
    let terms = (1..)
        .map(|n: usize| (n * n, 2))
        .take_while(|&(e, _)| e <= precision);
    SparseSeries::from_terms(precision, std::iter::once((0, 1)).chain(terms)).to_dense()
}

/// `(1/2) sum_{n in Z} w(n) q^{(n^2-1)/8}` with `w(n) = 0,1,0,-2,0,1` for
/// `n = 0..5 (mod 6)`, equal to `(q;q)^2 (q^6;q^6) / ((q^2;q^2)(q^3;q^3))`.
///
/// `n` and `-n` carry the same weight, so the half is absorbed by summing
/// over positive odd `n` only.
pub fn theta_weighted(precision: usize) -> Series {
    let terms = (1..)
        .step_by(2)
        .map(|n: usize| {
            let weight = match n % 6 {
                1 | 5 => 1,
                _ => -2,
            };
            ((n * n - 1) / 8, weight)
        })
        .take_while(|&(e, _)| e <= precision);
    SparseSeries::from_terms(precision, terms).to_dense()
}

/// Box half-width for `m^2 + mn + n^2 <= T`: the form is at least
/// `(3/4) max(|m|,|n|)^2`, so `3B^2 >= 4T` suffices.
pub(crate) fn lattice_bound(precision: usize) -> i64 {
    let t = precision as i64;
    let mut b = 0i64;
    while 3 * b * b < 4 * t {
        b += 1;
    }
    b
}

pub(crate) fn borwein_a_in_box(precision: usize, bound: i64) -> Series {
    let t = precision as i64;
    let mut coeffs = vec![0i64; precision + 1];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = m * m + m * n + n * n;
            if e <= t {
                coeffs[e as usize] += 1;
            }
        }
    }
    Series::from_i64s(&coeffs)
}

/// Borwein's `a(q) = sum_{m,n} q^{m^2 + mn + n^2}` by lattice enumeration.
pub fn borwein_a(precision: usize) -> Series {
    borwein_a_in_box(precision, lattice_bound(precision))
}

/// Borwein's `b(q) = (q;q)^3 / (q^3;q^3)`.
pub fn borwein_b(precision: usize) -> Series {
    let spec = EtaQuotientSpec::from_etas(&[(1, 3), (3, -1)]).expect("static spec");
    eta_quotient(&spec, precision).expect("eta factors always invert")
}

/// `c(q^3) = 3q (q^9;q^9)^3 / (q^3;q^3)`.
///
/// `c(q)` itself carries a `q^{1/3}` and is never formed.
pub fn borwein_c3(precision: usize) -> Series {
    let spec = EtaQuotientSpec::from_etas(&[(9, 3), (3, -1)]).expect("static spec");
    eta_quotient(&spec, precision)
        .expect("eta factors always invert")
        .shift(1)
        .scale(3)
}

/// `1 + 6 sum_{n>=1} q^{3n} (1 - q^{3n}) / (1 - q^{9n})`, i.e. `a(q^3)`.
pub fn lambert_cubic(precision: usize) -> Series {
    let mut terms = vec![(0, 1)];
    for n in (1..).take_while(|n| 3 * n <= precision) {
        let period = 9 * n;
        terms.extend((3 * n..=precision).step_by(period).map(|e| (e, 6)));
        terms.extend((6 * n..=precision).step_by(period).map(|e| (e, -6)));
    }
    SparseSeries::from_terms(precision, terms).to_dense()
}

/// `sum_{m1+m2+m3=0} q^{3(m1^2+m2^2+m3^2)/2 + m1 + 2m2 + 3m3}`, which equals
/// `(q^3;q^3)^3 / (q;q)`.
///
/// With `m3 = -m1 - m2` the exponent is `3(m1^2 + m1 m2 + m2^2) - 2m1 - m2`,
/// which is at least `(9/4)B^2 - 3B` on the boundary of the box of half-width
/// `B`; `B = isqrt(T) + 3` therefore covers every exponent up to `T`.
pub fn theta_threevar(precision: usize) -> Series {
    let t = precision as i64;
    let bound = precision.isqrt() as i64 + 3;
    let mut coeffs = vec![0i64; precision + 1];
    for m1 in -bound..=bound {
        for m2 in -bound..=bound {
            let e = 3 * (m1 * m1 + m1 * m2 + m2 * m2) - 2 * m1 - m2;
            debug_assert!(e >= 0);
            if e <= t {
                coeffs[e as usize] += 1;
            }
        }
    }
    Series::from_i64s(&coeffs)
}
