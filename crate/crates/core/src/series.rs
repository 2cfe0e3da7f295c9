//! Truncated formal power series in `q` with exact big-integer coefficients.
//!
//! A [`Series`] of precision `T` stores the coefficients of `q^0 ..= q^T`;
//! everything above `q^T` is unknown. Binary operations return a series whose
//! precision is the smaller of the two operands', so a result never claims
//! more than its inputs determine.
//!
//! [`SparseSeries`] is a term list with small coefficients. It exists so that
//! pentagonal-number and theta-type factors, which have `O(sqrt T)` nonzero
//! terms, can multiply or divide a dense accumulator in `O(T sqrt T)` instead
//! of `O(T^2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Wraps a coefficient vector; its length fixes the precision.
    ///
    /// Panics if `coeffs` is empty, since every series knows at least its
    /// constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(precision: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Series::monomial(0, 1, precision)
    }

    /// `c * q^k`, or the zero series when `k` exceeds the precision.
    pub fn monomial(k: usize, c: impl Into<BigInt>, precision: usize) -> Self {
        let mut s = Series::zero(precision);
        if k <= precision {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Inclusive truncation order `T`.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::BeyondPrecision {
            index: n,
            precision: self.precision(),
        })
    }

    /// Signum of the coefficient of `q^n`: `-1`, `0` or `1`.
    pub fn sign_of(&self, n: usize) -> Result<i8> {
        let c = self.coefficient(n)?;
        Ok(signum(c))
    }

    /// Drops coefficients above `precision`. Never extends.
    pub fn truncate(&self, precision: usize) -> Series {
        let keep = precision.min(self.precision()) + 1;
        Series::new(self.coeffs[..keep].to_vec())
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Series {
        let k = k.into();
        Series::new(self.coeffs.iter().map(|c| c * &k).collect())
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Series> {
        let x0 = &self.coeffs[0];
        let negate = if x0.is_one() {
            true
        } else if (-x0).is_one() {
            false
        } else {
            return Err(Error::NonUnitConstantTerm(x0.clone()));
        };
        let t = self.precision();
        let tail: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut y = Vec::with_capacity(t + 1);
        // 1/x0 == x0 for a unit
        y.push(x0.clone());
        for n in 1..=t {
            let mut acc = BigInt::zero();
            for &(k, xk) in &tail {
                if k > n {
                    break;
                }
                add_product(&mut acc, xk, &y[n - k]);
            }
            y.push(if negate { -acc } else { acc });
        }
        Ok(Series::new(y))
    }

    /// `self^e` by repeated squaring; negative `e` goes through [`Series::invert`].
    pub fn pow_int(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Series::one(self.precision());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplies by `q^k`, keeping the precision.
    pub fn shift(&self, k: usize) -> Series {
        let t = self.precision();
        let mut out = Series::zero(t);
        if k <= t {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=t - k]);
        }
        out
    }

    /// Substitutes `q -> q^m`. The result has precision `m*T`, or `cap` if
    /// that is smaller.
    ///
    /// Panics if `m == 0`.
    pub fn dilate(&self, m: usize, cap: Option<usize>) -> Series {
        assert!(m > 0, "dilation factor must be positive");
        let mut t = m * self.precision();
        if let Some(cap) = cap {
            t = t.min(cap);
        }
        let mut out = Series::zero(t);
        for (n, c) in self.coeffs.iter().enumerate() {
            let e = n * m;
            if e > t {
                break;
            }
            out.coeffs[e] = c.clone();
        }
        out
    }

    /// Extracts the arithmetic progression `r mod m`: returns
    /// `sum_n a_{mn+r} q^n` with precision `floor((T - r) / m)`.
    pub fn slice(&self, r: usize, m: usize) -> Result<Series> {
        if m == 0 {
            return Err(Error::invalid("m", "modulus must be positive"));
        }
        if r >= m {
            return Err(Error::invalid(
                "r",
                format!("residue {r} not below modulus {m}"),
            ));
        }
        if r > self.precision() {
            return Err(Error::BeyondPrecision {
                index: r,
                precision: self.precision(),
            });
        }
        Ok(Series::new(
            self.coeffs[r..].iter().step_by(m).cloned().collect(),
        ))
    }

    /// In-place multiplication by `(1 - q^e)`.
    pub(crate) fn mul_one_minus(&mut self, e: usize) {
        if e == 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        for n in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - e];
        }
    }

    /// In-place division by `(1 - q^e)`, `e >= 1`.
    pub(crate) fn div_one_minus(&mut self, e: usize) {
        debug_assert!(e > 0);
        for n in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - e];
        }
    }
}

pub(crate) fn signum(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// `acc += a * b`, skipping the multiplication for `a = ±1`.
fn add_product(acc: &mut BigInt, a: &BigInt, b: &BigInt) {
    if b.is_zero() {
        return;
    }
    if a.is_one() {
        *acc += b;
    } else if (-a).is_one() {
        *acc -= b;
    } else {
        *acc += a * b;
    }
}

fn add_small_product(acc: &mut BigInt, a: i64, b: &BigInt) {
    match a {
        1 => *acc += b,
        -1 => *acc -= b,
        _ => *acc += b * a,
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &'a Series) -> Series {
        let t = self.precision().min(rhs.precision());
        Series::new((0..=t).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect())
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &'a Series) -> Series {
        let t = self.precision().min(rhs.precision());
        Series::new((0..=t).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect())
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a Series) -> Series {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, xi) in self.coeffs[..len].iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (d, yj) in out[i..].iter_mut().zip(&rhs.coeffs[..len - i]) {
                add_product(d, xi, yj);
            }
        }
        Series::new(out)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;

    fn neg(mut self) -> Series {
        self.coeffs.iter_mut().for_each(|c| *c = -std::mem::take(c));
        self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

/// A series given by a short list of `(exponent, coefficient)` terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseSeries {
    precision: usize,
    terms: Vec<(usize, i64)>,
}

impl SparseSeries {
    /// Collects terms, merging repeated exponents and dropping zeros and
    /// anything above `precision`.
    pub fn from_terms(precision: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut merged = BTreeMap::new();
        for (e, c) in terms {
            if e <= precision {
                *merged.entry(e).or_insert(0i64) += c;
            }
        }
        SparseSeries {
            precision,
            terms: merged.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    /// `(q^step; q^step)_inf` via Euler's pentagonal number theorem:
    /// `sum_k (-1)^k q^(step * k(3k-1)/2)` over all integers `k`.
    pub fn pentagonal(step: usize, precision: usize) -> Self {
        assert!(step > 0, "pentagonal step must be positive");
        let mut terms = vec![(0, 1)];
        for k in 1usize.. {
            let lo = step * (k * (3 * k - 1) / 2);
            if lo > precision {
                break;
            }
            let sign = if k % 2 == 1 { -1 } else { 1 };
            terms.push((lo, sign));
            let hi = step * (k * (3 * k + 1) / 2);
            if hi <= precision {
                terms.push((hi, sign));
            }
        }
        SparseSeries::from_terms(precision, terms)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn terms(&self) -> &[(usize, i64)] {
        &self.terms
    }

    fn constant(&self) -> i64 {
        match self.terms.first() {
            Some(&(0, c)) => c,
            _ => 0,
        }
    }

    pub fn to_dense(&self) -> Series {
        let mut s = Series::zero(self.precision);
        for &(e, c) in &self.terms {
            s.coeffs[e] = BigInt::from(c);
        }
        s
    }

    /// `target <- target * self`, truncated to the common precision.
    pub fn mul_into(&self, target: &mut Series) {
        if target.precision() > self.precision {
            target.coeffs.truncate(self.precision + 1);
        }
        let c0 = self.constant();
        let tail = if c0 == 0 {
            &self.terms[..]
        } else {
            &self.terms[1..]
        };
        // descending, so every read of a lower index still sees the old value
        for n in (0..target.coeffs.len()).rev() {
            let (lo, hi) = target.coeffs.split_at_mut(n);
            let mut acc = match c0 {
                0 => BigInt::zero(),
                1 => std::mem::take(&mut hi[0]),
                _ => &hi[0] * c0,
            };
            for &(e, c) in tail {
                if e > n {
                    break;
                }
                add_small_product(&mut acc, c, &lo[n - e]);
            }
            hi[0] = acc;
        }
    }

    /// `target <- target / self`; requires a constant term of `±1`.
    pub fn div_into(&self, target: &mut Series) -> Result<()> {
        let c0 = self.constant();
        if c0.abs() != 1 {
            return Err(Error::NonUnitConstantTerm(BigInt::from(c0)));
        }
        if target.precision() > self.precision {
            target.coeffs.truncate(self.precision + 1);
        }
        if c0 == -1 {
            target.coeffs[0] = -std::mem::take(&mut target.coeffs[0]);
        }
        for n in 1..target.coeffs.len() {
            let (lo, hi) = target.coeffs.split_at_mut(n);
            let mut acc = std::mem::take(&mut hi[0]);
            for &(e, c) in &self.terms[1..] {
                if e > n {
                    break;
                }
                add_small_product(&mut acc, -c, &lo[n - e]);
            }
            hi[0] = if c0 == 1 { acc } else { -acc };
        }
        Ok(())
    }
}

impl From<&SparseSeries> for Series {
    fn from(s: &SparseSeries) -> Series {
        s.to_dense()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> Series {
        Series::from_i64s(c)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&s(&[1, -1]) + &s(&[0, 1]), s(&[1, 0]));
        assert_eq!(&s(&[1, -1, -1]) + &s(&[0, 1, 1]), s(&[1, 0, 0]));
        let x = s(&[3, 0, -7, 2]);
        assert_eq!(&x + &Series::zero(3), x);
    }

    #[test]
    fn add_takes_min_precision() {
        let sum = &s(&[1, 2, 3, 4]) + &s(&[1, 1]);
        assert_eq!(sum.precision(), 1);
        assert_eq!(sum, s(&[2, 3]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1, -1, 0, 0]) * &s(&[1, 1, 1, 1]), s(&[1, 0, 0, 0]));
        let x = s(&[2, -3, 5]);
        assert_eq!(&x * &Series::one(2), x);
        let p = s(&[1, -1, -1, 0, 0]);
        assert_eq!(&p * &p, s(&[1, -2, -1, 2, 1]));
        // (1 - q - q^2 + q^5)^2 at T=4
        let p = s(&[1, -1, -1, 0, 0, 1]).truncate(4);
        assert_eq!(&p * &p, s(&[1, -2, -1, 2, 1]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1, 0, 0, 0, 0]).invert().unwrap(), s(&[1; 6]));
        assert_eq!(s(&[1]).invert().unwrap(), s(&[1]));
        let euler = s(&[1, -1, -1, 0, 0, 1, 0, 1]).truncate(5);
        assert_eq!(euler.invert().unwrap(), s(&[1, 1, 2, 3, 5, 7]));
        assert_eq!(s(&[-1, 1]).invert().unwrap(), s(&[-1, -1]));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let err = s(&[2, 1]).invert().unwrap_err();
        assert_eq!(err, Error::NonUnitConstantTerm(BigInt::from(2)));
        assert!(s(&[0, 1]).invert().is_err());
    }

    #[test]
    fn pow_examples() {
        let x = s(&[4, 1, 9]);
        assert_eq!(x.pow_int(0).unwrap(), Series::one(2));
        assert_eq!(s(&[1, -1, 0]).pow_int(2).unwrap(), s(&[1, -2, 1]));
        assert_eq!(s(&[1, -1, 0, 0]).pow_int(-1).unwrap(), s(&[1, 1, 1, 1]));
        assert!(matches!(
            s(&[3, 1]).pow_int(-2),
            Err(Error::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Series::one(3).shift(3), s(&[0, 0, 0, 1]));
        let x = s(&[1, 2, 3]);
        assert_eq!(x.shift(0), x);
        assert_eq!(s(&[1, -1, 0, 0]).shift(2), s(&[0, 0, 1, -1]));
        assert_eq!(x.shift(7), Series::zero(2));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(s(&[1, 1]).dilate(3, None), s(&[1, 0, 0, 1]));
        let x = s(&[5, -1]);
        assert_eq!(x.dilate(1, None), x);
        assert_eq!(s(&[1, -1, 1]).dilate(2, None), s(&[1, 0, -1, 0, 1]));
        assert_eq!(s(&[1, -1, 1]).dilate(2, Some(3)), s(&[1, 0, -1, 0]));
    }

    #[test]
    fn slice_examples() {
        assert_eq!(s(&[1, 1, 1, 1]).slice(0, 2).unwrap(), s(&[1, 1]));
        assert_eq!(s(&[0, 1]).slice(1, 2).unwrap(), s(&[1]));
        assert_eq!(s(&[1, -2, 3, -4, 5]).slice(1, 3).unwrap(), s(&[-2, 5]));
        assert!(s(&[1]).slice(2, 2).is_err());
        assert!(matches!(
            s(&[1]).slice(1, 2),
            Err(Error::BeyondPrecision { .. })
        ));
    }

    #[test]
    fn coefficient_access() {
        let x = s(&[1, -1]);
        assert_eq!(x.coefficient(1).unwrap(), &BigInt::from(-1));
        assert_eq!(x.sign_of(0).unwrap(), 1);
        assert_eq!(
            x.coefficient(2),
            Err(Error::BeyondPrecision {
                index: 2,
                precision: 1
            })
        );
        let p = s(&[1, -1, -1, 0, 0, 1, 0, 1]).truncate(5).invert().unwrap();
        assert_eq!(p.coefficient(5).unwrap(), &BigInt::from(7));
    }

    #[test]
    fn pentagonal_matches_factor_product() {
        let mut brute = Series::one(60);
        for k in 1..=60 {
            brute.mul_one_minus(k);
        }
        assert_eq!(SparseSeries::pentagonal(1, 60).to_dense(), brute);
        assert_eq!(
            SparseSeries::pentagonal(1, 12).to_dense(),
            s(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn sparse_mul_and_div_agree_with_dense() {
        let x = s(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3]);
        let sp = SparseSeries::from_terms(9, [(0, -1), (2, 3), (5, -2), (7, 1)]);
        let dense = sp.to_dense();
        let mut y = x.clone();
        sp.mul_into(&mut y);
        assert_eq!(y, &x * &dense);
        sp.div_into(&mut y).unwrap();
        assert_eq!(y, x);
        assert!(SparseSeries::from_terms(3, [(0, 2)])
            .div_into(&mut y)
            .is_err());
    }

    #[test]
    fn elementary_factors_round_trip() {
        let x = s(&[1, 2, 3, 4, 5, 6]);
        let mut y = x.clone();
        y.mul_one_minus(2);
        assert_eq!(y, s(&[1, 2, 2, 2, 2, 2]));
        y.div_one_minus(2);
        assert_eq!(y, x);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(&[1, -2, 0, 1]).to_string(), "1 - 2q + q^3 + O(q^4)");
        assert_eq!(Series::zero(1).to_string(), "0 + O(q^2)");
    }
}
