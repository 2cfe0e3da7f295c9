//! Sign patterns of `(q^i;q^i)_inf / (q^p;q^p)_inf` for primes `p > 3`.
//!
//! Dilating the `p`-dissection of `(q;q)_inf` by `i` puts component `r` on
//! exponents `≡ i L(r) (mod p)` with sign `(-1)^{s(r)}`; every other factor
//! is a series in `q^p` with positive coefficients once divided by
//! `(q^p;q^p)_inf`. So the residue `i(6r^2+r) mod p` carries the sign of
//! `s(r)`, residues hit by no `r` vanish, and the pattern holds once each
//! residue's smallest leading exponent has been passed.

use serde::Serialize;

use super::{is_prime, SignClass, SignPattern};
use crate::dissection::{qq_offset, qq_sign_exponent};
use crate::error::{Error, Result};
use crate::spec::EtaQuotientSpec;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Theorem1Certificate {
    pub p: usize,
    pub i: usize,
    /// `L(r)` for `0 <= r < p`.
    pub l_values: Vec<usize>,
    pub s_values: Vec<u8>,
    /// `r -> i(6r^2+r) mod p`.
    pub residue_map: Vec<usize>,
    pub onset: i64,
}

impl Theorem1Certificate {
    pub fn pattern(&self) -> SignPattern {
        let mut classes = vec![SignClass::Zero; self.p];
        for (r, &t) in self.residue_map.iter().enumerate() {
            classes[t] = SignClass::from_parity(self.s_values[r]);
        }
        SignPattern::new(classes, self.onset).expect("p > 3")
    }

    /// `(q^i;q^i)_inf^1 (q^p;q^p)_inf^-1`.
    pub fn spec(&self) -> EtaQuotientSpec {
        EtaQuotientSpec::from_etas(&[(self.i, 1), (self.p, -1)]).expect("positive indices")
    }
}

/// Builds the certificate for `(p, i)`, checking along the way that
/// `L(r) ≡ 6r^2 + r (mod p)` and that residues shared by several `r` get the
/// same sign.
pub fn predict_theorem1(p: usize, i: usize) -> Result<Theorem1Certificate> {
    if p <= 3 || !is_prime(p as u64) {
        return Err(Error::invalid("p", format!("need a prime p > 3, got {p}")));
    }
    if i < 2 {
        return Err(Error::invalid("i", format!("need i >= 2, got {i}")));
    }
    if i % p == 0 {
        return Err(Error::invalid("i", format!("{p} divides {i}")));
    }
    let mut l_values = Vec::with_capacity(p);
    let mut s_values = Vec::with_capacity(p);
    let mut residue_map = Vec::with_capacity(p);
    // smallest i L(r) seen per residue, with the parity that goes with it
    let mut leading: Vec<Option<(usize, u8)>> = vec![None; p];
    for r in 0..p {
        let l = qq_offset(p, r)?;
        let s = qq_sign_exponent(p, r)?;
        let quad = (6 * r * r + r) % p;
        if l % p != quad {
            return Err(Error::Invariant(format!(
                "L({r}) = {l} is not 6r^2+r = {quad} mod {p}"
            )));
        }
        let t = (i % p) * quad % p;
        match &mut leading[t] {
            Some((min, parity)) => {
                if *parity != s % 2 {
                    return Err(Error::Invariant(format!(
                        "residue {t} mod {p} gets both signs (r = {r})"
                    )));
                }
                *min = (*min).min(i * l);
            }
            slot => *slot = Some((i * l, s % 2)),
        }
        l_values.push(l);
        s_values.push(s);
        residue_map.push(t);
    }
    let last_leading = leading
        .iter()
        .flatten()
        .map(|&(min, _)| min)
        .max()
        .expect("r = 0 hits 0");
    Ok(Theorem1Certificate {
        p,
        i,
        l_values,
        s_values,
        residue_map,
        onset: last_leading as i64 - p as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_cells() {
        let cases = [
            (5, 2, "+0-0-", 0),
            (5, 3, "+-0-0", 2),
            (5, 4, "+00--", 4),
            (7, 2, "+0-+-00", 4),
            (7, 3, "++0-00-", 9),
            (7, 4, "+-00-0+", 14),
            (11, 2, "+0-+-000-0+", 20),
            (13, 2, "++-0-+0000+-0", 32),
            (13, 4, "+0+0-00+--+00", 76),
        ];
        for (p, i, classes, from) in cases {
            let cert = predict_theorem1(p, i).unwrap();
            let pat = cert.pattern();
            assert_eq!(pat.class_string(), classes, "({p},{i})");
            assert_eq!(pat.first_checked(), from, "({p},{i})");
        }
    }

    #[test]
    fn certificate_fields() {
        let cert = predict_theorem1(5, 2).unwrap();
        assert_eq!(cert.l_values, vec![0, 2, 1, 12, 5]);
        assert_eq!(cert.s_values, vec![0, 1, 1, 1, 2]);
        assert_eq!(cert.residue_map, vec![0, 4, 2, 4, 0]);
        assert_eq!(cert.onset, -1);
        assert_eq!(cert.spec().to_string(), "2^1 5^-1");
    }

    #[test]
    fn rejects_bad_parameters() {
        for (p, i) in [(3, 2), (9, 2), (1, 2), (2, 3), (5, 10), (7, 1), (5, 0)] {
            assert!(
                matches!(predict_theorem1(p, i), Err(Error::InvalidParameter { .. })),
                "({p},{i})"
            );
        }
    }
}
