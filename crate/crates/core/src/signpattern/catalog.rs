//! Nine families of eta quotients with proven sign patterns.

use serde::Serialize;

use super::{is_prime, SignClass, SignPattern};
use crate::error::{Error, Result};
use crate::spec::EtaQuotientSpec;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CatalogCase {
    /// Short label such as `"1/p=5"` or `"9/i=12"`.
    pub id: String,
    pub part: u8,
    pub spec: EtaQuotientSpec,
    pub pattern: SignPattern,
    pub params: Vec<(&'static str, i64)>,
}

fn check_odd_prime(p: usize, allow_one: bool) -> Result<()> {
    if (allow_one && p == 1) || (p >= 3 && is_prime(p as u64)) {
        Ok(())
    } else {
        Err(Error::invalid("p", format!("need an odd prime, got {p}")))
    }
}

/// `max_s min{ r(r+1)/2 ≡ s (mod p) : 0 <= r < p } - p`.
pub fn triangular_onset(p: usize) -> Result<i64> {
    check_odd_prime(p, false)?;
    let mut min = vec![usize::MAX; p];
    for r in 0..p {
        let t = r * (r + 1) / 2;
        min[t % p] = min[t % p].min(t);
    }
    let max = min
        .into_iter()
        .filter(|&v| v != usize::MAX)
        .max()
        .expect("r = 0");
    Ok(max as i64 - p as i64)
}

/// `+` on triangular residues mod `p`, `0` elsewhere, for
/// `(q^2;q^2)^2 / ((q;q) (q^p;q^p))`.
pub fn triangular_pattern(p: usize) -> Result<SignPattern> {
    let onset = triangular_onset(p)?;
    let mut classes = vec![SignClass::Zero; p];
    for r in 0..p {
        classes[r * (r + 1) / 2 % p] = SignClass::Pos;
    }
    SignPattern::new(classes, onset)
}

/// `max_s min{ r^2 ≡ s (mod 4p) : 0 <= r < 4p } - 4p`.
pub fn square_onset(p: usize) -> Result<i64> {
    check_odd_prime(p, true)?;
    let m = 4 * p;
    let mut min = vec![usize::MAX; m];
    for r in 0..m {
        min[r * r % m] = min[r * r % m].min(r * r);
    }
    let max = min
        .into_iter()
        .filter(|&v| v != usize::MAX)
        .max()
        .expect("r = 0");
    Ok(max as i64 - m as i64)
}

/// Mod `4p`: `-` on `(2t+1)^2`, `+` on `(2t)^2`, `0` elsewhere, for
/// `(q;q)^2 / ((q^2;q^2) (q^{4p};q^{4p}))`.
pub fn square_pattern(p: usize) -> Result<SignPattern> {
    let onset = square_onset(p)?;
    let m = 4 * p;
    let mut classes = vec![SignClass::Zero; m];
    for t in 0..p {
        classes[4 * t * t % m] = SignClass::Pos;
        classes[(4 * t * t + 4 * t + 1) % m] = SignClass::Neg;
    }
    SignPattern::new(classes, onset)
}

fn case(
    id: String,
    part: u8,
    spec: &str,
    pattern: SignPattern,
    params: Vec<(&'static str, i64)>,
) -> CatalogCase {
    CatalogCase {
        id,
        part,
        spec: spec.parse().expect("catalog specs are well formed"),
        pattern,
        params,
    }
}

fn fixed(id: &str, part: u8, spec: &str, classes: &str) -> CatalogCase {
    let pattern = SignPattern::parse(classes, -1).expect("catalog patterns are well formed");
    case(id.to_owned(), part, spec, pattern, Vec::new())
}

/// Every case, with the two prime-indexed families instantiated at small
/// primes and the last family at `i = 11, ..., 15`.
pub fn theorem2_catalog() -> Vec<CatalogCase> {
    let mut out = Vec::new();
    for p in [3usize, 5, 7] {
        out.push(case(
            format!("1/p={p}"),
            1,
            &format!("2^2 1^-1 {p}^-1"),
            triangular_pattern(p).expect("odd prime"),
            vec![("p", p as i64)],
        ));
    }
    for p in [1usize, 3, 5, 7] {
        out.push(case(
            format!("2/p={p}"),
            2,
            &format!("1^2 2^-1 {}^-1", 4 * p),
            square_pattern(p).expect("odd prime or 1"),
            vec![("p", p as i64)],
        ));
    }
    out.push(fixed("3", 3, "1^3 3^-2", "+-0"));
    out.push(fixed("4", 4, "1^2 2^-1 3^-2", "+-0"));
    out.push(fixed("5", 5, "1^4 2^-2 4^-1", "+-+0"));
    out.push(fixed("6", 6, "2^10 1^-4 4^-5", "+++0"));
    out.push(fixed("7", 7, "1^2 5^-3", "+--++"));
    out.push(fixed("8", 8, "1^9 3^-9", "+-+--+0-+"));
    for i in 11..=15 {
        let classes = match i {
            11 => "+-+--+--+",
            12 => "+-+0-+0-+",
            _ => "+-+",
        };
        let mut c = fixed(&format!("9/i={i}"), 9, &format!("1^9 3^-{i}"), classes);
        c.params.push(("i", i));
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_family() {
        let expected = [(3, "++0", -2), (5, "++0+0", -2), (7, "++0+00+", -1)];
        for (p, classes, onset) in expected {
            let pat = triangular_pattern(p).unwrap();
            assert_eq!(
                (pat.class_string().as_str(), pat.onset),
                (classes, onset),
                "p={p}"
            );
        }
        assert!(triangular_pattern(1).is_err());
        assert!(triangular_pattern(9).is_err());
    }

    #[test]
    fn square_family() {
        let pat = square_pattern(1).unwrap();
        assert_eq!((pat.class_string().as_str(), pat.onset), ("+-00", -3));
        let pat = square_pattern(3).unwrap();
        assert_eq!(
            (pat.class_string().as_str(), pat.onset),
            ("+-00+0000-00", -3)
        );
        assert_eq!(square_onset(5).unwrap(), 5);
        assert_eq!(square_onset(7).unwrap(), 21);
        assert!(square_pattern(4).is_err());
    }

    #[test]
    fn catalog_shape() {
        let cat = theorem2_catalog();
        assert_eq!(cat.len(), 3 + 4 + 6 + 5);
        let parts: std::collections::BTreeSet<u8> = cat.iter().map(|c| c.part).collect();
        assert_eq!(parts, (1..=9).collect());
        let eight = cat.iter().find(|c| c.part == 8).unwrap();
        assert_eq!(eight.pattern.to_string(), "9/+-+--+0-+ for n > -1");
    }
}
