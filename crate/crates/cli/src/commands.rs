use qsign_core::dissection::{qq_components, quintuple_components};
use qsign_core::products::eta_quotient;
use qsign_core::signpattern::{
    self, detect_pattern, predict_theorem1, sign_census, theorem2_catalog, verify_pattern,
};
use qsign_core::{EtaQuotientSpec, Result, SignPattern};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::report::{BatchRow, Body, Report};

pub enum PatternSource {
    Predicted { p: usize, i: usize },
    Explicit { classes: String, onset: i64 },
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn parse_spec(spec: &str) -> Result<EtaQuotientSpec> {
    spec.parse()
}

pub fn expand(spec: &str, t: usize) -> Result<Report> {
    let parsed = parse_spec(spec)?;
    let series = eta_quotient(&parsed, t)?;
    Ok(Report {
        command: "expand",
        spec: Some(parsed.to_string()),
        params: params(&[("T", json!(t))]),
        horizon: Some(t),
        body: Body::Expansion(series.coeffs().iter().map(|c| c.to_string()).collect()),
        passed: true,
    })
}

pub fn dissect(m: usize, quintuple: Option<(usize, usize)>, t: usize) -> Result<Report> {
    let (d, target, mut p) = match quintuple {
        Some((big_m, j)) => (
            quintuple_components(big_m, j, m)?,
            format!("quintuple product M={big_m} j={j}, {m}-dissection"),
            params(&[("M", json!(big_m)), ("j", json!(j))]),
        ),
        None => (
            qq_components(m)?,
            format!("(q;q), {m}-dissection"),
            Map::new(),
        ),
    };
    p.insert("m".into(), json!(m));
    p.insert("T".into(), json!(t));
    let reassembles = d.reassembles(t)?;
    Ok(Report {
        command: "dissect",
        spec: None,
        params: p,
        horizon: Some(t),
        body: Body::Dissection {
            target,
            components: d.components,
            reassembles,
        },
        passed: reassembles,
    })
}

pub fn predict(p: usize, i: usize) -> Result<Report> {
    let cert = predict_theorem1(p, i)?;
    Ok(Report {
        command: "predict",
        spec: Some(cert.spec().to_string()),
        params: params(&[("p", json!(p)), ("i", json!(i))]),
        horizon: None,
        body: Body::Prediction(cert),
        passed: true,
    })
}

pub fn verify(spec: &str, source: PatternSource, t: usize) -> Result<Report> {
    let parsed = parse_spec(spec)?;
    let (pattern, mut p) = match source {
        PatternSource::Predicted { p, i } => (
            predict_theorem1(p, i)?.pattern(),
            params(&[("p", json!(p)), ("i", json!(i))]),
        ),
        PatternSource::Explicit { classes, onset } => (
            SignPattern::parse(&classes, onset)?,
            params(&[("pattern", json!(classes)), ("onset", json!(onset))]),
        ),
    };
    p.insert("T".into(), json!(t));
    let series = eta_quotient(&parsed, t)?;
    let report = verify_pattern(&series, &pattern, t)?;
    Ok(Report {
        command: "verify",
        spec: Some(parsed.to_string()),
        params: p,
        horizon: Some(t),
        passed: report.verdict.passed(),
        body: Body::Verification(report),
    })
}

pub fn detect(spec: &str, m: usize, t: usize) -> Result<Report> {
    let parsed = parse_spec(spec)?;
    let series = eta_quotient(&parsed, t)?;
    let detected = detect_pattern(&series, m, t)?;
    Ok(Report {
        command: "detect",
        spec: Some(parsed.to_string()),
        params: params(&[("m", json!(m)), ("T", json!(t))]),
        horizon: Some(t),
        body: Body::Detection(detected),
        passed: true,
    })
}

pub fn census(spec: &str, m: usize, k: usize) -> Result<Report> {
    let parsed = parse_spec(spec)?;
    let t = (m * k).max(1) - 1;
    let series = eta_quotient(&parsed, t)?;
    let rows = sign_census(&series, m, k)?;
    Ok(Report {
        command: "census",
        spec: Some(parsed.to_string()),
        params: params(&[("m", json!(m)), ("K", json!(k))]),
        horizon: Some(t),
        body: Body::Census(rows),
        passed: true,
    })
}

fn check(
    name: String,
    spec: &EtaQuotientSpec,
    pattern: &SignPattern,
    t: usize,
) -> Result<BatchRow> {
    let series = eta_quotient(spec, t)?;
    let report = verify_pattern(&series, pattern, t)?;
    Ok(BatchRow {
        name,
        spec: spec.to_string(),
        pattern: pattern.clone(),
        horizon: t,
        verdict: report.verdict,
        violation_count: report.violation_count,
        first_violation: report.first_violation().copied(),
    })
}

fn batch(command: &'static str, rows: Vec<BatchRow>, p: Map<String, Value>) -> Report {
    Report {
        command,
        spec: None,
        params: p,
        horizon: rows.iter().map(|r| r.horizon).max(),
        passed: rows.iter().all(|r| r.verdict.passed()),
        body: Body::Batch(rows),
    }
}

pub fn corpus(t: Option<usize>) -> Result<Report> {
    let rows = signpattern::corpus()
        .into_par_iter()
        .map(|e| check(e.name, &e.spec, &e.pattern, t.unwrap_or(e.horizon)))
        .collect::<Result<Vec<_>>>()?;
    let p = match t {
        Some(t) => params(&[("T", json!(t))]),
        None => Map::new(),
    };
    Ok(batch("corpus", rows, p))
}

pub fn catalog(t: usize) -> Result<Report> {
    let rows = theorem2_catalog()
        .into_par_iter()
        .map(|c| check(c.id, &c.spec, &c.pattern, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(batch("catalog", rows, params(&[("T", json!(t))])))
}
