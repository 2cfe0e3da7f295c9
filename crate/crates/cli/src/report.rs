//! Rendering of command results as text, CSV or JSON.

use std::fmt::Write;

use qsign_core::dissection::DissectionComponent;
use qsign_core::signpattern::{CensusRow, DetectedPattern, Verdict, Violation};
use qsign_core::{PatternReport, SignPattern, Theorem1Certificate};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchRow {
    pub name: String,
    pub spec: String,
    pub pattern: SignPattern,
    pub horizon: usize,
    pub verdict: Verdict,
    pub violation_count: usize,
    pub first_violation: Option<Violation>,
}

#[derive(Clone, Debug)]
pub enum Body {
    Expansion(Vec<String>),
    Dissection {
        target: String,
        components: Vec<DissectionComponent>,
        reassembles: bool,
    },
    Prediction(Theorem1Certificate),
    Verification(PatternReport),
    Detection(DetectedPattern),
    Census(Vec<CensusRow>),
    Batch(Vec<BatchRow>),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub spec: Option<String>,
    pub params: Map<String, Value>,
    pub horizon: Option<usize>,
    pub body: Body,
    /// False iff some verdict in the body failed.
    pub passed: bool,
}

fn pattern_line(p: &SignPattern) -> String {
    format!("{}/{} for n > {}", p.modulus, p.class_string(), p.onset)
}

fn violation_text(v: &Violation) -> String {
    format!(
        "n={} expected {} got {}",
        v.n,
        v.expected.symbol(),
        sign_symbol(v.actual)
    )
}

fn sign_symbol(s: i8) -> char {
    match s {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Csv => self.csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }

    fn json(&self) -> Value {
        let result = match &self.body {
            Body::Expansion(coeffs) => json!({ "coefficients": coeffs }),
            Body::Dissection {
                target,
                components,
                reassembles,
            } => json!({
                "target": target,
                "components": components,
                "reassembles": reassembles,
            }),
            Body::Prediction(cert) => json!({ "certificate": cert, "pattern": cert.pattern() }),
            Body::Verification(r) => json!(r),
            Body::Detection(d) => json!(d),
            Body::Census(rows) => json!(rows),
            Body::Batch(rows) => json!(rows),
        };
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "spec": self.spec,
            "params": self.params,
            "horizon": self.horizon,
            "passed": self.passed,
            "result": result,
        })
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        match &self.body {
            Body::Expansion(coeffs) => {
                for (n, c) in coeffs.iter().enumerate() {
                    writeln!(w, "{n} {c}").unwrap();
                }
            }
            Body::Dissection {
                target,
                components,
                reassembles,
            } => {
                writeln!(w, "{target}").unwrap();
                writeln!(
                    w,
                    "{:>4} {:>2} {:>8} {:>8} {:>8} {:>8} {:>8}",
                    "r", "s", "L", "t1", "t2", "period1", "period2"
                )
                .unwrap();
                for c in components {
                    writeln!(
                        w,
                        "{:>4} {:>2} {:>8} {:>8} {:>8} {:>8} {:>8}",
                        c.residue, c.sign_exp, c.offset, c.t1, c.t2, c.period1, c.period2
                    )
                    .unwrap();
                }
                let verdict = if *reassembles { "PASS" } else { "FAIL" };
                writeln!(
                    w,
                    "reassembly to T={}: {verdict}",
                    self.horizon.unwrap_or(0)
                )
                .unwrap();
            }
            Body::Prediction(cert) => {
                let pattern = cert.pattern();
                writeln!(w, "spec {}", cert.spec()).unwrap();
                writeln!(w, "pattern {}/{}", pattern.modulus, pattern.class_string()).unwrap();
                writeln!(
                    w,
                    "N = {} (holds for n >= {})",
                    cert.onset,
                    pattern.first_checked()
                )
                .unwrap();
                writeln!(w, "{:>4} {:>6} {:>2} {:>7}", "r", "L(r)", "s", "residue").unwrap();
                for r in 0..cert.p {
                    writeln!(
                        w,
                        "{:>4} {:>6} {:>2} {:>7}",
                        r, cert.l_values[r], cert.s_values[r], cert.residue_map[r]
                    )
                    .unwrap();
                }
            }
            Body::Verification(r) => {
                writeln!(
                    w,
                    "{} against {} up to T={}: {} ({} violations)",
                    self.spec.as_deref().unwrap_or(""),
                    pattern_line(&r.pattern),
                    r.horizon,
                    r.verdict,
                    r.violation_count
                )
                .unwrap();
                for v in &r.violations {
                    writeln!(w, "  {}", violation_text(v)).unwrap();
                }
            }
            Body::Detection(d) => {
                writeln!(
                    w,
                    "detected {} (holds from n = {}; empirical, checked up to T={})",
                    pattern_line(&d.pattern),
                    d.holds_from(),
                    d.horizon
                )
                .unwrap();
                for (r, zeros) in &d.sporadic_zeros {
                    let list: Vec<String> = zeros.iter().map(|n| n.to_string()).collect();
                    writeln!(w, "  residue {r}: zero at n = {}", list.join(", ")).unwrap();
                }
            }
            Body::Census(rows) => {
                writeln!(
                    w,
                    "{:>7} {:>9} {:>9} {:>9}",
                    "residue", "negative", "zero", "positive"
                )
                .unwrap();
                for r in rows {
                    writeln!(
                        w,
                        "{:>7} {:>9} {:>9} {:>9}",
                        r.residue, r.negative, r.zero, r.positive
                    )
                    .unwrap();
                }
            }
            Body::Batch(rows) => {
                for r in rows {
                    write!(
                        w,
                        "{} {} [{}] {} T={}",
                        r.verdict,
                        r.name,
                        r.spec,
                        pattern_line(&r.pattern),
                        r.horizon
                    )
                    .unwrap();
                    if let Some(v) = &r.first_violation {
                        write!(
                            w,
                            ": {} violations, first {}",
                            r.violation_count,
                            violation_text(v)
                        )
                        .unwrap();
                    }
                    writeln!(w).unwrap();
                }
                let passed = rows.iter().filter(|r| r.verdict.passed()).count();
                writeln!(w, "{passed}/{} passed", rows.len()).unwrap();
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        match &self.body {
            Body::Expansion(coeffs) => {
                writeln!(w, "n,coefficient").unwrap();
                for (n, c) in coeffs.iter().enumerate() {
                    writeln!(w, "{n},{c}").unwrap();
                }
            }
            Body::Dissection { components, .. } => {
                writeln!(w, "residue,sign_exp,offset,t1,t2,period1,period2").unwrap();
                for c in components {
                    writeln!(
                        w,
                        "{},{},{},{},{},{},{}",
                        c.residue, c.sign_exp, c.offset, c.t1, c.t2, c.period1, c.period2
                    )
                    .unwrap();
                }
            }
            Body::Prediction(cert) => {
                let pattern = cert.pattern();
                writeln!(w, "r,offset,sign_exp,residue,class").unwrap();
                for r in 0..cert.p {
                    let t = cert.residue_map[r];
                    writeln!(
                        w,
                        "{r},{},{},{t},{}",
                        cert.l_values[r],
                        cert.s_values[r],
                        pattern.classes[t].symbol()
                    )
                    .unwrap();
                }
            }
            Body::Verification(r) => {
                writeln!(w, "n,expected,actual").unwrap();
                for v in &r.violations {
                    writeln!(w, "{},{},{}", v.n, v.expected.symbol(), v.actual).unwrap();
                }
            }
            Body::Detection(d) => {
                writeln!(w, "residue,class").unwrap();
                for (r, c) in d.pattern.classes.iter().enumerate() {
                    writeln!(w, "{r},{}", c.symbol()).unwrap();
                }
            }
            Body::Census(rows) => {
                writeln!(w, "residue,negative,zero,positive").unwrap();
                for r in rows {
                    writeln!(w, "{},{},{},{}", r.residue, r.negative, r.zero, r.positive).unwrap();
                }
            }
            Body::Batch(rows) => {
                writeln!(
                    w,
                    "name,spec,modulus,classes,onset,horizon,verdict,violations"
                )
                .unwrap();
                for r in rows {
                    writeln!(
                        w,
                        "{},{},{},{},{},{},{},{}",
                        r.name,
                        r.spec,
                        r.pattern.modulus,
                        r.pattern.class_string(),
                        r.pattern.onset,
                        r.horizon,
                        r.verdict,
                        r.violation_count
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}
