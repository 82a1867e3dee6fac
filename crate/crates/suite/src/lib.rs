//! Identity catalog. Each entry computes one quantity along independent
//! routes and demands exact agreement for every `n` in its range.

mod check;
mod identities;

use std::ops::RangeInclusive;
use std::time::Instant;

use boxsort_core::Poly;
use rayon::prelude::*;
use serde::Serialize;

pub use check::{Check, ComputeError, Outcome};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub struct Identity {
    pub token: &'static str,
    pub summary: &'static str,
    pub n_range: RangeInclusive<usize>,
    pub run: fn(usize) -> Outcome,
}

macro_rules! entry {
    ($token:expr, $summary:expr, $range:expr, $f:path) => {
        Identity { token: $token, summary: $summary, n_range: $range, run: $f }
    };
}

pub fn catalog() -> Vec<Identity> {
    use identities::*;
    vec![
        entry!("T5.1", "(cD)^n c by jets, OWP weights and SYT box indices", 1..=7, box_sorting),
        entry!("T6.1", "Ramanujan polynomials", 1..=5, ramanujan),
        entry!("T6.2", "Andre polynomials over SYT with two columns", 1..=7, andre),
        entry!("T6.3a", "left peak polynomials", 1..=7, left_peak),
        entry!("T6.3b", "interior peak polynomials", 1..=7, interior_peak),
        entry!("T6.4", "Eulerian polynomials, uni- and bivariate", 1..=7, eulerian),
        entry!("T6.5", "1/2-Eulerian polynomials", 1..=6, half_eulerian),
        entry!("T6.6", "type B Eulerian polynomials", 1..=6, type_b),
        entry!("T6.7a", "second-order Eulerian C_n(x,y) with Eulerian jets", 1..=6, second_order_biv),
        entry!("T6.7b", "second-order Eulerian C_n(x) with factorial jets", 1..=6, second_order_factorial),
        entry!("T6.7c", "trivariate second-order Eulerian", 1..=5, second_order_tri),
        entry!("T6.7d", "second-order Eulerian from delta indices", 1..=6, second_order_delta),
        entry!("T6.7e", "k-order Eulerian for m = 1, 2, 3", 1..=5, k_order),
        entry!("T6.8a", "type A Narayana from binary-word jets", 1..=6, narayana_a),
        entry!("T6.8b", "type B Narayana from type B Eulerian jets", 1..=6, narayana_b),
        entry!("T3.1", "alternating grammar and type A Narayana", 1..=7, alt_narayana),
        entry!("T3.2", "alternating grammar and multiset descents", 1..=5, alt_multiset),
        entry!("T3.3", "alternating grammar and Legendre-Stirling descents", 1..=5, alt_legendre),
        entry!("T4.1", "binary k-forests from (xD)^n", 1..=8, binary_forests),
        entry!("T4.2", "full binary k-forests from (xyD)^n", 1..=8, full_binary_forests),
        entry!("P1.x", "Stirling and Eulerian projections of (cD)^n f", 1..=7, projections),
        entry!("E3.x", "grammar examples: Frobenius, 1/k, type B, flag, Hermite", 1..=8, examples),
        entry!("C6.x", "e-positivity, RSK and gamma coefficients", 1..=6, positivity),
    ]
}

pub fn lookup(token: &str) -> Result<Identity, SuiteError> {
    catalog()
        .into_iter()
        .find(|i| i.token.eq_ignore_ascii_case(token))
        .ok_or_else(|| SuiteError::UnknownIdentity(token.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Two routes that disagree.
#[derive(Debug, Clone)]
pub struct Mismatch {
    pub check: String,
    pub left: (String, Poly),
    pub right: (String, Poly),
    /// Least monomial of `left - right`, with its coefficient.
    pub first_difference: String,
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub identity: &'static str,
    pub n: usize,
    pub status: Status,
    pub millis: u128,
    pub checks: Vec<Check>,
    pub mismatch: Option<Mismatch>,
    pub failure: Option<String>,
}

impl CaseReport {
    /// The common value of a check that passed.
    pub fn value(&self, label: &str) -> Option<&Poly> {
        self.checks.iter().find_map(|c| match c {
            Check::Equal { label: l, routes, .. } if l == label => routes.first().map(|r| &r.1),
            _ => None,
        })
    }
}

fn first_mismatch(checks: &[Check]) -> Result<Option<Mismatch>, String> {
    for c in checks {
        match c {
            Check::Equal { label, routes, .. } => {
                let Some(first) = routes.first() else { continue };
                for r in &routes[1..] {
                    if r.1 != first.1 {
                        let diff = &first.1 - &r.1;
                        let (m, k) = diff.terms().next().expect("nonzero difference");
                        return Ok(Some(Mismatch {
                            check: label.clone(),
                            left: first.clone(),
                            right: r.clone(),
                            first_difference: Poly::term(m.clone(), k.clone()).to_string(),
                        }));
                    }
                }
            }
            Check::Holds { label, ok, detail } => {
                if !ok {
                    return Err(format!("{label}: {detail}"));
                }
            }
        }
    }
    Ok(None)
}

fn run_case(id: &Identity, n: usize) -> CaseReport {
    let start = Instant::now();
    let out = (id.run)(n);
    let millis = start.elapsed().as_millis();
    let mut report = CaseReport {
        identity: id.token,
        n,
        status: Status::Pass,
        millis,
        checks: Vec::new(),
        mismatch: None,
        failure: None,
    };
    match out {
        Err(e) => {
            report.status = Status::Error;
            report.failure = Some(e.to_string());
        }
        Ok(checks) => {
            match first_mismatch(&checks) {
                Ok(None) => {}
                Ok(Some(m)) => {
                    report.status = Status::Fail;
                    report.mismatch = Some(m);
                }
                Err(msg) => {
                    report.status = Status::Fail;
                    report.failure = Some(msg);
                }
            }
            report.checks = checks;
        }
    }
    report
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub cases: Vec<CaseReport>,
}

#[derive(Serialize)]
struct Row<'a> {
    identity: &'a str,
    n: usize,
    status: Status,
    millis: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == Status::Pass)
    }

    pub fn case(&self, token: &str, n: usize) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.identity == token && c.n == n)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Row> = self
            .cases
            .iter()
            .map(|c| Row { identity: c.identity, n: c.n, status: c.status, millis: c.millis })
            .collect();
        serde_json::to_string_pretty(&rows).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out.push_str(&format!("{} n={} {} ({} ms)\n", c.identity, c.n, status, c.millis));
            for check in &c.checks {
                match check {
                    Check::Equal { label, routes, notes } => {
                        let names: Vec<&str> = routes.iter().map(|r| r.0.as_str()).collect();
                        out.push_str(&format!("  {label} [{}]", names.join(", ")));
                        if c.status == Status::Pass {
                            if let Some((_, p)) = routes.first() {
                                out.push_str(&format!(" = {p}"));
                            }
                        }
                        out.push('\n');
                        for note in notes {
                            out.push_str(&format!("    note: {note}\n"));
                        }
                    }
                    Check::Holds { label, ok, .. } => {
                        out.push_str(&format!("  {label}: {}\n", if *ok { "holds" } else { "fails" }));
                    }
                }
            }
            if let Some(m) = &c.mismatch {
                out.push_str(&format!("  mismatch in {}\n", m.check));
                out.push_str(&format!("    {}: {}\n", m.left.0, m.left.1));
                out.push_str(&format!("    {}: {}\n", m.right.0, m.right.1));
                out.push_str(&format!("    first differing term: {}\n", m.first_difference));
            }
            if let Some(f) = &c.failure {
                out.push_str(&format!("  {f}\n"));
            }
        }
        let bad = self.cases.iter().filter(|c| c.status != Status::Pass).count();
        out.push_str(&format!("{} cases, {} failed\n", self.cases.len(), bad));
        out
    }
}

fn run_jobs(ids: &[Identity], ranges: Vec<RangeInclusive<usize>>) -> Report {
    let jobs: Vec<(usize, usize)> = ranges
        .into_iter()
        .enumerate()
        .flat_map(|(i, r)| r.map(move |n| (i, n)))
        .collect();
    let mut cases: Vec<(usize, CaseReport)> =
        jobs.par_iter().map(|&(i, n)| (i, run_case(&ids[i], n))).collect();
    cases.sort_by_key(|(i, c)| (*i, c.n));
    Report { cases: cases.into_iter().map(|(_, c)| c).collect() }
}

/// Runs one identity over its own range or `range`.
pub fn verify(token: &str, range: Option<RangeInclusive<usize>>) -> Result<Report, SuiteError> {
    let id = lookup(token)?;
    let r = range.unwrap_or_else(|| id.n_range.clone());
    Ok(run_jobs(&[id], vec![r]))
}

/// Runs the whole catalog, each entry capped at `n_max` when given.
pub fn verify_all(n_max: Option<usize>) -> Report {
    let ids = catalog();
    let ranges = ids
        .iter()
        .map(|i| match n_max {
            Some(m) => *i.n_range.start()..=(*i.n_range.end()).min(m),
            None => i.n_range.clone(),
        })
        .collect();
    run_jobs(&ids, ranges)
}
