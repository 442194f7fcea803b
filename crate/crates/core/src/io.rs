//! Text graph format and solve reports.
//!
//! Graph files are line oriented: a header `n m`, then `m` lines `u v w` with
//! 0-indexed vertices and `w` an integer, decimal or `p/q` fraction. Lines
//! starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize_graph, WeightedGraph};
use crate::report::SolveReport;
use crate::structure::{validate_structure, PartitionIssue};
use crate::weight::Weight;

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let count = |s: &str, what: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::Parse {
            line: hline,
            message: format!("{what} must be a non-negative integer, got {s:?}"),
        })
    };
    if fields.len() != 2 {
        return Err(Error::Parse { line: hline, message: "header must be \"n m\"".into() });
    }
    let n = count(fields[0], "n")?;
    let m = count(fields[1], "m")?;

    let mut raw = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        if raw.len() == m {
            return Err(Error::Parse { line, message: format!("more than {m} edge lines") });
        }
        let f: Vec<&str> = body.split_whitespace().collect();
        if f.len() != 3 {
            return Err(Error::Parse { line, message: "edge line must be \"u v w\"".into() });
        }
        let vertex = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad vertex id {s:?}"),
            })?;
            if v >= n {
                return Err(Error::Parse { line, message: format!("vertex {v} out of range (n = {n})") });
            }
            Ok(v)
        };
        let (u, v) = (vertex(f[0])?, vertex(f[1])?);
        if u == v {
            return Err(Error::Parse { line, message: format!("self-loop on vertex {u}") });
        }
        let w: Weight = f[2].parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad weight {:?}", f[2]),
        })?;
        raw.push((u, v, w));
    }
    if raw.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {m} edge lines, found {}", raw.len()),
        });
    }
    normalize_graph(n, raw)
}

/// Canonical text: edges sorted by `(min, max)`, weights as `p/q` or integers.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDigest {
    pub n: usize,
    pub m: usize,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub w_plus: Weight,
}

impl InstanceDigest {
    pub fn of(g: &WeightedGraph) -> Self {
        InstanceDigest {
            n: g.n(),
            m: g.m(),
            positive_edges: g.positive_edges().count(),
            negative_edges: g.negative_edges().count(),
            w_plus: crate::structure::positive_weight_sum(g),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub epsilon: Option<Weight>,
    pub seed: Option<u64>,
}

/// Self-describing solve result, serialized as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub instance: InstanceDigest,
    pub algorithm: String,
    pub parameters: Parameters,
    pub value: Weight,
    pub coalitions: Vec<Vec<usize>>,
    pub feasible_set_count: Option<usize>,
    pub elapsed_ms: f64,
}

impl ReportFile {
    pub fn new(g: &WeightedGraph, report: &SolveReport) -> Self {
        ReportFile {
            instance: InstanceDigest::of(g),
            algorithm: report.algorithm.name().to_string(),
            parameters: Parameters { epsilon: report.epsilon.clone(), seed: report.seed },
            value: report.value.clone(),
            coalitions: report.structure.coalitions(),
            feasible_set_count: report.feasible_set_count,
            elapsed_ms: report.elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyOutcome {
    Ok,
    NotAPartition(PartitionIssue),
    ValueMismatch { reported: Weight, recomputed: Weight },
}

/// Recomputes the value of the report's coalitions on `g`.
pub fn verify_report(g: &WeightedGraph, report: &ReportFile) -> VerifyOutcome {
    let diag = validate_structure(g, &report.coalitions);
    match (diag.issue, diag.value) {
        (Some(issue), _) => VerifyOutcome::NotAPartition(issue),
        (None, Some(v)) if v == report.value => VerifyOutcome::Ok,
        (None, v) => VerifyOutcome::ValueMismatch {
            reported: report.value.clone(),
            recomputed: v.unwrap_or_default(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::brute_force_opt;

    const TRIANGLE: &str = "# triangle\n3 3\n0 1 2\n1 2 3\n2 0 -4\n";

    #[test]
    fn parse_and_write() {
        let g = parse_graph(TRIANGLE).unwrap();
        assert_eq!(write_graph(&g), "3 3\n0 1 2\n0 2 -4\n1 2 3\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn merged_lines_change_m() {
        let g = parse_graph("2 2\n0 1 1/2\n1 0 0.25\n").unwrap();
        assert_eq!(write_graph(&g), "2 1\n0 1 3/4\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("3\n", 1),
            ("3 1\n\n0 3 1\n", 3),
            ("3 1\n0 0 1\n", 2),
            ("3 1\n0 1 x\n", 2),
            ("3 2\n0 1 1\n", 2),
            ("3 1\n0 1 1\n1 2 1\n", 3),
            ("3 1\n0 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn report_roundtrip_and_verify() {
        let g = parse_graph(TRIANGLE).unwrap();
        let rf = ReportFile::new(&g, &brute_force_opt(&g).unwrap());
        assert_eq!(rf.value.to_string(), "3");
        let back = ReportFile::from_json(&rf.to_json()).unwrap();
        assert_eq!(back, rf);
        assert_eq!(verify_report(&g, &back), VerifyOutcome::Ok);

        let mut tampered = rf.clone();
        tampered.value = Weight::from(4);
        assert!(matches!(verify_report(&g, &tampered), VerifyOutcome::ValueMismatch { .. }));

        let mut overlap = rf.clone();
        overlap.coalitions = vec![vec![0, 1], vec![1, 2]];
        assert!(matches!(verify_report(&g, &overlap), VerifyOutcome::NotAPartition(_)));
    }
}
