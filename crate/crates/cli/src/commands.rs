use std::fs;
use std::path::{Path, PathBuf};

use wgg_core::generate::{GenKind, GenSpec, WeightSpec};
use wgg_core::io::{parse_graph, verify_report, write_graph, ReportFile, VerifyOutcome};
use wgg_core::{Weight, WeightedGraph};

use crate::{Failure, GenArgs, Kind, SolveArgs};

pub fn read_graph(path: &Path) -> Result<WeightedGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

pub fn write_output(path: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn parse_epsilon(s: &str) -> Result<Weight, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("--epsilon expects a number like 0.5 or 1/3, got {s:?}")))
}

pub fn solve(args: SolveArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let epsilon = parse_epsilon(&args.epsilon)?;
    let report = wgg_core::solve(&g, args.alg.into(), Some(&epsilon), args.seed)?;
    write_output(args.output.as_ref(), &ReportFile::new(&g, &report).to_json())
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--kind {kind} requires --{flag}")))
}

pub fn generate(args: GenArgs) -> Result<(), Failure> {
    let weights = match args.neg_prob {
        Some(neg_prob) => WeightSpec::Signed { max_abs: args.wmax, neg_prob },
        None => WeightSpec::Uniform { lo: args.wmin, hi: args.wmax },
    };
    let kind = match args.kind {
        Kind::Tree => GenKind::Tree { n: need(args.n, "n", "tree")? },
        Kind::Grid => GenKind::Grid {
            rows: need(args.rows, "rows", "grid")?,
            cols: need(args.cols, "cols", "grid")?,
        },
        Kind::Regular => GenKind::Regular {
            n: need(args.n, "n", "regular")?,
            delta: need(args.delta, "delta", "regular")?,
        },
        Kind::Gnp => GenKind::Gnp { n: need(args.n, "n", "gnp")?, p: need(args.p, "p", "gnp")? },
        Kind::ReduceIs => GenKind::ReduceIs(read_graph(&need(args.input, "input", "reduce-is")?)?),
        Kind::ReduceIsPm1 => {
            GenKind::ReduceIsPm1(read_graph(&need(args.input, "input", "reduce-is-pm1")?)?)
        }
    };
    let spec = GenSpec { kind, weights, seed: args.seed };
    let g = spec.generate().map_err(|e| Failure::Usage(e.to_string()))?;
    write_output(args.output.as_ref(), &write_graph(&g))
}

pub fn verify(instance: &Path, report: &Path) -> Result<(), Failure> {
    let g = read_graph(instance)?;
    let text = fs::read_to_string(report)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", report.display())))?;
    let rf = ReportFile::from_json(&text)
        .map_err(|e| Failure::Parse(format!("{}: {e}", report.display())))?;
    match verify_report(&g, &rf) {
        VerifyOutcome::Ok => {
            println!("ok: value {}", rf.value);
            Ok(())
        }
        VerifyOutcome::NotAPartition(issue) => {
            Err(Failure::Precondition(format!("not a partition: {issue}")))
        }
        VerifyOutcome::ValueMismatch { reported, recomputed } => Err(Failure::Precondition(
            format!("value mismatch: report says {reported}, coalitions are worth {recomputed}"),
        )),
    }
}
