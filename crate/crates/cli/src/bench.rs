use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use wgg_core::exact::brute_force_opt;
use wgg_core::{Algorithm, Weight, WeightedGraph};

use crate::commands::{parse_epsilon, read_graph};
use crate::{BenchArgs, Failure};

// exact optimum is only computed for the ratio column below this size
const RATIO_LIMIT: usize = 16;

struct Row {
    instance: String,
    n: usize,
    m: usize,
    algorithm: Algorithm,
    value: Weight,
    w_plus: Weight,
    k: Option<usize>,
    ratio_opt: Option<f64>,
    elapsed_ms: f64,
}

fn bench_file(
    path: &Path,
    algs: &[Algorithm],
    repeat: usize,
    epsilon: &Weight,
    seed: u64,
) -> Result<Vec<Row>, Failure> {
    let g: WeightedGraph = read_graph(path)?;
    let opt = if g.n() <= RATIO_LIMIT { Some(brute_force_opt(&g)?.value) } else { None };
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let mut rows = Vec::new();
    for &alg in algs {
        let mut times = Vec::with_capacity(repeat);
        let mut last = None;
        for _ in 0..repeat.max(1) {
            let r = wgg_core::solve(&g, alg, Some(epsilon), seed)?;
            times.push(r.elapsed_ms);
            last = Some(r);
        }
        let r = last.expect("at least one run");
        times.sort_by(f64::total_cmp);
        let ratio_opt = opt.as_ref().map(|o| {
            if o.is_zero() { 1.0 } else { r.value.to_f64() / o.to_f64() }
        });
        rows.push(Row {
            instance: name.clone(),
            n: g.n(),
            m: g.m(),
            algorithm: alg,
            value: r.value,
            w_plus: r.w_plus,
            k: r.feasible_set_count,
            ratio_opt,
            elapsed_ms: times[times.len() / 2],
        });
    }
    Ok(rows)
}

pub fn run(args: crate::BenchArgs) -> Result<(), Failure> {
    let BenchArgs { corpus, algs, repeat, epsilon, seed, output } = args;
    let epsilon = parse_epsilon(&epsilon)?;
    let algs: Vec<Algorithm> = algs.into_iter().map(Into::into).collect();
    let mut files: Vec<PathBuf> = fs::read_dir(&corpus)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", corpus.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let results: Vec<Vec<Row>> = files
        .par_iter()
        .map(|p| match bench_file(p, &algs, repeat, &epsilon, seed) {
            Ok(rows) => rows,
            Err(f) => {
                log::warn!("skipping {}: {}", p.display(), f.message());
                Vec::new()
            }
        })
        .collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Failure::Internal(e.to_string());
    w.write_record([
        "instance", "n", "m", "algorithm", "epsilon", "seed", "value", "w_plus", "k", "ratio_opt",
        "elapsed_ms",
    ])
    .map_err(fail)?;
    let mut rows: Vec<Row> = results.into_iter().flatten().collect();
    rows.sort_by(|a, b| (&a.instance, a.algorithm.name()).cmp(&(&b.instance, b.algorithm.name())));
    for row in rows {
        let bounded = row.algorithm == Algorithm::BoundedDegree;
        w.write_record([
            row.instance,
            row.n.to_string(),
            row.m.to_string(),
            row.algorithm.to_string(),
            if bounded { epsilon.to_string() } else { String::new() },
            if bounded { seed.to_string() } else { String::new() },
            row.value.to_string(),
            row.w_plus.to_string(),
            row.k.map(|k| k.to_string()).unwrap_or_default(),
            row.ratio_opt.map(|r| format!("{r:.6}")).unwrap_or_default(),
            format!("{:.3}", row.elapsed_ms),
        ])
        .map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Internal(e.to_string()))?;
    let text = String::from_utf8(bytes).map_err(|e| Failure::Internal(e.to_string()))?;
    crate::commands::write_output(output.as_ref(), &text)
}
