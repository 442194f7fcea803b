use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::WeightedGraph;
use crate::structure::{positive_weight_sum, structure_value, CoalitionStructure};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Brute,
    Forest,
    Treewidth,
    Cover,
    BoundedDegree,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Brute,
        Algorithm::Forest,
        Algorithm::Treewidth,
        Algorithm::Cover,
        Algorithm::BoundedDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Forest => "forest",
            Algorithm::Treewidth => "treewidth",
            Algorithm::Cover => "cover",
            Algorithm::BoundedDegree => "bounded-degree",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub value: Weight,
    pub structure: CoalitionStructure,
    pub w_plus: Weight,
    /// Number of feasible sets the approximation picked from.
    pub feasible_set_count: Option<usize>,
    pub epsilon: Option<Weight>,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

/// Wall clock for solver timing. `wasm32-unknown-unknown` has no clock, so
/// there it always reads zero.
#[derive(Clone, Copy)]
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    started: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            started: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed_ms(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.started.elapsed().as_secs_f64() * 1e3;
        #[cfg(target_arch = "wasm32")]
        0.0
    }
}

impl SolveReport {
    pub(crate) fn new(
        g: &WeightedGraph,
        algorithm: Algorithm,
        structure: CoalitionStructure,
        started: Stopwatch,
    ) -> Self {
        let value = structure_value(g, &structure).expect("solver produced a structure for g");
        SolveReport {
            algorithm,
            value,
            structure,
            w_plus: positive_weight_sum(g),
            feasible_set_count: None,
            epsilon: None,
            seed: None,
            elapsed_ms: started.elapsed_ms(),
        }
    }

    /// Whether `value ≥ W⁺ / k`. Vacuously true without sets.
    pub fn meets_guarantee(&self) -> bool {
        match self.feasible_set_count {
            Some(k) if k > 0 => self.value >= self.w_plus.div_int(k),
            _ => true,
        }
    }

    /// Copy with the wall-clock field zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> SolveReport {
        SolveReport { elapsed_ms: 0.0, ..self.clone() }
    }
}
