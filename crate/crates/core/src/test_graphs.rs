//! Small fixed graphs for unit tests. All weights are +1 unless noted.

use crate::graph::{normalize_graph, WeightedGraph};
use crate::weight::Weight;

fn unit(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> WeightedGraph {
    normalize_graph(n, pairs.into_iter().map(|(a, b)| (a, b, Weight::from(1)))).unwrap()
}

pub fn path(n: usize) -> WeightedGraph {
    unit(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> WeightedGraph {
    unit(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> WeightedGraph {
    unit(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Center 0 with `leaves` leaves.
pub fn star(leaves: usize) -> WeightedGraph {
    unit(leaves + 1, (1..=leaves).map(|l| (0, l)))
}

/// `(0,1,+2), (1,2,+3), (0,2,-4)`.
pub fn triangle() -> WeightedGraph {
    normalize_graph(3, [(0, 1, 2.into()), (1, 2, 3.into()), (0, 2, (-4).into())]).unwrap()
}
