//! Coalition structures and their values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};
use crate::weight::Weight;

/// A partition of the vertex set into coalitions.
///
/// Labels are canonical: coalition `i` is the one whose smallest member is
/// the `i`-th smallest among all coalition minima, so two structures describing
/// the same partition compare equal field by field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoalitionStructure {
    assignment: Vec<usize>,
    count: usize,
}

impl CoalitionStructure {
    /// Relabels an arbitrary vertex → label map into canonical form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let bound = labels.iter().max().map_or(0, |&m| m + 1);
        let mut assignment = Vec::with_capacity(labels.len());
        let mut count = 0;
        if bound <= 2 * labels.len() + 16 {
            let mut remap = vec![usize::MAX; bound];
            for &l in labels {
                if remap[l] == usize::MAX {
                    remap[l] = count;
                    count += 1;
                }
                assignment.push(remap[l]);
            }
        } else {
            let mut remap = std::collections::HashMap::new();
            for &l in labels {
                assignment.push(*remap.entry(l).or_insert(count));
                count = remap.len();
            }
        }
        CoalitionStructure { assignment, count }
    }

    pub fn singletons(n: usize) -> Self {
        CoalitionStructure { assignment: (0..n).collect(), count: n }
    }

    pub fn grand(n: usize) -> Self {
        CoalitionStructure { assignment: vec![0; n], count: n.min(1) }
    }

    /// Builds a structure from explicit coalitions, which must be disjoint
    /// and cover `0..n`.
    pub fn from_coalitions(n: usize, coalitions: &[Vec<usize>]) -> Result<Self> {
        match check_partition(n, coalitions) {
            Some(issue) => Err(Error::InvalidPartition(issue.to_string())),
            None => {
                let mut labels = vec![0; n];
                for (i, c) in coalitions.iter().enumerate() {
                    for &v in c {
                        labels[v] = i;
                    }
                }
                Ok(CoalitionStructure::from_labels(&labels))
            }
        }
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn coalition_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.assignment[a] == self.assignment[b]
    }

    /// Coalitions as sorted vertex lists, ordered by smallest member.
    pub fn coalitions(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Why a list of vertex sets fails to be a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionIssue {
    OutOfRange { vertex: usize },
    Overlap { vertex: usize },
    NotACover { vertex: usize },
    EmptyCoalition { index: usize },
}

impl std::fmt::Display for PartitionIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionIssue::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            PartitionIssue::Overlap { vertex } => {
                write!(f, "overlap: vertex {vertex} is in more than one coalition")
            }
            PartitionIssue::NotACover { vertex } => {
                write!(f, "not a cover: vertex {vertex} is in no coalition")
            }
            PartitionIssue::EmptyCoalition { index } => write!(f, "coalition {index} is empty"),
        }
    }
}

fn check_partition(n: usize, coalitions: &[Vec<usize>]) -> Option<PartitionIssue> {
    let mut seen = vec![false; n];
    for (i, c) in coalitions.iter().enumerate() {
        if c.is_empty() {
            return Some(PartitionIssue::EmptyCoalition { index: i });
        }
        for &v in c {
            if v >= n {
                return Some(PartitionIssue::OutOfRange { vertex: v });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Some(PartitionIssue::Overlap { vertex: v });
            }
        }
    }
    seen.iter()
        .position(|&s| !s)
        .map(|vertex| PartitionIssue::NotACover { vertex })
}

/// Total weight of the edges induced by `members`.
pub fn coalition_value(g: &WeightedGraph, members: &[usize]) -> Weight {
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[v] = true;
    }
    let mut total = Weight::zero();
    for &v in members {
        for &(x, idx) in g.neighbors(v) {
            if x > v && inside[x] {
                total += &g.edge(idx).w;
            }
        }
    }
    total
}

/// Sum of coalition values; equivalently the weight of all intra-coalition edges.
pub fn structure_value(g: &WeightedGraph, cs: &CoalitionStructure) -> Result<Weight> {
    if cs.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "structure covers {} vertices, graph has {}",
            cs.n(),
            g.n()
        )));
    }
    Ok(g.edges()
        .iter()
        .filter(|e| cs.same(e.u, e.v))
        .map(|e| &e.w)
        .sum())
}

/// W⁺, the total positive weight. No structure can exceed it.
pub fn positive_weight_sum(g: &WeightedGraph) -> Weight {
    g.positive_edges().map(|e| &e.w).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureDiagnostics {
    pub valid: bool,
    pub issue: Option<PartitionIssue>,
    pub value: Option<Weight>,
    /// Negative edges with both endpoints in one coalition.
    pub negative_inside: Vec<Edge>,
}

/// Checks a raw coalition list against `g` without failing.
pub fn validate_structure(g: &WeightedGraph, coalitions: &[Vec<usize>]) -> StructureDiagnostics {
    if let Some(issue) = check_partition(g.n(), coalitions) {
        return StructureDiagnostics {
            valid: false,
            issue: Some(issue),
            value: None,
            negative_inside: Vec::new(),
        };
    }
    let cs = CoalitionStructure::from_coalitions(g.n(), coalitions)
        .expect("partition already checked");
    let negative_inside = g
        .negative_edges()
        .filter(|e| cs.same(e.u, e.v))
        .cloned()
        .collect();
    StructureDiagnostics {
        valid: true,
        issue: None,
        value: structure_value(g, &cs).ok(),
        negative_inside,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::normalize_graph;

    fn triangle() -> WeightedGraph {
        normalize_graph(
            3,
            [(0, 1, 2.into()), (1, 2, 3.into()), (0, 2, (-4).into())],
        )
        .unwrap()
    }

    #[test]
    fn coalition_values_on_triangle() {
        let g = triangle();
        assert_eq!(coalition_value(&g, &[0, 1, 2]), Weight::from(1));
        assert_eq!(coalition_value(&g, &[1, 2]), Weight::from(3));
        assert_eq!(coalition_value(&g, &[2]), Weight::zero());
        assert_eq!(coalition_value(&g, &[]), Weight::zero());
    }

    #[test]
    fn structure_values_on_triangle() {
        let g = triangle();
        let cs = CoalitionStructure::from_coalitions(3, &[vec![1, 2], vec![0]]).unwrap();
        assert_eq!(structure_value(&g, &cs).unwrap(), Weight::from(3));
        assert_eq!(
            structure_value(&g, &CoalitionStructure::singletons(3)).unwrap(),
            Weight::zero()
        );
        assert_eq!(
            structure_value(&g, &CoalitionStructure::grand(3)).unwrap(),
            Weight::from(1)
        );
        assert!(structure_value(&g, &CoalitionStructure::singletons(2)).is_err());
    }

    #[test]
    fn positive_sum() {
        assert_eq!(positive_weight_sum(&triangle()), Weight::from(5));
        let neg = normalize_graph(2, [(0, 1, (-1).into())]).unwrap();
        assert_eq!(positive_weight_sum(&neg), Weight::zero());
        assert_eq!(positive_weight_sum(&WeightedGraph::empty(0)), Weight::zero());
    }

    #[test]
    fn canonical_labels() {
        let a = CoalitionStructure::from_labels(&[7, 3, 7, 9]);
        let b = CoalitionStructure::from_coalitions(4, &[vec![3], vec![1], vec![0, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.assignment(), &[0, 1, 0, 2]);
        assert_eq!(a.coalitions(), vec![vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn validate_reports_intra_negative_edges() {
        let g = triangle();
        let d = validate_structure(&g, &[vec![0, 2], vec![1]]);
        assert!(d.valid);
        assert_eq!(d.value, Some(Weight::from(-4)));
        assert_eq!(d.negative_inside.len(), 1);
        assert_eq!(d.negative_inside[0].key(), (0, 2));
    }

    #[test]
    fn validate_reports_overlap_and_gaps() {
        let g = triangle();
        let d = validate_structure(&g, &[vec![0, 1], vec![1, 2]]);
        assert!(!d.valid);
        assert_eq!(d.issue, Some(PartitionIssue::Overlap { vertex: 1 }));
        let d = validate_structure(&g, &[vec![0, 1]]);
        assert_eq!(d.issue, Some(PartitionIssue::NotACover { vertex: 2 }));
        assert!(d.issue.unwrap().to_string().starts_with("not a cover"));
    }
}
