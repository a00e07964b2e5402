//! Dual graphs of face decompositions and their elementary circuits.
//!
//! The dual graph has one vertex per region and one edge per segment of
//! `alpha`, joining the region above the segment to the region below it.
//! Parallel edges and self-loops are kept. An elementary circuit visits no
//! region twice; each one describes a simple closed curve disjoint from
//! `beta` that crosses every segment of `alpha` at most once.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{AlphaDir, Face};

/// Default cap on the number of circuits enumerated.
pub const DEFAULT_CIRCUIT_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEdge {
    pub label: usize,
    /// For duals of `alpha` segments, `ends[0]` is the region above the
    /// segment and `ends[1]` the region below.
    pub ends: [usize; 2],
}

impl DualEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

/// Undirected multigraph with labeled edges. Edge labels are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertex_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn new(vertex_count: usize, edges: Vec<DualEdge>) -> DualGraph {
        DualGraph {
            vertex_count,
            edges,
        }
    }

    /// Build from `(label, u, v)` triples.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize, usize)]) -> DualGraph {
        DualGraph::new(
            vertex_count,
            edges
                .iter()
                .map(|&(label, u, v)| DualEdge { label, ends: [u, v] })
                .collect(),
        )
    }

    pub fn edge(&self, label: usize) -> Option<&DualEdge> {
        self.edges.iter().find(|e| e.label == label)
    }

    fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut count = self.vertex_count;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.ends[0]), find(&mut parent, e.ends[1]));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// `|E| - |V| + c`: the number of independent cycles.
    pub fn betti_number(&self) -> usize {
        self.edges.len() + self.components() - self.vertex_count
    }
}

/// Dual graph across the segments of `alpha`.
pub fn dual_graph(faces: &[Face]) -> DualGraph {
    let k = faces.iter().map(|f| f.alpha.len()).sum::<usize>() / 2;
    let mut ends = vec![[usize::MAX; 2]; k];
    for (id, face) in faces.iter().enumerate() {
        for edge in &face.alpha {
            let slot = match edge.dir {
                AlphaDir::Right => 0,
                AlphaDir::Left => 1,
            };
            ends[edge.label][slot] = id;
        }
    }
    DualGraph::new(
        faces.len(),
        ends.into_iter()
            .enumerate()
            .map(|(label, ends)| DualEdge { label, ends })
            .collect(),
    )
}

/// Dual graph across the arcs of `beta`: one edge per arc, labeled by
/// the arc's label in the ladder.
pub fn arc_dual_graph(ladder: &crate::ladder::Ladder, faces: &[Face]) -> DualGraph {
    let k = ladder.k();
    let mut ends = vec![[usize::MAX; 2]; k];
    for (id, face) in faces.iter().enumerate() {
        for b in &face.beta {
            let label = ladder.label(crate::ladder::Slot {
                side: b.side,
                position: b.source,
            });
            let slot = if ends[label][0] == usize::MAX { 0 } else { 1 };
            ends[label][slot] = id;
        }
    }
    DualGraph::new(
        faces.len(),
        ends.into_iter()
            .enumerate()
            .map(|(label, ends)| DualEdge { label, ends })
            .collect(),
    )
}

/// A vertex-simple closed walk: crossing `edges[j]` leads into `faces[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Circuit {
    pub edges: Vec<usize>,
    pub faces: Vec<usize>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Least rotation of either traversal direction, comparing edge labels
    /// first and faces second.
    pub fn canonical(&self) -> Circuit {
        let m = self.len();
        let reversed = Circuit {
            edges: (0..m).map(|j| self.edges[(m - j) % m]).collect(),
            faces: (0..m).map(|j| self.faces[(2 * m - j - 1) % m]).collect(),
        };
        let mut best: Option<Circuit> = None;
        for base in [self, &reversed] {
            for r in 0..m {
                let c = Circuit {
                    edges: (0..m).map(|j| base.edges[(j + r) % m]).collect(),
                    faces: (0..m).map(|j| base.faces[(j + r) % m]).collect(),
                };
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
        best.unwrap_or_else(|| self.clone())
    }

    /// Face the walk is in before crossing `edges[j]`.
    pub fn face_before(&self, j: usize) -> usize {
        let m = self.len();
        self.faces[(j + m - 1) % m]
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.edges.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", labels.join(", "))
    }
}

/// Every elementary circuit exactly once, in canonical form and sorted.
pub fn elementary_circuits(graph: &DualGraph) -> Result<Vec<Circuit>> {
    elementary_circuits_limited(graph, DEFAULT_CIRCUIT_LIMIT)
}

pub fn elementary_circuits_limited(graph: &DualGraph, limit: usize) -> Result<Vec<Circuit>> {
    let n = graph.vertex_count;
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut found = Vec::new();
    let mut push = |c: Circuit, found: &mut Vec<Circuit>| -> Result<()> {
        if found.len() >= limit {
            return Err(Error::CircuitLimitExceeded { limit });
        }
        found.push(c.canonical());
        Ok(())
    };
    for e in &graph.edges {
        if e.is_loop() {
            push(
                Circuit {
                    edges: vec![e.label],
                    faces: vec![e.ends[0]],
                },
                &mut found,
            )?;
        } else {
            adjacency[e.ends[0]].push((e.label, e.ends[1]));
            adjacency[e.ends[1]].push((e.label, e.ends[0]));
        }
    }
    for list in &mut adjacency {
        list.sort();
    }

    // Circuits rooted at their least vertex; each undirected circuit is met
    // in both directions and kept when its first edge label is the smaller.
    struct Search<'a> {
        adjacency: &'a [Vec<(usize, usize)>],
        root: usize,
        on_path: Vec<bool>,
        edges: Vec<usize>,
        faces: Vec<usize>,
    }
    fn extend(
        s: &mut Search,
        at: usize,
        found: &mut Vec<Circuit>,
        push: &mut dyn FnMut(Circuit, &mut Vec<Circuit>) -> Result<()>,
    ) -> Result<()> {
        for &(label, next) in &s.adjacency[at] {
            if next == s.root {
                if !s.edges.is_empty() && s.edges[0] < label {
                    let mut edges = s.edges.clone();
                    edges.push(label);
                    let mut faces = s.faces.clone();
                    faces.push(s.root);
                    push(Circuit { edges, faces }, found)?;
                }
            } else if next > s.root && !s.on_path[next] {
                s.on_path[next] = true;
                s.edges.push(label);
                s.faces.push(next);
                extend(s, next, found, push)?;
                s.edges.pop();
                s.faces.pop();
                s.on_path[next] = false;
            }
        }
        Ok(())
    }
    for root in 0..n {
        let mut search = Search {
            adjacency: &adjacency,
            root,
            on_path: vec![false; n],
            edges: Vec::new(),
            faces: Vec::new(),
        };
        search.on_path[root] = true;
        extend(&mut search, root, &mut found, &mut push)?;
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::faces;
    use crate::fixtures;

    fn label_sets(circuits: &[Circuit]) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = circuits
            .iter()
            .map(|c| {
                let mut e = c.edges.clone();
                e.sort();
                e
            })
            .collect();
        sets.sort();
        sets
    }

    #[test]
    fn fig8_dual_graph_shape() {
        let g = dual_graph(&faces(&fixtures::f8()).unwrap());
        assert_eq!(g.vertex_count, 10);
        assert_eq!(g.edges.len(), 12);
        assert_eq!(g.betti_number(), 3);
    }

    #[test]
    fn fig8_has_the_six_printed_paths() {
        let g = dual_graph(&faces(&fixtures::f8()).unwrap());
        let circuits = elementary_circuits(&g).unwrap();
        let printed: [&[usize]; 6] = [
            &[0, 7, 2, 9, 3, 8, 1, 6],
            &[2, 10, 11, 7],
            &[1, 6, 5, 4, 3, 8],
            &[0, 5, 4, 9, 2, 7],
            &[0, 5, 4, 9, 10, 11],
            &[0, 11, 10, 9, 3, 8, 1, 6],
        ];
        let expected: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = printed.iter().map(|p| canonical_cycle(p)).collect();
            v.sort();
            v
        };
        let mut got: Vec<Vec<usize>> = circuits.iter().map(|c| c.edges.clone()).collect();
        got.sort();
        assert_eq!(got, expected);
    }

    // Least rotation over both directions of a cyclic label list.
    fn canonical_cycle(p: &[usize]) -> Vec<usize> {
        let m = p.len();
        let mut best = p.to_vec();
        for dir in 0..2 {
            for r in 0..m {
                let c: Vec<usize> = (0..m)
                    .map(|j| if dir == 0 { p[(r + j) % m] } else { p[(r + m - j) % m] })
                    .collect();
                best = best.min(c);
            }
        }
        best
    }

    #[test]
    fn g3_circuits() {
        // Five independent cycles; 29 of the 31 nonzero cycle-space
        // elements are single circuits.
        let g = dual_graph(&faces(&fixtures::g3()).unwrap());
        assert_eq!(g.betti_number(), 5);
        let circuits = elementary_circuits(&g).unwrap();
        assert_eq!(circuits.len(), 29);
        let sets = label_sets(&circuits);
        for path in [&[0, 22, 5, 17, 24, 3, 20, 8][..], &[3, 24, 17, 7, 19, 26, 13]] {
            let mut p = path.to_vec();
            p.sort();
            assert!(sets.contains(&p), "missing {path:?}");
        }
    }

    #[test]
    fn parallel_pair_and_loops() {
        let g = DualGraph::from_edges(2, &[(0, 0, 1), (1, 1, 0)]);
        let c = elementary_circuits(&g).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].edges, vec![0, 1]);

        let g = DualGraph::from_edges(1, &[(0, 0, 0)]);
        let c = elementary_circuits(&g).unwrap();
        assert_eq!(c, vec![Circuit { edges: vec![0], faces: vec![0] }]);

        let g = DualGraph::from_edges(3, &[(0, 0, 1), (1, 1, 2)]);
        assert!(elementary_circuits(&g).unwrap().is_empty());
    }

    #[test]
    fn limit_is_enforced() {
        let g = DualGraph::from_edges(2, &[(0, 0, 1), (1, 0, 1), (2, 0, 1)]);
        assert_eq!(elementary_circuits(&g).unwrap().len(), 3);
        assert_eq!(
            elementary_circuits_limited(&g, 2),
            Err(Error::CircuitLimitExceeded { limit: 2 })
        );
    }

    #[test]
    fn canonical_form_is_direction_free() {
        // The walk 0 -5-> 1 -2-> 2 -9-> 0, and the same walk backwards.
        let c = Circuit {
            edges: vec![5, 2, 9],
            faces: vec![1, 2, 0],
        };
        let back = Circuit {
            edges: vec![9, 2, 5],
            faces: vec![2, 1, 0],
        };
        let unrelated = Circuit {
            edges: vec![9, 2, 5],
            faces: vec![1, 2, 0],
        };
        assert_eq!(c.canonical(), back.canonical());
        assert_ne!(c.canonical(), unrelated.canonical());
        assert_eq!(c.canonical().edges, vec![2, 5, 9]);
        assert_eq!(c.canonical().faces, vec![1, 0, 2]);
    }
}
