//! Finite simple undirected graphs and their combinatorics.
//!
//! Vertices are dense integers `0..n`. Family generators attach the display
//! labels used in the literature (e.g. `v0`, `v0'` for the doubled fan) as
//! metadata; everything else works on indices. Graphs are immutable after
//! construction and all operations here are pure.

mod enumerate;
mod families;
mod graph6;

pub use enumerate::{
    canonical_form, enumerate_connected, enumerate_connected_seq, MAX_ENUM_VERTICES,
};
pub use families::{generate, FamilySpec};
pub use graph6::{parse_graph6, parse_graph6_file, write_graph6, Graph6Error};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("adjacency matrix must be square, got {rows} rows of width {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("adjacency must be symmetric: entry ({v},{w}) differs from ({w},{v})")]
    NotSymmetric { v: usize, w: usize },
    #[error("self-loop at vertex {0}: simple graphs have an empty diagonal")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("family parameter out of domain: {0}")]
    OutOfDomain(String),
}

/// A finite simple undirected graph: vertex count plus a symmetric boolean
/// adjacency relation with an empty diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Edges are undirected; duplicates are
    /// merged. Fails on self-loops or out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(v, w) in edges {
            g.check_vertex(v)?;
            g.check_vertex(w)?;
            if v == w {
                return Err(GraphError::SelfLoop(v));
            }
            g.adj[v * n + w] = true;
            g.adj[w * n + v] = true;
        }
        Ok(g)
    }

    /// Builds a graph from a full boolean adjacency matrix, validating that
    /// it is square, symmetric, and has an empty diagonal.
    pub fn from_adjacency(rows: &[Vec<bool>]) -> Result<Self, GraphError> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(GraphError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        for (v, row) in rows.iter().enumerate() {
            if row[v] {
                return Err(GraphError::SelfLoop(v));
            }
            for (w, other) in rows.iter().enumerate().skip(v + 1) {
                if row[w] != other[v] {
                    return Err(GraphError::NotSymmetric { v, w });
                }
            }
        }
        let adj = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn is_edge(&self, v: usize, w: usize) -> bool {
        self.adj[v * self.n + w]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.adj[v * n..(v + 1) * n]
            .iter()
            .enumerate()
            .filter_map(|(w, &b)| b.then_some(w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for w in (v + 1)..self.n {
                if self.is_edge(v, w) {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Display label of `v`: the attached name if any, the index otherwise.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Complement on the same vertex set: `(v,w)` is an edge iff `v != w`
    /// and it is not an edge here. Labels carry over.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for v in 0..n {
            for w in 0..n {
                if v != w {
                    adj[v * n + w] = !self.adj[v * n + w];
                }
            }
        }
        Graph {
            n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    /// Labels are kept only when both operands carry them.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (v, w) in self.edges() {
            g.adj[v * n + w] = true;
            g.adj[w * n + v] = true;
        }
        for (v, w) in other.edges() {
            let (v, w) = (v + self.n, w + self.n);
            g.adj[v * n + w] = true;
            g.adj[w * n + v] = true;
        }
        g.labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).cloned().collect()),
            _ => None,
        };
        g
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connectivity, bipartiteness, regularity, diameter, and the sorted
    /// degree sequence, all computed exactly by BFS.
    pub fn predicates(&self) -> Predicates {
        let n = self.n;
        let mut degree_sequence: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let regular = if n > 0 && degree_sequence.iter().all(|&d| d == degree_sequence[0]) {
            Some(degree_sequence[0])
        } else {
            None
        };
        degree_sequence.sort_unstable();

        let connected = n <= 1 || self.bfs_distances(0).iter().all(|&d| d != usize::MAX);

        // 2-coloring over every component
        let mut color = vec![2u8; n];
        let mut bipartite = true;
        for start in 0..n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if color[w] == 2 {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        bipartite = false;
                    }
                }
            }
        }

        // Diameter is infinite (None) for disconnected graphs.
        let diameter = if !connected {
            None
        } else {
            let mut d = 0;
            for v in 0..n {
                d = d.max(self.bfs_distances(v).into_iter().max().unwrap_or(0));
            }
            Some(d)
        };

        Predicates {
            connected,
            bipartite,
            regular,
            diameter,
            degree_sequence,
        }
    }

    /// Applies the adjacency operator to a non-negative integer vector.
    pub fn apply_adjacency(&self, x: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|v| self.neighbors(v).map(|w| &x[w]).sum())
            .collect()
    }

    /// Exact number of walks of length `len` from `v` to `w`, by repeated
    /// integer matrix–vector products. Never overflows.
    pub fn walk_count(&self, v: usize, w: usize, len: usize) -> BigUint {
        assert!(v < self.n && w < self.n, "vertices in range");
        let mut x: Vec<BigUint> = vec![BigUint::zero(); self.n];
        x[v] = BigUint::one();
        for _ in 0..len {
            x = self.apply_adjacency(&x);
        }
        x[w].clone()
    }
}

/// Exact combinatorial facts about one graph. `diameter` is `None` when the
/// graph is disconnected (infinite diameter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    pub connected: bool,
    pub bipartite: bool,
    pub regular: Option<usize>,
    pub diameter: Option<usize>,
    pub degree_sequence: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    #[test]
    fn complement_of_k3_is_isolated() {
        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let c = k3.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), 3);
    }

    #[test]
    fn complement_is_an_involution() {
        let g = generate(&FamilySpec::GluedPaths { n: 5, k: 2 }).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_empty_pair_is_k2() {
        let c = Graph::empty(2).complement();
        assert_eq!(c.edge_count(), 1);
        assert!(c.is_edge(0, 1));
    }

    #[test]
    fn disjoint_union_of_two_singletons() {
        let k1 = Graph::empty(1);
        let u = k1.disjoint_union(&k1);
        assert_eq!(u.vertex_count(), 2);
        assert_eq!(u.edge_count(), 0);
    }

    #[test]
    fn cycle_union_is_two_regular() {
        let c3 = generate(&FamilySpec::Cycle { m: 3 }).unwrap();
        let c4 = generate(&FamilySpec::Cycle { m: 4 }).unwrap();
        let u = c3.disjoint_union(&c4);
        assert_eq!(u.vertex_count(), 7);
        assert_eq!(u.edge_count(), 7);
        assert_eq!(u.predicates().regular, Some(2));
        assert!(!u.predicates().connected);
        assert_eq!(u.predicates().diameter, None);
    }

    #[test]
    fn cycle_complement_generator_agrees_with_manual_complement() {
        let c3 = generate(&FamilySpec::Cycle { m: 3 }).unwrap();
        let c4 = generate(&FamilySpec::Cycle { m: 4 }).unwrap();
        let manual = c3.disjoint_union(&c4).complement();
        let direct = generate(&FamilySpec::CycleComplement { m: 3, n: 4 }).unwrap();
        assert_eq!(manual.edges(), direct.edges());
    }

    #[test]
    fn cycle_complement_predicates() {
        let g = generate(&FamilySpec::CycleComplement { m: 3, n: 4 }).unwrap();
        let p = g.predicates();
        assert!(p.connected);
        assert_eq!(p.regular, Some(4));
        assert!(!p.bipartite);
    }

    #[test]
    fn path_predicates() {
        let p = path(4).predicates();
        assert!(p.bipartite);
        assert_eq!(p.diameter, Some(3));
        assert_eq!(p.degree_sequence, vec![1, 1, 2, 2]);
    }

    #[test]
    fn extended_e8_predicates() {
        let g = generate(&FamilySpec::CoxeterE8Tilde).unwrap();
        let p = g.predicates();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(p.diameter, Some(7));
        assert_eq!(p.degree_sequence, vec![1, 1, 1, 2, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn p3_closed_walks_at_end_and_middle() {
        // end vertex: 2^m closed walks of length 2m+2; middle: 2^{m+1}
        let g = path(3);
        assert_eq!(g.walk_count(0, 0, 4).to_u64(), Some(2));
        assert_eq!(g.walk_count(1, 1, 4).to_u64(), Some(4));
    }

    #[test]
    fn walk_count_length_zero() {
        let g = path(3);
        assert_eq!(g.walk_count(0, 2, 0).to_u64(), Some(0));
        assert_eq!(g.walk_count(2, 2, 0).to_u64(), Some(1));
    }

    #[test]
    fn walk_count_symmetry_randomized() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let n = rng.random_range(2..9);
            let mut edges = Vec::new();
            for v in 0..n {
                for w in (v + 1)..n {
                    if rng.random_bool(0.4) {
                        edges.push((v, w));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let v = rng.random_range(0..n);
            let w = rng.random_range(0..n);
            let len = rng.random_range(0..=12);
            assert_eq!(g.walk_count(v, w, len), g.walk_count(w, v, len));
        }
    }

    #[test]
    fn bipartite_odd_closed_walks_vanish() {
        for g in [
            path(6),
            generate(&FamilySpec::CompleteBipartite { m: 2, n: 3 }).unwrap(),
            generate(&FamilySpec::KaryTree { k: 2, r: 3 }).unwrap(),
        ] {
            for v in 0..g.vertex_count() {
                for len in [1, 3, 5, 7] {
                    assert!(g.walk_count(v, v, len).is_zero());
                }
            }
        }
    }

    #[test]
    fn handshake_across_families() {
        let specs = vec![
            FamilySpec::Path { n: 7 },
            FamilySpec::Cycle { m: 9 },
            FamilySpec::Complete { n: 6 },
            FamilySpec::CompleteBipartite { m: 3, n: 4 },
            FamilySpec::FiniteStar { k: 4, n: 3 },
            FamilySpec::DoubledFan { n: 5 },
            FamilySpec::GluedPaths { n: 6, k: 3 },
            FamilySpec::CycleComplement { m: 3, n: 5 },
            FamilySpec::KaryTree { k: 3, r: 2 },
            FamilySpec::CoxeterA { l: 5 },
            FamilySpec::CoxeterD { l: 7 },
            FamilySpec::CoxeterE6,
            FamilySpec::CoxeterE7,
            FamilySpec::CoxeterE8,
            FamilySpec::CoxeterE8Tilde,
            FamilySpec::Petersen,
            FamilySpec::Circulant {
                n: 8,
                connections: vec![1, 2],
            },
            FamilySpec::TruncatedRay { depth: 10 },
            FamilySpec::TruncatedDInfinity { depth: 6 },
            FamilySpec::TruncatedStar { k: 3, depth: 4 },
        ];
        for spec in specs {
            let g = generate(&spec).unwrap();
            let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count(), "handshake for {spec:?}");
        }
    }

    #[test]
    fn from_adjacency_rejects_asymmetry_and_loops() {
        let bad = vec![vec![false, true], vec![false, false]];
        assert_eq!(
            Graph::from_adjacency(&bad),
            Err(GraphError::NotSymmetric { v: 0, w: 1 })
        );
        let loopy = vec![vec![true]];
        assert_eq!(Graph::from_adjacency(&loopy), Err(GraphError::SelfLoop(0)));
    }
}
