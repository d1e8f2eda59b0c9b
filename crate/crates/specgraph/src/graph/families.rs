//! Generators for the graph families under study.
//!
//! Each generator reproduces the exact vertex/edge structure of the family
//! as named in the literature, and attaches the customary vertex labels
//! where the family has them. The label-to-index mapping is documented per
//! variant.

use super::{Graph, GraphError};

/// A graph family tag plus its integer parameters.
///
/// Index conventions:
/// * `Path { n }` — vertices `0..n` are the path vertices `1..=n` (labels
///   are 1-based to match the coprimality law for dominant path vertices).
/// * `FiniteStar { k, n }` — index 0 is the core `v0`; arm `i` position `j`
///   (1-based) sits at `1 + (i-1)*n + (j-1)` with label `v{i}.{j}`.
/// * `DoubledFan { n }` — indices 0, 1 are `v0`, `v0'`; index `i+1` is `v_i`.
/// * `GluedPaths { n, k }` — indices `0..n` are `v_1..v_n` of the first
///   path; the second path shares `v_k` and its remaining vertices
///   `v'_1..v'_{k-1}, v'_{k+1}..v'_n` follow in order.
/// * `CoxeterD { l }` — index `i` is `v_{i+1}`; the fork vertices `v_{l-1}`,
///   `v_l` both attach to `v_{l-2}`.
/// * `TruncatedDInfinity { depth }` — indices 0, 1 are the two degree-one
///   vertices `0`, `0'`; index `j+1` is ray vertex `j` for `j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        m: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// Star `S_{k,n}`: a core of degree `k` with `k` arms of length `n`.
    FiniteStar {
        k: usize,
        n: usize,
    },
    /// `G_n`: two hub vertices joined to each other and to `n` rim vertices.
    DoubledFan {
        n: usize,
    },
    /// `X_{n,k}`: two paths with `n` vertices glued at their `k`-th vertices.
    GluedPaths {
        n: usize,
        k: usize,
    },
    /// `C'_{m,n}`: complement of the disjoint union of two cycles.
    CycleComplement {
        m: usize,
        n: usize,
    },
    /// `T_{k,r}`: complete `k`-ary rooted tree of depth `r`.
    KaryTree {
        k: usize,
        r: usize,
    },
    CoxeterA {
        l: usize,
    },
    CoxeterD {
        l: usize,
    },
    CoxeterE6,
    CoxeterE7,
    CoxeterE8,
    /// Extended `E8`: three paths on 2, 3, and 6 vertices glued at one end.
    CoxeterE8Tilde,
    Petersen,
    Circulant {
        n: usize,
        connections: Vec<usize>,
    },
    /// Ray truncation: vertices `0..=depth` of the one-way infinite path.
    TruncatedRay {
        depth: usize,
    },
    /// `D_inf` truncation: vertices `0`, `0'` joined to `1`, then `1..=depth`.
    TruncatedDInfinity {
        depth: usize,
    },
    /// Infinite-star truncation: core plus `k` arms of length `depth`.
    TruncatedStar {
        k: usize,
        depth: usize,
    },
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use FamilySpec::*;
        match self {
            Path { n } => write!(f, "P_{n}"),
            Cycle { m } => write!(f, "C_{m}"),
            Complete { n } => write!(f, "K_{n}"),
            CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            FiniteStar { k, n } => write!(f, "S_{{{k},{n}}}"),
            DoubledFan { n } => write!(f, "G_{n}"),
            GluedPaths { n, k } => write!(f, "X_{{{n},{k}}}"),
            CycleComplement { m, n } => write!(f, "C'_{{{m},{n}}}"),
            KaryTree { k, r } => write!(f, "T_{{{k},{r}}}"),
            CoxeterA { l } => write!(f, "A_{l}"),
            CoxeterD { l } => write!(f, "D_{l}"),
            CoxeterE6 => write!(f, "E6"),
            CoxeterE7 => write!(f, "E7"),
            CoxeterE8 => write!(f, "E8"),
            CoxeterE8Tilde => write!(f, "E8~"),
            Petersen => write!(f, "Petersen"),
            Circulant { n, connections } => {
                let set: Vec<String> = connections.iter().map(|s| s.to_string()).collect();
                write!(f, "circulant({n};{})", set.join(","))
            }
            TruncatedRay { depth } => write!(f, "ray^({depth})"),
            TruncatedDInfinity { depth } => write!(f, "Dinf^({depth})"),
            TruncatedStar { k, depth } => write!(f, "S_{k}^({depth})"),
        }
    }
}

fn domain(cond: bool, constraint: &str) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::OutOfDomain(constraint.to_string()))
    }
}

/// Builds the graph described by `spec`, or reports the violated parameter
/// constraint.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    use FamilySpec::*;
    match *spec {
        Path { n } => {
            domain(n >= 1, "path requires n >= 1")?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            let labels = (1..=n).map(|i| i.to_string()).collect();
            Ok(Graph::from_edges(n, &edges)?.with_labels(labels))
        }
        Cycle { m } => {
            domain(m >= 3, "cycle requires m >= 3")?;
            let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
            let labels = (0..m).map(|i| format!("v{i}")).collect();
            Ok(Graph::from_edges(m, &edges)?.with_labels(labels))
        }
        Complete { n } => {
            domain(n >= 1, "complete graph requires n >= 1")?;
            let mut edges = Vec::new();
            for v in 0..n {
                for w in (v + 1)..n {
                    edges.push((v, w));
                }
            }
            Graph::from_edges(n, &edges)
        }
        CompleteBipartite { m, n } => {
            domain(m >= 1 && n >= 1, "complete bipartite requires m, n >= 1")?;
            let mut edges = Vec::new();
            for v in 0..m {
                for w in 0..n {
                    edges.push((v, m + w));
                }
            }
            let labels = (1..=m)
                .map(|i| format!("v{i}"))
                .chain((1..=n).map(|i| format!("w{i}")))
                .collect();
            Ok(Graph::from_edges(m + n, &edges)?.with_labels(labels))
        }
        FiniteStar { k, n } => {
            domain(k >= 3, "star S_{k,n} requires k >= 3")?;
            domain(n >= 1, "star S_{k,n} requires arm length n >= 1")?;
            let idx = |arm: usize, pos: usize| 1 + (arm - 1) * n + (pos - 1);
            let mut edges = Vec::new();
            let mut labels = vec!["v0".to_string()];
            for arm in 1..=k {
                edges.push((0, idx(arm, 1)));
                for pos in 1..n {
                    edges.push((idx(arm, pos), idx(arm, pos + 1)));
                }
            }
            for arm in 1..=k {
                for pos in 1..=n {
                    labels.push(format!("v{arm}.{pos}"));
                }
            }
            Ok(Graph::from_edges(1 + k * n, &edges)?.with_labels(labels))
        }
        DoubledFan { n } => {
            domain(n >= 2, "doubled fan G_n requires n >= 2")?;
            let mut edges = vec![(0, 1)];
            for i in 1..=n {
                edges.push((0, i + 1));
                edges.push((1, i + 1));
            }
            let labels = ["v0".to_string(), "v0'".to_string()]
                .into_iter()
                .chain((1..=n).map(|i| format!("v{i}")))
                .collect();
            Ok(Graph::from_edges(n + 2, &edges)?.with_labels(labels))
        }
        GluedPaths { n, k } => {
            domain(n >= 4, "glued paths X_{n,k} require n >= 4")?;
            domain(
                k >= 2 && 2 * k <= n + 1,
                "glued paths X_{n,k} require 2 <= k <= (n+1)/2",
            )?;
            // v_j of the first path is j-1; v'_j of the second path maps to
            // the shared v_k when j = k and is appended in order otherwise.
            let second = |j: usize| -> usize {
                if j == k {
                    k - 1
                } else if j < k {
                    n + (j - 1)
                } else {
                    n + (j - 2)
                }
            };
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            for j in 1..n {
                edges.push((second(j), second(j + 1)));
            }
            let labels = (1..=n)
                .map(|j| format!("v{j}"))
                .chain((1..=n).filter(|&j| j != k).map(|j| format!("v{j}'")))
                .collect();
            Ok(Graph::from_edges(2 * n - 1, &edges)?.with_labels(labels))
        }
        CycleComplement { m, n } => {
            domain(
                m >= 3 && n >= 3,
                "cycle complement C'_{m,n} requires m, n >= 3",
            )?;
            let mut edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
            for i in 0..n {
                edges.push((m + i, m + (i + 1) % n));
            }
            Ok(Graph::from_edges(m + n, &edges)?.complement())
        }
        KaryTree { k, r } => {
            domain(k >= 2, "k-ary tree requires k >= 2")?;
            domain(r >= 1, "k-ary tree requires depth r >= 1")?;
            // level l starts at (k^l - 1)/(k - 1); children of the t-th
            // vertex of level l are consecutive in level l+1
            let level_start: Vec<usize> = (0..=r + 1)
                .scan(0usize, |acc, l| {
                    let start = *acc;
                    *acc += k.pow(l as u32);
                    Some(start)
                })
                .collect();
            let total = level_start[r + 1];
            let mut edges = Vec::new();
            for l in 0..r {
                for t in 0..k.pow(l as u32) {
                    let parent = level_start[l] + t;
                    for c in 0..k {
                        edges.push((parent, level_start[l + 1] + t * k + c));
                    }
                }
            }
            Graph::from_edges(total, &edges)
        }
        CoxeterA { l } => {
            domain(l >= 1, "Coxeter A_l requires l >= 1")?;
            let g = generate(&Path { n: l })?;
            let labels = (1..=l).map(|i| format!("v{i}")).collect();
            Ok(g.with_labels(labels))
        }
        CoxeterD { l } => {
            domain(l >= 4, "Coxeter D_l requires l >= 4")?;
            let mut edges: Vec<_> = (0..l - 3).map(|i| (i, i + 1)).collect();
            edges.push((l - 3, l - 2));
            edges.push((l - 3, l - 1));
            let labels = (1..=l).map(|i| format!("v{i}")).collect();
            Ok(Graph::from_edges(l, &edges)?.with_labels(labels))
        }
        CoxeterE6 => tripod(2),
        CoxeterE7 => tripod(3),
        CoxeterE8 => tripod(4),
        CoxeterE8Tilde => tripod(5),
        Petersen => {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
                .collect();
            let mut edges = Vec::new();
            for (a, &p) in pairs.iter().enumerate() {
                for (b, &q) in pairs.iter().enumerate().skip(a + 1) {
                    let disjoint = p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
                    if disjoint {
                        edges.push((a, b));
                    }
                }
            }
            let labels = pairs.iter().map(|(i, j)| format!("{i}{j}")).collect();
            Ok(Graph::from_edges(10, &edges)?.with_labels(labels))
        }
        Circulant { n, ref connections } => {
            domain(n >= 1, "circulant requires n >= 1")?;
            for &s in connections {
                domain(
                    s >= 1 && 2 * s <= n,
                    "circulant connections must satisfy 1 <= s <= n/2",
                )?;
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for &s in connections {
                    edges.push((i, (i + s) % n));
                }
            }
            Graph::from_edges(n, &edges)
        }
        TruncatedRay { depth } => {
            domain(depth >= 1, "ray truncation requires depth >= 1")?;
            let edges: Vec<_> = (0..depth).map(|i| (i, i + 1)).collect();
            let labels = (0..=depth).map(|i| i.to_string()).collect();
            Ok(Graph::from_edges(depth + 1, &edges)?.with_labels(labels))
        }
        TruncatedDInfinity { depth } => {
            domain(depth >= 2, "D_inf truncation requires depth >= 2")?;
            let mut edges = vec![(0, 2), (1, 2)];
            for j in 1..depth {
                edges.push((j + 1, j + 2));
            }
            let labels = ["0".to_string(), "0'".to_string()]
                .into_iter()
                .chain((1..=depth).map(|j| j.to_string()))
                .collect();
            Ok(Graph::from_edges(depth + 2, &edges)?.with_labels(labels))
        }
        TruncatedStar { k, depth } => {
            domain(k >= 2, "star truncation requires k >= 2")?;
            domain(depth >= 1, "star truncation requires depth >= 1")?;
            let idx = |arm: usize, pos: usize| 1 + (arm - 1) * depth + (pos - 1);
            let mut edges = Vec::new();
            for arm in 1..=k {
                edges.push((0, idx(arm, 1)));
                for pos in 1..depth {
                    edges.push((idx(arm, pos), idx(arm, pos + 1)));
                }
            }
            let mut labels = vec!["v0".to_string()];
            for arm in 1..=k {
                for pos in 1..=depth {
                    labels.push(format!("v{arm}.{pos}"));
                }
            }
            Ok(Graph::from_edges(1 + k * depth, &edges)?.with_labels(labels))
        }
    }
}

/// Tree with a degree-3 center and arms of lengths 1, 2, and `long_arm`;
/// covers E6, E7, E8, and the extended E8.
fn tripod(long_arm: usize) -> Result<Graph, GraphError> {
    let n = 4 + long_arm;
    let mut edges = vec![(0, 1), (0, 2), (2, 3), (0, 4)];
    for i in 1..long_arm {
        edges.push((3 + i, 4 + i));
    }
    let mut labels = vec!["v0".into(), "a1".into(), "b1".into(), "b2".into()];
    for i in 1..=long_arm {
        labels.push(format!("c{i}"));
    }
    Ok(Graph::from_edges(n, &edges)?.with_labels(labels))
}
