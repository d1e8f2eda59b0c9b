//! Floating-point spectral analysis: a cyclic-Jacobi eigensolver,
//! eigenvalue clustering cross-validated against the exact distinct-value
//! count, vertex spectral measures, and the spectral walk-count formulas.
//!
//! The exact integer computation (degree of the square-free characteristic
//! polynomial) decides the number of distinct eigenvalues; floating gaps
//! only propose an initial clustering. When the two disagree the
//! eigenvalues are re-grouped at the exact count along the largest gaps,
//! and a grouping that still looks ambiguous is flagged as a tolerance
//! failure rather than silently accepted.

mod eigen;
mod measure;

pub use measure::{AtomicMeasure, WeightTable};

use crate::exact;
use crate::graph::Graph;
use num_traits::ToPrimitive;
use thiserror::Error;

/// Gap scale for the first clustering pass: split where the gap exceeds
/// `DEFAULT_CLUSTER_SCALE * (1 + |lambda|)`.
pub const DEFAULT_CLUSTER_SCALE: f64 = 1e-7;

/// Weight threshold for the floating dominance route: a projection weight
/// above this counts as charged. The exact route stays authoritative.
pub const DEFAULT_DOM_TOL: f64 = 1e-9;

/// Default Jacobi sweep tolerance for a given graph.
pub fn default_eig_tol(g: &Graph) -> f64 {
    let max_entry = if g.edge_count() > 0 { 1.0 } else { 0.0 };
    1e-12 * max_entry * g.vertex_count() as f64
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("graph must be bipartite")]
    NotBipartite,
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must have at least one edge")]
    Edgeless,
}

/// Eigenvalues of the adjacency operator clustered into distinct groups,
/// with an orthonormal eigenvector basis per group.
#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    distinct_values: Vec<f64>,
    multiplicities: Vec<usize>,
    clusters: Vec<Vec<Vec<f64>>>,
    tolerance_failure: bool,
    gap_clustering_corrected: bool,
}

impl Spectrum {
    /// Distinct eigenvalues in strictly decreasing order.
    pub fn distinct_values(&self) -> &[f64] {
        &self.distinct_values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of distinct eigenvalues (the exact count, not a guess).
    pub fn cluster_count(&self) -> usize {
        self.distinct_values.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Orthonormal eigenvectors spanning the `j`-th eigenspace.
    pub fn eigenvectors(&self, j: usize) -> &[Vec<f64>] {
        &self.clusters[j]
    }

    /// True when the floating eigenvalues could not be grouped
    /// unambiguously into the exact number of clusters.
    pub fn tolerance_failure(&self) -> bool {
        self.tolerance_failure
    }

    /// True when the first-pass gap clustering disagreed with the exact
    /// distinct-eigenvalue count and the grouping had to be forced to it.
    /// Informational; the forced grouping is flagged as a failure only
    /// when it stays ambiguous.
    pub fn gap_clustering_corrected(&self) -> bool {
        self.gap_clustering_corrected
    }

    /// Squared norm of the projection of the `v`-th basis vector onto the
    /// `j`-th eigenspace.
    pub fn weight(&self, v: usize, j: usize) -> f64 {
        self.clusters[j].iter().map(|u| u[v] * u[v]).sum()
    }

    /// Inner product of the projections of two basis vectors onto the
    /// `j`-th eigenspace.
    pub fn cross_weight(&self, v: usize, w: usize, j: usize) -> f64 {
        self.clusters[j].iter().map(|u| u[v] * u[w]).sum()
    }

    /// Vertex spectral measure at `v`: mass `weight(v, j)` at each distinct
    /// eigenvalue. Total mass is 1 up to rounding.
    pub fn vertex_measure(&self, v: usize) -> AtomicMeasure {
        AtomicMeasure::new(
            self.distinct_values
                .iter()
                .enumerate()
                .map(|(j, &t)| (t, self.weight(v, j)))
                .collect(),
        )
    }

    /// Counting measure (density of states): mass `m_j / n` per eigenvalue.
    pub fn counting_measure(&self) -> AtomicMeasure {
        AtomicMeasure::new(
            self.distinct_values
                .iter()
                .zip(&self.multiplicities)
                .map(|(&t, &m)| (t, m as f64 / self.n as f64))
                .collect(),
        )
    }

    /// Full weight table: rows are vertices, columns are clusters.
    pub fn weight_table(&self) -> WeightTable {
        WeightTable::new(
            (0..self.n)
                .map(|v| {
                    (0..self.cluster_count())
                        .map(|j| self.weight(v, j))
                        .collect()
                })
                .collect(),
        )
    }

    /// Walk-count formula: `sum_j d_j lambda_j^len` with `d_j` the cluster
    /// cross weights of `v` and `w`.
    pub fn walk_count_spectral(&self, v: usize, w: usize, len: usize) -> f64 {
        self.distinct_values
            .iter()
            .enumerate()
            .map(|(j, &t)| self.cross_weight(v, w, j) * t.powi(len as i32))
            .sum()
    }

    /// Largest deviation from spectral symmetry about zero, pairing the
    /// j-th largest with the j-th smallest distinct eigenvalue.
    pub fn symmetry_defect(&self) -> f64 {
        let s = self.cluster_count();
        (0..s)
            .map(|j| (self.distinct_values[j] + self.distinct_values[s - 1 - j]).abs())
            .fold(0.0, f64::max)
    }
}

/// Full eigendecomposition with default tolerances.
pub fn eigendecompose(g: &Graph) -> Spectrum {
    eigendecompose_with(g, default_eig_tol(g), DEFAULT_CLUSTER_SCALE)
}

/// Eigendecomposition with explicit Jacobi tolerance and cluster gap scale.
pub fn eigendecompose_with(g: &Graph, eig_tol: f64, cluster_scale: f64) -> Spectrum {
    let n = g.vertex_count();
    assert!(n >= 1, "eigendecomposition needs at least one vertex");
    let mut a = vec![vec![0.0f64; n]; n];
    for (v, row) in a.iter_mut().enumerate() {
        for w in g.neighbors(v) {
            row[w] = 1.0;
        }
    }
    let (mut values, mut vectors, converged) = eigen::jacobi_symmetric(&mut a, eig_tol);

    // sort descending, carrying eigenvectors along
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    values = order.iter().map(|&i| values[i]).collect();
    vectors = order
        .iter()
        .map(|&i| std::mem::take(&mut vectors[i]))
        .collect();

    // first pass: split at relative gaps
    let mut splits: Vec<usize> = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let gap = values[i] - values[i + 1];
        let tol = cluster_scale * (1.0 + values[i].abs().max(values[i + 1].abs()));
        if gap > tol {
            splits.push(i + 1);
        }
    }

    let s_exact = exact::distinct_eigenvalue_count(g);
    let mut tolerance_failure = !converged;
    let gap_clustering_corrected = splits.len() + 1 != s_exact;
    if gap_clustering_corrected {
        // the exact count wins: cut at the s-1 widest gaps
        let mut gaps: Vec<(f64, usize)> = (0..n - 1)
            .map(|i| (values[i] - values[i + 1], i + 1))
            .collect();
        gaps.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
        splits = gaps[..s_exact - 1].iter().map(|&(_, i)| i).collect();
        splits.sort_unstable();
    }

    let mut bounds = vec![0];
    bounds.extend_from_slice(&splits);
    bounds.push(n);

    // the grouping is sound when every in-cluster spread stays below every
    // between-cluster gap
    if s_exact > 1 {
        let max_spread = bounds
            .windows(2)
            .map(|w| values[w[0]] - values[w[1] - 1])
            .fold(0.0, f64::max);
        let min_gap = splits
            .iter()
            .map(|&i| values[i - 1] - values[i])
            .fold(f64::INFINITY, f64::min);
        if max_spread >= min_gap {
            tolerance_failure = true;
        }
    }

    let mut distinct_values = Vec::with_capacity(s_exact);
    let mut multiplicities = Vec::with_capacity(s_exact);
    let mut clusters = Vec::with_capacity(s_exact);
    for w in bounds.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let m = hi - lo;
        distinct_values.push(values[lo..hi].iter().sum::<f64>() / m as f64);
        multiplicities.push(m);
        clusters.push(vectors[lo..hi].to_vec());
    }

    Spectrum {
        n,
        distinct_values,
        multiplicities,
        clusters,
        tolerance_failure,
        gap_clustering_corrected,
    }
}

/// Vertex spectral measure at `v`, with default tolerances.
pub fn vertex_spectral_measure(g: &Graph, v: usize) -> AtomicMeasure {
    eigendecompose(g).vertex_measure(v)
}

/// Counting measure of the graph, with default tolerances.
pub fn counting_measure(g: &Graph) -> AtomicMeasure {
    eigendecompose(g).counting_measure()
}

/// Spectral route to the walk count from `v` to `w`.
pub fn walk_count_spectral(g: &Graph, v: usize, w: usize, len: usize) -> f64 {
    eigendecompose(g).walk_count_spectral(v, w, len)
}

/// Walk-regularity: the diagonal of `A^k` is constant for every
/// `k <= 2s`, decided on exact integer powers. 2s moments pin down all
/// vertex measures on s atoms, so no further powers are needed.
pub fn is_walk_regular(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let s = exact::distinct_eigenvalue_count(g);
    let a = exact::IntMatrix::adjacency(g);
    let mut power = exact::IntMatrix::identity(n);
    for _ in 1..=2 * s {
        power = power.mul(&a);
        let diag = power.diagonal();
        if diag.iter().any(|d| *d != diag[0]) {
            return false;
        }
    }
    true
}

/// Root-growth sequence of closed-walk counts at `v`: the 2k-th root of
/// the number of closed walks of length 2k, for `k = 1..=n_max`. Counts
/// are exact integers; only the root is floating.
pub fn loop_growth(g: &Graph, v: usize, n_max: usize) -> Result<Vec<f64>, SpectralError> {
    if g.edge_count() == 0 {
        return Err(SpectralError::Edgeless);
    }
    if !g.predicates().connected {
        return Err(SpectralError::Disconnected);
    }
    let mut out = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let count = g.walk_count(v, v, 2 * k);
        let c = count.to_f64().unwrap_or(f64::INFINITY);
        out.push(c.powf(1.0 / (2.0 * k as f64)));
    }
    Ok(out)
}

/// Largest deviation of the spectrum from symmetry about zero; only
/// allowed for bipartite graphs.
pub fn bipartite_symmetry_check(g: &Graph) -> Result<f64, SpectralError> {
    if !g.predicates().bipartite {
        return Err(SpectralError::NotBipartite);
    }
    Ok(eigendecompose(g).symmetry_defect())
}
