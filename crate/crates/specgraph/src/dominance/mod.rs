//! Dominance and cyclicity verdicts.
//!
//! A vertex is *dominant* when its spectral measure charges every distinct
//! eigenvalue; on a finite graph that is equivalent to its Krylov matrix
//! up to power `s - 1` having full rank `s`, which is decided here in
//! exact integer arithmetic. The floating eigenprojection route is
//! computed alongside as a cross-check and is never authoritative:
//! disagreements are recorded on the report.

mod report;
mod scan;

pub use report::{
    dominance_report, dominance_report_with, DominanceReport, NullFactor, VertexVerdict,
    SCHEMA_DOMINANCE_REPORT,
};
pub use scan::{
    scan_corpus, scan_corpus_seq, DominancePattern, ScanAggregate, ScanItem, ScanOutcome,
    ScanVerdict, SCHEMA_SCAN_AGGREGATE,
};

use crate::exact::{self, IntPolynomial};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominanceError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("diameter criterion needs diameter >= 1")]
    TrivialDiameter,
}

/// Exact dominance test: the `n x s` Krylov matrix at `v` has rank `s`.
pub fn is_dominant_exact(g: &Graph, v: usize) -> bool {
    let s = exact::distinct_eigenvalue_count(g);
    exact::krylov_matrix(g, v, s).bareiss_rank() == s
}

/// Exact cyclicity test: the Krylov vectors span the whole space, i.e.
/// the local minimal polynomial has degree `n`.
pub fn is_cyclic_vertex(g: &Graph, v: usize) -> bool {
    exact::local_min_poly(g, v).degree() == g.vertex_count()
}

/// Irreducible factors of the minimal polynomial that annihilate `v`'s
/// local minimal polynomial — the rational certificates that `v` is a null
/// vertex for their roots. Empty exactly when `v` is dominant.
pub fn null_factors(g: &Graph, v: usize) -> Vec<IntPolynomial> {
    let min_poly = exact::char_poly(g)
        .squarefree_part()
        .expect("characteristic polynomial is non-zero");
    let factors = exact::factor_over_q(&min_poly).expect("graph spectra are totally real");
    let local = exact::local_min_poly(g, v);
    factors
        .into_iter()
        .filter(|(f, _)| !local.divisible_by_int(f))
        .map(|(f, _)| f)
        .collect()
}

/// When the distinct eigenvalue count equals diameter + 1, a pair of
/// vertices at maximal distance, both provably dominant. `None` when the
/// eigenvalue count exceeds the bound.
pub fn diameter_criterion(g: &Graph) -> Result<Option<(usize, usize)>, DominanceError> {
    let p = g.predicates();
    let Some(d) = p.diameter else {
        return Err(DominanceError::Disconnected);
    };
    if d < 1 {
        return Err(DominanceError::TrivialDiameter);
    }
    let s = exact::distinct_eigenvalue_count(g);
    if s != d + 1 {
        return Ok(None);
    }
    for v in 0..g.vertex_count() {
        let dist = g.bfs_distances(v);
        if let Some(w) = dist.iter().position(|&x| x == d) {
            return Ok(Some((v, w)));
        }
    }
    unreachable!("some pair realizes the diameter");
}

/// Distance-regularity by the definition: for every vertex pair, the
/// number of vertices at prescribed distances from each endpoint depends
/// only on the distance between the endpoints.
pub fn is_distance_regular(g: &Graph) -> Result<bool, DominanceError> {
    let p = g.predicates();
    let Some(d) = p.diameter else {
        return Err(DominanceError::Disconnected);
    };
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n).map(|v| g.bfs_distances(v)).collect();

    // reference table per pair distance, filled by the first pair seen
    let mut reference: Vec<Option<Vec<Vec<usize>>>> = vec![None; d + 1];
    for v in 0..n {
        for w in 0..n {
            let key = dist[v][w];
            let mut table = vec![vec![0usize; d + 1]; d + 1];
            for u in 0..n {
                table[dist[u][v]][dist[u][w]] += 1;
            }
            match &reference[key] {
                None => reference[key] = Some(table),
                Some(r) => {
                    if *r != table {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn path_eleven_dominant_vertices() {
        let g = generate(&FamilySpec::Path { n: 11 }).unwrap();
        // labels are 1-based path positions
        let dominant: Vec<usize> = (0..11)
            .filter(|&v| is_dominant_exact(&g, v))
            .map(|v| v + 1)
            .collect();
        assert_eq!(dominant, vec![1, 5, 7, 11]);
    }

    #[test]
    fn star_centers_are_never_dominant() {
        for n in 2..=5 {
            let g = generate(&FamilySpec::CompleteBipartite { m: 1, n }).unwrap();
            assert!(!is_dominant_exact(&g, 0), "center of K_1_{n}");
            for leaf in 1..=n {
                assert!(is_dominant_exact(&g, leaf));
            }
        }
    }

    #[test]
    fn complete_graphs_are_all_dominant() {
        for n in 2..=6 {
            let g = generate(&FamilySpec::Complete { n }).unwrap();
            for v in 0..n {
                assert!(is_dominant_exact(&g, v));
            }
        }
    }

    #[test]
    fn cyclicity_examples() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        assert!(is_cyclic_vertex(&p4, 0));

        let claw = generate(&FamilySpec::CompleteBipartite { m: 1, n: 3 }).unwrap();
        assert!(is_dominant_exact(&claw, 1));
        assert!(!is_cyclic_vertex(&claw, 1), "dominant but not cyclic");

        let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        assert!(is_cyclic_vertex(&k2, 0) && is_cyclic_vertex(&k2, 1));
    }

    #[test]
    fn null_factors_of_doubled_fan() {
        let g = generate(&FamilySpec::DoubledFan { n: 2 }).unwrap();
        // hubs are null for the eigenvalue 0, rim vertices for -1
        assert_eq!(null_factors(&g, 0), vec![IntPolynomial::from_i64(&[0, 1])]);
        assert_eq!(null_factors(&g, 2), vec![IntPolynomial::from_i64(&[1, 1])]);
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(null_factors(&k4, 2).is_empty());
    }

    #[test]
    fn diameter_criterion_examples() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let (v, w) = diameter_criterion(&k4).unwrap().expect("s = d + 1");
        assert_eq!(k4.bfs_distances(v)[w], 1);
        assert!(is_dominant_exact(&k4, v) && is_dominant_exact(&k4, w));

        let petersen = generate(&FamilySpec::Petersen).unwrap();
        let (v, w) = diameter_criterion(&petersen)
            .unwrap()
            .expect("s = 3 = d + 1");
        assert_eq!(petersen.bfs_distances(v)[w], 2);
        assert!(is_dominant_exact(&petersen, v) && is_dominant_exact(&petersen, w));

        let p6 = generate(&FamilySpec::Path { n: 6 }).unwrap();
        let (v, w) = diameter_criterion(&p6).unwrap().expect("s = 6 = d + 1");
        assert_eq!(p6.bfs_distances(v)[w], 5);

        // doubled fan: s = 4 exceeds diameter + 1 = 3
        let g3 = generate(&FamilySpec::DoubledFan { n: 3 }).unwrap();
        assert_eq!(diameter_criterion(&g3).unwrap(), None);

        let disc = generate(&FamilySpec::Cycle { m: 3 })
            .unwrap()
            .disjoint_union(&generate(&FamilySpec::Cycle { m: 4 }).unwrap());
        assert_eq!(diameter_criterion(&disc), Err(DominanceError::Disconnected));
    }

    #[test]
    fn distance_regularity_examples() {
        assert!(is_distance_regular(&generate(&FamilySpec::Cycle { m: 6 }).unwrap()).unwrap());
        assert!(is_distance_regular(&generate(&FamilySpec::Petersen).unwrap()).unwrap());
        assert!(!is_distance_regular(
            &generate(&FamilySpec::CompleteBipartite { m: 1, n: 3 }).unwrap()
        )
        .unwrap());
    }
}
