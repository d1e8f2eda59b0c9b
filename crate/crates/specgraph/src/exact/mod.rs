//! Exact linear algebra over arbitrary-precision integers and rationals.
//!
//! Everything in this module is certified arithmetic: fraction-free
//! elimination for ranks, the Faddeev–LeVerrier recurrence for
//! characteristic polynomials, Krylov elimination for local minimal
//! polynomials, Sturm sequences for real roots, and trial-division-backed
//! factorization over the rationals. Floating point appears only as a
//! fast-reject filter inside the factorizer; every emitted result is
//! exact.

mod charpoly;
mod factor;
mod matrix;
mod poly;
mod roots;

pub use charpoly::{char_poly, krylov_matrix, local_min_poly};
pub use factor::{factor_over_q, is_irreducible_over_q, FactorError, FACTOR_DEGREE_CAP};
pub use matrix::{eval_poly_at_matrix, IntMatrix};
pub use poly::{IntPolynomial, PolyError, RatPolynomial};
pub use roots::{real_roots, RealRoot, RootsError};

use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Number of distinct eigenvalues of the adjacency operator: the degree of
/// the square-free part of the characteristic polynomial.
pub fn distinct_eigenvalue_count(g: &Graph) -> usize {
    char_poly(g)
        .squarefree_part()
        .expect("characteristic polynomial is non-zero")
        .degree()
        .expect("non-constant")
}

/// Applies `p(A)` to the characteristic vector of `v`, exactly.
pub fn apply_poly_to_vertex(g: &Graph, p: &IntPolynomial, v: usize) -> Vec<BigInt> {
    let n = g.vertex_count();
    assert!(v < n);
    let mut acc = vec![BigInt::zero(); n];
    let mut power = vec![BigInt::zero(); n];
    power[v] = BigInt::one();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            for (a, x) in acc.iter_mut().zip(&power) {
                *a += c * x;
            }
        }
        if i + 1 < p.coeffs().len() {
            power = (0..n)
                .map(|r| g.neighbors(r).map(|w| &power[w]).sum())
                .collect();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn distinct_count_examples() {
        let claw = generate(&FamilySpec::CompleteBipartite { m: 1, n: 3 }).unwrap();
        assert_eq!(distinct_eigenvalue_count(&claw), 3);
        let path = generate(&FamilySpec::Path { n: 9 }).unwrap();
        assert_eq!(distinct_eigenvalue_count(&path), 9);
        let complete = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(distinct_eigenvalue_count(&complete), 2);
    }

    #[test]
    fn star_annihilators_kill_the_core() {
        // arm length 2 with k arms: A^3 - (k+1) A at the core
        for k in 3..=5 {
            let g = generate(&FamilySpec::FiniteStar { k, n: 2 }).unwrap();
            let p = IntPolynomial::from_i64(&[0, -(k as i64 + 1), 0, 1]);
            let image = apply_poly_to_vertex(&g, &p, 0);
            assert!(image.iter().all(Zero::is_zero), "k = {k}");
        }
    }
}
