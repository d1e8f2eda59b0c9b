//! Finite truncations of semi-infinite Jacobi matrices: the free matrix,
//! its single-entry perturbation, the orthogonal-polynomial recurrence,
//! semicircle quadrature, and the block-diagonalization of truncated
//! stars. Everything infinite is accessed through truncations of explicit
//! size with explicit tolerances.

mod quadrature;
mod star;
mod tridiag;

pub use quadrature::{chebyshev_p, orthopoly_q, semicircle_quadrature, MIN_QUADRATURE_NODES};
pub use star::{
    d_infinity_check, star_block_diagonalize, star_truncation_evidence, DInfinityCheck,
    StarBlockReport, StarTruncationEvidence,
};
pub use tridiag::TridiagonalMatrix;

use crate::graph::{generate, FamilySpec};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum JacobiError {
    #[error("off-diagonal entries must be positive, got {0}")]
    NonPositiveEntry(f64),
    #[error("truncation size must be at least {needed}, got {got}")]
    TruncationTooSmall { needed: usize, got: usize },
    #[error("point spectrum is empty for a <= sqrt(2), got a = {0}")]
    SubcriticalPerturbation(f64),
    #[error(
        "walks of length {walk} from vertex {vertex} can reach the truncation boundary {depth}"
    )]
    BoundaryReachable {
        walk: usize,
        vertex: usize,
        depth: usize,
    },
    #[error("star block analysis needs k >= 3, got {0}")]
    TooFewArms(usize),
}

/// Off-diagonal sequence of a semi-infinite Jacobi matrix with zero
/// diagonal: a finite head followed by the constant tail 1.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiSpec {
    head: Vec<f64>,
}

impl JacobiSpec {
    /// Sequence with the given head and constant tail 1; entries must be
    /// positive (the tail keeps the supremum finite automatically).
    pub fn new(head: Vec<f64>) -> Result<Self, JacobiError> {
        // rejects NaN as well as zero and negative entries
        let positive = |a: f64| a.partial_cmp(&0.0) == Some(std::cmp::Ordering::Greater);
        if let Some(&bad) = head.iter().find(|&&a| !positive(a)) {
            return Err(JacobiError::NonPositiveEntry(bad));
        }
        Ok(JacobiSpec { head })
    }

    /// The free matrix: every off-diagonal entry is 1.
    pub fn free() -> Self {
        JacobiSpec { head: vec![] }
    }

    /// First off-diagonal entry `a`, all later entries 1.
    pub fn perturbed(a: f64) -> Result<Self, JacobiError> {
        JacobiSpec::new(vec![a])
    }

    /// The n-th off-diagonal entry `a_n`.
    pub fn entry(&self, n: usize) -> f64 {
        self.head.get(n).copied().unwrap_or(1.0)
    }

    /// Leading principal `size x size` submatrix.
    pub fn truncate(&self, size: usize) -> Result<TridiagonalMatrix, JacobiError> {
        if size < 1 {
            return Err(JacobiError::TruncationTooSmall {
                needed: 1,
                got: size,
            });
        }
        Ok(TridiagonalMatrix::new(
            (0..size.saturating_sub(1)).map(|i| self.entry(i)).collect(),
        ))
    }
}

/// Point spectrum of the perturbed matrix: empty for `a <= sqrt(2)`, the
/// symmetric pair `±a^2/sqrt(a^2-1)` above it.
pub fn ja_point_spectrum(a: f64) -> Vec<f64> {
    assert!(a > 0.0, "perturbation must be positive");
    if a <= std::f64::consts::SQRT_2 {
        vec![]
    } else {
        let lambda = a * a / (a * a - 1.0).sqrt();
        vec![-lambda, lambda]
    }
}

/// Truncated geometric eigenvector of the perturbed matrix for the
/// eigenvalue `±a^2/sqrt(a^2-1)` (sign chosen by `positive`), normalized.
/// Returns the eigenvalue and the vector.
///
/// The vector satisfies every truncated row except the last, whose defect
/// is the tail term `r^size` with `r = (|lambda| - sqrt(lambda^2-4))/2 < 1`.
pub fn ja_eigenvector(a: f64, positive: bool, size: usize) -> Result<(f64, Vec<f64>), JacobiError> {
    if a <= std::f64::consts::SQRT_2 {
        return Err(JacobiError::SubcriticalPerturbation(a));
    }
    if size < 2 {
        return Err(JacobiError::TruncationTooSmall {
            needed: 2,
            got: size,
        });
    }
    let lambda_abs = a * a / (a * a - 1.0).sqrt();
    let lambda = if positive { lambda_abs } else { -lambda_abs };
    // decaying characteristic root of r^2 - lambda r + 1 = 0
    let disc = (lambda * lambda - 4.0).sqrt();
    let r = if positive {
        (lambda - disc) / 2.0
    } else {
        (lambda + disc) / 2.0
    };

    let mut xi = Vec::with_capacity(size);
    xi.push(1.0 / a);
    let mut pow = 1.0;
    for _ in 1..size {
        pow *= r;
        xi.push(pow);
    }
    let norm = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut xi {
        *x /= norm;
    }
    Ok((lambda, xi))
}

/// Relative residual `|M xi - lambda xi| / |xi|` with the last coordinate
/// excluded; the exclusion is the truncation boundary, whose defect decays
/// geometrically in the truncation size.
pub fn residual_ignoring_boundary(m: &TridiagonalMatrix, lambda: f64, xi: &[f64]) -> f64 {
    let n = m.dimension();
    assert_eq!(xi.len(), n);
    let off = m.off_diagonal();
    let mut sum = 0.0;
    for i in 0..n.saturating_sub(1) {
        let mut y = -lambda * xi[i];
        if i > 0 {
            y += off[i - 1] * xi[i - 1];
        }
        y += off[i] * xi[i + 1];
        sum += y * y;
    }
    let norm = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
    sum.sqrt() / norm
}

/// Exact closed-walk count at ray vertex `j` versus the Chebyshev-side
/// quadrature of the same moment.
#[derive(Debug, Clone, PartialEq)]
pub struct RayMomentCheck {
    pub exact: BigUint,
    pub quadrature: f64,
    pub gap: f64,
}

/// Compares the number of closed walks of length `2m` at vertex `j` of a
/// depth-`depth` ray truncation with the integral of `t^(2m) P_j(t)^2`
/// against the semicircle measure. The truncation must be deep enough
/// that no walk feels the boundary.
pub fn ray_moment_check(j: usize, m: usize, depth: usize) -> Result<RayMomentCheck, JacobiError> {
    if depth <= 2 * m + j {
        return Err(JacobiError::BoundaryReachable {
            walk: 2 * m,
            vertex: j,
            depth,
        });
    }
    let ray = generate(&FamilySpec::TruncatedRay { depth }).expect("depth >= 1");
    let exact = ray.walk_count(j, j, 2 * m);
    let quadrature = semicircle_quadrature(
        |t| t.powi(2 * m as i32) * chebyshev_p(j, t) * chebyshev_p(j, t),
        256,
    );
    let gap = (exact.to_f64().unwrap_or(f64::INFINITY) - quadrature).abs();
    Ok(RayMomentCheck {
        exact,
        quadrature,
        gap,
    })
}

/// One row of a truncation convergence table.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub size: usize,
    pub top_eigenvalue: f64,
    pub predicted: f64,
    pub gap: f64,
}

/// Top truncation eigenvalue against the infinite-volume prediction
/// (`2` below the critical perturbation, `a^2/sqrt(a^2-1)` above it) for
/// each requested size.
pub fn ja_convergence(
    a: f64,
    sizes: &[usize],
    tol: f64,
) -> Result<Vec<ConvergenceRow>, JacobiError> {
    let spec = JacobiSpec::perturbed(a)?;
    let predicted = if a <= std::f64::consts::SQRT_2 {
        2.0
    } else {
        a * a / (a * a - 1.0).sqrt()
    };
    sizes
        .iter()
        .map(|&size| {
            let m = spec.truncate(size)?;
            let top = *m.eigenvalues(tol).last().expect("at least one eigenvalue");
            Ok(ConvergenceRow {
                size,
                top_eigenvalue: top,
                predicted,
                gap: (predicted - top).abs(),
            })
        })
        .collect()
}

/// Top eigenvalue of the depth-`depth` star truncation with `k` arms,
/// computed through its block decomposition: the blocks are `k - 1` free
/// truncations (top below 2) and one perturbed truncation with first
/// entry `sqrt(k)`, whose top converges to `k/sqrt(k-1) > 2`.
pub fn star_top_eigenvalue(k: usize, depth: usize, tol: f64) -> Result<f64, JacobiError> {
    if k < 3 {
        return Err(JacobiError::TooFewArms(k));
    }
    let free_top = *JacobiSpec::free()
        .truncate(depth.max(1))?
        .eigenvalues(tol)
        .last()
        .unwrap();
    let perturbed_top = *JacobiSpec::perturbed((k as f64).sqrt())?
        .truncate(depth + 1)?
        .eigenvalues(tol)
        .last()
        .unwrap();
    Ok(free_top.max(perturbed_top))
}

/// Convergence table for the star truncations toward `k/sqrt(k-1)`.
pub fn star_convergence(
    k: usize,
    sizes: &[usize],
    tol: f64,
) -> Result<Vec<ConvergenceRow>, JacobiError> {
    let predicted = k as f64 / ((k - 1) as f64).sqrt();
    sizes
        .iter()
        .map(|&size| {
            let top = star_top_eigenvalue(k, size, tol)?;
            Ok(ConvergenceRow {
                size,
                top_eigenvalue: top,
                predicted,
                gap: (predicted - top).abs(),
            })
        })
        .collect()
}
