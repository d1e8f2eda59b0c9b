//! Cyclic Jacobi rotations for dense real symmetric matrices.
//!
//! Sweeps annihilate every off-diagonal pair in turn until the largest
//! off-diagonal magnitude drops below the tolerance. Convergence is
//! quadratic once the matrix is nearly diagonal; the sweep cap exists only
//! to turn a pathological non-convergence into a reported failure instead
//! of a hang.

// indexed loops mirror the plane-rotation updates
#![allow(clippy::needless_range_loop)]

const MAX_SWEEPS: usize = 64;

/// Diagonalizes `a` in place. Returns `(eigenvalues, eigenvectors,
/// converged)`; `eigenvectors[k]` is the unit eigenvector for
/// `eigenvalues[k]`, and the set is orthonormal.
pub(crate) fn jacobi_symmetric(a: &mut [Vec<f64>], tol: f64) -> (Vec<f64>, Vec<Vec<f64>>, bool) {
    let n = a.len();
    // v[k] accumulates the k-th eigenvector (rows, not columns)
    let mut v = vec![vec![0.0f64; n]; n];
    for (k, row) in v.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    if n <= 1 {
        let values = (0..n).map(|i| a[i][i]).collect();
        return (values, v, true);
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off_max = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a[p][q].abs());
            }
        }
        if off_max <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                for j in 0..n {
                    let vpj = v[p][j];
                    let vqj = v[q][j];
                    v[p][j] = c * vpj - s * vqj;
                    v[q][j] = s * vpj + c * vqj;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i][i]).collect();
    (values, v, converged)
}
