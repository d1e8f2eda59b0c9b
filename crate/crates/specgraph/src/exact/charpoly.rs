//! Characteristic polynomials and local minimal polynomials, computed
//! exactly over the integers and rationals.

use super::{IntMatrix, IntPolynomial, RatPolynomial};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Characteristic polynomial of the adjacency matrix, by the
/// Faddeev–LeVerrier recurrence. All intermediate divisions are exact over
/// the integers, so the result is certified: monic of degree `n`, zero
/// trace coefficient, and `-|E|` in degree `n - 2`.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    let n = g.vertex_count();
    assert!(
        n >= 1,
        "characteristic polynomial needs at least one vertex"
    );
    let a = IntMatrix::adjacency(g);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();

    let mut m = IntMatrix::identity(n);
    for k in 1..=n {
        let am = a.mul(&m);
        let c = -am.trace() / BigInt::from(k);
        coeffs[n - k] = c.clone();
        if k < n {
            m = am;
            for i in 0..n {
                let d = &m[(i, i)] + &c;
                m[(i, i)] = d;
            }
        }
    }
    IntPolynomial::new(coeffs)
}

/// Matrix whose columns are the Krylov vectors `x, Ax, ..., A^(cols-1) x`
/// for `x` the characteristic vector of `v`.
pub fn krylov_matrix(g: &Graph, v: usize, cols: usize) -> IntMatrix {
    let n = g.vertex_count();
    assert!(v < n);
    let mut m = IntMatrix::zeros(n, cols);
    let mut x = vec![BigInt::zero(); n];
    x[v] = BigInt::one();
    for c in 0..cols {
        for r in 0..n {
            m[(r, c)] = x[r].clone();
        }
        if c + 1 < cols {
            x = (0..n)
                .map(|r| g.neighbors(r).map(|w| &x[w]).sum())
                .collect();
        }
    }
    m
}

/// Minimal polynomial of the pair `(A, delta_v)`: the monic rational
/// polynomial of least degree annihilating the characteristic vector of
/// `v`. Found by feeding Krylov vectors into an exact Gaussian elimination
/// until the first linear dependency, whose coefficients are read back in
/// the Krylov basis.
pub fn local_min_poly(g: &Graph, v: usize) -> RatPolynomial {
    let n = g.vertex_count();
    assert!(v < n, "vertex in range");

    // reduced basis rows, their pivot columns, and their coordinates in
    // the Krylov basis delta_v, A delta_v, ...
    let mut basis: Vec<(Vec<BigRational>, usize, Vec<BigRational>)> = Vec::new();

    let mut power: Vec<BigInt> = vec![BigInt::zero(); n];
    power[v] = BigInt::one();

    for step in 0..=n {
        let mut vec_q: Vec<BigRational> =
            power.iter().map(|x| BigRational::from(x.clone())).collect();
        // coordinates of the reduced vector: starts as A^step delta_v
        let mut combo = vec![BigRational::zero(); step + 1];
        combo[step] = BigRational::one();

        for (row, pivot, row_combo) in &basis {
            let factor = vec_q[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, r) in vec_q.iter_mut().zip(row) {
                *x -= &factor * r;
            }
            for (c, rc) in combo.iter_mut().zip(row_combo) {
                *c -= &factor * rc;
            }
        }

        match vec_q.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                let lead = vec_q[pivot].clone();
                for x in &mut vec_q {
                    *x /= &lead;
                }
                for c in &mut combo {
                    *c /= &lead;
                }
                combo.resize(n + 1, BigRational::zero());
                basis.push((vec_q, pivot, combo));
            }
            None => {
                // A^step delta_v = -sum(combo[i] A^i delta_v) for i < step;
                // the monic minimal polynomial follows directly
                let lower: Vec<BigRational> = combo[..step].to_vec();
                return RatPolynomial::monic_from_lower(lower);
            }
        }

        power = (0..n)
            .map(|r| g.neighbors(r).map(|w| &power[w]).sum())
            .collect();
    }
    unreachable!("a dependency appears after at most n Krylov vectors");
}
