//! Dense matrices over the integers with fraction-free elimination.

use super::IntPolynomial;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rectangular matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "rectangular");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// 0/1 adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut m = IntMatrix::zeros(n, n);
        for v in 0..n {
            for w in g.neighbors(v) {
                m[(v, w)] = BigInt::one();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a * &other[(k, c)];
                    out[(r, c)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &x[c]).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    /// Exact rank over the rationals by Bareiss fraction-free elimination.
    /// Every division is exact; intermediate entries stay polynomial-sized.
    pub fn bareiss_rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            // smallest non-zero pivot keeps the integers modest
            let pivot_row = (rank..rows)
                .filter(|&r| !m[(r, col)].is_zero())
                .min_by_key(|&r| m[(r, col)].abs());
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for c in 0..cols {
                    m.data.swap(pr * cols + c, rank * cols + c);
                }
            }
            for r in (rank + 1)..rows {
                for c in (col + 1)..cols {
                    let num = &m[(rank, col)] * &m[(r, c)] - &m[(r, col)] * &m[(rank, c)];
                    m[(r, c)] = num / &prev;
                }
                m[(r, col)] = BigInt::zero();
            }
            prev = m[(rank, col)].clone();
            rank += 1;
        }
        rank
    }
}

/// Evaluates an integer polynomial at a square integer matrix.
pub fn eval_poly_at_matrix(p: &IntPolynomial, a: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a);
        for i in 0..n {
            let d = &acc[(i, i)] + c;
            acc[(i, i)] = d;
        }
    }
    acc
}
