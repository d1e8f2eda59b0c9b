//! Spectral analysis of finite graphs over exact and floating arithmetic.
//!
//! The crate decides which vertices of a finite graph are *dominant* (their
//! spectral measure charges every eigenvalue) and *cyclic* (their Krylov
//! vectors span the whole space), computes vertex spectral measures and
//! walk-count identities, and studies three infinite operators — the ray,
//! the doubled-ray `D_inf`, and infinite stars — through finite truncations
//! of the associated Jacobi matrices.
//!
//! Module map:
//!
//! * [`graph`] — graph representation, generators for the named families,
//!   combinatorial predicates, exact walk counting, graph6 I/O, and
//!   exhaustive connected-graph enumeration for small vertex counts.
//! * [`exact`] — arbitrary-precision integer/rational linear algebra:
//!   Bareiss rank, characteristic and minimal polynomials, factorization
//!   over the rationals, and certified real roots.
//! * [`spectral`] — floating symmetric eigensolver, eigenvalue clustering,
//!   vertex spectral measures, and spectral walk-count formulas.
//! * [`dominance`] — per-vertex dominance/cyclicity verdicts and
//!   corpus-level scans.
//! * [`jacobi`] — tridiagonal truncations of the perturbed Jacobi matrix,
//!   Chebyshev machinery, semicircle quadrature, and the star
//!   block-diagonalization.
//!
//! The `parallel` feature (on by default) runs corpus scans, enumeration,
//! and eigenvalue sweeps on a rayon pool; without it every entry point
//! falls back to the equivalent sequential loop.

#![forbid(unsafe_code)]

pub mod dominance;
pub mod exact;
pub mod graph;
pub mod jacobi;
pub mod spectral;

mod par;
