//! Rescaled Chebyshev polynomials, the general three-term recurrence, and
//! quadrature against the semicircle measure on [-2, 2].

use super::JacobiSpec;

/// Quadrature below this node count is refused rather than degraded.
pub const MIN_QUADRATURE_NODES: usize = 64;

/// Monic-normalized Chebyshev polynomial of the second kind on [-2, 2]:
/// `P_n(2 cos t) = sin((n+1)t)/sin(t)`, i.e. `P_n(x) = U_n(x/2)`, via the
/// recurrence `P_n = x P_(n-1) - P_(n-2)`.
pub fn chebyshev_p(n: usize, x: f64) -> f64 {
    let mut prev = 1.0; // P_0
    if n == 0 {
        return prev;
    }
    let mut cur = x; // P_1
    for _ in 2..=n {
        let next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal polynomial `Q_n` of the recurrence
/// `x Q_n = a_(n-1) Q_(n-1) + a_n Q_(n+1)`, `Q_0 = 1`.
/// For the free sequence this is exactly [`chebyshev_p`].
pub fn orthopoly_q(spec: &JacobiSpec, n: usize, x: f64) -> f64 {
    let mut prev = 1.0; // Q_0
    if n == 0 {
        return prev;
    }
    let mut cur = x / spec.entry(0); // Q_1
    for k in 1..n {
        let next = (x * cur - spec.entry(k - 1) * prev) / spec.entry(k);
        prev = cur;
        cur = next;
    }
    cur
}

/// Integral of `f` against the semicircle probability measure
/// `(1/2pi) sqrt(4 - t^2) dt` on [-2, 2], by Gauss quadrature in the
/// substitution `t = 2 cos(theta)`. Exact to rounding for polynomials of
/// degree below `2 * nodes`.
pub fn semicircle_quadrature<F: Fn(f64) -> f64>(f: F, nodes: usize) -> f64 {
    assert!(
        nodes >= MIN_QUADRATURE_NODES,
        "need at least {MIN_QUADRATURE_NODES} nodes"
    );
    let m = nodes as f64;
    let mut sum = 0.0;
    for i in 1..=nodes {
        let theta = i as f64 * std::f64::consts::PI / (m + 1.0);
        let s = theta.sin();
        sum += s * s * f(2.0 * theta.cos());
    }
    2.0 * sum / (m + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        assert_eq!(chebyshev_p(0, 123.0), 1.0);
        assert_eq!(chebyshev_p(1, 0.5), 0.5);
        // P_2(t) = t^2 - 1
        assert_eq!(chebyshev_p(2, 2.0), 3.0);
        assert_eq!(chebyshev_p(2, -1.0), 0.0);
    }

    #[test]
    fn trigonometric_form() {
        for n in 0..8 {
            for &theta in &[0.3, 1.0, 2.5] {
                let lhs = chebyshev_p(n, 2.0 * f64::cos(theta));
                let rhs = f64::sin((n as f64 + 1.0) * theta) / f64::sin(theta);
                assert!((lhs - rhs).abs() < 1e-12, "n={n} theta={theta}");
            }
        }
    }

    #[test]
    fn free_recurrence_reduces_to_chebyshev() {
        let free = JacobiSpec::free();
        for n in 0..10 {
            for &x in &[-1.7, 0.2, 1.9] {
                assert!((orthopoly_q(&free, n, x) - chebyshev_p(n, x)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn first_perturbed_polynomial() {
        let spec = JacobiSpec::perturbed(3f64.sqrt()).unwrap();
        // x Q_0 = a_0 Q_1 means Q_1(x) = x / sqrt(3)
        let x = 1.3;
        assert!((orthopoly_q(&spec, 1, x) - x / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn semicircle_is_a_probability_measure() {
        assert!((semicircle_quadrature(|_| 1.0, 256) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn catalan_moments() {
        let want = [1.0, 1.0, 2.0, 5.0, 14.0, 42.0];
        for (m, &c) in want.iter().enumerate() {
            let got = semicircle_quadrature(|t| t.powi(2 * m as i32), 256);
            assert!((got - c).abs() < 1e-10, "moment 2*{m}: {got}");
        }
        assert!(semicircle_quadrature(|t| t.powi(3), 256).abs() < 1e-12);
    }

    #[test]
    fn chebyshev_orthonormality_under_quadrature() {
        for m in 0..=10usize {
            for n in 0..=10usize {
                let got = semicircle_quadrature(|t| chebyshev_p(m, t) * chebyshev_p(n, t), 256);
                let want = if m == n { 1.0 } else { 0.0 };
                assert!((got - want).abs() < 1e-8, "({m},{n}): {got}");
            }
        }
    }
}
