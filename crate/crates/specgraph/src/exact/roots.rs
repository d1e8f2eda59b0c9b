//! Certified real roots of integer polynomials: Sturm-sequence isolation
//! followed by bisection to a requested width. All sign evaluations are
//! exact rational arithmetic, so an isolating interval is a proof.

use super::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RootsError {
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("input must be square-free (gcd with the derivative is non-constant)")]
    NotSquareFree,
    #[error("polynomial has non-real roots: found {found} real roots, degree is {degree}")]
    NonRealRoots { found: usize, degree: usize },
}

/// One real root, bracketed by an exact rational interval. For a rational
/// root found head-on, `low == high`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub low: BigRational,
    pub high: BigRational,
}

impl RealRoot {
    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.low + &self.high) / BigRational::from(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Sturm chain of a square-free polynomial. Each remainder is rescaled to
/// a primitive integer polynomial by a positive factor, which preserves
/// the sign-variation counts.
pub(crate) struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> SturmChain {
        let mut chain = vec![p.primitive_part(), p.derivative().primitive_part()];
        loop {
            let k = chain.len();
            let (a, b) = (&chain[k - 2], &chain[k - 1]);
            if b.is_zero() {
                chain.pop();
                break;
            }
            if b.degree() == Some(0) {
                break;
            }
            // pseudo_rem multiplies by lc(b)^(deg a - deg b + 1); undo a
            // negative multiplier so the chain keeps true remainder signs
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let steps = da - db + 1;
            let flip = b.leading().unwrap().is_negative() && steps % 2 == 1;
            let mut r = a.pseudo_rem(b).neg();
            if flip {
                r = r.neg();
            }
            if r.is_zero() {
                break;
            }
            let sign = if r.leading().unwrap().is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            r = r.primitive_part().scale(&sign);
            chain.push(r);
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval_rational(x);
            let s = if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Cauchy bound: every real root lies in `(-bound, bound)`.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().expect("non-zero").abs();
    let max = p
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::from(max) / BigRational::from(lead) + BigRational::one()
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A point in `(lo, hi)` where `p` does not vanish; needed so bisection
/// never lands on a rational root silently.
fn splitting_point(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> (BigRational, bool) {
    let width = hi - lo;
    let mid = lo + &width * rational(1, 2);
    if !p.eval_rational(&mid).is_zero() {
        return (mid, false);
    }
    // mid is itself a root; report it and let the caller split around it
    (mid, true)
}

/// All real roots of a square-free integer polynomial, each bracketed to
/// width at most `10^-digits`, returned in strictly decreasing order.
/// Fails if the polynomial is not square-free or has non-real roots.
pub fn real_roots(p: &IntPolynomial, digits: u32) -> Result<Vec<RealRoot>, RootsError> {
    if p.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    if degree == 0 {
        return Ok(vec![]);
    }
    if p.gcd(&p.derivative()).degree() != Some(0) {
        return Err(RootsError::NotSquareFree);
    }

    let chain = SturmChain::new(p);
    let bound = cauchy_bound(p);
    let lo = -&bound;
    let hi = bound.clone();
    let total = chain.count_roots(&lo, &hi);
    if total != degree {
        return Err(RootsError::NonRealRoots {
            found: total,
            degree,
        });
    }

    // isolation by recursive splitting on non-root points
    let mut isolated: Vec<RealRoot> = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => isolated.push(RealRoot { low: a, high: b }),
            _ => {
                let (m, is_root) = splitting_point(p, &a, &b);
                if is_root {
                    isolated.push(RealRoot {
                        low: m.clone(),
                        high: m.clone(),
                    });
                    // shrink the excluded window until it holds only m, so
                    // the two side intervals keep every remaining root
                    let mut eps = (&b - &a) * rational(1, 4);
                    while chain.count_roots(&(&m - &eps), &(&m + &eps)) != 1 {
                        eps *= rational(1, 2);
                    }
                    let left_hi = &m - &eps;
                    let right_lo = &m + &eps;
                    let left = chain.count_roots(&a, &left_hi);
                    let right = chain.count_roots(&right_lo, &b);
                    stack.push((a, left_hi, left));
                    stack.push((right_lo, b, right));
                } else {
                    let left = chain.count_roots(&a, &m);
                    stack.push((a, m.clone(), left));
                    stack.push((m, b, count - left));
                }
            }
        }
    }

    let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
    let mut roots: Vec<RealRoot> = isolated
        .into_iter()
        .map(|r| refine(p, &chain, r, &target))
        .collect();
    roots.sort_by_key(|r| std::cmp::Reverse(r.midpoint()));
    Ok(roots)
}

fn refine(
    p: &IntPolynomial,
    chain: &SturmChain,
    mut root: RealRoot,
    target: &BigRational,
) -> RealRoot {
    if root.low == root.high {
        return root;
    }
    // the isolating interval (low, high] may have its root exactly at
    // high; a root at low belongs to the neighboring interval and only
    // means the sign test below is inconclusive
    let mut f_lo = p.eval_rational(&root.low);
    let f_hi = p.eval_rational(&root.high);
    if f_hi.is_zero() {
        root.low = root.high.clone();
        return root;
    }
    if f_lo.is_zero() || f_lo.is_positive() == f_hi.is_positive() {
        // no sign change over the bracket: fall back to Sturm-guided bisection
        while root.width() > *target {
            let (m, is_root) = splitting_point(p, &root.low, &root.high);
            if is_root {
                return RealRoot {
                    low: m.clone(),
                    high: m,
                };
            }
            if chain.count_roots(&root.low, &m) == 1 {
                root.high = m;
            } else {
                root.low = m;
            }
        }
        return root;
    }
    while root.width() > *target {
        let m = root.midpoint();
        let f_m = p.eval_rational(&m);
        if f_m.is_zero() {
            return RealRoot {
                low: m.clone(),
                high: m,
            };
        }
        if f_m.is_positive() == f_lo.is_positive() {
            root.low = m;
            f_lo = f_m;
        } else {
            root.high = m;
        }
    }
    root
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn sqrt_two_to_ten_digits() {
        let roots = real_roots(&p(&[-2, 0, 1]), 12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].approx() - std::f64::consts::SQRT_2).abs() < 1e-10);
        assert!((roots[1].approx() + std::f64::consts::SQRT_2).abs() < 1e-10);
    }

    #[test]
    fn golden_like_quadratic() {
        // T^2 - T - 4: roots (1 ± sqrt(17)) / 2
        let roots = real_roots(&p(&[-4, -1, 1]), 12).unwrap();
        let hi = (1.0 + 17f64.sqrt()) / 2.0;
        let lo = (1.0 - 17f64.sqrt()) / 2.0;
        assert!((roots[0].approx() - hi).abs() < 1e-10);
        assert!((roots[1].approx() - lo).abs() < 1e-10);
    }

    #[test]
    fn cubic_with_rational_root() {
        let roots = real_roots(&p(&[0, -3, 0, 1]), 12).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0].approx() - 3f64.sqrt()).abs() < 1e-10);
        assert!(roots[1].low.is_zero() && roots[1].high.is_zero());
        assert!((roots[2].approx() + 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn roots_strictly_decreasing_and_complete() {
        // E8 characteristic polynomial: eight distinct real roots
        let roots = real_roots(&p(&[1, 0, -8, 0, 14, 0, -7, 0, 1]), 15).unwrap();
        assert_eq!(roots.len(), 8);
        for w in roots.windows(2) {
            assert!(w[0].midpoint() > w[1].midpoint());
        }
    }

    #[test]
    fn rejects_non_squarefree() {
        assert_eq!(
            real_roots(&p(&[0, 0, 1]), 8),
            Err(RootsError::NotSquareFree)
        );
    }

    #[test]
    fn rejects_non_real() {
        assert_eq!(
            real_roots(&p(&[1, 0, 1]), 8),
            Err(RootsError::NonRealRoots {
                found: 0,
                degree: 2
            })
        );
    }

    #[test]
    fn brackets_are_proofs() {
        let q = p(&[-1, -1, 0, 1]); // T^3 - T - 1, one real root
        let roots = real_roots(&q, 30);
        // non-real roots present: the Sturm count sees only one
        assert_eq!(
            roots,
            Err(RootsError::NonRealRoots {
                found: 1,
                degree: 3
            })
        );
    }
}
