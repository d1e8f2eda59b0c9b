//! Complete factorization over the rationals for totally-real integer
//! polynomials, by root-subset recombination.
//!
//! The method: take the square-free part, bracket all of its real roots
//! tightly enough that any true factor's coefficients land within 1/4 of
//! integers, then walk root subsets by increasing size, round each
//! candidate product to an integer polynomial, and certify by exact trial
//! division. A factor is emitted only on exact division, so precision
//! affects completeness, never soundness; the bracket width is chosen from
//! an explicit perturbation bound so completeness holds too.

use super::{real_roots, IntPolynomial, RealRoot, RootsError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Worst case explores `2^cap` root subsets; beyond this the call fails
/// loudly instead of silently degrading.
pub const FACTOR_DEGREE_CAP: usize = 24;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has non-real roots ({found} real, square-free degree {degree}); out of supported class")]
    NonRealRoots { found: usize, degree: usize },
    #[error("degree {degree} exceeds the factorization cap {FACTOR_DEGREE_CAP}")]
    DegreeTooLarge { degree: usize },
}

/// Factors `p` into primitive irreducible integer polynomials with
/// multiplicities. `p.content()` times the product of the factors (with
/// multiplicities) reconstructs `p` exactly.
pub fn factor_over_q(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    if degree > FACTOR_DEGREE_CAP {
        return Err(FactorError::DegreeTooLarge { degree });
    }
    if degree == 0 {
        return Ok(vec![]);
    }

    let sf = p.squarefree_part().expect("non-zero");
    let irreducibles = factor_squarefree(&sf)?;

    let mut out = Vec::with_capacity(irreducibles.len());
    for f in irreducibles {
        let mut mult = 0u32;
        let mut work = p.primitive_part();
        while let Some(q) = work.divide_exact(&f) {
            mult += 1;
            work = q;
        }
        debug_assert!(mult >= 1);
        out.push((f, mult));
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(out)
}

/// True when `p` is irreducible over the rationals (degree >= 1 and a
/// single factor of multiplicity one up to content).
pub fn is_irreducible_over_q(p: &IntPolynomial) -> Result<bool, FactorError> {
    match p.degree() {
        None | Some(0) => Ok(false),
        Some(_) => {
            let factors = factor_over_q(p)?;
            Ok(factors.len() == 1 && factors[0].1 == 1)
        }
    }
}

/// Bracket width making every true factor's scaled coefficients land
/// within 0.1 of integers: perturbing `k <= half` roots of size at most
/// `bound` by `w` moves any elementary-symmetric coefficient by at most
/// `k 2^(k-1) max(1,bound)^(k-1) w`, times the leading coefficient.
fn sufficient_digits(q: &IntPolynomial) -> u32 {
    let lc = q.leading().unwrap().abs().to_f64().unwrap_or(f64::MAX);
    let max_c = q
        .coeffs()
        .iter()
        .map(|c| c.abs().to_f64().unwrap_or(f64::MAX))
        .fold(0.0f64, f64::max);
    let bound = (max_c / lc.max(1.0) + 1.0).max(2.0);
    let half = (q.degree().unwrap_or(0) / 2).max(1) as f64;
    let digits = 1.0
        + lc.log10().max(0.0)
        + half.log10()
        + (half - 1.0) * 2.0f64.log10()
        + (half - 1.0) * bound.log10()
        + 2.0;
    digits.ceil() as u32 + 2
}

fn half_rational() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn quarter_rational() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4))
}

fn nearest_integer(x: &BigRational) -> BigInt {
    (x + half_rational()).floor().to_integer()
}

/// Monic product `prod (x - roots[i])` over the rationals.
fn monic_product(mids: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::one()];
    for m in mids {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * m;
        }
        coeffs = next;
    }
    coeffs
}

/// Fast reject in floating point; errs on the side of keeping candidates.
fn plausible_f64(lc: f64, mids: &[f64]) -> bool {
    let mut coeffs = vec![1.0f64];
    for &m in mids {
        let mut next = vec![0.0f64; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * m;
        }
        coeffs = next;
    }
    coeffs.iter().all(|&c| {
        let scaled = lc * c;
        // distances near 2^53 are not representable; defer to exact check
        scaled.abs() >= 2f64.powi(50) || (scaled - scaled.round()).abs() < 0.3
    })
}

/// Advances `idx` to the next strictly increasing k-combination in `0..n`.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits k-subsets of `items` until the callback claims one.
fn find_subset<F>(items: &[usize], k: usize, mut accept: F) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if k > items.len() || k == 0 {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
        if accept(&subset) {
            return Some(subset);
        }
        if !next_combination(&mut idx, items.len()) {
            return None;
        }
    }
}

fn factor_squarefree(sf: &IntPolynomial) -> Result<Vec<IntPolynomial>, FactorError> {
    let degree = sf.degree().unwrap();
    if degree == 0 {
        return Ok(vec![]);
    }
    if degree == 1 {
        return Ok(vec![sf.primitive_part()]);
    }

    let digits = sufficient_digits(sf);
    let roots = match real_roots(sf, digits) {
        Ok(r) => r,
        Err(RootsError::NonRealRoots { found, degree }) => {
            return Err(FactorError::NonRealRoots { found, degree })
        }
        Err(e) => unreachable!("square-free by construction: {e}"),
    };

    let mids: Vec<BigRational> = roots.iter().map(RealRoot::midpoint).collect();
    let mids_f64: Vec<f64> = roots.iter().map(RealRoot::approx).collect();

    let mut factors = Vec::new();
    let mut q = sf.primitive_part();
    let mut active: Vec<usize> = (0..roots.len()).collect();

    'outer: loop {
        let deg_q = q.degree().unwrap();
        if deg_q <= 1 {
            if deg_q == 1 {
                factors.push(q.primitive_part());
            }
            break;
        }
        let lc = q.leading().unwrap().clone();
        let lc_f64 = lc.to_f64().unwrap_or(f64::MAX);
        let lc_rat = BigRational::from(lc.clone());
        let quarter = quarter_rational();

        for k in 1..=deg_q / 2 {
            let mut found: Option<(Vec<usize>, IntPolynomial, IntPolynomial)> = None;
            find_subset(&active, k, |subset| {
                let f_mids: Vec<f64> = subset.iter().map(|&i| mids_f64[i]).collect();
                if !plausible_f64(lc_f64, &f_mids) {
                    return false;
                }
                let sel: Vec<BigRational> = subset.iter().map(|&i| mids[i].clone()).collect();
                let product = monic_product(&sel);
                let mut candidate = Vec::with_capacity(product.len());
                for c in &product {
                    let scaled = c * &lc_rat;
                    let nearest = nearest_integer(&scaled);
                    if (&scaled - BigRational::from(nearest.clone())).abs() >= quarter {
                        return false;
                    }
                    candidate.push(nearest);
                }
                let candidate = IntPolynomial::new(candidate).primitive_part();
                if candidate.degree() != Some(k) {
                    return false;
                }
                match q.divide_exact(&candidate) {
                    Some(quot) => {
                        found = Some((subset.to_vec(), candidate, quot));
                        true
                    }
                    None => false,
                }
            });
            if let Some((subset, factor, quotient)) = found {
                factors.push(factor);
                active.retain(|i| !subset.contains(i));
                q = quotient.primitive_part();
                continue 'outer;
            }
        }
        // no factor of degree <= deg/2 divides: q is irreducible
        factors.push(q.primitive_part());
        break;
    }
    Ok(factors)
}
