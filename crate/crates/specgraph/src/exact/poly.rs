//! Polynomials with arbitrary-precision integer and rational coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial has an empty coefficient vector. Integer
//! polynomials normalize to primitive form (coefficient gcd 1, positive
//! leading coefficient) where noted; rational polynomials used for local
//! minimal polynomials are monic by construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial over the integers, ascending coefficient order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "T")?;
                    } else {
                        write!(f, "T^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `T^d` with a coefficient of one.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Signed content: gcd of the coefficients carrying the sign of the
    /// leading coefficient, so that `self = content * primitive_part`.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_some_and(Signed::is_negative) {
            -g
        } else {
            g
        }
    }

    /// Primitive associate: coefficient gcd one, positive leading
    /// coefficient. The zero polynomial stays zero.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let c = self.content();
        IntPolynomial::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// over the integers. Division is performed over the rationals and the
    /// quotient is checked for integrality.
    pub fn divide_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = BigRational::from(d.leading().unwrap().clone());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let sub = &q * BigRational::from(dc.clone());
                    rem[k + j] -= sub;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quot.len());
        for q in quot {
            if !q.denom().is_one() {
                return None;
            }
            out.push(q.numer().clone());
        }
        Some(IntPolynomial::new(out))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    /// The multiplier is padded to exactly that power so callers can undo
    /// its sign.
    pub(crate) fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo_rem by zero divisor");
        let mut r = self.clone();
        let lead = d.leading().unwrap().clone();
        let steps = match self.degree() {
            Some(n) if n >= dd => n - dd + 1,
            _ => 0,
        };
        let mut count = 0usize;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let packed = r.scale(&lead);
            let shift = IntPolynomial::monomial(rd - dd).mul(d).scale(&r.coeff(rd));
            r = packed.sub(&shift);
            count += 1;
        }
        for _ in count..steps {
            r = r.scale(&lead);
        }
        r
    }

    /// Polynomial gcd over the integers via the primitive PRS, returned in
    /// primitive form with a positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Primitive square-free part `self / gcd(self, self')`.
    ///
    /// For the characteristic polynomial of a real symmetric matrix this is
    /// the minimal polynomial (up to the primitive normalization), and its
    /// degree is the number of distinct eigenvalues.
    pub fn squarefree_part(&self) -> Result<IntPolynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(IntPolynomial::one());
        }
        let g = self.gcd(&self.derivative());
        let q = self.divide_exact(&g).expect("gcd divides its argument");
        Ok(q.primitive_part())
    }

    /// Monic rational polynomial with the same roots.
    pub fn to_monic_rational(&self) -> RatPolynomial {
        let lead = BigRational::from(self.leading().cloned().unwrap_or_else(BigInt::one));
        RatPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()) / &lead)
                .collect(),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("IntPolynomial", 1)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for s in &repr.coeffs {
            coeffs.push(
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad big-integer coefficient: {e}")))?,
            );
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Monic polynomial over the rationals (local minimal polynomials).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RatPolynomial{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

impl RatPolynomial {
    /// Monic polynomial `T^d + c_{d-1} T^{d-1} + ... + c_0` from the lower
    /// coefficients.
    pub fn monic_from_lower(lower: Vec<BigRational>) -> Self {
        let mut coeffs = lower;
        coeffs.push(BigRational::one());
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Remainder of `self` divided by a non-zero integer polynomial.
    pub fn rem_by_int(&self, d: &IntPolynomial) -> RatPolynomial {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = BigRational::from(d.leading().unwrap().clone());
        let trim = |rem: &mut Vec<BigRational>| {
            while rem.len() > 1 && rem.last().unwrap().is_zero() {
                rem.pop();
            }
        };
        let mut rem = self.coeffs.clone();
        trim(&mut rem);
        while rem.len() > dd && !(rem.len() == 1 && rem[0].is_zero()) {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for (j, dc) in d.coeffs().iter().enumerate() {
                let sub = &q * BigRational::from(dc.clone());
                rem[k + j] -= sub;
            }
            rem.pop();
            trim(&mut rem);
        }
        if rem.is_empty() {
            rem.push(BigRational::zero());
        }
        RatPolynomial { coeffs: rem }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the integer polynomial `d` divides this one exactly.
    pub fn divisible_by_int(&self, d: &IntPolynomial) -> bool {
        self.rem_by_int(d).is_zero()
    }

    /// Clears denominators to the primitive integer associate.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}
