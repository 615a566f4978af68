use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::poly;
use crate::error::{Error, Result};

/// An element of `Z[v, v^-1]`.
///
/// Stored densely as `v^low * (c_0 + c_1 v + ...)` with both the first and
/// the last stored coefficient nonzero. The zero polynomial has no
/// coefficients and `low == 0`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_parts(e, vec![c])
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// Build `v^low * sum coeffs[k] v^k`, normalizing.
    pub fn from_parts(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = poly::trim(coeffs);
        let lz = poly::low_zeros(&coeffs);
        if coeffs.is_empty() {
            return Self::zero();
        }
        if lz > 0 {
            coeffs.drain(..lz);
        }
        Self {
            low: low + lz as i64,
            coeffs,
        }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c, e);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    pub fn high_exponent(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub(crate) fn raw_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// The image under the bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::from_parts(-self.high_exponent(), c)
    }

    /// Substitute `v -> v^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_parts(self.low, poly::scale(&self.coeffs, c))
    }

    /// Exact division; `None` if `d` does not divide `self` in `Z[v, v^-1]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly::div_exact(&self.coeffs, &d.coeffs)?;
        Some(Self::from_parts(self.low - d.low, q))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            if self.low < 0 {
                return Err(Error::ZeroEvaluationPoint);
            }
            return Ok(if self.low == 0 {
                BigRational::from_integer(self.coeffs[0].clone())
            } else {
                BigRational::zero()
            });
        }
        let body = poly::eval(&self.coeffs, x);
        Ok(body * pow_rational(x, self.low))
    }

    /// Serialized form: ascending `[exponent, coefficient]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| Value::Array(vec![Value::from(e), big_to_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("Laurent polynomial must be an array".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        let mut last: Option<i64> = None;
        for t in arr {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("term must be [exponent, coefficient]".into()))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| Error::Parse("exponent must be an integer".into()))?;
            if last.is_some_and(|l| l >= e) {
                return Err(Error::Parse("exponents must be strictly ascending".into()));
            }
            last = Some(e);
            let c = json_to_big(&pair[1])?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficients are not stored".into()));
            }
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub(crate) fn big_to_json(c: &BigInt) -> Value {
    // arbitrary_precision keeps the decimal digits verbatim
    serde_json::from_str(&c.to_string()).expect("integer literal is valid JSON")
}

pub(crate) fn json_to_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not an integer: {n}"))),
        _ => Err(Error::Parse(format!("not an integer: {v}"))),
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = poly::shift_up(&self.coeffs, (self.low - low) as usize);
        let b = poly::shift_up(&rhs.coeffs, (rhs.low - low) as usize);
        LaurentPoly::from_parts(low, poly::add(&a, &b))
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_parts(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: poly::neg(&self.coeffs),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Writes terms from the highest exponent down, e.g. `v^2 + 1 + v^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{mag}v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{mag}v^{e}")?,
            }
        }
        Ok(())
    }
}
