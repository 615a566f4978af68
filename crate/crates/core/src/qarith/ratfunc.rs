use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::laurent::{big_to_json, json_to_big, pow_rational, LaurentPoly};
use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// An element of `Q(v)` in canonical form `v^shift * num(v) / den(v)`.
///
/// Invariants: `num` and `den` are integer polynomials with nonzero constant
/// terms, coprime over `Q[v]`, their integer contents are coprime, and the
/// leading coefficient of `den` is positive. Zero is `shift = 0, num = [],
/// den = [1]`. Under these rules two values are equal iff their fields are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            shift: 0,
            num: Vec::new(),
            den: poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(&LaurentPoly::constant(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(&LaurentPoly::monomial(c, 0))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let mut num = q.numer().clone();
        let mut den = q.denom().clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Self {
            shift: 0,
            num: vec![num],
            den: vec![den],
        }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::from_laurent(&LaurentPoly::v_pow(e))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        Self {
            shift: p.low_exponent(),
            num: p.raw_coeffs().to_vec(),
            den: poly::one(),
        }
    }

    /// Build and canonicalize `v^shift * num / den` from arbitrary integer
    /// polynomials; `den` must be nonzero.
    pub fn from_parts(shift: i64, num: Vec<BigInt>, den: Vec<BigInt>) -> Result<Self> {
        let den = poly::trim(den);
        if den.is_empty() {
            return Err(Error::Internal("zero denominator".into()));
        }
        Ok(Self::normalize(shift, poly::trim(num), den))
    }

    fn normalize(mut shift: i64, mut num: Poly, mut den: Poly) -> Self {
        if num.is_empty() {
            return Self::zero();
        }
        let lz = poly::low_zeros(&num);
        if lz > 0 {
            num.drain(..lz);
            shift += lz as i64;
        }
        let lz = poly::low_zeros(&den);
        if lz > 0 {
            den.drain(..lz);
            shift -= lz as i64;
        }
        if !poly::is_one(&den) {
            let g = poly::gcd(&num, &den);
            if g.len() > 1 {
                num = poly::div_exact(&num, &g).expect("gcd divides numerator");
                den = poly::div_exact(&den, &g).expect("gcd divides denominator");
            }
            let cn = poly::content(&num);
            let cd = poly::content(&den);
            let mut c = cn.gcd(&cd);
            if den.last().unwrap().is_negative() {
                c = -c;
            }
            if !c.is_one() {
                num = poly::div_scalar_exact(&num, &c);
                den = poly::div_scalar_exact(&den, &c);
            }
        }
        Self { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && poly::is_one(&self.num) && poly::is_one(&self.den)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    /// True when the value lies in `Z[v, v^-1]`.
    pub fn is_laurent(&self) -> bool {
        poly::is_one(&self.den)
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent()
            .then(|| LaurentPoly::from_parts(self.shift, self.num.clone()))
    }

    /// True for a nonzero rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.shift == 0 && self.num.len() == 1 && self.den.len() == 1)
            .then(|| BigRational::new(self.num[0].clone(), self.den[0].clone()))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(o.shift);
        let a = poly::shift_up(&self.num, (self.shift - s) as usize);
        let b = poly::shift_up(&o.num, (o.shift - s) as usize);
        if self.den == o.den {
            return Self::normalize(s, poly::add(&a, &b), self.den.clone());
        }
        let num = poly::add(&poly::mul(&a, &o.den), &poly::mul(&b, &self.den));
        Self::normalize(s, num, poly::mul(&self.den, &o.den))
    }

    pub fn neg(&self) -> Self {
        Self {
            shift: self.shift,
            num: poly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + o.shift;
        if self.is_laurent() && o.is_laurent() {
            return Self {
                shift,
                num: poly::mul(&self.num, &o.num),
                den: poly::one(),
            };
        }
        // cross-cancel first to keep intermediate degrees small
        let g1 = poly::gcd(&self.num, &o.den);
        let g2 = poly::gcd(&o.num, &self.den);
        let n1 = poly::div_exact(&self.num, &g1).expect("gcd divides");
        let d2 = poly::div_exact(&o.den, &g1).expect("gcd divides");
        let n2 = poly::div_exact(&o.num, &g2).expect("gcd divides");
        let d1 = poly::div_exact(&self.den, &g2).expect("gcd divides");
        Self::normalize(shift, poly::mul(&n1, &n2), poly::mul(&d1, &d2))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// Evaluate at a nonzero rational point.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let d = poly::eval(&self.den, x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        Ok(poly::eval(&self.num, x) / d * pow_rational(x, self.shift))
    }

    /// `{"shift": s, "num": [...], "den": [...]}`, coefficients low to high.
    pub fn to_json(&self) -> Value {
        let list = |p: &[BigInt]| Value::Array(p.iter().map(big_to_json).collect());
        json!({ "shift": self.shift, "num": list(&self.num), "den": list(&self.den) })
    }

    /// Parse and validate the canonical serialized form.
    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("missing field {k}")))
        };
        let shift = field("shift")?
            .as_i64()
            .ok_or_else(|| Error::Parse("shift must be an integer".into()))?;
        let list = |k: &str| -> Result<Vec<BigInt>> {
            field(k)?
                .as_array()
                .ok_or_else(|| Error::Parse(format!("{k} must be an array")))?
                .iter()
                .map(json_to_big)
                .collect()
        };
        let num = list("num")?;
        let den = list("den")?;
        let out = Self::from_parts(shift, num.clone(), den.clone())?;
        if out.shift != shift || out.num != num || out.den != den {
            return Err(Error::Parse(
                "rational function is not in canonical form".into(),
            ));
        }
        Ok(out)
    }
}

fn fmt_poly(p: &[BigInt]) -> String {
    LaurentPoly::from_parts(0, p.to_vec()).to_string()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write!(
                f,
                "{}",
                LaurentPoly::from_parts(self.shift, self.num.clone())
            );
        }
        let n = fmt_poly(&self.num);
        let d = fmt_poly(&self.den);
        match self.shift {
            0 => write!(f, "({n})/({d})"),
            s => write!(f, "v^{s}({n})/({d})"),
        }
    }
}
