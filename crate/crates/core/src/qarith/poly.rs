//! Dense integer polynomials in `v`, coefficients low to high.
//!
//! These are the building blocks for [`super::RationalFunction`]; every
//! vector handed out of this module is trimmed (no trailing zeros).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Poly = Vec<BigInt>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn one() -> Poly {
    vec![BigInt::one()]
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(out)
}

pub(crate) fn neg(a: &[BigInt]) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if is_one(a) {
        return b.to_vec();
    }
    if is_one(b) {
        return a.to_vec();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Multiply by `v^k`, `k >= 0`.
pub(crate) fn shift_up(a: &[BigInt], k: usize) -> Poly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn div_scalar_exact(a: &[BigInt], c: &BigInt) -> Poly {
    a.iter()
        .map(|x| {
            let (q, r) = x.div_rem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Poly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        a.to_vec()
    } else {
        div_scalar_exact(a, &c)
    }
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[off + k] -= &lr * bc;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Greatest common divisor over `Q[v]`, returned primitive with positive
/// leading coefficient. `gcd(0, 0)` is `1` by convention here.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() && b.is_empty() {
        return one();
    }
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return one();
    }
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            return y;
        }
        if r.len() == 1 {
            return one();
        }
        x = y;
        y = primitive(&r);
    }
}

/// Exact division `a / b` over `Z[v]`; `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if is_one(b) {
        return Some(a.to_vec());
    }
    if b.len() > a.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[off + k] -= &c * bc;
        }
        q[off] = c;
        r = trim(r);
    }
    if r.is_empty() {
        Some(trim(q))
    } else {
        None
    }
}

/// Horner evaluation at a rational point.
pub(crate) fn eval(a: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Number of trailing zero coefficients at the low end.
pub(crate) fn low_zeros(a: &[BigInt]) -> usize {
    a.iter().take_while(|c| c.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        trim(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (v+1)(v-2) and (v+1)(v+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[1, 1])), one());
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[2, 3, 1]), &p(&[1, 0, 5]));
        assert_eq!(div_exact(&a, &p(&[2, 3, 1])), Some(p(&[1, 0, 5])));
        assert_eq!(div_exact(&p(&[1, 0, 1]), &p(&[1, 1])), None);
    }

    #[test]
    fn primitive_normalizes_sign() {
        assert_eq!(primitive(&p(&[4, -6])), p(&[-2, 3]));
    }
}
