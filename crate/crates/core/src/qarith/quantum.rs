//! Quantum integers, factorials and Gaussian binomials in `Z[v, v^-1]`.
//!
//! All functions take the symmetrizer `d` directly (so `v_i = v^d`); the
//! `*_at` variants look `d_i` up from Cartan data.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use crate::cartan::CartanData;
use crate::error::Result;

/// `v_i^a - v_i^-a` with `v_i = v^d`.
fn v_diff(d: i64, a: i64) -> LaurentPoly {
    &LaurentPoly::v_pow(d * a) - &LaurentPoly::v_pow(-d * a)
}

/// `[a]_d = (v^{da} - v^{-da}) / (v^d - v^{-d})`, expanded as the sum
/// `v^{d(a-1)} + v^{d(a-3)} + ... + v^{-d(a-1)}` for `a > 0`.
pub fn qint_d(a: i64, d: i64) -> LaurentPoly {
    if a == 0 {
        return LaurentPoly::zero();
    }
    if a < 0 {
        return -qint_d(-a, d);
    }
    LaurentPoly::from_terms((0..a).map(|k| (d * (a - 1 - 2 * k), BigInt::one())))
}

pub fn qfactorial_d(t: u32, d: i64) -> LaurentPoly {
    (1..=t as i64).fold(LaurentPoly::one(), |acc, s| &acc * &qint_d(s, d))
}

/// Gaussian binomial from the closed product formula, dividing exactly.
pub fn qbinom_d(a: i64, t: u32, d: i64) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for s in 0..t as i64 {
        num = &num * &v_diff(d, a - s);
    }
    for s in 1..=t as i64 {
        den = &den * &v_diff(d, s);
    }
    num.div_exact(&den)
        .expect("Gaussian binomial quotient is a Laurent polynomial")
}

pub fn qint(c: &CartanData, a: i64, i: usize) -> Result<LaurentPoly> {
    Ok(qint_d(a, c.symmetrizer(i)?))
}

pub fn qfactorial(c: &CartanData, t: u32, i: usize) -> Result<LaurentPoly> {
    Ok(qfactorial_d(t, c.symmetrizer(i)?))
}

pub fn qbinom(c: &CartanData, a: i64, t: u32, i: usize) -> Result<LaurentPoly> {
    Ok(qbinom_d(a, t, c.symmetrizer(i)?))
}
