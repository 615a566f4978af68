//! Scalar maps from `Z[v, v^-1]` into a working field, and the relation
//! families of the quantized enveloping algebra checked on explicit matrices.

use num_rational::BigRational;
use num_traits::Zero;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::qarith::{qbinom_d, qfactorial_d, qint_d, LaurentPoly, RationalFunction};
use crate::report::VerificationReport;

/// How Laurent polynomials in `v` become field elements.
pub trait Scalars: Sync {
    type F: Field;

    fn laurent(&self, p: &LaurentPoly) -> Self::F;

    fn v_pow(&self, e: i64) -> Self::F {
        self.laurent(&LaurentPoly::v_pow(e))
    }

    fn qint(&self, a: i64, d: i64) -> Self::F {
        self.laurent(&qint_d(a, d))
    }

    fn qbinom(&self, a: i64, t: u32, d: i64) -> Self::F {
        self.laurent(&qbinom_d(a, t, d))
    }

    fn qfactorial(&self, t: u32, d: i64) -> Self::F {
        self.laurent(&qfactorial_d(t, d))
    }
}

/// `v` stays an indeterminate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Generic;

impl Scalars for Generic {
    type F = RationalFunction;

    fn laurent(&self, p: &LaurentPoly) -> RationalFunction {
        RationalFunction::from_laurent(p)
    }
}

/// `v` replaced by a nonzero rational.
#[derive(Clone, Debug)]
pub struct AtPoint(BigRational);

impl AtPoint {
    pub fn new(v0: BigRational) -> Result<Self> {
        if Zero::is_zero(&v0) {
            return Err(Error::ZeroEvaluationPoint);
        }
        Ok(Self(v0))
    }

    pub fn point(&self) -> &BigRational {
        &self.0
    }
}

impl Scalars for AtPoint {
    type F = BigRational;

    fn laurent(&self, p: &LaurentPoly) -> BigRational {
        p.evaluate(&self.0).expect("nonzero point")
    }
}

/// `sum_s (-1)^s [m choose s]_i X_i^{m-s} X_j X_i^s` with `m = 1 - a_ij`,
/// using `coef(s)` for the binomial.
pub fn serre_sum<F: Field>(
    xi: &Matrix<F>,
    xj: &Matrix<F>,
    m: u32,
    coef: impl Fn(u32) -> F,
) -> Matrix<F> {
    let n = xi.rows();
    let mut powers = vec![Matrix::identity(n)];
    for _ in 0..m {
        let next = powers.last().unwrap().mul(xi);
        powers.push(next);
    }
    let mut acc = Matrix::zeros(n, n);
    for s in 0..=m {
        let term = powers[(m - s) as usize].mul(xj).mul(&powers[s as usize]);
        let c = coef(s);
        let c = if s % 2 == 1 { c.negated() } else { c };
        acc = acc.add(&term.scale(&c));
    }
    acc
}

/// `E, F, K, K^-1` for each simple index.
pub struct UAction<'a, F> {
    pub e: &'a [Matrix<F>],
    pub f: &'a [Matrix<F>],
    pub k: &'a [Matrix<F>],
    pub kinv: &'a [Matrix<F>],
}

/// The five relation families of the quantized enveloping algebra.
pub fn verify_u_relations<S: Scalars>(
    c: &CartanData,
    s: &S,
    act: &UAction<'_, S::F>,
) -> VerificationReport {
    let n = c.rank();
    let dim = act.e.first().map_or(0, Matrix::rows);
    let id = Matrix::<S::F>::identity(dim);
    let d = c.symmetrizers();
    let mut r = VerificationReport::new("U");
    for i in 0..n {
        for j in 0..n {
            r.equal(
                "U(a)",
                format!("KK i={} j={}", i + 1, j + 1),
                &act.k[i].mul(&act.k[j]),
                &act.k[j].mul(&act.k[i]),
            );
        }
        r.equal(
            "U(a)",
            format!("KKinv i={}", i + 1),
            &act.k[i].mul(&act.kinv[i]),
            &id,
        );
        r.equal(
            "U(a)",
            format!("Kinv K i={}", i + 1),
            &act.kinv[i].mul(&act.k[i]),
            &id,
        );
    }
    for i in 0..n {
        let denom = s
            .laurent(&(&LaurentPoly::v_pow(d[i]) - &LaurentPoly::v_pow(-d[i])))
            .inverse();
        for j in 0..n {
            let comm = act.e[i].mul(&act.f[j]).sub(&act.f[j].mul(&act.e[i]));
            let rhs = if i == j {
                match &denom {
                    Some(q) => act.k[i].sub(&act.kinv[i]).scale(q),
                    None => {
                        r.record_note(
                            "U(b)",
                            format!("i={} j={}", i + 1, j + 1),
                            false,
                            "v_i - v_i^-1 vanishes",
                        );
                        continue;
                    }
                }
            } else {
                Matrix::zeros(dim, dim)
            };
            r.equal("U(b)", format!("i={} j={}", i + 1, j + 1), &comm, &rhs);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let q = s.v_pow(d[i] * c.entry(i, j));
            let qi = s.v_pow(-d[i] * c.entry(i, j));
            r.equal(
                "U(c)",
                format!("KE i={} j={}", i + 1, j + 1),
                &act.k[i].mul(&act.e[j]),
                &act.e[j].mul(&act.k[i]).scale(&q),
            );
            r.equal(
                "U(c)",
                format!("KF i={} j={}", i + 1, j + 1),
                &act.k[i].mul(&act.f[j]),
                &act.f[j].mul(&act.k[i]).scale(&qi),
            );
        }
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let m = (1 - c.entry(i, j)) as u32;
            let coef = |t| s.qbinom(m as i64, t, d[i]);
            r.zero(
                "U(d)",
                format!("i={} j={}", i + 1, j + 1),
                &serre_sum(&act.e[i], &act.e[j], m, coef),
            );
            r.zero(
                "U(e)",
                format!("i={} j={}", i + 1, j + 1),
                &serre_sum(&act.f[i], &act.f[j], m, coef),
            );
        }
    }
    r
}
