use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix};
use crate::qarith::RationalFunction;
use crate::report::VerificationReport;

use super::closure::GradedSpan;
use super::rep::SchurRep;

type RF = RationalFunction;

/// Anti-involution `X -> G^-1 X^T G` for the contravariant form `G`.
#[derive(Clone, Debug)]
pub struct Involution {
    gram: Matrix<RF>,
    gram_inv: Matrix<RF>,
}

impl Involution {
    pub fn new(gram: &Matrix<RF>) -> Result<Self> {
        let gram_inv = gram
            .inverse()
            .ok_or_else(|| Error::Internal("singular contravariant form".into()))?;
        Ok(Self {
            gram: gram.clone(),
            gram_inv,
        })
    }

    pub fn apply(&self, x: &Matrix<RF>) -> Matrix<RF> {
        self.gram_inv.mul(&x.transpose()).mul(&self.gram)
    }
}

/// Cell elements `c[lambda; S, T] : x -> <T, x> S` on each summand, with
/// the anti-involution and the results of the cellular checks.
#[derive(Clone, Debug)]
pub struct CellDatum {
    /// For each summand: its highest weight and label count.
    pub labels: Vec<(crate::weyl::Weight, usize)>,
    pub iota: Involution,
    pub report: VerificationReport,
    pub count: usize,
}

/// Global index of label `s` of summand `lam`.
fn global(r: &SchurRep, lam: usize, s: usize) -> usize {
    r.offsets()[lam] + s
}

pub fn cell_element(r: &SchurRep, lam: usize, s: usize, t: usize) -> Matrix<RF> {
    let n = r.dim();
    let gs = global(r, lam, s);
    let gt = global(r, lam, t);
    let mut c = Matrix::zeros(n, n);
    for p in 0..n {
        let g = r.gram().get(gt, p);
        if !g.is_zero() {
            c.set(gs, p, g.clone());
        }
    }
    c
}

/// Coefficients `r_u(S', S)` read off `u c[S, T]` through a column where
/// the row `T` of the form is nonzero.
fn extract(r: &SchurRep, lam: usize, t: usize, prod: &Matrix<RF>) -> Option<Vec<RF>> {
    let gt = global(r, lam, t);
    let p = (0..r.dim()).find(|&p| !r.gram().get(gt, p).is_zero())?;
    let g = r.gram().get(gt, p).inverse()?;
    let size = r.summands()[lam].dim();
    Some(
        (0..size)
            .map(|s2| prod.get(global(r, lam, s2), p).times(&g))
            .collect(),
    )
}

/// Build all cell elements and check membership in `span`, the cellular
/// multiplication rule for every generator with two choices of `T`, and
/// `iota(c[S,T]) = c[T,S]`.
pub fn cell_basis(r: &SchurRep, span: &GradedSpan<RF>) -> Result<CellDatum> {
    let iota = Involution::new(r.gram())?;
    let mut report = VerificationReport::new("cell");
    let c = r.cartan();

    for i in 0..c.rank() {
        report.equal("iota", format!("E{}", i + 1), &iota.apply(r.e(i)), r.f(i));
        report.equal("iota", format!("F{}", i + 1), &iota.apply(r.f(i)), r.e(i));
        report.equal(
            "iota^2",
            format!("E{}", i + 1),
            &iota.apply(&iota.apply(r.e(i))),
            r.e(i),
        );
        report.equal(
            "iota^2",
            format!("F{}", i + 1),
            &iota.apply(&iota.apply(r.f(i))),
            r.f(i),
        );
    }
    for (mu, x) in &r.matrices().idem {
        report.equal("iota", format!("i{mu}"), &iota.apply(x), x);
    }

    let mut gens: Vec<(String, &Matrix<RF>)> = Vec::new();
    for i in 0..c.rank() {
        gens.push((format!("E{}", i + 1), r.e(i)));
        gens.push((format!("F{}", i + 1), r.f(i)));
    }
    for (mu, x) in &r.matrices().idem {
        gens.push((format!("i{mu}"), x));
    }

    let mut labels = Vec::new();
    let mut count = 0;
    let mut independent = Echelon::new(r.dim() * r.dim());
    for (lam, m) in r.summands().iter().enumerate() {
        let size = m.dim();
        labels.push((m.highest_weight().clone(), size));
        let hw = m.highest_weight();
        for s in 0..size {
            for t in 0..size {
                let cst = cell_element(r, lam, s, t);
                if !span.contains(&cst) {
                    return Err(Error::MembershipFailure {
                        lambda: hw.to_string(),
                        s,
                        t,
                    });
                }
                let cts = cell_element(r, lam, t, s);
                report.equal(
                    "iota(c)",
                    format!("{hw} S={s} T={t}"),
                    &iota.apply(&cst),
                    &cts,
                );
                if !independent.insert(cst.entries().to_vec()) {
                    report.record("indep", format!("{hw} S={s} T={t}"), false);
                }
                count += 1;
            }
        }
        // cellular rule with T = first and T = last label
        let (t1, t2) = (0, size - 1);
        for (name, u) in &gens {
            for s in 0..size {
                let tag = format!("{name} {hw} S={s}");
                let p1 = u.mul(&cell_element(r, lam, s, t1));
                let p2 = u.mul(&cell_element(r, lam, s, t2));
                let (Some(r1), Some(r2)) = (extract(r, lam, t1, &p1), extract(r, lam, t2, &p2))
                else {
                    report.record_note("r_u", tag, false, "zero row of the form");
                    continue;
                };
                let rebuild = |coef: &[RF], t: usize| {
                    coef.iter()
                        .enumerate()
                        .fold(Matrix::zeros(r.dim(), r.dim()), |acc, (s2, k)| {
                            if k.is_zero() {
                                acc
                            } else {
                                acc.add(&cell_element(r, lam, s2, t).scale(k))
                            }
                        })
                };
                report.equal("r_u", format!("{tag} T={t1}"), &p1, &rebuild(&r1, t1));
                report.equal("r_u", format!("{tag} T={t2}"), &p2, &rebuild(&r2, t2));
                report.record("r_u(T)", tag.clone(), r1 == r2);
                let block: Vec<RF> = (0..size)
                    .map(|s2| u.get(global(r, lam, s2), global(r, lam, s)).clone())
                    .collect();
                report.record("r_u(action)", tag, r1 == block);
            }
        }
    }
    report.record_note(
        "count",
        format!("{count}"),
        count == span.dim() && independent.len() == count,
        format!("span dimension {}", span.dim()),
    );
    Ok(CellDatum {
        labels,
        iota,
        report,
        count,
    })
}
