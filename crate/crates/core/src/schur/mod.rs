//! The generalized q-Schur algebra realized on a direct sum of simple
//! modules: assembly, relation suites, dimension, cell datum and
//! specialization.

mod cell;
mod closure;
mod dump;
mod rep;
mod verify;

use num_rational::BigRational;

pub use cell::{cell_basis, cell_element, CellDatum, Involution};
pub use closure::{dense_closure, graded_closure, GradedSpan, Homogeneous};
pub use dump::{module_dump, rep_dump};
pub use rep::{
    assemble, assemble_with_budget, evaluate_matrices, k_elements, RepMatrices, SchurRep,
};
pub use verify::{
    classical_suite, divided_suite, nilpotency_bound, presentation_suite, verify_divided,
    verify_presentation, verify_presentation_with, Fault,
};

use crate::cartan::{simple_root, CartanData};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hwmodule::{build_module_with_budget, tensor_power, ModuleAction};
use crate::linalg::Matrix;
use crate::qarith::RationalFunction;
use crate::relations::{AtPoint, Scalars};
use crate::report::VerificationReport;
use crate::weyl::{Weight, WeightSet};

/// Default cap on algebra dimensions reached by span closure.
pub const DEFAULT_ALGEBRA_BUDGET: usize = 20_000;

fn homogeneous<'a, F: Field>(
    c: &CartanData,
    e: &'a [Matrix<F>],
    f: &'a [Matrix<F>],
) -> Vec<Homogeneous<'a, F>> {
    let mut gens = Vec::with_capacity(2 * c.rank());
    for i in 0..c.rank() {
        let a = simple_root(c, i).expect("index in range");
        gens.push(Homogeneous {
            matrix: &e[i],
            shift: a.clone(),
        });
        gens.push(Homogeneous {
            matrix: &f[i],
            shift: a.neg(),
        });
    }
    gens
}

/// Span closure of `{E_i, F_i, i_mu}` over `Q(v)`.
pub fn algebra_span(r: &SchurRep, budget: usize) -> Result<GradedSpan<RationalFunction>> {
    let m = r.matrices();
    graded_closure(&m.weights, &homogeneous(r.cartan(), &m.e, &m.f), budget)
}

pub fn algebra_dimension(r: &SchurRep) -> Result<usize> {
    Ok(algebra_span(r, DEFAULT_ALGEBRA_BUDGET)?.dim())
}

/// Span-closure dimension after substituting `v = v0`. A heuristic
/// pre-screen; the exact computation is authoritative.
pub fn algebra_dimension_at(r: &SchurRep, v0: &BigRational) -> Result<usize> {
    AtPoint::new(v0.clone())?;
    let m = evaluate_matrices(r.matrices(), v0)?;
    Ok(graded_closure(
        &m.weights,
        &homogeneous(r.cartan(), &m.e, &m.f),
        DEFAULT_ALGEBRA_BUDGET,
    )?
    .dim())
}

/// Outcome of substituting `v = v0`.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub v0: BigRational,
    pub matrices: RepMatrices<BigRational>,
    pub report: VerificationReport,
    /// Span-closure dimension of the specialized generators.
    pub dimension: usize,
}

/// Evaluate at `v0`. At `v0 = 1` the classical relations are checked with
/// `h_i = sum mu_i i_mu`; elsewhere the quantum relations with `v = v0`.
pub fn specialize(r: &SchurRep, v0: &BigRational) -> Result<Specialization> {
    let s = AtPoint::new(v0.clone())?;
    let m = evaluate_matrices(r.matrices(), v0)?;
    let report = if *v0 == BigRational::from_integer(1.into()) {
        classical_suite(r.cartan(), r.wpi(), &m)
    } else {
        presentation_suite(r.cartan(), r.wpi(), &m, &s, Fault::None)
    };
    let dimension = graded_closure(
        &m.weights,
        &homogeneous(r.cartan(), &m.e, &m.f),
        DEFAULT_ALGEBRA_BUDGET,
    )?
    .dim();
    Ok(Specialization {
        v0: v0.clone(),
        matrices: m,
        report,
        dimension,
    })
}

/// Dimension of the image of the quantized enveloping algebra acting on
/// the `d`-th tensor power of the simple module of highest weight `lv`.
///
/// Weight projectors are obtained as products of the `K_i` and checked
/// against the diagonal projectors before the graded closure runs.
pub fn enveloping_image_dim(c: &CartanData, lv: &Weight, d: usize, budget: usize) -> Result<usize> {
    let v = ModuleAction::from(&build_module_with_budget(c, lv, budget)?);
    let space = (v.dim() as u128).pow(d as u32);
    if space > budget as u128 {
        return Err(Error::ResourceBudgetExceeded(format!(
            "tensor power of dimension {space} > {budget}"
        )));
    }
    let t = tensor_power(&v, d)?;
    let weights = t.weights().to_vec();
    let support: WeightSet = weights.iter().cloned().collect();
    let k = t.k_all(1);
    let sym = c.symmetrizers();
    let g = crate::relations::Generic;
    for lam in &support {
        let mut j = Matrix::identity(t.dim());
        for i in 0..c.rank() {
            for mu in support.iter().filter(|mu| mu.coord(i) != lam.coord(i)) {
                let shift = Matrix::identity(t.dim()).scale(&g.v_pow(sym[i] * mu.coord(i)));
                j = j.mul(&k[i].sub(&shift));
            }
        }
        let proj = Matrix::diagonal(
            weights
                .iter()
                .map(|w| {
                    if w == lam {
                        RationalFunction::one()
                    } else {
                        RationalFunction::zero()
                    }
                })
                .collect(),
        );
        let q = (0..t.dim())
            .find(|&p| &weights[p] == lam)
            .map(|p| j.get(p, p).clone())
            .unwrap_or_else(RationalFunction::zero);
        if q.is_zero() || j != proj.scale(&q) {
            return Err(Error::Internal(format!(
                "product of K's does not reduce to the projector at {lam}"
            )));
        }
    }
    let span = graded_closure(
        &weights,
        &homogeneous(c, t.e(), t.f()),
        DEFAULT_ALGEBRA_BUDGET,
    )?;
    Ok(span.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin_cartan;

    fn rep(t: char, n: usize, pi: &str) -> SchurRep {
        assemble(
            &builtin_cartan(t, n).unwrap(),
            &WeightSet::parse(pi).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(algebra_dimension(&rep('A', 1, "1")).unwrap(), 4);
        assert_eq!(algebra_dimension(&rep('A', 1, "0;2")).unwrap(), 10);
        assert_eq!(algebra_dimension(&rep('A', 2, "1,0")).unwrap(), 9);
    }

    #[test]
    fn dense_agrees_with_graded() {
        let r = rep('A', 1, "0;2");
        let m = r.matrices();
        let mut gens: Vec<Matrix<RationalFunction>> = m.e.clone();
        gens.extend(m.f.iter().cloned());
        gens.extend(m.idem.values().cloned());
        assert_eq!(dense_closure(&gens, r.dim(), 1000).unwrap(), 10);
    }

    #[test]
    fn classical_sl2() {
        let r = rep('A', 1, "1");
        let sp = specialize(&r, &BigRational::from_integer(1.into())).unwrap();
        assert!(sp.report.passed(), "{}", sp.report);
        assert_eq!(sp.dimension, 4);
        let h = sp
            .matrices
            .idem
            .iter()
            .fold(Matrix::zeros(2, 2), |acc, (mu, x)| {
                acc.add(&x.scale(&BigRational::from_integer(mu.coord(0).into())))
            });
        let q = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(h, Matrix::diagonal(vec![q(1), q(-1)]));
        assert!(matches!(
            specialize(&r, &BigRational::from_integer(0.into())),
            Err(Error::ZeroEvaluationPoint)
        ));
    }

    #[test]
    fn envelope() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let w = |x| Weight::new(vec![x]);
        assert_eq!(enveloping_image_dim(&a1, &w(2), 1, 400).unwrap(), 9);
        assert_eq!(enveloping_image_dim(&a1, &w(1), 1, 400).unwrap(), 4);
        assert_eq!(enveloping_image_dim(&a1, &w(1), 2, 400).unwrap(), 10);
    }

    #[test]
    fn cells_sl2() {
        let r = rep('A', 1, "0;2");
        let span = algebra_span(&r, 1000).unwrap();
        let cd = cell_basis(&r, &span).unwrap();
        assert!(cd.report.passed(), "{}", cd.report);
        assert_eq!(cd.count, 10);
    }
}
