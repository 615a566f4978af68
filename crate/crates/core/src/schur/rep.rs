use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hwmodule::{build_module_with_budget, BasisLabel, HWModule, DEFAULT_BUDGET};
use crate::linalg::Matrix;
use crate::qarith::RationalFunction;
use crate::relations::Scalars;
use crate::weyl::{is_saturated, orbit, saturate, Weight, WeightSet};

type RF = RationalFunction;

/// Generator matrices of a weight-graded representation: `E_i`, `F_i` and
/// one idempotent per weight of `W pi`, over any field.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrices<F> {
    pub weights: Vec<Weight>,
    pub e: Vec<Matrix<F>>,
    pub f: Vec<Matrix<F>>,
    pub idem: BTreeMap<Weight, Matrix<F>>,
}

impl<F: Field> RepMatrices<F> {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `i_mu`, or zero when `mu` is outside `W pi`.
    pub fn idem_or_zero(&self, mu: &Weight) -> Matrix<F> {
        self.idem
            .get(mu)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(), self.dim()))
    }

    /// `sum_mu s(mu) i_mu`.
    pub fn weighted_sum(&self, s: impl Fn(&Weight) -> F) -> Matrix<F> {
        let mut diag = vec![F::zero(); self.dim()];
        for (k, w) in self.weights.iter().enumerate() {
            diag[k] = s(w);
        }
        Matrix::diagonal(diag)
    }

    /// `K_i^sign = sum_mu v_i^{sign mu_i} i_mu`, summed over the idempotents.
    pub fn k<S: Scalars<F = F>>(&self, c: &CartanData, s: &S, i: usize, sign: i64) -> Matrix<F> {
        let d = c.symmetrizers()[i];
        self.idem
            .iter()
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, (mu, p)| {
                acc.add(&p.scale(&s.v_pow(sign * d * mu.coord(i))))
            })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RepMatrices<G> {
        RepMatrices {
            weights: self.weights.clone(),
            e: self.e.iter().map(|m| m.map(f)).collect(),
            f: self.f.iter().map(|m| m.map(f)).collect(),
            idem: self
                .idem
                .iter()
                .map(|(w, m)| (w.clone(), m.map(f)))
                .collect(),
        }
    }
}

/// The generalized q-Schur algebra realized on the direct sum of the simple
/// modules with highest weights in a saturated set.
#[derive(Clone, Debug)]
pub struct SchurRep {
    cartan: CartanData,
    pi: WeightSet,
    wpi: WeightSet,
    summands: Vec<HWModule>,
    offsets: Vec<usize>,
    labels: Vec<(usize, BasisLabel)>,
    mats: RepMatrices<RF>,
    gram: Matrix<RF>,
}

impl SchurRep {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn pi(&self) -> &WeightSet {
        &self.pi
    }

    pub fn wpi(&self) -> &WeightSet {
        &self.wpi
    }

    pub fn summands(&self) -> &[HWModule] {
        &self.summands
    }

    /// First global index of each summand.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Summand index and local label of each basis vector.
    pub fn labels(&self) -> &[(usize, BasisLabel)] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn matrices(&self) -> &RepMatrices<RF> {
        &self.mats
    }

    pub fn e(&self, i: usize) -> &Matrix<RF> {
        &self.mats.e[i]
    }

    pub fn f(&self, i: usize) -> &Matrix<RF> {
        &self.mats.f[i]
    }

    pub fn idempotent(&self, mu: &Weight) -> Option<&Matrix<RF>> {
        self.mats.idem.get(mu)
    }

    pub fn gram(&self) -> &Matrix<RF> {
        &self.gram
    }

    /// `sum_lambda (dim L_lambda)^2`.
    pub fn predicted_dimension(&self) -> usize {
        self.summands.iter().map(|m| m.dim() * m.dim()).sum()
    }

    /// Replace the generator matrices; used for fault injection.
    pub fn with_matrices(&self, mats: RepMatrices<RF>) -> SchurRep {
        SchurRep {
            mats,
            ..self.clone()
        }
    }
}

pub fn assemble(c: &CartanData, pi: &WeightSet) -> Result<SchurRep> {
    assemble_with_budget(c, pi, DEFAULT_BUDGET)
}

/// Build every summand and form block-diagonal generators and the weight
/// projectors for `W pi`.
pub fn assemble_with_budget(c: &CartanData, pi: &WeightSet, budget: usize) -> Result<SchurRep> {
    if pi.is_empty() {
        return Err(Error::EmptyPi);
    }
    pi.check_rank(c.rank())?;
    if !is_saturated(c, pi)? {
        let closure = saturate(c, pi)?;
        let missing: Vec<String> = closure
            .iter()
            .filter(|w| !pi.contains(w))
            .map(Weight::to_string)
            .collect();
        return Err(Error::NotSaturated(missing.join(",")));
    }
    let wpi = orbit(c, pi);
    // highest weight first in each summand list
    let tops: Vec<&Weight> = pi.iter().rev().collect();
    let summands: Vec<HWModule> = tops
        .par_iter()
        .map(|l| build_module_with_budget(c, l, budget))
        .collect::<Result<_>>()?;
    let dim: usize = summands.iter().map(HWModule::dim).sum();
    if dim > budget {
        return Err(Error::ResourceBudgetExceeded(format!(
            "representation space of dimension {dim} > {budget}"
        )));
    }
    let mut offsets = Vec::with_capacity(summands.len());
    let mut labels = Vec::with_capacity(dim);
    let mut acc = 0;
    for (s, m) in summands.iter().enumerate() {
        offsets.push(acc);
        acc += m.dim();
        labels.extend(m.basis().iter().map(|b| (s, b.clone())));
    }
    let n = c.rank();
    let mut e = vec![Matrix::zeros(dim, dim); n];
    let mut f = vec![Matrix::zeros(dim, dim); n];
    let mut gram = Matrix::zeros(dim, dim);
    for (s, m) in summands.iter().enumerate() {
        let idx: Vec<usize> = (offsets[s]..offsets[s] + m.dim()).collect();
        for i in 0..n {
            e[i].place(&idx, &idx, m.e(i));
            f[i].place(&idx, &idx, m.f(i));
        }
        gram.place(&idx, &idx, m.gram());
    }
    let weights: Vec<Weight> = labels.iter().map(|(_, b)| b.weight.clone()).collect();
    let idem = wpi
        .iter()
        .map(|mu| {
            let diag = weights
                .iter()
                .map(|w| if w == mu { RF::one() } else { RF::zero() })
                .collect();
            (mu.clone(), Matrix::diagonal(diag))
        })
        .collect();
    Ok(SchurRep {
        cartan: c.clone(),
        pi: pi.clone(),
        wpi,
        summands,
        offsets,
        labels,
        mats: RepMatrices {
            weights,
            e,
            f,
            idem,
        },
        gram,
    })
}

/// `K_i` and `K_i^-1` from the idempotents; their product is checked to be
/// the identity.
pub fn k_elements(r: &SchurRep) -> Result<(Vec<Matrix<RF>>, Vec<Matrix<RF>>)> {
    let s = crate::relations::Generic;
    let c = r.cartan();
    let k: Vec<_> = (0..c.rank()).map(|i| r.mats.k(c, &s, i, 1)).collect();
    let kinv: Vec<_> = (0..c.rank()).map(|i| r.mats.k(c, &s, i, -1)).collect();
    let id = Matrix::identity(r.dim());
    for i in 0..c.rank() {
        if k[i].mul(&kinv[i]) != id {
            return Err(Error::Internal(format!(
                "K_{} K_{}^-1 is not the identity",
                i + 1,
                i + 1
            )));
        }
    }
    Ok((k, kinv))
}

/// Evaluate every generator at `v = v0`.
pub fn evaluate_matrices(
    m: &RepMatrices<RF>,
    v0: &BigRational,
) -> Result<RepMatrices<BigRational>> {
    let ev = |x: &Matrix<RF>| x.try_map(|y| y.evaluate(v0));
    Ok(RepMatrices {
        weights: m.weights.clone(),
        e: m.e.iter().map(ev).collect::<Result<_>>()?,
        f: m.f.iter().map(ev).collect::<Result<_>>()?,
        idem: m
            .idem
            .iter()
            .map(|(w, x)| Ok((w.clone(), ev(x)?)))
            .collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin_cartan;

    fn set(s: &str) -> WeightSet {
        WeightSet::parse(s).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn natural_sl2() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let r = assemble(&a1, &set("1")).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.idempotent(&w(&[1])).unwrap().rank(), 1);
        assert_eq!(r.idempotent(&w(&[-1])).unwrap().rank(), 1);
        let (k, _) = k_elements(&r).unwrap();
        assert_eq!(k[0], Matrix::diagonal(vec![RF::v_pow(1), RF::v_pow(-1)]));
    }

    #[test]
    fn ranks_of_idempotents() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let r = assemble(&a1, &set("0;2")).unwrap();
        assert_eq!(r.dim(), 4);
        assert_eq!(r.idempotent(&w(&[2])).unwrap().rank(), 1);
        assert_eq!(r.idempotent(&w(&[0])).unwrap().rank(), 2);
        assert_eq!(r.idempotent(&w(&[-2])).unwrap().rank(), 1);
        let (k, _) = k_elements(&r).unwrap();
        let mut diag: Vec<RF> = (0..4).map(|p| k[0].get(p, p).clone()).collect();
        diag.sort_by_key(|x| x.to_string());
        let mut expect = vec![RF::v_pow(2), RF::one(), RF::one(), RF::v_pow(-2)];
        expect.sort_by_key(|x| x.to_string());
        assert_eq!(diag, expect);
    }

    #[test]
    fn input_errors() {
        let a1 = builtin_cartan('A', 1).unwrap();
        assert!(matches!(
            assemble(&a1, &set("2")),
            Err(Error::NotSaturated(_))
        ));
        assert!(matches!(
            assemble(&a1, &WeightSet::new()),
            Err(Error::EmptyPi)
        ));
        let a2 = builtin_cartan('A', 2).unwrap();
        assert_eq!(assemble(&a2, &set("0,0;1,0")).unwrap().dim(), 4);
    }
}
