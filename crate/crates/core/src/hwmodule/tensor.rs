use std::collections::BTreeMap;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qarith::RationalFunction;
use crate::relations::{verify_u_relations, Generic, UAction};
use crate::weyl::{Weight, WeightSet};

use super::build::HWModule;
use super::freudenthal::freudenthal;

type RF = RationalFunction;

/// A module given by explicit `E_i`, `F_i` on a basis of weight vectors.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    cartan: CartanData,
    weights: Vec<Weight>,
    e: Vec<Matrix<RF>>,
    f: Vec<Matrix<RF>>,
}

impl ModuleAction {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn e(&self) -> &[Matrix<RF>] {
        &self.e
    }

    pub fn f(&self) -> &[Matrix<RF>] {
        &self.f
    }

    /// `K_i^sign` acting by `v_i^{sign * mu_i}`.
    pub fn k(&self, i: usize, sign: i64) -> Matrix<RF> {
        let d = self.cartan.symmetrizers()[i];
        Matrix::diagonal(
            self.weights
                .iter()
                .map(|w| RF::v_pow(sign * d * w.coord(i)))
                .collect(),
        )
    }

    pub fn k_all(&self, sign: i64) -> Vec<Matrix<RF>> {
        (0..self.cartan.rank()).map(|i| self.k(i, sign)).collect()
    }

    /// Weight multiset of the basis.
    pub fn weight_multiset(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }
}

impl From<&HWModule> for ModuleAction {
    fn from(m: &HWModule) -> Self {
        Self {
            cartan: m.cartan().clone(),
            weights: m.weights(),
            e: m.e_all().to_vec(),
            f: m.f_all().to_vec(),
        }
    }
}

/// Tensor product through `D(E) = E(x)1 + K(x)E`, `D(F) = F(x)K^-1 + 1(x)F`,
/// `D(K) = K(x)K`. The relations of the quantized enveloping algebra are
/// re-checked on the result.
pub fn tensor(a: &ModuleAction, b: &ModuleAction) -> Result<ModuleAction> {
    if a.cartan != b.cartan {
        return Err(Error::CartanMismatch);
    }
    let c = &a.cartan;
    let ia = Matrix::identity(a.dim());
    let ib = Matrix::identity(b.dim());
    let mut e = Vec::with_capacity(c.rank());
    let mut f = Vec::with_capacity(c.rank());
    for i in 0..c.rank() {
        e.push(a.e[i].kron(&ib).add(&a.k(i, 1).kron(&b.e[i])));
        f.push(a.f[i].kron(&b.k(i, -1)).add(&ia.kron(&b.f[i])));
    }
    let weights = a
        .weights
        .iter()
        .flat_map(|x| b.weights.iter().map(move |y| x.add(y)))
        .collect();
    let out = ModuleAction {
        cartan: c.clone(),
        weights,
        e,
        f,
    };
    let k = out.k_all(1);
    let kinv = out.k_all(-1);
    let report = verify_u_relations(
        c,
        &Generic,
        &UAction {
            e: &out.e,
            f: &out.f,
            k: &k,
            kinv: &kinv,
        },
    );
    if !report.passed() {
        return Err(Error::Internal(format!(
            "tensor action violates relations:\n{report}"
        )));
    }
    Ok(out)
}

/// `d`-fold tensor power; `d = 0` gives the trivial module.
pub fn tensor_power(m: &ModuleAction, d: usize) -> Result<ModuleAction> {
    let c = m.cartan.clone();
    let mut acc = ModuleAction {
        weights: vec![Weight::zero(c.rank())],
        e: vec![Matrix::zeros(1, 1); c.rank()],
        f: vec![Matrix::zeros(1, 1); c.rank()],
        cartan: c,
    };
    for _ in 0..d {
        acc = tensor(&acc, m)?;
    }
    Ok(acc)
}

/// Dominant weights of the `d`-th tensor power of the simple module of
/// highest weight `lv`, by convolving weight multisets.
pub fn tensor_power_support(c: &CartanData, lv: &Weight, d: usize) -> Result<WeightSet> {
    let diag = freudenthal(c, lv)?;
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::from([(Weight::zero(c.rank()), 1)]);
    for _ in 0..d {
        let mut next = BTreeMap::new();
        for (x, &mx) in &acc {
            for (y, &my) in &diag.mult {
                *next.entry(x.add(y)).or_insert(0) += mx * my;
            }
        }
        acc = next;
    }
    Ok(acc.into_keys().filter(Weight::is_dominant).collect())
}
