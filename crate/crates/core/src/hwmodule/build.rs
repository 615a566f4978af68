use std::collections::BTreeMap;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{dot, Echelon, Matrix};
use crate::qarith::{qint_d, RationalFunction};
use crate::weyl::{depth, Weight};

use super::freudenthal::{freudenthal, WeightDiagram};

type RF = RationalFunction;

/// Basis vector `F_word v+` of a highest-weight module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub weight: Weight,
    pub index: usize,
    pub word: Vec<usize>,
}

/// One weight space with the blocks of `E_i` leaving it and `F_i` entering it.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Weight,
    pub words: Vec<Vec<usize>>,
    pub gram: Matrix<RF>,
    /// `E_i : V_mu -> V_{mu + alpha_i}`.
    pub e_out: Vec<Option<Matrix<RF>>>,
    /// `F_i : V_{mu + alpha_i} -> V_mu`.
    pub f_in: Vec<Option<Matrix<RF>>>,
    pub offset: usize,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.words.len()
    }
}

/// The simple module of highest weight `l` over `Q(v)`, with explicit
/// matrices in a basis of F-words.
#[derive(Clone, Debug)]
pub struct HWModule {
    cartan: CartanData,
    highest: Weight,
    spaces: Vec<WeightSpace>,
    index: BTreeMap<Weight, usize>,
    basis: Vec<BasisLabel>,
    e: Vec<Matrix<RF>>,
    f: Vec<Matrix<RF>>,
    gram: Matrix<RF>,
    diagram: WeightDiagram,
}

impl HWModule {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.basis.iter().map(|b| b.weight.clone()).collect()
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn space(&self, w: &Weight) -> Option<&WeightSpace> {
        self.index.get(w).map(|&k| &self.spaces[k])
    }

    pub fn diagram(&self) -> &WeightDiagram {
        &self.diagram
    }

    pub fn e(&self, i: usize) -> &Matrix<RF> {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &Matrix<RF> {
        &self.f[i]
    }

    pub fn e_all(&self) -> &[Matrix<RF>] {
        &self.e
    }

    pub fn f_all(&self) -> &[Matrix<RF>] {
        &self.f
    }

    /// Block-diagonal Gram matrix of the contravariant form.
    pub fn gram(&self) -> &Matrix<RF> {
        &self.gram
    }

    /// `K_i` as the diagonal `v_i^{mu_i}`.
    pub fn k(&self, i: usize, sign: i64) -> Matrix<RF> {
        let d = self.cartan.symmetrizers()[i];
        Matrix::diagonal(
            self.basis
                .iter()
                .map(|b| RF::v_pow(sign * d * b.weight.coord(i)))
                .collect(),
        )
    }
}

struct Candidate {
    k: usize,
    p: usize,
}

/// Construct the simple module of highest weight `l`, rejecting modules
/// whose dimension exceeds `budget`.
pub fn build_module_with_budget(c: &CartanData, l: &Weight, budget: usize) -> Result<HWModule> {
    let diagram = freudenthal(c, l)?;
    if diagram.total as usize > budget {
        return Err(Error::ResourceBudgetExceeded(format!(
            "module of highest weight {l} has dimension {} > {budget}",
            diagram.total
        )));
    }
    let n = c.rank();
    let d = c.symmetrizers().to_vec();

    // depth order, then descending weight within a level
    let mut order: Vec<(i64, std::cmp::Reverse<Weight>)> = diagram
        .weights()
        .map(|m| {
            (
                depth(c, l, m).expect("weight below top"),
                std::cmp::Reverse(m.clone()),
            )
        })
        .collect();
    order.sort();

    let mut spaces: Vec<WeightSpace> = Vec::with_capacity(order.len());
    let mut index: BTreeMap<Weight, usize> = BTreeMap::new();

    for (h, std::cmp::Reverse(mu)) in order {
        let mult = diagram.multiplicity(&mu) as usize;
        if h == 0 {
            index.insert(mu.clone(), spaces.len());
            spaces.push(WeightSpace {
                weight: mu,
                words: vec![vec![]],
                gram: Matrix::identity(1),
                e_out: vec![None; n],
                f_in: vec![None; n],
                offset: 0,
            });
            continue;
        }
        let up: Vec<Option<usize>> = (0..n)
            .map(|k| index.get(&mu.shifted(c, k, 1)).copied())
            .collect();

        let mut cands = Vec::new();
        for (k, u) in up.iter().enumerate() {
            if let Some(u) = u {
                for p in 0..spaces[*u].dim() {
                    cands.push(Candidate { k, p });
                }
            }
        }

        // E_i(F_k b) = F_k(E_i b) + delta_ik [wt(b)_i]_i b, in coordinates of V_{mu+alpha_i}
        let mut ecand: Vec<Vec<Vec<RF>>> = vec![Vec::new(); n];
        for i in 0..n {
            let Some(ui) = up[i] else { continue };
            let target_dim = spaces[ui].dim();
            for cand in &cands {
                let nu = up[cand.k].expect("candidate source exists");
                let mut y = vec![RF::zero(); target_dim];
                if let (Some(eb), Some(fk)) = (&spaces[nu].e_out[i], &spaces[ui].f_in[cand.k]) {
                    let x = eb.column(cand.p);
                    y = fk.mul_vec(&x);
                }
                if i == cand.k {
                    let coef = RF::from_laurent(&qint_d(spaces[nu].weight.coord(i), d[i]));
                    y[cand.p] = y[cand.p].plus(&coef);
                }
                ecand[i].push(y);
            }
        }

        // Gram of candidates: <F_k b_p, y> = row p of Gram(mu+alpha_k) . E_k y
        let m = cands.len();
        let gram_c = Matrix::from_fn(m, m, |a, b| {
            let ca = &cands[a];
            let nu = up[ca.k].unwrap();
            dot(spaces[nu].gram.row(ca.p), &ecand[ca.k][b])
        });

        let mut ech = Echelon::new(m);
        let mut chosen = Vec::new();
        for a in 0..m {
            if ech.insert(gram_c.row(a).to_vec()) {
                chosen.push(a);
            }
        }
        if chosen.len() != mult {
            return Err(Error::RankMismatch {
                weight: mu.to_string(),
                rank: chosen.len(),
                multiplicity: mult,
            });
        }
        let gram = gram_c.select(&chosen, &chosen);
        let ginv = gram
            .inverse()
            .ok_or_else(|| Error::Internal(format!("singular Gram block at {mu}")))?;

        let words: Vec<Vec<usize>> = chosen
            .iter()
            .map(|&a| {
                let ca = &cands[a];
                let nu = up[ca.k].unwrap();
                let mut w = vec![ca.k];
                w.extend_from_slice(&spaces[nu].words[ca.p]);
                w
            })
            .collect();

        let coords: Vec<Vec<RF>> = (0..m)
            .map(|x| {
                let rhs: Vec<RF> = chosen.iter().map(|&s| gram_c.get(s, x).clone()).collect();
                ginv.mul_vec(&rhs)
            })
            .collect();

        let mut f_in = vec![None; n];
        for k in 0..n {
            let Some(u) = up[k] else { continue };
            let cols: Vec<usize> = (0..m).filter(|&x| cands[x].k == k).collect();
            let mut fk = Matrix::zeros(mult, spaces[u].dim());
            for &x in &cols {
                for (r, val) in coords[x].iter().enumerate() {
                    fk.set(r, cands[x].p, val.clone());
                }
            }
            f_in[k] = Some(fk);
        }

        let mut e_out = vec![None; n];
        for i in 0..n {
            let Some(ui) = up[i] else { continue };
            let mut ei = Matrix::zeros(spaces[ui].dim(), mult);
            for (s, &a) in chosen.iter().enumerate() {
                for (r, val) in ecand[i][a].iter().enumerate() {
                    ei.set(r, s, val.clone());
                }
            }
            e_out[i] = Some(ei);
        }

        let offset = spaces.last().map_or(0, |s| s.offset + s.dim());
        index.insert(mu.clone(), spaces.len());
        spaces.push(WeightSpace {
            weight: mu,
            words,
            gram,
            e_out,
            f_in,
            offset,
        });
    }

    let dim: usize = spaces.iter().map(WeightSpace::dim).sum();
    let mut basis = Vec::with_capacity(dim);
    for s in &spaces {
        for (idx, w) in s.words.iter().enumerate() {
            basis.push(BasisLabel {
                weight: s.weight.clone(),
                index: idx,
                word: w.clone(),
            });
        }
    }
    let range = |s: &WeightSpace| (s.offset..s.offset + s.dim()).collect::<Vec<_>>();
    let mut e = vec![Matrix::zeros(dim, dim); n];
    let mut f = vec![Matrix::zeros(dim, dim); n];
    let mut gram = Matrix::zeros(dim, dim);
    for s in &spaces {
        let rows = range(s);
        gram.place(&rows, &rows, &s.gram);
        for i in 0..n {
            if let Some(block) = &s.e_out[i] {
                let tgt = &spaces[index[&s.weight.shifted(c, i, 1)]];
                e[i].place(&range(tgt), &rows, block);
            }
            if let Some(block) = &s.f_in[i] {
                let src = &spaces[index[&s.weight.shifted(c, i, 1)]];
                f[i].place(&rows, &range(src), block);
            }
        }
    }
    Ok(HWModule {
        cartan: c.clone(),
        highest: l.clone(),
        spaces,
        index,
        basis,
        e,
        f,
        gram,
        diagram,
    })
}

/// Default cap on module dimension.
pub const DEFAULT_BUDGET: usize = 400;

pub fn build_module(c: &CartanData, l: &Weight) -> Result<HWModule> {
    build_module_with_budget(c, l, DEFAULT_BUDGET)
}
