use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix};
use crate::weyl::Weight;

/// Spans of `i_nu A i_mu` for an algebra `A` generated by weight-homogeneous
/// matrices together with all weight projectors.
#[derive(Clone, Debug)]
pub struct GradedSpan<F> {
    blocks: BTreeMap<Weight, Vec<usize>>,
    spans: BTreeMap<(Weight, Weight), Echelon<F>>,
}

impl<F: Field> GradedSpan<F> {
    pub fn dim(&self) -> usize {
        self.spans.values().map(Echelon::len).sum()
    }

    /// Basis indices of each weight space.
    pub fn blocks(&self) -> &BTreeMap<Weight, Vec<usize>> {
        &self.blocks
    }

    /// `dim i_nu A i_mu`.
    pub fn block_dim(&self, mu: &Weight, nu: &Weight) -> usize {
        self.spans
            .get(&(mu.clone(), nu.clone()))
            .map_or(0, Echelon::len)
    }

    /// Whether a full matrix lies in the span. Entries outside the weight
    /// blocks must vanish.
    pub fn contains(&self, x: &Matrix<F>) -> bool {
        let mut seen = vec![vec![false; x.cols()]; x.rows()];
        for (mu, cols) in &self.blocks {
            for (nu, rows) in &self.blocks {
                for &r in rows {
                    for &c in cols {
                        seen[r][c] = true;
                    }
                }
                let block = x.select(rows, cols);
                if block.is_zero() {
                    continue;
                }
                match self.spans.get(&(mu.clone(), nu.clone())) {
                    Some(e) if e.contains(block.entries()) => {}
                    _ => return false,
                }
            }
        }
        x.triplets().all(|(r, c, _)| seen[r][c])
    }
}

/// A generator of weight `shift`.
pub struct Homogeneous<'a, F> {
    pub matrix: &'a Matrix<F>,
    pub shift: Weight,
}

/// Span closure organised by source and target weight: for each weight
/// `mu`, words in the generators applied to the identity on `V_mu`.
pub fn graded_closure<F: Field>(
    weights: &[Weight],
    gens: &[Homogeneous<'_, F>],
    budget: usize,
) -> Result<GradedSpan<F>> {
    let mut blocks: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (k, w) in weights.iter().enumerate() {
        blocks.entry(w.clone()).or_default().push(k);
    }
    let mut cache: BTreeMap<(usize, Weight), Option<Matrix<F>>> = BTreeMap::new();
    let mut block_of = |g: usize, from: &Weight| -> Option<Matrix<F>> {
        cache
            .entry((g, from.clone()))
            .or_insert_with(|| {
                let to = from.add(&gens[g].shift);
                let rows = blocks.get(&to)?;
                let cols = &blocks[from];
                let b = gens[g].matrix.select(rows, cols);
                (!b.is_zero()).then_some(b)
            })
            .clone()
    };

    let mut spans: BTreeMap<(Weight, Weight), Echelon<F>> = BTreeMap::new();
    let mut total = 0usize;
    let sources: Vec<(Weight, usize)> = blocks.iter().map(|(w, v)| (w.clone(), v.len())).collect();
    for (mu, dmu) in &sources {
        let mut queue: VecDeque<(Weight, Matrix<F>)> = VecDeque::new();
        let start = Matrix::identity(*dmu);
        spans
            .entry((mu.clone(), mu.clone()))
            .or_insert_with(|| Echelon::new(dmu * dmu))
            .insert(start.entries().to_vec());
        total += 1;
        queue.push_back((mu.clone(), start));
        while let Some((nu, x)) = queue.pop_front() {
            for g in 0..gens.len() {
                let Some(b) = block_of(g, &nu) else { continue };
                let to = nu.add(&gens[g].shift);
                let y = b.mul(&x);
                if y.is_zero() {
                    continue;
                }
                let e = spans
                    .entry((mu.clone(), to.clone()))
                    .or_insert_with(|| Echelon::new(y.rows() * y.cols()));
                if e.insert(y.entries().to_vec()) {
                    total += 1;
                    if total > budget {
                        return Err(Error::ResourceBudgetExceeded(format!(
                            "algebra dimension exceeds {budget}"
                        )));
                    }
                    queue.push_back((to, y));
                }
            }
        }
    }
    let blocks = blocks;
    Ok(GradedSpan { blocks, spans })
}

/// Span closure of the unital algebra generated by `gens`, on full matrices.
pub fn dense_closure<F: Field>(gens: &[Matrix<F>], dim: usize, budget: usize) -> Result<usize> {
    let mut ech = Echelon::new(dim * dim);
    let mut queue = VecDeque::new();
    let id = Matrix::identity(dim);
    for g in std::iter::once(&id).chain(gens) {
        if ech.insert(g.entries().to_vec()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x);
            if ech.insert(y.entries().to_vec()) {
                if ech.len() > budget {
                    return Err(Error::ResourceBudgetExceeded(format!(
                        "algebra dimension exceeds {budget}"
                    )));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(ech.len())
}
