//! Weight-lattice combinatorics: reflections, orbits, dominance, saturation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::{simple_root, CartanData};
use crate::error::{Error, Result};

/// A weight in fundamental-weight coordinates `(<alpha_1^vee, l>, ..)`.
/// Ordered lexicographically on the coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scaled(-1)
    }

    /// `self + k * alpha_i`.
    pub fn shifted(&self, c: &CartanData, i: usize, k: i64) -> Weight {
        Weight(
            (0..self.rank())
                .map(|r| self.0[r] + k * c.entry(r, i))
                .collect(),
        )
    }

    /// Parse `1,0` (or `-1, 2`).
    pub fn parse(s: &str) -> Result<Weight> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", c.join(","))
    }
}

/// A finite, deduplicated, canonically ordered set of weights.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeightSet(BTreeSet<Weight>);

impl WeightSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight) -> bool {
        self.0.insert(w)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.0.contains(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Weight> + ExactSizeIterator {
        self.0.iter()
    }

    pub fn is_subset(&self, o: &WeightSet) -> bool {
        self.0.is_subset(&o.0)
    }

    /// Position in canonical order.
    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.0.iter().position(|x| x == w)
    }

    /// Parse `0,0;1,0`; an empty string is the empty set.
    pub fn parse(s: &str) -> Result<WeightSet> {
        s.split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Weight::parse)
            .collect()
    }

    /// Check every element has `n` coordinates.
    pub fn check_rank(&self, n: usize) -> Result<()> {
        for w in self.iter() {
            if w.rank() != n {
                return Err(Error::WeightArity {
                    weight: w.to_string(),
                    got: w.rank(),
                    expected: n,
                });
            }
        }
        Ok(())
    }
}

impl FromIterator<Weight> for WeightSet {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a WeightSet {
    type Item = &'a Weight;
    type IntoIter = std::collections::btree_set::Iter<'a, Weight>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(Weight::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn require_dominant(l: &Weight) -> Result<()> {
    if l.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(l.to_string()))
    }
}

/// `s_i(l) = l - l_i alpha_i`.
pub fn reflect(c: &CartanData, i: usize, l: &Weight) -> Result<Weight> {
    c.check_index(i)?;
    Ok(l.shifted(c, i, -l.coord(i)))
}

/// Closure of `s` under all simple reflections.
pub fn orbit(c: &CartanData, s: &WeightSet) -> WeightSet {
    let mut seen: BTreeSet<Weight> = s.iter().cloned().collect();
    let mut queue: VecDeque<Weight> = s.iter().cloned().collect();
    while let Some(w) = queue.pop_front() {
        for i in 0..c.rank() {
            let r = w.shifted(c, i, -w.coord(i));
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    WeightSet(seen)
}

/// The unique rational `c` with `delta = sum c_j alpha_j`.
pub fn root_coefficients(c: &CartanData, delta: &Weight) -> Vec<BigRational> {
    c.inverse()
        .iter()
        .map(|row| {
            row.iter()
                .zip(delta.coords())
                .fold(BigRational::zero(), |acc, (x, &d)| {
                    acc + x * BigRational::from_integer(d.into())
                })
        })
        .collect()
}

/// Root coefficients when they are all integers.
pub fn integral_root_coefficients(c: &CartanData, delta: &Weight) -> Option<Vec<i64>> {
    root_coefficients(c, delta)
        .into_iter()
        .map(|x| {
            x.is_integer()
                .then(|| i64::try_from(x.to_integer()).ok())
                .flatten()
        })
        .collect()
}

/// `l <= m` in the dominance order.
pub fn dominance_leq(c: &CartanData, l: &Weight, m: &Weight) -> bool {
    integral_root_coefficients(c, &m.sub(l)).map_or(false, |v| v.iter().all(|&x| x >= 0))
}

pub fn dominant_representative(c: &CartanData, l: &Weight) -> Weight {
    let mut w = l.clone();
    while let Some(i) = (0..c.rank()).find(|&i| w.coord(i) < 0) {
        w = w.shifted(c, i, -w.coord(i));
    }
    w
}

/// `w_0 l`, the antidominant element of the orbit of dominant `l`.
pub fn longest_element_image(c: &CartanData, l: &Weight) -> Weight {
    dominant_representative(c, &l.neg()).neg()
}

/// All dominant `l <= m`, found by scanning the root-coefficient box bounded
/// by `m - w_0 m`.
pub fn dominant_below(c: &CartanData, m: &Weight) -> Result<WeightSet> {
    require_dominant(m)?;
    let bound = integral_root_coefficients(c, &m.sub(&longest_element_image(c, m)))
        .ok_or_else(|| Error::Internal("m - w0 m outside the root lattice".into()))?;
    let n = c.rank();
    let mut out = WeightSet::new();
    let mut coeff = vec![0i64; n];
    loop {
        let mut w = m.clone();
        for (j, &k) in coeff.iter().enumerate() {
            if k != 0 {
                w = w.shifted(c, j, -k);
            }
        }
        if w.is_dominant() {
            out.insert(w);
        }
        // odometer over the box
        let mut j = 0;
        loop {
            if j == n {
                return Ok(out);
            }
            if coeff[j] < bound[j] {
                coeff[j] += 1;
                break;
            }
            coeff[j] = 0;
            j += 1;
        }
    }
}

/// Smallest saturated superset.
pub fn saturate(c: &CartanData, pi: &WeightSet) -> Result<WeightSet> {
    let mut out = WeightSet::new();
    for m in pi {
        for l in dominant_below(c, m)?.iter() {
            out.insert(l.clone());
        }
    }
    Ok(out)
}

pub fn is_saturated(c: &CartanData, pi: &WeightSet) -> Result<bool> {
    Ok(saturate(c, pi)? == *pi)
}

/// Largest saturated subset: the elements whose whole down-set lies in `pi`.
pub fn largest_saturated_subset(c: &CartanData, pi: &WeightSet) -> Result<WeightSet> {
    let mut out = WeightSet::new();
    for m in pi {
        if dominant_below(c, m)?.is_subset(pi) {
            out.insert(m.clone());
        }
    }
    Ok(out)
}

/// Positive roots in fundamental-weight coordinates, with their root
/// coefficients. Obtained as the reflection closure of the simple roots.
pub fn positive_roots(c: &CartanData) -> Vec<(Weight, Vec<i64>)> {
    let simple: WeightSet = (0..c.rank())
        .map(|j| simple_root(c, j).expect("index in range"))
        .collect();
    let mut out: Vec<(Weight, Vec<i64>)> = orbit(c, &simple)
        .iter()
        .filter_map(|r| {
            let k = integral_root_coefficients(c, r)?;
            k.iter().all(|&x| x >= 0).then(|| (r.clone(), k))
        })
        .collect();
    out.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| a.1.cmp(&b.1))
    });
    out
}

/// Symmetric form `(l, m) = sum_j d_j l_j c_j(m)` with `c(m)` the root
/// coefficients of `m`.
pub fn inner_product(c: &CartanData, l: &Weight, m: &Weight) -> BigRational {
    root_coefficients(c, m)
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (j, cm)| {
            acc + cm * BigRational::from_integer((c.symmetrizers()[j] * l.coord(j)).into())
        })
}

/// Weyl dimension formula `prod_{a>0} (l + rho, a) / (rho, a)`.
pub fn weyl_dimension(c: &CartanData, l: &Weight) -> Result<u64> {
    require_dominant(l)?;
    let rho = Weight::new(vec![1; c.rank()]);
    let lr = l.add(&rho);
    let mut acc = BigRational::one();
    for (root, _) in positive_roots(c) {
        acc = acc * inner_product(c, &lr, &root) / inner_product(c, &rho, &root);
    }
    debug_assert!(acc.is_integer() && acc.is_positive());
    u64::try_from(acc.to_integer()).map_err(|_| Error::Internal("dimension overflow".into()))
}

/// Height `sum_j c_j` of `m - l` when it lies in the positive root cone.
pub fn depth(c: &CartanData, top: &Weight, l: &Weight) -> Option<i64> {
    let k = integral_root_coefficients(c, &top.sub(l))?;
    k.iter().all(|&x| x >= 0).then(|| k.iter().sum())
}

/// Multiset of weights, used for character-level computations.
pub type WeightMultiset = BTreeMap<Weight, u64>;
