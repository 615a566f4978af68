use std::collections::BTreeMap;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::weyl::{
    depth, dominant_below, integral_root_coefficients, orbit, positive_roots, Weight,
};

/// Weight multiplicities of a simple module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    pub mult: BTreeMap<Weight, u64>,
    pub total: u64,
}

impl WeightDiagram {
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.mult.keys()
    }
}

/// `sum_j d_j x_j k_j` for `k` the root coefficients of the second argument.
fn pair_with_root(c: &CartanData, x: &Weight, k: &[i64]) -> i64 {
    (0..c.rank())
        .map(|j| c.symmetrizers()[j] * x.coord(j) * k[j])
        .sum()
}

/// Multiplicities by the Freudenthal recursion over positive roots, in
/// exact integer arithmetic.
pub fn freudenthal(c: &CartanData, l: &Weight) -> Result<WeightDiagram> {
    let below = dominant_below(c, l)?;
    let support = orbit(c, &below);
    let roots = positive_roots(c);
    let rho = Weight::new(vec![1; c.rank()]);
    let lr2 = l.add(&rho).add(&rho);

    let mut order: Vec<(i64, Weight)> = support
        .iter()
        .map(|m| {
            (
                depth(c, l, m).expect("orbit weight lies below the top"),
                m.clone(),
            )
        })
        .collect();
    order.sort();

    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (h, m) in order {
        if h == 0 {
            mult.insert(m, 1);
            continue;
        }
        let diff = integral_root_coefficients(c, &l.sub(&m)).expect("root lattice");
        // (l+rho,l+rho) - (m+rho,m+rho) = (l + m + 2 rho, l - m)
        let denom = pair_with_root(c, &lr2.add(&m), &diff);
        let mut num: i64 = 0;
        for (alpha, k) in &roots {
            let mut x = m.add(alpha);
            while let Some(&mx) = mult.get(&x) {
                num += mx as i64 * pair_with_root(c, &x, k);
                x = x.add(alpha);
            }
        }
        let num = 2 * num;
        if denom <= 0 || num % denom != 0 {
            return Err(Error::Internal(format!(
                "Freudenthal quotient {num}/{denom} at {m} is not a positive integer"
            )));
        }
        let v = (num / denom) as u64;
        if v > 0 {
            mult.insert(m, v);
        }
    }
    let total = mult.values().sum();
    Ok(WeightDiagram { mult, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{builtin_cartan, validate_cartan};
    use crate::weyl::{reflect, weyl_dimension};

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn sl2_strings() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let d = freudenthal(&a1, &w(&[0])).unwrap();
        assert_eq!(d.total, 1);
        let d = freudenthal(&a1, &w(&[3])).unwrap();
        assert_eq!(d.total, 4);
        for x in [3, 1, -1, -3] {
            assert_eq!(d.multiplicity(&w(&[x])), 1);
        }
    }

    #[test]
    fn adjoint_a2() {
        let a2 = builtin_cartan('A', 2).unwrap();
        let d = freudenthal(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(d.total, 8);
        assert_eq!(d.multiplicity(&w(&[0, 0])), 2);
    }

    #[test]
    fn rejects_non_dominant() {
        let a1 = builtin_cartan('A', 1).unwrap();
        assert!(matches!(
            freudenthal(&a1, &w(&[-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn totals_match_weyl_and_are_w_invariant() {
        let b2 = validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap();
        let cases = [
            (builtin_cartan('G', 2).unwrap(), w(&[1, 1])),
            (builtin_cartan('G', 2).unwrap(), w(&[2, 0])),
            (builtin_cartan('C', 3).unwrap(), w(&[1, 0, 1])),
            (builtin_cartan('A', 3).unwrap(), w(&[1, 1, 1])),
            (b2.clone(), w(&[2, 1])),
        ];
        for (c, l) in cases {
            let d = freudenthal(&c, &l).unwrap();
            assert_eq!(d.total, weyl_dimension(&c, &l).unwrap(), "{l}");
            for (m, &k) in &d.mult {
                for i in 0..c.rank() {
                    assert_eq!(d.multiplicity(&reflect(&c, i, m).unwrap()), k);
                }
            }
        }
    }
}
