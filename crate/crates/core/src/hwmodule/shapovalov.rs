use std::collections::HashMap;

use crate::cartan::CartanData;
use crate::qarith::{qint_d, LaurentPoly, RationalFunction};
use crate::weyl::Weight;

/// Shapovalov pairing `<F_w v+, F_w' v+>` with `<v+, v+> = 1`. A word
/// `[j1, .., jm]` stands for `F_j1 .. F_jm v+`.
///
/// Uses `<F_i x, y> = <x, E_i y>` and straightens `E_i` to the right through
/// the F-word of `y`.
pub fn pair_words(c: &CartanData, l: &Weight, w: &[usize], w2: &[usize]) -> RationalFunction {
    RationalFunction::from_laurent(&pair_laurent(c, l, w, w2))
}

pub(crate) fn pair_laurent(c: &CartanData, l: &Weight, w: &[usize], w2: &[usize]) -> LaurentPoly {
    let mut a = vec![0usize; c.rank()];
    let mut b = vec![0usize; c.rank()];
    w.iter().for_each(|&j| a[j] += 1);
    w2.iter().for_each(|&j| b[j] += 1);
    if a != b {
        return LaurentPoly::zero();
    }
    let mut memo = HashMap::new();
    pair_rec(c, l, w, w2.to_vec(), &mut memo)
}

fn pair_rec(
    c: &CartanData,
    l: &Weight,
    w: &[usize],
    y: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), LaurentPoly>,
) -> LaurentPoly {
    let Some((&i, rest)) = w.split_first() else {
        return if y.is_empty() {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    };
    let key = (w.len(), y.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let d = c.symmetrizers()[i];
    let mut acc = LaurentPoly::zero();
    // weight of the vector F_{y[p+1]} .. F_{y[m-1]} v+, built from the right
    let mut below = l.clone();
    for p in (0..y.len()).rev() {
        if y[p] == i {
            let coef = qint_d(below.coord(i), d);
            if !coef.is_zero() {
                let mut shorter = y.clone();
                shorter.remove(p);
                acc = &acc + &(&coef * &pair_rec(c, l, rest, shorter, memo));
            }
        }
        below = below.shifted(c, y[p], -1);
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin_cartan;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn basic_pairings() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let a2 = builtin_cartan('A', 2).unwrap();
        assert!(pair_words(&a1, &w(&[5]), &[], &[]).is_one());
        assert_eq!(
            pair_words(&a1, &w(&[2]), &[0], &[0]),
            RationalFunction::from_laurent(&qint_d(2, 1))
        );
        assert!(pair_words(&a2, &w(&[1, 1]), &[0], &[1]).is_zero());
    }

    #[test]
    fn sl2_norms() {
        // <F^k v+, F^k v+> = [k]! [l]..[l-k+1]
        let a1 = builtin_cartan('A', 1).unwrap();
        let l = 3;
        for k in 0..=5usize {
            let word = vec![0; k];
            let mut expect = LaurentPoly::one();
            for s in 1..=k as i64 {
                expect = &expect * &(&qint_d(s, 1) * &qint_d(l - s + 1, 1));
            }
            assert_eq!(pair_laurent(&a1, &w(&[l]), &word, &word), expect, "k={k}");
        }
    }

    #[test]
    fn symmetric() {
        let g2 = builtin_cartan('G', 2).unwrap();
        let l = w(&[1, 1]);
        let a = [0, 1, 0, 0];
        let b = [0, 0, 1, 0];
        assert_eq!(pair_laurent(&g2, &l, &a, &b), pair_laurent(&g2, &l, &b, &a));
    }
}
