use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::field::Field;

/// A nonempty word over the alphabet, compared degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(parts: &[&[u8]]) -> Word {
        Word(parts.concat())
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Element of the free algebra: a finite sum of words with coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F>(BTreeMap<Word, F>);

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self(BTreeMap::new())
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Vec<u8>) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Vec<u8>, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(Word(w), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &F)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Poly<F>, c: &F) {
        for (w, x) in &o.0 {
            self.add_term(w.clone(), x.times(c));
        }
    }

    pub fn plus(mut self, o: &Poly<F>) -> Self {
        self.add_scaled(o, &F::one());
        self
    }

    pub fn minus(mut self, o: &Poly<F>) -> Self {
        self.add_scaled(o, &F::one().negated());
        self
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut p = Self::zero();
        p.add_scaled(self, c);
        p
    }

    /// Product of free-algebra elements.
    pub fn times(&self, o: &Poly<F>) -> Self {
        let mut p = Self::zero();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                p.add_term(Word::concat(&[&a.0, &b.0]), x.times(y));
            }
        }
        p
    }

    /// `left * self * right` for words.
    pub fn sandwich(&self, left: &[u8], right: &[u8]) -> Self {
        Self(
            self.0
                .iter()
                .map(|(w, c)| (Word::concat(&[left, &w.0, right]), c.clone()))
                .collect(),
        )
    }

    pub fn lead(&self) -> Option<(&Word, &F)> {
        self.0.iter().next_back()
    }

    pub fn pop_lead(&mut self) -> Option<(Word, F)> {
        self.0.pop_last()
    }

    pub fn degree(&self) -> usize {
        self.0.keys().map(Word::len).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn deg_lex() {
        assert!(Word(vec![5]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 3]) < Word(vec![1, 0]));
    }

    #[test]
    fn arithmetic() {
        let one = BigRational::from_integer(1.into());
        let a: Poly<BigRational> = Poly::word(vec![1]);
        let b: Poly<BigRational> = Poly::word(vec![2]);
        let ab = a.times(&b);
        let ba = b.times(&a);
        let comm = ab.clone().minus(&ba);
        assert_eq!(comm.len(), 2);
        assert_eq!(comm.lead().unwrap().0, &Word(vec![2, 1]));
        assert!(ab.clone().minus(&ab).is_zero());
        assert_eq!(
            a.sandwich(&[0], &[3]).lead().unwrap(),
            (&Word(vec![0, 1, 3]), &one)
        );
    }
}
