use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;

use super::poly::{Poly, Word};

/// Where reduction looks for a reducible subword first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// `lead -> tail`, with every tail word below `lead`.
#[derive(Clone, Debug)]
pub struct Rule<F> {
    pub lead: Vec<u8>,
    pub tail: Poly<F>,
}

/// Completion progress after the overlaps of one length were resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub degree: usize,
    pub overlaps: usize,
    pub rules: usize,
}

/// Outcome of counting normal words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalWords {
    /// The frontier emptied at this length; `count` words in total.
    Finite { count: usize, longest: usize },
    /// The frontier did not empty below `bound`.
    Unbounded { bound: usize },
}

/// Oriented rules over a deg-lex ordered alphabet of `letters` symbols.
#[derive(Clone, Debug)]
pub struct RewriteSystem<F> {
    letters: usize,
    bound: usize,
    rules: Vec<Option<Rule<F>>>,
    index: HashMap<Vec<u8>, usize>,
    lengths: BTreeMap<usize, usize>,
    log: Vec<Round>,
    unresolved: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Overlap {
    len: usize,
    seq: usize,
    a: usize,
    b: usize,
    k: usize,
}

/// Default cap on the number of rules created during completion.
pub const DEFAULT_RULE_BUDGET: usize = 200_000;

impl<F: Field> RewriteSystem<F> {
    fn empty(letters: usize, bound: usize) -> Self {
        Self {
            letters,
            bound,
            rules: Vec::new(),
            index: HashMap::new(),
            lengths: BTreeMap::new(),
            log: Vec::new(),
            unresolved: 0,
        }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn degree_bound(&self) -> usize {
        self.bound
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule<F>> {
        self.rules.iter().flatten()
    }

    pub fn rule_count(&self) -> usize {
        self.index.len()
    }

    pub fn log(&self) -> &[Round] {
        &self.log
    }

    /// Overlaps longer than the bound whose reduction did not vanish.
    pub fn unresolved(&self) -> usize {
        self.unresolved
    }

    /// Every overlap among the surviving rules reduces to zero.
    pub fn is_confluent(&self) -> bool {
        self.unresolved == 0
    }

    fn find(&self, w: &[u8], strategy: Strategy) -> Option<(usize, usize, usize)> {
        let n = w.len();
        let probe = |start: usize| {
            self.lengths
                .keys()
                .take_while(|&&len| start + len <= n)
                .find_map(|&len| {
                    self.index
                        .get(&w[start..start + len])
                        .map(|&id| (start, len, id))
                })
        };
        match strategy {
            Strategy::Leftmost => (0..n).find_map(probe),
            Strategy::Rightmost => (0..n).rev().find_map(probe),
        }
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find(w, Strategy::Leftmost).is_none()
    }

    /// Full reduction to a combination of normal words.
    pub fn reduce(&self, p: &Poly<F>, strategy: Strategy) -> Poly<F> {
        let mut p = p.clone();
        let mut out = Poly::zero();
        while let Some((w, c)) = p.pop_lead() {
            match self.find(&w.0, strategy) {
                Some((start, len, id)) => {
                    let rule = self.rules[id].as_ref().expect("indexed rule is live");
                    let (left, right) = (&w.0[..start], &w.0[start + len..]);
                    for (t, x) in rule.tail.terms() {
                        p.add_term(Word::concat(&[left, &t.0, right]), x.times(&c));
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    fn remove(&mut self, id: usize) -> Rule<F> {
        let rule = self.rules[id].take().expect("live rule");
        self.index.remove(&rule.lead);
        let len = rule.lead.len();
        let count = self.lengths.get_mut(&len).expect("length recorded");
        *count -= 1;
        if *count == 0 {
            self.lengths.remove(&len);
        }
        rule
    }

    /// Reduce `p` and, when it survives, orient it into a new rule. Rules
    /// whose lead becomes reducible are withdrawn and fed back.
    fn absorb(
        &mut self,
        p: Poly<F>,
        queue: &mut BinaryHeap<Reverse<Overlap>>,
        seq: &mut usize,
        budget: usize,
    ) -> Result<bool> {
        let mut pending = vec![p];
        let mut added = false;
        while let Some(p) = pending.pop() {
            let mut r = self.reduce(&p, Strategy::Leftmost);
            let Some((lead, c)) = r.pop_lead() else {
                continue;
            };
            let inv = c.inverse().expect("nonzero coefficient").negated();
            let tail = r.scaled(&inv);
            let lead = lead.0;

            let mut reducible: Vec<usize> = self
                .index
                .iter()
                .filter(|(l, _)| {
                    l.len() > lead.len() && l.windows(lead.len()).any(|x| x == lead.as_slice())
                })
                .map(|(_, &id)| id)
                .collect();
            reducible.sort_unstable();
            for id in reducible {
                let old = self.remove(id);
                pending.push(Poly::word(old.lead).minus(&old.tail));
            }

            let id = self.rules.len();
            if id >= budget {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "rewriting system exceeds {budget} rules"
                )));
            }
            self.index.insert(lead.clone(), id);
            *self.lengths.entry(lead.len()).or_default() += 1;
            self.rules.push(Some(Rule { lead, tail }));
            added = true;

            let mut live: Vec<usize> = self.index.values().copied().collect();
            live.sort_unstable();
            for other in live {
                self.push_overlaps(id, other, queue, seq);
                if other != id {
                    self.push_overlaps(other, id, queue, seq);
                }
            }
        }
        Ok(added)
    }

    /// Overlaps where a suffix of lead `a` is a prefix of lead `b`.
    fn push_overlaps(
        &self,
        a: usize,
        b: usize,
        queue: &mut BinaryHeap<Reverse<Overlap>>,
        seq: &mut usize,
    ) {
        let la = &self.rules[a].as_ref().expect("live").lead;
        let lb = &self.rules[b].as_ref().expect("live").lead;
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] == lb[..k] {
                *seq += 1;
                queue.push(Reverse(Overlap {
                    len: la.len() + lb.len() - k,
                    seq: *seq,
                    a,
                    b,
                    k,
                }));
            }
        }
    }

    fn s_poly(&self, o: &Overlap) -> Option<Poly<F>> {
        let ra = self.rules[o.a].as_ref()?;
        let rb = self.rules[o.b].as_ref()?;
        let (la, lb) = (&ra.lead, &rb.lead);
        let left = &la[..la.len() - o.k];
        let right = &lb[o.k..];
        Some(
            ra.tail
                .sandwich(&[], right)
                .minus(&rb.tail.sandwich(left, &[])),
        )
    }
}

/// Overlap completion of `relations` over `letters` symbols, resolving
/// overlaps of length at most `bound`. Longer overlaps are only checked.
pub fn complete_relations<F: Field>(
    letters: usize,
    relations: &[Poly<F>],
    bound: usize,
    budget: usize,
) -> Result<RewriteSystem<F>> {
    if let Some(degree) = relations
        .iter()
        .map(Poly::degree)
        .max()
        .filter(|&d| d > bound)
    {
        return Err(Error::BoundTooSmall { bound, degree });
    }
    let mut sys = RewriteSystem::empty(letters, bound);
    let mut queue = BinaryHeap::new();
    let mut seq = 0usize;
    for p in relations {
        sys.absorb(p.clone(), &mut queue, &mut seq, budget)?;
    }
    sys.log.push(Round {
        degree: 0,
        overlaps: 0,
        rules: sys.rule_count(),
    });

    loop {
        let mut deferred = Vec::new();
        let mut current: Option<Round> = None;
        while let Some(Reverse(o)) = queue.pop() {
            if o.len > bound {
                deferred.push(o);
                continue;
            }
            if current.as_ref().is_some_and(|r| r.degree != o.len) {
                let mut r = current.take().expect("round");
                r.rules = sys.rule_count();
                sys.log.push(r);
            }
            let round = current.get_or_insert(Round {
                degree: o.len,
                overlaps: 0,
                rules: 0,
            });
            round.overlaps += 1;
            if let Some(s) = sys.s_poly(&o) {
                sys.absorb(s, &mut queue, &mut seq, budget)?;
            }
        }
        if let Some(mut r) = current {
            r.rules = sys.rule_count();
            sys.log.push(r);
        }

        // overlaps beyond the bound: accept rules they yield within the
        // bound, otherwise record them as unresolved
        let mut unresolved = 0;
        let mut grew = false;
        for o in deferred {
            let Some(s) = sys.s_poly(&o) else { continue };
            let r = sys.reduce(&s, Strategy::Leftmost);
            if r.is_zero() {
                continue;
            }
            if r.degree() <= bound {
                grew |= sys.absorb(r, &mut queue, &mut seq, budget)?;
            } else {
                unresolved += 1;
            }
        }
        if !grew {
            sys.unresolved = unresolved;
            return Ok(sys);
        }
    }
}

impl<F: Field> RewriteSystem<F> {
    /// Breadth-first enumeration of normal words by length. Every normal
    /// word extends a shorter one, so an empty frontier ends the search.
    pub fn normal_words(&self, budget: usize) -> Result<NormalWords> {
        let mut frontier: Vec<Vec<u8>> = (0..self.letters as u8)
            .map(|x| vec![x])
            .filter(|w| self.is_normal(w))
            .collect();
        let mut count = 0usize;
        let mut len = 1;
        while !frontier.is_empty() {
            if len + 1 >= self.bound {
                return Ok(NormalWords::Unbounded { bound: self.bound });
            }
            count += frontier.len();
            if count > budget {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "more than {budget} normal words"
                )));
            }
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..self.letters as u8 {
                    let mut y = w.clone();
                    y.push(x);
                    if self.suffix_normal(&y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        Ok(NormalWords::Finite {
            count,
            longest: len - 1,
        })
    }

    fn suffix_normal(&self, w: &[u8]) -> bool {
        let n = w.len();
        self.lengths
            .keys()
            .take_while(|&&len| len <= n)
            .all(|&len| !self.index.contains_key(&w[n - len..]))
    }

    /// All normal words, shortest first.
    pub fn normal_basis(&self, budget: usize) -> Result<Vec<Vec<u8>>> {
        let mut out = Vec::new();
        let mut frontier: Vec<Vec<u8>> = (0..self.letters as u8)
            .map(|x| vec![x])
            .filter(|w| self.is_normal(w))
            .collect();
        while !frontier.is_empty() {
            if frontier[0].len() + 1 >= self.bound {
                return Err(Error::Internal(
                    "normal words exceed the degree bound".into(),
                ));
            }
            out.extend(frontier.iter().cloned());
            if out.len() > budget {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "more than {budget} normal words"
                )));
            }
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..self.letters as u8 {
                    let mut y = w.clone();
                    y.push(x);
                    if self.suffix_normal(&y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn commutative_polynomials_mod_squares() {
        // letters a=0, b=1: ba - ab, aa, bb -> basis a, b, ab
        let rels = vec![
            P::word(vec![1, 0]).minus(&P::word(vec![0, 1])),
            P::word(vec![0, 0]),
            P::word(vec![1, 1]),
        ];
        let sys = complete_relations(2, &rels, 6, 1000).unwrap();
        assert!(sys.is_confluent());
        assert_eq!(
            sys.normal_words(100).unwrap(),
            NormalWords::Finite {
                count: 3,
                longest: 2
            }
        );
    }

    #[test]
    fn overlap_produces_new_rule() {
        // aba = b and aa = 0 give b = aba, so ab = a(aba) ... = 0 eventually
        let rels = vec![
            P::word(vec![0, 1, 0]).minus(&P::word(vec![1])),
            P::word(vec![0, 0]),
        ];
        let sys = complete_relations(2, &rels, 8, 1000).unwrap();
        assert!(sys.is_confluent());
        let b = P::word(vec![1]);
        assert!(sys.reduce(&b, Strategy::Leftmost).is_zero());
        assert_eq!(
            sys.normal_words(100).unwrap(),
            NormalWords::Finite {
                count: 1,
                longest: 1
            }
        );
    }

    #[test]
    fn free_algebra_is_unbounded() {
        let rels = vec![P::term(vec![0, 0], q(2))];
        let sys = complete_relations(2, &rels, 5, 1000).unwrap();
        assert_eq!(
            sys.normal_words(1000).unwrap(),
            NormalWords::Unbounded { bound: 5 }
        );
    }

    #[test]
    fn bound_below_relation_degree() {
        let rels = vec![P::word(vec![0, 0, 0])];
        assert!(matches!(
            complete_relations(1, &rels, 2, 10),
            Err(Error::BoundTooSmall {
                bound: 2,
                degree: 3
            })
        ));
    }

    #[test]
    fn strategies_agree_after_completion() {
        let rels = vec![
            P::word(vec![1, 0]).minus(&P::word(vec![0, 1])),
            P::word(vec![0, 0, 0]),
            P::word(vec![1, 1]).minus(&P::word(vec![0])),
        ];
        let sys = complete_relations(2, &rels, 8, 1000).unwrap();
        let w = P::word(vec![1, 0, 1, 1, 0]);
        assert_eq!(
            sys.reduce(&w, Strategy::Leftmost),
            sys.reduce(&w, Strategy::Rightmost)
        );
    }
}
