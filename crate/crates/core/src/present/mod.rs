//! The algebra given by generators `E_i, F_i, i_mu` and relations, treated
//! as a quotient of the free algebra, with its dimension read off a
//! completed rewriting system.

mod poly;
mod rewrite;

use std::fmt::{self, Write};

use num_integer::binomial;
use num_rational::BigRational;
use rand::Rng;

pub use poly::{Poly, Word};
pub use rewrite::{
    complete_relations, NormalWords, RewriteSystem, Round, Rule, Strategy, DEFAULT_RULE_BUDGET,
};

use crate::cartan::{simple_root, CartanData};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::qarith::RationalFunction;
use crate::relations::{AtPoint, Generic, Scalars};
use crate::weyl::{orbit, WeightSet};

/// Cap on the number of normal words enumerated.
pub const DEFAULT_WORD_BUDGET: usize = 100_000;

/// A letter of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    Unit,
    Idem(crate::weyl::Weight),
    E(usize),
    F(usize),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Unit => write!(f, "1"),
            Symbol::Idem(w) => write!(f, "i{w}"),
            Symbol::E(i) => write!(f, "E{}", i + 1),
            Symbol::F(i) => write!(f, "F{}", i + 1),
        }
    }
}

/// One defining relation, read as `poly = 0`.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub family: char,
    pub params: String,
    pub poly: Poly<F>,
}

#[derive(Clone, Debug)]
pub struct NCPresentation<F> {
    cartan: CartanData,
    pi: WeightSet,
    wpi: WeightSet,
    classical: bool,
    alphabet: Vec<Symbol>,
    relations: Vec<Relation<F>>,
}

impl<F: Field> NCPresentation<F> {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn pi(&self) -> &WeightSet {
        &self.pi
    }

    pub fn wpi(&self) -> &WeightSet {
        &self.wpi
    }

    pub fn is_classical(&self) -> bool {
        self.classical
    }

    /// Letters in increasing order: unit, idempotents, `E_i`, `F_i`.
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    /// `1 x = x` and `x 1 = x` for every letter.
    pub fn unit_rules(&self) -> Vec<Poly<F>> {
        let mut out = Vec::new();
        for x in 0..self.alphabet.len() as u8 {
            out.push(Poly::word(vec![0, x]).minus(&Poly::word(vec![x])));
            if x != 0 {
                out.push(Poly::word(vec![x, 0]).minus(&Poly::word(vec![x])));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.relations
            .iter()
            .map(|r| r.poly.degree())
            .max()
            .unwrap_or(0)
            .max(2)
    }

    pub fn word_text(&self, w: &[u8]) -> String {
        let parts: Vec<String> = w
            .iter()
            .map(|&x| self.alphabet[x as usize].to_string())
            .collect();
        parts.join(" ")
    }

    /// Prefix form `(+ (* c x y) ...)`.
    pub fn poly_text(&self, p: &Poly<F>) -> String {
        let terms: Vec<String> = p
            .terms()
            .rev()
            .map(|(w, c)| format!("(* {c} {})", self.word_text(w.letters())))
            .collect();
        match terms.len() {
            0 => "0".into(),
            1 => terms[0].clone(),
            _ => format!("(+ {})", terms.join(" ")),
        }
    }

    /// Alphabet listing and one relation per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# presentation");
        let _ = writeln!(out, "cartan {}", self.cartan);
        let _ = writeln!(out, "pi {}", self.pi);
        let _ = writeln!(out, "wpi {}", self.wpi);
        let _ = writeln!(
            out,
            "coefficients {}",
            if self.classical {
                "classical"
            } else {
                "quantum"
            }
        );
        let letters: Vec<String> = self.alphabet.iter().map(Symbol::to_string).collect();
        let _ = writeln!(out, "alphabet {}", letters.join(" "));
        let _ = writeln!(out, "relations {}", self.relations.len());
        for r in &self.relations {
            let _ = writeln!(
                out,
                "({}) {}: {}",
                r.family,
                r.params,
                self.poly_text(&r.poly)
            );
        }
        out
    }
}

/// Instantiate every relation family over `W pi`, with scalars taken
/// through `s`. With `classical`, quantum integers and binomials become
/// ordinary ones.
pub fn instantiate_with<S: Scalars>(
    c: &CartanData,
    pi: &WeightSet,
    s: &S,
    classical: bool,
) -> Result<NCPresentation<S::F>> {
    if pi.is_empty() {
        return Err(Error::EmptyPi);
    }
    pi.check_rank(c.rank())?;
    if let Some(w) = pi.iter().find(|w| !w.is_dominant()) {
        return Err(Error::NotDominant(w.to_string()));
    }
    let n = c.rank();
    let wpi = orbit(c, pi);
    if wpi.len() + 2 * n >= u8::MAX as usize {
        return Err(Error::ResourceBudgetExceeded(format!(
            "alphabet of {} letters",
            wpi.len() + 2 * n + 1
        )));
    }
    let mut alphabet = vec![Symbol::Unit];
    alphabet.extend(wpi.iter().cloned().map(Symbol::Idem));
    alphabet.extend((0..n).map(Symbol::E));
    alphabet.extend((0..n).map(Symbol::F));

    let idem = |w: &crate::weyl::Weight| wpi.index_of(w).map(|k| (k + 1) as u8);
    let e = |i: usize| (1 + wpi.len() + i) as u8;
    let f = |i: usize| (1 + wpi.len() + n + i) as u8;
    let d = c.symmetrizers();
    let qint = |a: i64, i: usize| {
        if classical {
            S::F::from_i64(a)
        } else {
            s.qint(a, d[i])
        }
    };
    let qbinom = |m: i64, t: u32, i: usize| {
        if classical {
            S::F::from_i64(binomial(m, t as i64))
        } else {
            s.qbinom(m, t, d[i])
        }
    };
    let w = |x: &[u8]| Poly::<S::F>::word(x.to_vec());

    let mut relations = Vec::new();
    let mut push = |family: char, params: String, poly: Poly<S::F>| {
        relations.push(Relation {
            family,
            params,
            poly,
        })
    };

    let mut unit = Poly::word(vec![0]).scaled(&S::F::one().negated());
    for l in &wpi {
        let il = idem(l).expect("in orbit");
        for m in &wpi {
            let im = idem(m).expect("in orbit");
            let mut p = w(&[il, im]);
            if l == m {
                p = p.minus(&w(&[il]));
            }
            push('a', format!("lambda={l} mu={m}"), p);
        }
        unit = unit.plus(&w(&[il]));
    }
    push('a', "unit".into(), unit);

    for i in 0..n {
        for j in 0..n {
            let mut p = w(&[e(i), f(j)]).minus(&w(&[f(j), e(i)]));
            if i == j {
                for l in &wpi {
                    let x = qint(l.coord(i), i).negated();
                    p.add_term(Word(vec![idem(l).expect("in orbit")]), x);
                }
            }
            push('b', format!("i={} j={}", i + 1, j + 1), p);
        }
    }

    for i in 0..n {
        let a = simple_root(c, i)?;
        for l in &wpi {
            let il = idem(l).expect("in orbit");
            let up = idem(&l.add(&a));
            let down = idem(&l.sub(&a));
            let tag = format!("i={} lambda={l}", i + 1);
            let shift = |lhs: [u8; 2], rhs: Option<[u8; 2]>| match rhs {
                Some(r) => w(&lhs).minus(&w(&r)),
                None => w(&lhs),
            };
            push('c', tag.clone(), shift([e(i), il], up.map(|x| [x, e(i)])));
            push('d', tag.clone(), shift([f(i), il], down.map(|x| [x, f(i)])));
            push('e', tag.clone(), shift([il, e(i)], down.map(|x| [e(i), x])));
            push('f', tag, shift([il, f(i)], up.map(|x| [f(i), x])));
        }
    }

    for (family, gen) in [('g', &e as &dyn Fn(usize) -> u8), ('h', &f)] {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let m = 1 - c.entry(i, j);
                let mut p = Poly::zero();
                for t in 0..=m {
                    let mut word = vec![gen(i); (m - t) as usize];
                    word.push(gen(j));
                    word.extend(std::iter::repeat_n(gen(i), t as usize));
                    let x = qbinom(m, t as u32, i);
                    let x = if t % 2 == 1 { x.negated() } else { x };
                    p.add_term(Word(word), x);
                }
                push(family, format!("i={} j={}", i + 1, j + 1), p);
            }
        }
    }

    Ok(NCPresentation {
        cartan: c.clone(),
        pi: pi.clone(),
        wpi,
        classical,
        alphabet,
        relations,
    })
}

/// Relations over `Q(v)`; with `classical` the coefficients are those at
/// `v = 1`.
pub fn instantiate_presentation(
    c: &CartanData,
    pi: &WeightSet,
    classical: bool,
) -> Result<NCPresentation<RationalFunction>> {
    instantiate_with(c, pi, &Generic, classical)
}

/// Relations with `v` replaced by the nonzero rational `v0`.
pub fn instantiate_at(
    c: &CartanData,
    pi: &WeightSet,
    v0: &BigRational,
    classical: bool,
) -> Result<NCPresentation<BigRational>> {
    instantiate_with(c, pi, &AtPoint::new(v0.clone())?, classical)
}

/// Overlap completion of the relations and unit rules, resolving overlaps
/// up to length `degree_bound`.
pub fn complete<F: Field>(p: &NCPresentation<F>, degree_bound: usize) -> Result<RewriteSystem<F>> {
    complete_with_budget(p, degree_bound, DEFAULT_RULE_BUDGET)
}

pub fn complete_with_budget<F: Field>(
    p: &NCPresentation<F>,
    degree_bound: usize,
    budget: usize,
) -> Result<RewriteSystem<F>> {
    let mut polys: Vec<Poly<F>> = p.unit_rules();
    polys.extend(p.relations.iter().map(|r| r.poly.clone()));
    complete_relations(p.alphabet.len(), &polys, degree_bound, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentedDimension {
    Finite(usize),
    Unstabilized(String),
}

impl PresentedDimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            PresentedDimension::Finite(d) => Some(*d),
            PresentedDimension::Unstabilized(_) => None,
        }
    }
}

impl fmt::Display for PresentedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentedDimension::Finite(d) => write!(f, "{d}"),
            PresentedDimension::Unstabilized(why) => write!(f, "unstabilized ({why})"),
        }
    }
}

/// Number of normal words of a completed system, if the system is
/// confluent and its normal words stop before the bound.
pub fn count_normal_words<F: Field>(sys: &RewriteSystem<F>) -> Result<PresentedDimension> {
    if !sys.is_confluent() {
        return Ok(PresentedDimension::Unstabilized(format!(
            "{} overlaps beyond degree {} do not resolve",
            sys.unresolved(),
            sys.degree_bound()
        )));
    }
    Ok(match sys.normal_words(DEFAULT_WORD_BUDGET)? {
        NormalWords::Finite { count, .. } => PresentedDimension::Finite(count),
        NormalWords::Unbounded { bound } => {
            PresentedDimension::Unstabilized(format!("normal words reach length {}", bound - 1))
        }
    })
}

pub fn dimension_of<F: Field>(
    p: &NCPresentation<F>,
    degree_bound: usize,
) -> Result<PresentedDimension> {
    count_normal_words(&complete(p, degree_bound)?)
}

/// Dimension of the presented algebra over `Q(v)`.
pub fn presented_dimension(
    c: &CartanData,
    pi: &WeightSet,
    classical: bool,
    degree_bound: usize,
) -> Result<PresentedDimension> {
    dimension_of(&instantiate_presentation(c, pi, classical)?, degree_bound)
}

/// Dimension with `v = v0`. A heuristic pre-screen for the exact value.
pub fn presented_dimension_at(
    c: &CartanData,
    pi: &WeightSet,
    v0: &BigRational,
    classical: bool,
    degree_bound: usize,
) -> Result<PresentedDimension> {
    dimension_of(&instantiate_at(c, pi, v0, classical)?, degree_bound)
}

/// Reduce random words under leftmost and rightmost strategies; returns
/// the words whose normal forms differ.
pub fn strategy_disagreements<F: Field, R: Rng>(
    sys: &RewriteSystem<F>,
    samples: usize,
    max_len: usize,
    rng: &mut R,
) -> Vec<Vec<u8>> {
    let mut bad = Vec::new();
    for _ in 0..samples {
        let len = rng.gen_range(1..=max_len.max(1));
        let w: Vec<u8> = (0..len)
            .map(|_| rng.gen_range(0..sys.letters() as u8))
            .collect();
        let p = Poly::word(w.clone());
        if sys.reduce(&p, Strategy::Leftmost) != sys.reduce(&p, Strategy::Rightmost) {
            bad.push(w);
        }
    }
    bad
}

/// A rational `p/q` with `|p|, |q| <= 50` outside `{0, 1, -1}`.
pub fn random_point<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let p: i64 = rng.gen_range(-50..=50);
        let q: i64 = rng.gen_range(1..=50);
        if p == 0 || p.abs() == q {
            continue;
        }
        return BigRational::new(p.into(), q.into());
    }
}

/// Completion log, one line per round.
pub fn completion_log<F: Field>(sys: &RewriteSystem<F>) -> String {
    let mut out = String::new();
    for r in sys.log() {
        let _ = writeln!(
            out,
            "round degree={} overlaps={} rules={}",
            r.degree, r.overlaps, r.rules
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin_cartan;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn a1() -> CartanData {
        builtin_cartan('A', 1).unwrap()
    }

    fn set(s: &str) -> WeightSet {
        WeightSet::parse(s).unwrap()
    }

    #[test]
    fn relation_counts() {
        let p = instantiate_presentation(&a1(), &set("1"), false).unwrap();
        assert_eq!(p.relations().len(), 14);
        assert_eq!(p.alphabet().len(), 5);
        let p = instantiate_presentation(&a1(), &set("0;2"), false).unwrap();
        assert_eq!(p.wpi(), &set("2;0;-2"));
        assert_eq!(p.alphabet().len(), 6);
        let a2 = builtin_cartan('A', 2).unwrap();
        let p = instantiate_presentation(&a2, &set("1,0"), false).unwrap();
        // 9 + 1 products, 4 commutators, 4 * 2 * 3 shifts, 2 * 2 Serre
        assert_eq!(p.relations().len(), 10 + 4 + 24 + 4);
    }

    #[test]
    fn rejects_bad_pi() {
        assert_eq!(
            instantiate_presentation(&a1(), &WeightSet::new(), false).unwrap_err(),
            Error::EmptyPi
        );
        assert!(matches!(
            instantiate_presentation(&a1(), &set("-1"), false),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn sl2_dimensions() {
        assert_eq!(
            presented_dimension(&a1(), &set("1"), false, 8).unwrap(),
            PresentedDimension::Finite(4)
        );
        assert_eq!(
            presented_dimension(&a1(), &set("0;2"), false, 10).unwrap(),
            PresentedDimension::Finite(10)
        );
        assert_eq!(
            presented_dimension(&a1(), &set("1"), true, 8).unwrap(),
            PresentedDimension::Finite(4)
        );
    }

    #[test]
    fn collapse_without_saturation() {
        assert_eq!(
            presented_dimension(&a1(), &set("2"), false, 6).unwrap(),
            PresentedDimension::Finite(0)
        );
    }

    #[test]
    fn small_bound() {
        let p = instantiate_presentation(&a1(), &set("1"), false).unwrap();
        assert!(matches!(complete(&p, 1), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn strategies_and_points() {
        let p = instantiate_presentation(&a1(), &set("0;2"), false).unwrap();
        let sys = complete(&p, 10).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        assert!(strategy_disagreements(&sys, 200, 10, &mut rng).is_empty());
        let v0 = random_point(&mut rng);
        assert_eq!(
            presented_dimension_at(&a1(), &set("0;2"), &v0, false, 10).unwrap(),
            PresentedDimension::Finite(10)
        );
    }

    #[test]
    fn dump_lists_relations() {
        let p = instantiate_presentation(&a1(), &set("1"), false).unwrap();
        let text = p.dump();
        assert!(text.contains("alphabet 1 i(-1) i(1) E1 F1"));
        assert!(text.contains("(c) i=1 lambda=(-1): (+ (* 1 E1 i(-1)) (* -1 i(1) E1))"));
        assert_eq!(text.lines().filter(|l| l.starts_with('(')).count(), 14);
    }
}
