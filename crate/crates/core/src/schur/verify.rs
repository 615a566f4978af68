use num_rational::BigRational;

use crate::cartan::CartanData;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::relations::{serre_sum, verify_u_relations, Generic, Scalars, UAction};
use crate::report::VerificationReport;
use crate::weyl::{Weight, WeightSet};

use super::rep::{RepMatrices, SchurRep};

/// Deliberate corruption of the inputs to a relation suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Scale one diagonal entry of `K_1` by `v`.
    KTamper,
}

pub fn verify_presentation(r: &SchurRep) -> VerificationReport {
    verify_presentation_with(r, Fault::None)
}

pub fn verify_presentation_with(r: &SchurRep, fault: Fault) -> VerificationReport {
    presentation_suite(r.cartan(), r.wpi(), r.matrices(), &Generic, fault)
}

fn p(i: usize, j: usize) -> String {
    format!("i={} j={}", i + 1, j + 1)
}

/// Longest run `mu, mu + alpha_i, .., mu + l alpha_i` inside `W pi`, plus one.
pub fn nilpotency_bound(c: &CartanData, wpi: &WeightSet, i: usize) -> u32 {
    let mut best = 0;
    for mu in wpi {
        let mut k = 0;
        let mut x = mu.shifted(c, i, 1);
        while wpi.contains(&x) {
            k += 1;
            x = x.shifted(c, i, 1);
        }
        best = best.max(k);
    }
    best + 1
}

fn diagonal_of<F: Field>(m: &Matrix<F>) -> Vec<F> {
    (0..m.rows()).map(|k| m.get(k, k).clone()).collect()
}

/// The eight families of the defining relations, the enveloping-algebra
/// relations on the derived `K_i`, the `J`-product reconstruction of the
/// idempotents, `p_i(K_i) = 0` and nilpotency of `E_i`, `F_i`.
pub fn presentation_suite<S: Scalars>(
    c: &CartanData,
    wpi: &WeightSet,
    m: &RepMatrices<S::F>,
    s: &S,
    fault: Fault,
) -> VerificationReport {
    let n = c.rank();
    let dim = m.dim();
    let d = c.symmetrizers();
    let id = Matrix::<S::F>::identity(dim);
    let zero = Matrix::<S::F>::zeros(dim, dim);
    let mut r = VerificationReport::new("S");

    // (a)
    for (a, pa) in &m.idem {
        for (b, pb) in &m.idem {
            let rhs = if a == b { pa.clone() } else { zero.clone() };
            r.equal("S(a)", format!("{a}{b}"), &pa.mul(pb), &rhs);
        }
    }
    let total = m.idem.values().fold(zero.clone(), |acc, x| acc.add(x));
    r.equal("S(a)", "sum=1", &total, &id);

    // (b)
    for i in 0..n {
        for j in 0..n {
            let lhs = m.e[i].mul(&m.f[j]).sub(&m.f[j].mul(&m.e[i]));
            let rhs = if i == j {
                m.idem.iter().fold(zero.clone(), |acc, (mu, x)| {
                    acc.add(&x.scale(&s.qint(mu.coord(i), d[i])))
                })
            } else {
                zero.clone()
            };
            r.equal("S(b)", p(i, j), &lhs, &rhs);
        }
    }

    // (c)-(f)
    for i in 0..n {
        for (mu, x) in &m.idem {
            let up = mu.shifted(c, i, 1);
            let dn = mu.shifted(c, i, -1);
            let pu = m.idem.get(&up);
            let pd = m.idem.get(&dn);
            let tag = format!("i={} mu={mu}", i + 1);
            let or_zero = |o: Option<Matrix<S::F>>| o.unwrap_or_else(|| zero.clone());
            r.equal(
                "S(c)",
                tag.clone(),
                &m.e[i].mul(x),
                &or_zero(pu.map(|y| y.mul(&m.e[i]))),
            );
            r.equal(
                "S(d)",
                tag.clone(),
                &m.f[i].mul(x),
                &or_zero(pd.map(|y| y.mul(&m.f[i]))),
            );
            r.equal(
                "S(e)",
                tag.clone(),
                &x.mul(&m.e[i]),
                &or_zero(pd.map(|y| m.e[i].mul(y))),
            );
            r.equal(
                "S(f)",
                tag,
                &x.mul(&m.f[i]),
                &or_zero(pu.map(|y| m.f[i].mul(y))),
            );
        }
    }

    // (g), (h)
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let k = (1 - c.entry(i, j)) as u32;
            let coef = |t| s.qbinom(k as i64, t, d[i]);
            r.zero("S(g)", p(i, j), &serre_sum(&m.e[i], &m.e[j], k, coef));
            r.zero("S(h)", p(i, j), &serre_sum(&m.f[i], &m.f[j], k, coef));
        }
    }

    let mut k: Vec<Matrix<S::F>> = (0..n).map(|i| m.k(c, s, i, 1)).collect();
    let kinv: Vec<Matrix<S::F>> = (0..n).map(|i| m.k(c, s, i, -1)).collect();
    if fault == Fault::KTamper && n > 0 && dim > 0 {
        let x = k[0].get(0, 0).times(&s.v_pow(1));
        k[0].set(0, 0, x);
    }

    // enveloping-algebra relations, skipped where v_i - v_i^-1 vanishes
    let singular = (0..n).any(|i| s.v_pow(d[i]).minus(&s.v_pow(-d[i])).is_zero());
    if singular {
        r.record_note(
            "U",
            "-",
            true,
            "skipped: v_i - v_i^-1 vanishes at this point",
        );
    } else {
        r.absorb(verify_u_relations(
            c,
            s,
            &UAction {
                e: &m.e,
                f: &m.f,
                k: &k,
                kinv: &kinv,
            },
        ));
    }

    // J-products and p_i(K_i), on the diagonals of the K_i
    for (i, ki) in k.iter().enumerate() {
        r.record("K-diag", format!("i={}", i + 1), ki.is_diagonal());
    }
    let kd: Vec<Vec<S::F>> = k.iter().map(diagonal_of).collect();
    for (lam, x) in &m.idem {
        let mut prod = vec![S::F::one(); dim];
        for i in 0..n {
            for mu in wpi.iter().filter(|mu| mu.coord(i) != lam.coord(i)) {
                let t = s.v_pow(d[i] * mu.coord(i));
                for (pk, kk) in prod.iter_mut().zip(&kd[i]) {
                    *pk = pk.times(&kk.minus(&t));
                }
            }
        }
        let j = Matrix::diagonal(prod);
        let pos = (0..dim).find(|&q| !x.get(q, q).is_zero());
        match pos {
            Some(q) if !j.get(q, q).is_zero() => {
                let scalar = j.get(q, q).clone();
                r.equal("J", format!("lambda={lam}"), &j, &x.scale(&scalar));
            }
            Some(_) => r.record_note("J", format!("lambda={lam}"), false, "vanishing scalar"),
            None => r.record_note("J", format!("lambda={lam}"), true, "empty weight space"),
        }
    }
    for i in 0..n {
        let mut prod = vec![S::F::one(); dim];
        for mu in wpi {
            let t = s.v_pow(d[i] * mu.coord(i));
            for (pk, kk) in prod.iter_mut().zip(&kd[i]) {
                *pk = pk.times(&kk.minus(&t));
            }
        }
        r.zero("p(K)", format!("i={}", i + 1), &Matrix::diagonal(prod));
    }

    for i in 0..n {
        let b = nilpotency_bound(c, wpi, i);
        r.zero("nil", format!("E{} ^{b}", i + 1), &m.e[i].pow(b));
        r.zero("nil", format!("F{} ^{b}", i + 1), &m.f[i].pow(b));
    }
    r
}

/// Weights at which divided-power relations are instantiated: `W pi` and its
/// negative.
fn relation_weights(wpi: &WeightSet) -> WeightSet {
    wpi.iter().flat_map(|w| [w.clone(), w.neg()]).collect()
}

pub fn verify_divided(r: &SchurRep, abound: u32) -> VerificationReport {
    divided_suite(r.cartan(), r.matrices(), &Generic, abound)
}

/// The eleven relation families of the divided-power presentation for all
/// `0 <= a, b <= abound`.
pub fn divided_suite<S: Scalars>(
    c: &CartanData,
    m: &RepMatrices<S::F>,
    s: &S,
    abound: u32,
) -> VerificationReport {
    let n = c.rank();
    let dim = m.dim();
    let d = c.symmetrizers();
    let id = Matrix::<S::F>::identity(dim);
    let zero = Matrix::<S::F>::zeros(dim, dim);
    let wpi: WeightSet = m.idem.keys().cloned().collect();
    let lams = relation_weights(&wpi);
    let mut r = VerificationReport::new("T");
    let top = (2 * abound).max(4);

    // E_i^(a), F_i^(a) for 0 <= a <= top
    let divided = |x: &Matrix<S::F>, i: usize| -> Vec<Matrix<S::F>> {
        let mut out = vec![id.clone()];
        let mut pw = id.clone();
        for a in 1..=top {
            pw = pw.mul(x);
            let fact = s
                .qfactorial(a, d[i])
                .inverse()
                .expect("nonzero quantum factorial");
            out.push(pw.scale(&fact));
        }
        out
    };
    let ed: Vec<Vec<Matrix<S::F>>> = (0..n).map(|i| divided(&m.e[i], i)).collect();
    let fd: Vec<Vec<Matrix<S::F>>> = (0..n).map(|i| divided(&m.f[i], i)).collect();

    // (a)
    for (a, pa) in &m.idem {
        for (b, pb) in &m.idem {
            let rhs = if a == b { pa.clone() } else { zero.clone() };
            r.equal("T(a)", format!("{a}{b}"), &pa.mul(pb), &rhs);
        }
    }
    let total = m.idem.values().fold(zero.clone(), |acc, x| acc.add(x));
    r.equal("T(a)", "sum=1", &total, &id);

    // (b), with the binomial factor [a+b choose a]_i
    for i in 0..n {
        r.equal("T(b)", format!("E{}^(0)=1", i + 1), &ed[i][0], &id);
        r.equal("T(b)", format!("F{}^(0)=1", i + 1), &fd[i][0], &id);
        for a in 0..=abound {
            for b in 0..=abound {
                let coef = s.qbinom((a + b) as i64, a, d[i]);
                let tag = format!("i={} a={a} b={b}", i + 1);
                r.equal(
                    "T(b)",
                    format!("E {tag}"),
                    &ed[i][a as usize].mul(&ed[i][b as usize]),
                    &ed[i][(a + b) as usize].scale(&coef),
                );
                r.equal(
                    "T(b)",
                    format!("F {tag}"),
                    &fd[i][a as usize].mul(&fd[i][b as usize]),
                    &fd[i][(a + b) as usize].scale(&coef),
                );
            }
        }
    }

    // (c)
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for a in 0..=abound as usize {
                for b in 0..=abound as usize {
                    r.equal(
                        "T(c)",
                        format!("i={} j={} a={a} b={b}", i + 1, j + 1),
                        &ed[i][a].mul(&fd[j][b]),
                        &fd[j][b].mul(&ed[i][a]),
                    );
                }
            }
        }
    }

    // (d), (e)
    for i in 0..n {
        for lam in &lams {
            for a in 0..=abound {
                for b in 0..=abound {
                    let base = (a + b) as i64 - lam.coord(i);
                    let tag = format!("i={} lambda={lam} a={a} b={b}", i + 1);

                    let lhs = ed[i][a as usize]
                        .mul(&m.idem_or_zero(&lam.neg()))
                        .mul(&fd[i][b as usize]);
                    let mut rhs = zero.clone();
                    for t in 0..=a.min(b) {
                        let wt = lam.neg().shifted(c, i, (a + b - t) as i64);
                        let term = fd[i][(b - t) as usize]
                            .mul(&m.idem_or_zero(&wt))
                            .mul(&ed[i][(a - t) as usize]);
                        rhs = rhs.add(&term.scale(&s.qbinom(base, t, d[i])));
                    }
                    r.equal("T(d)", tag.clone(), &lhs, &rhs);

                    let lhs = fd[i][b as usize]
                        .mul(&m.idem_or_zero(lam))
                        .mul(&ed[i][a as usize]);
                    let mut rhs = zero.clone();
                    for t in 0..=a.min(b) {
                        let wt = lam.shifted(c, i, -((a + b - t) as i64));
                        let term = ed[i][(a - t) as usize]
                            .mul(&m.idem_or_zero(&wt))
                            .mul(&fd[i][(b - t) as usize]);
                        rhs = rhs.add(&term.scale(&s.qbinom(base, t, d[i])));
                    }
                    r.equal("T(e)", tag, &lhs, &rhs);
                }
            }
        }
    }

    // (f)-(i)
    for i in 0..n {
        for lam in &lams {
            let x = m.idem_or_zero(lam);
            for a in 0..=abound {
                let a_i = a as i64;
                let tag = format!("i={} lambda={lam} a={a}", i + 1);
                let ea = &ed[i][a as usize];
                let fa = &fd[i][a as usize];
                let shifted = |k: i64| -> Matrix<S::F> {
                    let w: Weight = lam.shifted(c, i, k);
                    m.idem_or_zero(&w)
                };
                r.equal("T(f)", tag.clone(), &ea.mul(&x), &shifted(a_i).mul(ea));
                r.equal("T(g)", tag.clone(), &fa.mul(&x), &shifted(-a_i).mul(fa));
                r.equal("T(h)", tag.clone(), &x.mul(ea), &ea.mul(&shifted(-a_i)));
                r.equal("T(i)", tag, &x.mul(fa), &fa.mul(&shifted(a_i)));
            }
        }
    }

    // (j), (k)
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let k = (1 - c.entry(i, j)) as usize;
            let mut se = zero.clone();
            let mut sf = zero.clone();
            for t in 0..=k {
                let te = ed[i][k - t].mul(&m.e[j]).mul(&ed[i][t]);
                let tf = fd[i][k - t].mul(&m.f[j]).mul(&fd[i][t]);
                if t % 2 == 0 {
                    se = se.add(&te);
                    sf = sf.add(&tf);
                } else {
                    se = se.sub(&te);
                    sf = sf.sub(&tf);
                }
            }
            r.zero("T(j)", p(i, j), &se);
            r.zero("T(k)", p(i, j), &sf);
        }
    }
    r
}

/// Relations of the classical algebra at `v = 1`: the eight defining
/// families with integer coefficients, the enveloping-algebra relations on
/// `e_i, f_i, h_i`, `p_i(h_i) = 0` and nilpotency.
pub fn classical_suite(
    c: &CartanData,
    wpi: &WeightSet,
    m: &RepMatrices<BigRational>,
) -> VerificationReport {
    type Q = BigRational;
    let n = c.rank();
    let dim = m.dim();
    let q = |x: i64| Q::from_integer(x.into());
    let id = Matrix::<Q>::identity(dim);
    let zero = Matrix::<Q>::zeros(dim, dim);
    let mut r = VerificationReport::new("s");

    for (a, pa) in &m.idem {
        for (b, pb) in &m.idem {
            let rhs = if a == b { pa.clone() } else { zero.clone() };
            r.equal("s(a)", format!("{a}{b}"), &pa.mul(pb), &rhs);
        }
    }
    let total = m.idem.values().fold(zero.clone(), |acc, x| acc.add(x));
    r.equal("s(a)", "sum=1", &total, &id);

    let h: Vec<Matrix<Q>> = (0..n)
        .map(|i| {
            m.idem.iter().fold(zero.clone(), |acc, (mu, x)| {
                acc.add(&x.scale(&q(mu.coord(i))))
            })
        })
        .collect();

    for i in 0..n {
        for j in 0..n {
            let lhs = m.e[i].mul(&m.f[j]).sub(&m.f[j].mul(&m.e[i]));
            let rhs = if i == j { h[i].clone() } else { zero.clone() };
            r.equal("s(b)", p(i, j), &lhs, &rhs);
        }
    }
    for i in 0..n {
        for (mu, x) in &m.idem {
            let pu = m.idem.get(&mu.shifted(c, i, 1));
            let pd = m.idem.get(&mu.shifted(c, i, -1));
            let tag = format!("i={} mu={mu}", i + 1);
            let or_zero = |o: Option<Matrix<Q>>| o.unwrap_or_else(|| zero.clone());
            r.equal(
                "s(c)",
                tag.clone(),
                &m.e[i].mul(x),
                &or_zero(pu.map(|y| y.mul(&m.e[i]))),
            );
            r.equal(
                "s(d)",
                tag.clone(),
                &m.f[i].mul(x),
                &or_zero(pd.map(|y| y.mul(&m.f[i]))),
            );
            r.equal(
                "s(e)",
                tag.clone(),
                &x.mul(&m.e[i]),
                &or_zero(pd.map(|y| m.e[i].mul(y))),
            );
            r.equal(
                "s(f)",
                tag,
                &x.mul(&m.f[i]),
                &or_zero(pu.map(|y| m.f[i].mul(y))),
            );
        }
    }
    let binom = |k: u32, t: u32| -> Q {
        let mut acc = 1i64;
        for s in 0..t as i64 {
            acc = acc * (k as i64 - s) / (s + 1);
        }
        q(acc)
    };
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let k = (1 - c.entry(i, j)) as u32;
            r.zero(
                "s(g)",
                p(i, j),
                &serre_sum(&m.e[i], &m.e[j], k, |t| binom(k, t)),
            );
            r.zero(
                "s(h)",
                p(i, j),
                &serre_sum(&m.f[i], &m.f[j], k, |t| binom(k, t)),
            );
        }
    }

    // enveloping algebra of the Lie algebra
    for i in 0..n {
        for j in 0..n {
            r.equal(
                "u(a)",
                format!("hh {}", p(i, j)),
                &h[i].mul(&h[j]),
                &h[j].mul(&h[i]),
            );
            let a = q(c.entry(i, j));
            r.equal(
                "u(b)",
                format!("he {}", p(i, j)),
                &h[i].mul(&m.e[j]).sub(&m.e[j].mul(&h[i])),
                &m.e[j].scale(&a),
            );
            r.equal(
                "u(b)",
                format!("hf {}", p(i, j)),
                &h[i].mul(&m.f[j]).sub(&m.f[j].mul(&h[i])),
                &m.f[j].scale(&(-a)),
            );
        }
    }
    for i in 0..n {
        let poly = wpi.iter().fold(id.clone(), |acc, mu| {
            acc.mul(&h[i].sub(&id.scale(&q(mu.coord(i)))))
        });
        r.zero("p(h)", format!("i={}", i + 1), &poly);
        let b = nilpotency_bound(c, wpi, i);
        r.zero("nil", format!("e{} ^{b}", i + 1), &m.e[i].pow(b));
        r.zero("nil", format!("f{} ^{b}", i + 1), &m.f[i].pow(b));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin_cartan;
    use crate::schur::rep::assemble;

    fn rep(t: char, n: usize, pi: &str) -> SchurRep {
        assemble(
            &builtin_cartan(t, n).unwrap(),
            &WeightSet::parse(pi).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn sl2_presentation() {
        let r = rep('A', 1, "0;2");
        let rep = verify_presentation(&r);
        assert!(rep.passed(), "{rep}");
        let trivial = verify_presentation(&rep_trivial());
        assert!(trivial.passed());
    }

    fn rep_trivial() -> SchurRep {
        rep('A', 1, "0")
    }

    #[test]
    fn tampered_k_is_caught() {
        let r = rep('A', 1, "0;2");
        let rep = verify_presentation_with(&r, Fault::KTamper);
        assert!(!rep.passed());
        let bad: Vec<_> = rep.failures().filter(|c| c.relation == "U(b)").collect();
        assert!(!bad.is_empty());
        assert!(bad[0].defect.is_some());
    }

    #[test]
    fn divided_sl2() {
        let r = rep('A', 1, "0;2");
        let rep = verify_divided(&r, 3);
        assert!(rep.passed(), "{rep}");
        let r = rep_trivial();
        assert!(verify_divided(&r, 2).passed());
    }

    #[test]
    fn divided_natural_instance() {
        // F i_(1) E = i_(-1) on the natural module
        let r = rep('A', 1, "1");
        let m = r.matrices();
        let lhs = m.f[0]
            .mul(&m.idem_or_zero(&Weight::new(vec![1])))
            .mul(&m.e[0]);
        assert_eq!(lhs, m.idem_or_zero(&Weight::new(vec![-1])));
    }

    #[test]
    fn nilpotency_bounds() {
        let a1 = builtin_cartan('A', 1).unwrap();
        let wpi = WeightSet::parse("2;0;-2").unwrap();
        assert_eq!(nilpotency_bound(&a1, &wpi, 0), 3);
    }
}
