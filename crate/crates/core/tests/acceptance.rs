//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_integer::binomial;
use num_rational::BigRational;
use qschur::cartan::{builtin_cartan, validate_cartan, CartanData};
use qschur::hwmodule::tensor_power_support;
use qschur::present::{presented_dimension, PresentedDimension};
use qschur::qarith::{qbinom_d, qint_d};
use qschur::report::VerificationReport;
use qschur::schur::{
    algebra_span, assemble, cell_basis, specialize, verify_divided, verify_presentation,
    Involution, SchurRep,
};
use qschur::weyl::{orbit, saturate, weyl_dimension};
use qschur::{LaurentPoly, Weight, WeightSet};

type Outcome = Result<String, String>;

struct Case {
    label: String,
    rep: SchurRep,
    algebra_dim: usize,
    cells: VerificationReport,
}

fn set(s: &str) -> WeightSet {
    WeightSet::parse(s).unwrap()
}

fn cartan(t: char, n: usize) -> CartanData {
    builtin_cartan(t, n).unwrap()
}

fn weyl_prediction(c: &CartanData, pi: &WeightSet) -> u64 {
    pi.iter()
        .map(|l| weyl_dimension(c, l).unwrap().pow(2))
        .sum()
}

fn natural_square_c2() -> WeightSet {
    let c = cartan('C', 2);
    saturate(
        &c,
        &tensor_power_support(&c, &Weight::new(vec![1, 0]), 2).unwrap(),
    )
    .unwrap()
}

/// The dimension-identity cases with their expected values.
fn dimension_cases() -> Vec<(String, CartanData, WeightSet, u64)> {
    vec![
        ("A1 {1}".into(), cartan('A', 1), set("1"), 4),
        ("A1 {0,2}".into(), cartan('A', 1), set("0;2"), 10),
        ("A1 {1,3}".into(), cartan('A', 1), set("1;3"), 20),
        ("A2 {(1,0)}".into(), cartan('A', 2), set("1,0"), 9),
        (
            "A2 {(2,0),(0,1)}".into(),
            cartan('A', 2),
            set("2,0;0,1"),
            45,
        ),
        (
            "C2 natural square".into(),
            cartan('C', 2),
            natural_square_c2(),
            126,
        ),
    ]
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        dimension_cases()
            .into_iter()
            .map(|(label, c, pi, _)| {
                let rep = assemble(&c, &pi).unwrap();
                let span = algebra_span(&rep, 20_000).unwrap();
                let cells = cell_basis(&rep, &span).unwrap().report;
                Case {
                    label,
                    algebra_dim: span.dim(),
                    rep,
                    cells,
                }
            })
            .collect()
    })
}

/// `saturate({rho})`, or the saturation of the largest element whose
/// saturation keeps the total module dimension within `cap`.
fn relation_pi(c: &CartanData, cap: u64) -> WeightSet {
    let rho = Weight::new(vec![1; c.rank()]);
    let full = saturate(c, &[rho].into_iter().collect()).unwrap();
    let total = |s: &WeightSet| s.iter().map(|l| weyl_dimension(c, l).unwrap()).sum::<u64>();
    if total(&full) <= cap {
        return full;
    }
    full.iter()
        .map(|m| saturate(c, &[m.clone()].into_iter().collect()).unwrap())
        .filter(|s| total(s) <= cap)
        .max_by_key(|s| (total(s), s.len()))
        .unwrap()
}

fn relation_suite() -> &'static [(String, SchurRep)] {
    static REPS: OnceLock<Vec<(String, SchurRep)>> = OnceLock::new();
    REPS.get_or_init(|| {
        let b2 = validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap();
        [
            ("A1".to_string(), cartan('A', 1)),
            ("A2".to_string(), cartan('A', 2)),
            ("C2".to_string(), cartan('C', 2)),
            ("B2".to_string(), b2),
            ("G2".to_string(), cartan('G', 2)),
        ]
        .into_iter()
        .map(|(name, c)| {
            let pi = relation_pi(&c, 80);
            (format!("{name} {pi}"), assemble(&c, &pi).unwrap())
        })
        .collect()
    })
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(out: &str, key: &str) -> Option<String> {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .map(str::to_string)
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn headline_numbers() -> Outcome {
    let start = Instant::now();
    let (out, code) = run_cli(&["dim", "--type", "A1", "--pi", "0;2"]);
    require(code == 0, || format!("dim exited {code}"))?;
    for key in ["assembled", "presented", "prediction"] {
        let v = field(&out, key);
        require(v.as_deref() == Some("10"), || format!("{key} = {v:?}"))?;
    }
    let (out, code) = run_cli(&["envdim", "--type", "A1", "--hw", "2", "--d", "1"]);
    require(code == 0, || format!("envdim exited {code}"))?;
    let image = field(&out, "image");
    require(image.as_deref() == Some("9"), || {
        format!("image = {image:?}")
    })?;
    let elapsed = start.elapsed();
    require(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok("assembled 10, presented 10, prediction 10; envelope image 9".into())
}

fn dimension_identity() -> Outcome {
    let mut seen = Vec::new();
    for ((label, c, pi, expected), case) in dimension_cases().into_iter().zip(cases()) {
        let weyl = weyl_prediction(&c, &pi);
        require(weyl == expected, || {
            format!("{label}: Weyl formula gives {weyl}, expected {expected}")
        })?;
        require(case.algebra_dim as u64 == expected, || {
            format!("{label}: span closure {} != {expected}", case.algebra_dim)
        })?;
        require(case.rep.predicted_dimension() as u64 == expected, || {
            format!("{label}: predicted {}", case.rep.predicted_dimension())
        })?;
        seen.push(format!("{label}={expected}"));
    }
    Ok(seen.join(", "))
}

fn oracle_agreement() -> Outcome {
    let mut seen = Vec::new();
    for ((label, c, pi, _), case) in dimension_cases().into_iter().zip(cases()) {
        if orbit(&c, &pi).len() > 9 {
            continue;
        }
        let p = presented_dimension(&c, &pi, false, 16).map_err(|e| format!("{label}: {e}"))?;
        require(p == PresentedDimension::Finite(case.algebra_dim), || {
            format!("{label}: presented {p} vs closure {}", case.algebra_dim)
        })?;
        seen.push(format!("{label}={}", case.algebra_dim));
    }
    require(seen.len() == 6, || format!("only {} cases ran", seen.len()))?;
    Ok(seen.join(", "))
}

fn collapse() -> Outcome {
    let p = presented_dimension(&cartan('A', 1), &set("2"), false, 8).map_err(|e| e.to_string())?;
    require(p == PresentedDimension::Finite(0), || {
        format!("presented {p}")
    })?;
    Ok("A1 {2} presents the zero algebra".into())
}

fn relation_suites() -> Outcome {
    let mut seen = Vec::new();
    for (label, r) in relation_suite() {
        require(r.dim() <= 80, || format!("{label}: dimension {}", r.dim()))?;
        let rep = verify_presentation(r);
        require(rep.passed(), || {
            format!("{label}: {} failures", rep.failures().count())
        })?;
        seen.push(format!("{label} ({} checks)", rep.len()));
        if label.starts_with("G2") {
            let long = rep
                .items
                .iter()
                .filter(|i| (i.relation == "S(g)" || i.relation == "S(h)") && i.params == "i=1 j=2")
                .count();
            require(long == 2, || {
                "G2 Serre relations with five terms missing".into()
            })?;
        }
        if label.starts_with("A1") || label.starts_with("A2") {
            let div = verify_divided(r, 3);
            require(div.passed(), || format!("{label}: divided powers fail"))?;
        }
    }
    let c = builtin_cartan('A', 1).unwrap();
    let extra = assemble(&c, &set("0;2")).unwrap();
    require(verify_divided(&extra, 3).passed(), || {
        "A1 {0,2}: divided powers fail".into()
    })?;
    Ok(seen.join(", "))
}

fn contravariance() -> Outcome {
    let mut modules = 0;
    let mut reps = 0;
    let all = cases()
        .iter()
        .map(|c| &c.rep)
        .chain(relation_suite().iter().map(|(_, r)| r));
    for r in all {
        for m in r.summands() {
            let inv = m
                .gram()
                .inverse()
                .ok_or_else(|| format!("singular form on {}", m.highest_weight()))?;
            for i in 0..r.cartan().rank() {
                let twisted = inv.mul(&m.e(i).transpose()).mul(m.gram());
                require(&twisted == m.f(i), || {
                    format!("module {}: E{} not adjoint", m.highest_weight(), i + 1)
                })?;
            }
            modules += 1;
        }
        let iota = Involution::new(r.gram()).map_err(|e| e.to_string())?;
        for i in 0..r.cartan().rank() {
            require(&iota.apply(r.e(i)) == r.f(i), || {
                format!("{}: iota(E) != F", r.pi())
            })?;
            require(&iota.apply(&iota.apply(r.e(i))) == r.e(i), || {
                format!("{}: iota^2 != id", r.pi())
            })?;
            require(&iota.apply(&iota.apply(r.f(i))) == r.f(i), || {
                format!("{}: iota^2 != id", r.pi())
            })?;
        }
        reps += 1;
    }
    let mut cells = 0;
    for case in cases() {
        for item in case
            .cells
            .items
            .iter()
            .filter(|i| i.relation.starts_with("iota"))
        {
            require(item.passed, || {
                format!("{}: {} {}", case.label, item.relation, item.params)
            })?;
            cells += 1;
        }
    }
    Ok(format!(
        "{modules} modules, {reps} representations, {cells} involution checks"
    ))
}

fn cellular_axiom() -> Outcome {
    let mut checks = 0;
    for case in cases() {
        require(case.cells.passed(), || {
            let f: Vec<String> = case
                .cells
                .failures()
                .take(3)
                .map(|i| format!("{} {}", i.relation, i.params))
                .collect();
            format!("{}: {}", case.label, f.join("; "))
        })?;
        let across = case
            .cells
            .items
            .iter()
            .filter(|i| i.relation == "r_u(T)")
            .count();
        require(across > 0, || {
            format!("{}: no coefficient comparisons", case.label)
        })?;
        checks += across;
    }
    Ok(format!(
        "{checks} coefficient comparisons across two choices of T"
    ))
}

fn classical_case() -> Outcome {
    let one = BigRational::from_integer(1.into());
    let mut seen = Vec::new();
    for case in cases() {
        let sp = specialize(&case.rep, &one).map_err(|e| e.to_string())?;
        require(sp.report.passed(), || {
            format!(
                "{}: {} classical failures",
                case.label,
                sp.report.failures().count()
            )
        })?;
        require(sp.report.items.iter().any(|i| i.relation == "p(h)"), || {
            format!("{}: polynomial identity not checked", case.label)
        })?;
        require(sp.dimension == case.algebra_dim, || {
            format!(
                "{}: classical {} vs quantum {}",
                case.label, sp.dimension, case.algebra_dim
            )
        })?;
        seen.push(format!("{}={}", case.label, sp.dimension));
    }
    Ok(seen.join(", "))
}

fn q_schur_sequence() -> Outcome {
    let c = cartan('A', 1);
    let mut seen = Vec::new();
    for d in 1..=4u64 {
        let pi = tensor_power_support(&c, &Weight::new(vec![1]), d as usize)
            .map_err(|e| e.to_string())?;
        let r = assemble(&c, &pi).map_err(|e| e.to_string())?;
        let dim = algebra_span(&r, 20_000).map_err(|e| e.to_string())?.dim() as u64;
        let hook: u64 = (0..=d)
            .filter(|r| r % 2 == d % 2)
            .map(|r| (r + 1).pow(2))
            .sum();
        let expected = binomial(d + 3, 3);
        require(hook == expected, || {
            format!("d={d}: hook sum {hook} vs binomial {expected}")
        })?;
        require(dim == expected, || {
            format!("d={d}: dimension {dim} vs {expected}")
        })?;
        seen.push(dim.to_string());
    }
    Ok(seen.join(", "))
}

fn oracle_cross_checks() -> Outcome {
    let mut spaces = 0;
    let all = cases()
        .iter()
        .map(|c| &c.rep)
        .chain(relation_suite().iter().map(|(_, r)| r));
    for r in all {
        for m in r.summands() {
            for s in m.spaces() {
                let rank = s.gram.rank();
                let mult = m.diagram().multiplicity(&s.weight) as usize;
                require(rank == mult, || {
                    format!(
                        "{} at {}: rank {rank} vs multiplicity {mult}",
                        m.highest_weight(),
                        s.weight
                    )
                })?;
                spaces += 1;
            }
        }
    }
    let mut identities = 0;
    for d in 1..=3i64 {
        let vd = LaurentPoly::v_pow(d);
        for a in -6..=6i64 {
            let lhs = qint_d(a + 1, d);
            let rhs = &(&vd * &qint_d(a, d)) + &LaurentPoly::v_pow(-d * a);
            require(lhs == rhs, || {
                format!("q-integer recursion at a={a}, d={d}")
            })?;
            require(qint_d(a, d).bar() == qint_d(a, d), || {
                format!("[{a}] not bar-invariant")
            })?;
            identities += 2;
        }
        for a in -8..=8i64 {
            for t in 1..=8u32 {
                let lhs = qbinom_d(a, t, d);
                let rhs = &(&LaurentPoly::v_pow(d * t as i64) * &qbinom_d(a - 1, t, d))
                    + &(&LaurentPoly::v_pow(-d * (a - t as i64)) * &qbinom_d(a - 1, t - 1, d));
                require(lhs == rhs, || {
                    format!("Pascal identity at a={a}, t={t}, d={d}")
                })?;
                require(lhs.bar() == lhs, || {
                    format!("binomial ({a} {t}) not bar-invariant")
                })?;
                identities += 2;
            }
        }
    }
    Ok(format!("{spaces} weight spaces, {identities} q-identities"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "headline numbers", headline_numbers),
        (2, "dimension identity", dimension_identity),
        (3, "presentation oracle agreement", oracle_agreement),
        (4, "collapse without saturation", collapse),
        (5, "relation suites", relation_suites),
        (6, "contravariance and involution", contravariance),
        (7, "cellular axiom", cellular_axiom),
        (8, "classical specialization", classical_case),
        (9, "q-Schur dimension sequence", q_schur_sequence),
        (10, "oracle cross-checks", oracle_cross_checks),
    ];
    let mut failed = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {title}: {why} [{secs:.2}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
