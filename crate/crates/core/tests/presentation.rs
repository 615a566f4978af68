use rand::rngs::StdRng;
use rand::SeedableRng;

use qschur::cartan::builtin_cartan;
use qschur::present::{
    complete, count_normal_words, instantiate_at, instantiate_presentation, presented_dimension,
    random_point, strategy_disagreements, PresentedDimension,
};
use qschur::schur::{algebra_dimension, assemble};
use qschur::{Error, WeightSet};

const BOUND: usize = 16;

fn desk() -> Vec<(char, usize, &'static str)> {
    vec![
        ('A', 1, "1"),
        ('A', 1, "0;2"),
        ('A', 1, "1;3"),
        ('A', 2, "1,0"),
        ('A', 2, "2,0;0,1"),
        ('B', 2, "0,0;1,0"),
    ]
}

#[test]
fn normal_forms_do_not_depend_on_strategy() {
    let mut rng = StdRng::seed_from_u64(2024);
    for (t, n, pi) in desk() {
        let c = builtin_cartan(t, n).unwrap();
        let p = instantiate_presentation(&c, &WeightSet::parse(pi).unwrap(), false).unwrap();
        let sys = complete(&p, BOUND).unwrap();
        assert!(sys.is_confluent(), "{t}{n} {pi}");
        let bad = strategy_disagreements(&sys, 200, BOUND, &mut rng);
        assert!(bad.is_empty(), "{t}{n} {pi}: {}", p.word_text(&bad[0]));
    }
}

#[test]
fn exact_specialized_and_classical_agree() {
    let mut rng = StdRng::seed_from_u64(99);
    for (t, n, pi) in desk() {
        let c = builtin_cartan(t, n).unwrap();
        let pi = WeightSet::parse(pi).unwrap();
        let exact = presented_dimension(&c, &pi, false, BOUND).unwrap();
        let closure = algebra_dimension(&assemble(&c, &pi).unwrap()).unwrap();
        assert_eq!(exact, PresentedDimension::Finite(closure), "{t}{n} {pi}");

        let v0 = random_point(&mut rng);
        let p = instantiate_at(&c, &pi, &v0, false).unwrap();
        let at = count_normal_words(&complete(&p, BOUND).unwrap()).unwrap();
        assert_eq!(at, exact, "{t}{n} {pi} at v = {v0}");

        assert_eq!(
            presented_dimension(&c, &pi, true, BOUND).unwrap(),
            exact,
            "{t}{n} {pi} classical"
        );
    }
}

#[test]
fn non_saturated_sets_collapse_to_their_saturated_part() {
    let a1 = builtin_cartan('A', 1).unwrap();
    // 3 is missing below 5, so only {1} survives
    let pi = WeightSet::parse("1;5").unwrap();
    assert_eq!(
        presented_dimension(&a1, &pi, false, BOUND).unwrap(),
        PresentedDimension::Finite(4)
    );
    let pi = WeightSet::parse("2").unwrap();
    assert_eq!(
        presented_dimension(&a1, &pi, true, 8).unwrap(),
        PresentedDimension::Finite(0)
    );
}

#[test]
fn short_bounds_are_reported() {
    let a1 = builtin_cartan('A', 1).unwrap();
    let pi = WeightSet::parse("0;2").unwrap();
    assert!(matches!(
        presented_dimension(&a1, &pi, false, 1),
        Err(Error::BoundTooSmall { bound: 1, .. })
    ));
    let a2 = builtin_cartan('A', 2).unwrap();
    let pi = WeightSet::parse("2,0;0,1").unwrap();
    assert!(matches!(
        presented_dimension(&a2, &pi, false, 4).unwrap(),
        PresentedDimension::Unstabilized(_)
    ));
}
