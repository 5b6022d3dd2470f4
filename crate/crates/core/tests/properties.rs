mod common;

use common::Samples;
use proptest::prelude::*;
use vkp_core::oracle::{classify, ContextShape, GenConfig, GoalShape};
use vkp_core::reduction::{is_normal, weak_head_path};
use vkp_core::{eval_v, infer, normalize_kp, parse_term, step_anywhere, Calculus, Normalizer, Strategy as Strat, DEFAULT_BUDGET};

fn kp() -> GenConfig {
    GenConfig::new(Calculus::Kp, 7, 4)
}

fn v() -> GenConfig {
    GenConfig::new(Calculus::V, 7, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kp_subject_reduction(s in Samples(kp().extension_rate(0.6))) {
        for r in step_anywhere(&s.ctx, &s.term, s.calculus).unwrap() {
            prop_assert_eq!(infer(&s.ctx, &r.term, s.calculus), Ok(s.formula.clone()), "{} at {:?}", r.rule, r.path);
        }
    }

    #[test]
    fn v_subject_reduction(s in Samples(v().extension_rate(0.6))) {
        for r in step_anywhere(&s.ctx, &s.term, s.calculus).unwrap() {
            prop_assert_eq!(infer(&s.ctx, &r.term, s.calculus), Ok(s.formula.clone()), "{} at {:?}", r.rule, r.path);
        }
    }

    #[test]
    fn round_trip(s in Samples(kp())) {
        prop_assert_eq!(parse_term(&s.term.to_string()).unwrap(), s.term);
    }

    #[test]
    fn kp_normal_forms_classify(s in Samples(kp().context(ContextShape::Negated).goal(GoalShape::HypothesisTarget))) {
        let nf = normalize_kp(&s.ctx, &s.term, DEFAULT_BUDGET).unwrap();
        prop_assert!(classify(&s.ctx, &nf, Calculus::Kp).is_ok());
    }

    #[test]
    fn v_normal_forms_classify(s in Samples(v().context(ContextShape::Implicative))) {
        let nf = eval_v(&s.ctx, &s.term).unwrap();
        prop_assert!(classify(&s.ctx, &nf, Calculus::V).is_ok());
    }

    #[test]
    fn weak_head_then_full(s in Samples(kp())) {
        let whnf = Normalizer::new(Calculus::Kp).strategy(Strat::WeakHead).run(&s.ctx, &s.term).unwrap().term;
        prop_assert!(weak_head_path(&whnf).is_none());
        let nf = Normalizer::new(Calculus::Kp).run(&s.ctx, &whnf).unwrap().term;
        prop_assert!(is_normal(&nf));
        prop_assert_eq!(infer(&s.ctx, &nf, Calculus::Kp), Ok(s.formula));
    }
}

/// A deliberately false property, to check that shrinking finds a small
/// counterexample and keeps it well typed.
#[test]
fn shrinking_reaches_small_terms() {
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig {
        cases: 100,
        failure_persistence: None,
        ..ProptestConfig::default()
    });
    let result = runner.run(&Samples(kp()), |s| {
        prop_assert!(s.term.size() < 6);
        Ok(())
    });
    let Err(proptest::test_runner::TestError::Fail(_, minimal)) = result else {
        panic!("expected a counterexample");
    };
    assert_eq!(infer(&minimal.ctx, &minimal.term, minimal.calculus), Ok(minimal.formula.clone()));
    assert!(minimal.term.size() <= 12, "{} has size {}", minimal.term, minimal.term.size());
}
