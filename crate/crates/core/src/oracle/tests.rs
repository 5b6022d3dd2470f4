use super::*;
use crate::normalize::{eval_v, normalize_kp, DEFAULT_BUDGET};
use crate::parser::{parse_formula, parse_term};
use crate::syntax::{Calculus, Formula, Term, TypingContext};
use crate::typing::{check, infer};

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn t(s: &str) -> Term {
    parse_term(s).unwrap()
}

fn ctx(entries: &[(&str, &str)]) -> TypingContext {
    entries.iter().map(|(x, a)| (x.to_string(), f(a))).collect()
}

#[test]
fn classify_ipc_shapes() {
    let c = ctx(&[("f", "A -> B"), ("g", "(A -> A) -> B"), ("n", "(A -> A) -> False")]);
    let class = |s: &str| classify(&c, &t(s), Calculus::V).unwrap();
    assert_eq!(class("fun (x : A) => x"), ClassReport::Abstraction);
    assert_eq!(class("f"), ClassReport::VariableInCtx);
    assert_eq!(class("inj1[B] (fun (x : A) => x)"), ClassReport::Injection);
    assert_eq!(class("(f, g)"), ClassReport::Pair);
    assert_eq!(
        class("g (fun (x : A) => x)"),
        ClassReport::ArrowNeutral {
            head: NeutralHead::Variable("g".into())
        }
    );
    assert_eq!(
        class("proj1 (exfalso[B /\\ A] (n (fun (x : A) => x)))"),
        ClassReport::ArrowNeutral {
            head: NeutralHead::Exfalso
        }
    );
}

#[test]
fn classify_kp_shapes() {
    let c = ctx(&[("n", "~(A -> A)"), ("m", "~B")]);
    let class = |s: &str| classify(&c, &t(s), Calculus::Kp).unwrap();
    assert_eq!(class("n (fun (x : A) => x)"), ClassReport::VarAppFalsum);
    assert_eq!(class("exfalso[B] (n (fun (x : A) => x))"), ClassReport::NegNeutral);
    assert_eq!(class("m"), ClassReport::VariableInCtx);
    assert_eq!(
        class("inj1[C] (fun (u : ~B) => u)"),
        ClassReport::Injection
    );
}

#[test]
fn classify_preconditions() {
    let c = ctx(&[("f", "A -> B")]);
    assert!(matches!(
        classify(&c, &t("(fun (x : A) => x) a"), Calculus::V),
        Err(ClassifyError::PreconditionViolation(_))
    ));
    assert!(matches!(
        classify(&ctx(&[("a", "A")]), &t("a"), Calculus::V),
        Err(ClassifyError::PreconditionViolation(_))
    ));
    assert!(matches!(classify(&c, &t("f"), Calculus::Kp), Err(ClassifyError::PreconditionViolation(_))));
    assert!(matches!(classify(&c, &t("zz"), Calculus::Ipc), Err(ClassifyError::PreconditionViolation(_))));
}

#[test]
fn class_report_labels() {
    assert_eq!(ClassReport::Abstraction.to_string(), "abstraction");
    assert_eq!(
        ClassReport::ArrowNeutral {
            head: NeutralHead::Variable("x".into())
        }
        .to_string(),
        "neutral, headed by `x`"
    );
    assert_eq!(ClassReport::NegNeutral.to_string(), "exfalso-neutral");
    assert_eq!(ClassReport::VarAppFalsum.to_string(), "hypothesis applied, proving False");
}

fn provable(s: &str) -> Term {
    match ipc_provable(&f(s)).unwrap() {
        Verdict::Provable(p) => {
            check(&TypingContext::new(), &p, &f(s), Calculus::Ipc).unwrap();
            p
        }
        Verdict::NotProvable(m) => panic!("{s} refuted by\n{m}"),
    }
}

fn refuted(s: &str) -> KripkeModel {
    match ipc_provable(&f(s)).unwrap() {
        Verdict::NotProvable(m) => {
            assert!(m.refutes(&f(s)));
            m
        }
        Verdict::Provable(p) => panic!("{s} proved by {p}"),
    }
}

#[test]
fn prover_accepts_tautologies() {
    assert_eq!(provable("A -> A"), t("fun (h1 : A) => h1"));
    provable("A /\\ B -> B /\\ A");
    provable("A \\/ B -> B \\/ A");
    provable("~~(A \\/ ~A)");
    provable("((A -> B) -> C) -> B -> C");
    provable("(A -> B) -> (B -> C) -> A -> C");
    provable("False -> A");
    provable("(~B -> A1) \\/ (~B -> A2) -> ~B -> A1 \\/ A2");
}

#[test]
fn prover_refutes_non_theorems() {
    let harrop = refuted("(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)");
    assert!(harrop.worlds <= 6);
    let peirce = refuted("((A -> B) -> A) -> A");
    assert!(peirce.worlds <= 3);
    assert_eq!(refuted("A \\/ ~A").worlds, 2);
    assert_eq!(refuted("A").worlds, 1);
    refuted("~~A -> A");
    refuted("(A -> B \\/ C) -> (A -> B) \\/ (A -> C)");
}

#[test]
fn prover_errors() {
    assert!(matches!(
        ipc_provable_with(&f("((A -> B) -> A) -> A"), ProverConfig { fuel: 1_000, max_worlds: 1 }),
        Err(OracleError::CountermodelNotFound { max_worlds: 1, .. })
    ));
    assert!(matches!(
        prove(&f("(A -> B) -> (B -> C) -> A -> C"), 1),
        Err(OracleError::SearchBudgetExceeded { fuel: 1, .. })
    ));
    assert_eq!(prove(&f("A -> B"), 100), Ok(None));
}

#[test]
fn kripke_model_checks() {
    // Two worlds, w0 <= w1, A true only at w1.
    let model = KripkeModel {
        worlds: 2,
        up: vec![0b11, 0b10],
        valuation: [("A".to_string(), 0b10)].into_iter().collect(),
    };
    assert!(model.is_rooted_partial_order());
    assert!(model.valuation_is_monotone());
    assert!(!model.forces(0, &f("A \\/ ~A")));
    assert!(model.forces(1, &f("A \\/ ~A")));
    assert!(model.forces(0, &f("~~A")));
    assert!(model.refutes(&f("~~A -> A")));
    assert_eq!(model.successors(0), vec![1]);
    assert_eq!(model.to_string(), "worlds: 2 (root w0)\n  w0 -> [w1]  forces {}\n  w1 -> []  forces {A}\n");

    let bad = KripkeModel {
        valuation: [("A".to_string(), 0b01)].into_iter().collect(),
        ..model.clone()
    };
    assert!(!bad.valuation_is_monotone());
    assert!(!bad.refutes(&f("A")));
    let cyclic = KripkeModel {
        up: vec![0b11, 0b11],
        ..model
    };
    assert!(!cyclic.is_rooted_partial_order());
}

#[test]
fn countermodels_are_minimal_in_size() {
    let m = find_countermodel(&f("A \\/ ~A"), 6).unwrap();
    assert_eq!(m.worlds, 2);
    assert!(find_countermodel(&f("A -> A"), 4).is_none());
}

#[test]
fn generator_is_deterministic_and_typed() {
    for calc in Calculus::ALL {
        for seed in 0..30 {
            let s = generate_typed(calc, 5, 3, seed).unwrap();
            assert_eq!(generate_typed(calc, 5, 3, seed).unwrap(), s);
            assert_eq!(s.calculus, calc);
            assert!(s.term.depth() <= 5);
            assert_eq!(infer(&s.ctx, &s.term, calc).unwrap(), s.formula);
            assert!(s.formula.atoms().iter().all(|p| ["A", "B", "C"].contains(&p.as_str())));
        }
    }
}

#[test]
fn generator_depth_one_is_a_variable() {
    for seed in 0..20 {
        match generate_typed(Calculus::Kp, 1, 2, seed) {
            Ok(s) => assert!(s.term.is_var()),
            Err(e) => assert!(matches!(e, GenError::GenerationFailed { .. })),
        }
    }
    assert!(Generator::new(GenConfig::new(Calculus::Kp, 1, 2).context(ContextShape::Empty))
        .sample(0)
        .is_err());
    assert!(generate_typed(Calculus::Ipc, 0, 2, 0).is_err());
}

#[test]
fn generator_respects_shapes() {
    for seed in 0..40 {
        let cfg = GenConfig::new(Calculus::Kp, 6, 4).context(ContextShape::Empty).goal(GoalShape::Disjunction);
        let s = Generator::new(cfg).sample(seed).unwrap();
        assert!(s.ctx.is_empty() && s.term.is_closed());
        assert!(s.formula.as_disj().is_some());

        let s = Generator::new(GenConfig::new(Calculus::Kp, 6, 4).context(ContextShape::Negated)).sample(seed).unwrap();
        assert!(s.ctx.is_negated());
        let s = Generator::new(GenConfig::new(Calculus::V, 6, 4).context(ContextShape::Implicative)).sample(seed).unwrap();
        assert!(s.ctx.is_implicative());
    }
}

#[test]
fn extension_rate_controls_extension_nodes() {
    for seed in 0..15 {
        let always = GenConfig::new(Calculus::V, 6, 4).extension_rate(1.0);
        assert!(Generator::new(always).sample(seed).unwrap().term.contains_visser());
        let always = GenConfig::new(Calculus::Kp, 6, 4).extension_rate(1.0);
        assert!(Generator::new(always).sample(seed).unwrap().term.contains_harrop());
        let never = GenConfig::new(Calculus::Kp, 6, 4).extension_rate(0.0);
        assert!(!Generator::new(never).sample(seed).unwrap().term.contains_harrop());
    }
}

#[test]
fn generated_terms_normalize() {
    for seed in 0..40 {
        let v = Generator::new(GenConfig::new(Calculus::V, 6, 4).extension_rate(1.0)).sample(seed).unwrap();
        let out = eval_v(&v.ctx, &v.term).unwrap();
        assert_eq!(infer(&v.ctx, &out, Calculus::Ipc).unwrap(), v.formula);
        let kp = Generator::new(GenConfig::new(Calculus::Kp, 6, 4).extension_rate(1.0)).sample(seed).unwrap();
        let out = normalize_kp(&kp.ctx, &kp.term, DEFAULT_BUDGET).unwrap();
        assert_eq!(infer(&kp.ctx, &out, Calculus::Kp).unwrap(), kp.formula);
    }
}

#[test]
fn shrinking_keeps_samples_valid() {
    for seed in 0..25 {
        let s = generate_typed(Calculus::Kp, 7, 4, seed).unwrap();
        for smaller in shrink(&s) {
            assert_eq!(infer(&smaller.ctx, &smaller.term, smaller.calculus).unwrap(), smaller.formula);
            assert_eq!(smaller.formula, s.formula);
            assert!(smaller.term.size() < s.term.size() || smaller.ctx.len() < s.ctx.len());
        }
    }
}
