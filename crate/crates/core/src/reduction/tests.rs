use proptest::prelude::*;

use super::*;
use crate::oracle::{ContextShape, GenConfig, Generator, Sample};
use crate::parser::{parse_formula, parse_term};
use crate::syntax::Side;

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn t(s: &str) -> Term {
    parse_term(s).unwrap()
}

fn ctx(entries: &[(&str, &str)]) -> TypingContext {
    entries.iter().map(|(x, a)| (x.to_string(), f(a))).collect()
}

fn top(c: &TypingContext, s: &str, calc: Calculus) -> (Rule, Term) {
    step_top(c, &t(s), calc).unwrap()
}

#[test]
fn rule_names() {
    let names: Vec<&str> = Rule::ALL.iter().map(|r| r.name()).collect();
    assert_eq!(
        names,
        ["Beta", "Projection", "Case", "Visser-inj", "Visser-efq", "Visser-app", "Harrop-inj", "Harrop-efq"]
    );
    for r in Rule::ALL {
        assert_eq!(Rule::from_name(r.name()), Some(r));
        assert_eq!(r.to_string(), r.name());
        assert!(r.allowed_in(Calculus::V) || r.allowed_in(Calculus::Kp));
    }
    assert_eq!(Rule::from_name("beta"), None);
    assert!(!Rule::VisserApp.allowed_in(Calculus::Kp));
    assert!(!Rule::HarropEfq.allowed_in(Calculus::V));
    assert!(Rule::Beta.allowed_in(Calculus::Ipc));
}

#[test]
fn decompose_injection_only_at_top() {
    assert_eq!(decompose(&t("inj1[B] a")), Decomposition::IsInjection(Side::Left, t("a")));
    assert_eq!(decompose(&t("inj2[B] (a, b)")), Decomposition::IsInjection(Side::Right, t("(a, b)")));
    assert_eq!(decompose(&t("proj1 (inj1[B] a)")), Decomposition::NotDecomposable);
}

#[test]
fn decompose_efq() {
    assert_eq!(decompose(&t("exfalso[A \\/ B] e")), Decomposition::EfqUnderW(WContext::hole(), t("e")));
    let term = t("proj2 ((exfalso[C -> A /\\ B] e) c)");
    let Decomposition::EfqUnderW(w, payload) = decompose(&term) else { panic!() };
    assert_eq!(payload, t("e"));
    assert_eq!(w.frames, vec![Frame::Proj(Side::Right), Frame::Arg(t("c"))]);
    assert_eq!(w.plug(Term::exfalso(f("C -> A /\\ B"), payload)), term);
}

#[test]
fn decompose_variable_application() {
    let term = t("x a b");
    let Decomposition::VarAppUnderW(w, x, first) = decompose(&term) else { panic!() };
    assert_eq!((x.as_str(), first), ("x", t("a")));
    assert_eq!(w.frames, vec![Frame::Arg(t("b"))]);
    assert_eq!(w.plug(t("x a")), term);

    let term = t("case (x a) of { y => y | y => y }");
    let Decomposition::VarAppUnderW(w, _, first) = decompose(&term) else { panic!() };
    assert_eq!(first, t("a"));
    assert!(matches!(w.frames.as_slice(), [Frame::Case { binder, .. }] if binder == "y"));

    assert_eq!(decompose(&t("x")), Decomposition::NotDecomposable);
    assert_eq!(decompose(&t("proj1 x")), Decomposition::NotDecomposable);
    assert_eq!(decompose(&t("(proj1 x) a")), Decomposition::NotDecomposable);
    assert_eq!(decompose(&t("fun (x : A) => x")), Decomposition::NotDecomposable);
    assert_eq!(decompose(&t("(fun (x : A) => x) a")), Decomposition::NotDecomposable);
    assert!(WContext::hole().is_hole());
}

#[test]
fn ipc_rules() {
    let c = TypingContext::new();
    assert_eq!(top(&c, "(fun (x : A) => x) a", Calculus::Ipc), (Rule::Beta, t("a")));
    assert_eq!(top(&c, "proj2 (a, b)", Calculus::Ipc), (Rule::Projection, t("b")));
    assert_eq!(
        top(&c, "case inj2[A] b of { y => f y | y => g y }", Calculus::Ipc),
        (Rule::Case, t("g b"))
    );
    // Capture-avoiding.
    let (_, r) = top(&c, "(fun (x : A) => fun (y : B) => x) y", Calculus::Ipc);
    assert_eq!(r, t("fun (y1 : B) => y"));
}

#[test]
fn harrop_inj() {
    let c = ctx(&[("p", "~B -> A1")]);
    let (rule, r) = top(
        &c,
        "hop (x : ~B). inj1[A2] (p x) of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }",
        Calculus::Kp,
    );
    assert_eq!(rule, Rule::HarropInj);
    assert_eq!(r, t("inj1[~B -> A2] (fun (x : ~B) => p x)"));
}

#[test]
fn harrop_efq_annotates_left_disjunct() {
    let c = ctx(&[("b", "B")]);
    let term = "hop (x : ~B). exfalso[A1 \\/ A2] (x b) of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }";
    let (rule, r) = top(&c, term, Calculus::Kp);
    assert_eq!(rule, Rule::HarropEfq);
    assert_eq!(r, t("inj1[~B -> A2] (fun (x : ~B) => exfalso[A1] (x b))"));
    assert_eq!(infer(&c, &r, Calculus::Kp).unwrap(), infer(&c, &t(term), Calculus::Kp).unwrap());

    // Under a weak head context, and with the context threaded to the redex.
    let nested = t("fun (b : B) => hop (x : ~B). proj1 (exfalso[(A1 \\/ A2) /\\ C] (x b)) of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }");
    let reducts = step_anywhere(&TypingContext::new(), &nested, Calculus::Kp).unwrap();
    assert_eq!(reducts.len(), 1);
    assert_eq!(reducts[0].path, vec![0]);
    assert_eq!(reducts[0].term, t("fun (b : B) => inj1[~B -> A2] (fun (x : ~B) => exfalso[A1] (x b))"));
}

#[test]
fn visser_rules() {
    let c = TypingContext::new();
    let (rule, r) = top(&c, "visser (x : A -> B). inj1[C] x of { y => y | y => d | z => d }", Calculus::V);
    assert_eq!((rule, r), (Rule::VisserInj, t("fun (x : A -> B) => x")));

    let (rule, r) = top(&c, "visser (x : A -> B). inj2[C] x of { y => d | y => y | z => d }", Calculus::V);
    assert_eq!((rule, r), (Rule::VisserInj, t("fun (x : A -> B) => x")));

    let id = "fun (e : E) => e";
    let branch = "fun (q : (E -> E) -> C \\/ D) => fun (e : E) => e";
    let app = format!("visser (x : (E -> E) -> C \\/ D). x ({id}) of {{ y => {branch} | y => {branch} | z => z }}");
    assert_eq!(infer(&c, &t(&app), Calculus::V).unwrap(), f("((E -> E) -> C \\/ D) -> E -> E"));
    let (rule, r) = top(&c, &app, Calculus::V);
    assert_eq!((rule, &r), (Rule::VisserApp, &t(&format!("fun (x : (E -> E) -> C \\/ D) => {id}"))));
    assert_eq!(infer(&c, &r, Calculus::V).unwrap(), f("((E -> E) -> C \\/ D) -> E -> E"));

    let efq = format!("visser (x : (E -> E) -> False). proj1 (exfalso[(C \\/ D) /\\ E] (x ({id}))) of {{ y => y | y => w | z => w }}");
    let (rule, r) = top(&c, &efq, Calculus::V);
    assert_eq!(rule, Rule::VisserEfq);
    assert_eq!(r, t(&format!("fun (x : (E -> E) -> False) => exfalso[C] (x ({id}))")));
}

#[test]
fn visser_app_picks_the_matching_branch() {
    let term = t("visser (x1 : A -> B \\/ C, x2 : D -> B \\/ C). x2 d of { y => s | y => s | z => u1 z | z => u2 z }");
    let (rule, r) = step_top(&TypingContext::new(), &term, Calculus::V).unwrap();
    assert_eq!(rule, Rule::VisserApp);
    assert_eq!(r, t("u2 (fun (x1 : A -> B \\/ C) => fun (x2 : D -> B \\/ C) => d)"));
}

#[test]
fn step_errors() {
    let c = TypingContext::new();
    assert_eq!(step_top(&c, &t("x"), Calculus::Ipc), Err(StepError::NoRedex));
    assert_eq!(step_top(&c, &t("(x, y)"), Calculus::Ipc), Err(StepError::NoRedex));
    assert_eq!(
        step_top(&c, &t("hop (x : ~B). inj1[A] b of { y => y | y => y }"), Calculus::V),
        Err(StepError::CalculusViolation {
            rule: Rule::HarropInj,
            calculus: Calculus::V
        })
    );
    assert_eq!(
        reduce_at(&c, &t("(x, y)"), &[2], Calculus::Ipc),
        Err(StepError::InvalidPath(vec![2]))
    );
    // A hop whose main is not in weak head form is not a redex.
    let stuck = t("hop (x : ~B). w x of { y => y | y => y }");
    assert_eq!(redex_rule(&stuck), None);
    assert!(is_normal(&stuck));
}

#[test]
fn all_reducts() {
    let c = TypingContext::new();
    let term = t("((fun (x : A) => x) a, proj1 (b, c))");
    let reducts = step_anywhere(&c, &term, Calculus::Ipc).unwrap();
    assert_eq!(reducts.len(), 2);
    assert_eq!((reducts[0].path.clone(), reducts[0].rule), (vec![0], Rule::Beta));
    assert_eq!(reducts[0].term, t("(a, proj1 (b, c))"));
    assert_eq!((reducts[1].path.clone(), reducts[1].rule), (vec![1], Rule::Projection));
    assert_eq!(reducts[1].term, t("((fun (x : A) => x) a, b)"));
    assert!(step_anywhere(&c, &t("fun (x : A) => x"), Calculus::Ipc).unwrap().is_empty());

    let nested = t("(fun (x : A) => (fun (y : A) => y) x) a");
    assert_eq!(redex_paths(&nested), vec![vec![], vec![0, 0]]);
    assert_eq!(leftmost_outermost(&nested), Some(vec![]));
}

#[test]
fn weak_head_steps() {
    let c = TypingContext::new();
    let step = |s: &str| step_weak_head(&c, &t(s)).unwrap();
    let WeakHeadStep::Step(r) = step("proj1 ((fun (x : A /\\ B) => x) p)") else { panic!() };
    assert_eq!((r.path, r.rule, r.term), (vec![0], Rule::Beta, t("proj1 p")));
    assert_eq!(step("(a, (fun (x : A) => x) b)"), WeakHeadStep::Stuck);
    assert_eq!(step("fun (z : A) => (fun (x : A) => x) z"), WeakHeadStep::Stuck);
    assert_eq!(step("f ((fun (x : A) => x) b)"), WeakHeadStep::Stuck);

    let harrop = "hop (x : ~B). (fun (q : ~B) => inj1[A2] (g q)) x of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }";
    let WeakHeadStep::Step(r) = step(harrop) else { panic!() };
    assert_eq!((r.path.clone(), r.rule), (vec![0], Rule::Beta));
    let WeakHeadStep::Step(r) = step_weak_head(&c, &r.term).unwrap() else { panic!() };
    assert_eq!((r.path, r.rule), (vec![], Rule::HarropInj));
    assert_eq!(r.term, t("inj1[~B -> A2] (fun (x : ~B) => g x)"));
}

#[test]
fn k_contexts() {
    let term = t("hop (x : ~B). proj1 (f a) b of { y => y | y => y }");
    assert_eq!(k_positions(&term), vec![vec![], vec![0], vec![0, 0], vec![0, 0, 0], vec![0, 0, 0, 0]]);
    for path in k_positions(&term) {
        let (k, sub) = KContext::split(&term, &path).unwrap();
        assert_eq!(k.frames.len(), path.len());
        assert_eq!(k.plug(sub.clone()), term);
    }
    let (k, sub) = KContext::split(&term, &[0, 0]).unwrap();
    assert_eq!(sub, &t("proj1 (f a)"));
    assert!(matches!(k.frames[0], KFrame::HarropMain { .. }));
    assert_eq!(k.frames[1], KFrame::W(Frame::Arg(t("b"))));
    assert!(KContext::split(&term, &[1]).is_none());
    assert!(KContext::split(&t("(a, b)"), &[0]).is_none());
    assert_eq!(KContext::hole().plug(t("a")), t("a"));
}

#[test]
fn trace_replay_detects_tampering() {
    let c = TypingContext::new();
    let before = t("(fun (x : A) => x) a");
    let mut trace = ReductionTrace {
        steps: vec![TraceStep {
            path: vec![],
            rule: Rule::Beta,
            before: before.clone(),
            after: t("a"),
        }],
    };
    assert!(trace.replay(&c, Calculus::Ipc).is_ok());
    trace.steps[0].after = t("b");
    assert!(trace.replay(&c, Calculus::Ipc).is_err());
    trace.steps[0].after = t("a");
    trace.steps[0].rule = Rule::Case;
    assert!(trace.replay(&c, Calculus::Ipc).is_err());
    assert_eq!(format_path(&[0, 2, 1]), "[0, 2, 1]");
    assert_eq!(format_path(&[]), "[]");
}

fn sample() -> impl Strategy<Value = Sample> {
    (any::<u64>(), 0usize..3, prop::bool::ANY).prop_filter_map("generation failed", |(seed, c, negated)| {
        let calc = Calculus::ALL[c];
        let shape = if negated { ContextShape::Negated } else { ContextShape::Arbitrary };
        Generator::new(GenConfig::new(calc, 6, 4).context(shape)).sample(seed).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reducts_preserve_types(s in sample()) {
        let reducts = step_anywhere(&s.ctx, &s.term, s.calculus).unwrap();
        prop_assert_eq!(reducts.is_empty(), is_normal(&s.term));
        for r in reducts {
            prop_assert!(r.rule.allowed_in(s.calculus));
            prop_assert_eq!(infer(&s.ctx, &r.term, s.calculus), Ok(s.formula.clone()), "{} at {:?}", r.rule, r.path);
        }
    }

    #[test]
    fn weak_head_redex_is_unique(s in sample()) {
        prop_assume!(s.calculus != Calculus::V);
        let on_path: Vec<Path> = k_positions(&s.term)
            .into_iter()
            .filter(|p| redex_rule(s.term.at(p).unwrap()).is_some())
            .collect();
        prop_assert!(on_path.len() <= 1);
        prop_assert_eq!(on_path.first().cloned(), weak_head_path(&s.term));
    }
}
