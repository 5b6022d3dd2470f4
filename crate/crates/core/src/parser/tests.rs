use proptest::prelude::*;

use super::*;
use crate::oracle::{ContextShape, GenConfig, Generator};
use crate::syntax::{Calculus, Side};

const HARROP: &str =
    "fun (w : ~B -> A1 \\/ A2) => hop (x : ~B). w x of { y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }";

fn atom(p: &str) -> Formula {
    Formula::atom(p)
}

#[test]
fn negation_and_precedence() {
    let f = parse_formula("~B -> A1 \\/ A2").unwrap();
    assert_eq!(
        f,
        Formula::implies(
            Formula::implies(atom("B"), Formula::Falsum),
            Formula::or(atom("A1"), atom("A2"))
        )
    );
    assert_eq!(f.to_string(), "~B -> A1 \\/ A2");
}

#[test]
fn arrows_associate_right() {
    assert_eq!(
        parse_formula("A -> B -> C").unwrap(),
        Formula::implies(atom("A"), Formula::implies(atom("B"), atom("C")))
    );
    assert_eq!(parse_formula("A -> A").unwrap(), Formula::implies(atom("A"), atom("A")));
    assert_eq!(
        parse_formula("A /\\ B \\/ C /\\ D").unwrap(),
        Formula::or(Formula::and(atom("A"), atom("B")), Formula::and(atom("C"), atom("D")))
    );
    assert_eq!(parse_formula("~~A").unwrap(), Formula::negation(Formula::negation(atom("A"))));
    assert_eq!(parse_formula("(A -> B) -> C").unwrap().to_string(), "(A -> B) -> C");
    assert_eq!(parse_formula("~(A /\\ B)").unwrap().to_string(), "~(A /\\ B)");
    assert_eq!(parse_formula("False -> A").unwrap().to_string(), "False -> A");
    assert_eq!(parse_formula("(A -> False) -> False").unwrap().to_string(), "~~A");
}

#[test]
fn identity_term() {
    let t = parse_term("fun (x : A) => x").unwrap();
    assert!(matches!(&t, Term::Abs { binder, annot, body }
        if binder == "x" && *annot == atom("A") && **body == Term::var("x")));
    assert_eq!(t.to_string(), "fun (x : A) => x");
}

#[test]
fn harrop_principle_term() {
    let t = parse_term(HARROP).unwrap();
    let nb = Formula::negation(atom("B"));
    let expected = Term::lam(
        "w",
        Formula::implies(nb.clone(), Formula::or(atom("A1"), atom("A2"))),
        Term::harrop(HarropNode {
            binder: "x".into(),
            annot: nb.clone(),
            main: Term::app(Term::var("w"), Term::var("x")),
            case_binder: "y".into(),
            left: Term::inj(Side::Left, Formula::implies(nb.clone(), atom("A2")), Term::var("y")),
            right: Term::inj(Side::Right, Formula::implies(nb, atom("A1")), Term::var("y")),
        }),
    );
    assert_eq!(t, expected);
    assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    assert_eq!(
        Erased(&t).to_string(),
        "fun (w) => hop (x). w x of { y => inj1 y | y => inj2 y }"
    );
}

#[test]
fn visser_term() {
    let t = parse_term("visser (x1 : B->C). inj1[A2] t of { y => s1 | y => s2 | z => u1 }").unwrap();
    let Term::Visser(v) = &t else { panic!("expected visser, got {t}") };
    assert_eq!(v.binders, vec![("x1".to_string(), Formula::implies(atom("B"), atom("C")))]);
    assert_eq!(v.main, Term::inj(Side::Left, atom("A2"), Term::var("t")));
    assert_eq!((v.case_binder.as_str(), v.app_binder.as_str()), ("y", "z"));
    assert_eq!(v.apps, vec![Term::var("u1")]);
    assert_eq!(parse_term(&t.to_string()).unwrap(), t);
}

#[test]
fn visser_arity_mismatch() {
    let err = parse_term("visser (x1 : B -> C, x2 : C -> B). m of { y => s | y => s | z => u }").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::ArityMismatch { binders: 2, branches: 1 });
    assert_eq!((err.position.line, err.position.column), (1, 1));
}

#[test]
fn branch_binders_must_agree() {
    let err = parse_term("case s of { a => a | b => b }").unwrap_err();
    assert!(matches!(err.kind, ParseErrorKind::BinderMismatch { .. }));
    let err = parse_term("visser (x : A -> A, x : A -> A). m of { y => y | y => y | z => z | z => z }").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::DuplicateBinder("x".into()));
}

#[test]
fn applications_and_prefixes() {
    let t = parse_term("f a b").unwrap();
    assert_eq!(t, Term::app(Term::app(Term::var("f"), Term::var("a")), Term::var("b")));
    let t = parse_term("proj1 proj2 p").unwrap();
    assert_eq!(t, Term::proj(Side::Left, Term::proj(Side::Right, Term::var("p"))));
    let t = parse_term("proj1 f a").unwrap();
    assert_eq!(t, Term::app(Term::proj(Side::Left, Term::var("f")), Term::var("a")));
    let t = parse_term("f (proj1 a)").unwrap();
    assert_eq!(t.to_string(), "f (proj1 a)");
    let t = parse_term("(fun (x : A) => x) z").unwrap();
    assert_eq!(t.to_string(), "(fun (x : A) => x) z");
    let t = parse_term("fun (x : A) (y : B) => (x, y)").unwrap();
    assert_eq!(t.to_string(), "fun (x : A) => fun (y : B) => (x, y)");
}

#[test]
fn errors_carry_positions() {
    let err = parse_term("fun (x : A) =>\n  x )").unwrap_err();
    assert_eq!((err.position.line, err.position.column), (2, 5));
    assert!(matches!(err.kind, ParseErrorKind::Unexpected { .. }));
    assert!(err.to_string().starts_with("2:5: unexpected `)`"));

    let err = parse_formula("A -> ").unwrap_err();
    assert_eq!((err.position.line, err.position.column), (1, 6));

    let err = parse_term("a - b").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::InvalidCharacter('-'));
    assert_eq!(err.position.column, 3);

    let err = parse_term("case = ").unwrap_err();
    assert_eq!(err.position.column, 6);
}

#[test]
fn keywords_are_not_variables() {
    assert!(parse_term("fun (case : A) => case").is_err());
    assert!(parse_formula("False").is_ok());
    assert!(parse_term("x' y_2").is_ok());
}

#[test]
fn scripts_inline_definitions() {
    let src = "-- identity and its use\n\
               def id : A -> A := fun (x : A) => x\n\
               calculus KP\n\
               def use : A -> A := fun (a : A) => id a -- trailing comment\n";
    let script = parse_script(src).unwrap();
    assert_eq!(script.declarations.len(), 2);
    assert_eq!(script.declarations[0].calculus, Calculus::Ipc);
    let used = script.get("use").unwrap();
    assert_eq!(used.calculus, Calculus::Kp);
    assert_eq!(used.body.to_string(), "fun (a : A) => (fun (x : A) => x) a");
    assert_eq!((used.position.line, used.position.column), (4, 5));
}

#[test]
fn script_errors() {
    let err = parse_script("def a : A := x\ndef a : A := y").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::DuplicateDefinition("a".into()));
    assert_eq!(err.position.line, 2);
    let err = parse_script("calculus S4").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnknownCalculus("S4".into()));
    assert_eq!(parse_script("").unwrap().declarations.len(), 0);
    assert_eq!(parse_script("  -- only a comment\n").unwrap().declarations.len(), 0);
    assert!(parse_script("def a : A := x )").is_err());
}

#[test]
fn garbage_never_panics() {
    for src in ["", "(", ")", "fun", "fun (", "visser (", "hop (x : ~B). t of {", "[", "inj1", "inj1[A", "~", "A \\", "A /", "=>", ":="] {
        let _ = parse_term(src);
        let _ = parse_formula(src);
        let _ = parse_script(src);
    }
}

fn generated() -> impl Strategy<Value = Term> {
    (any::<u64>(), 0usize..3, 0usize..4).prop_filter_map("generation failed", |(seed, c, shape)| {
        let shape = [
            ContextShape::Empty,
            ContextShape::Arbitrary,
            ContextShape::Implicative,
            ContextShape::Negated,
        ][shape];
        Generator::new(GenConfig::new(Calculus::ALL[c], 7, 4).context(shape))
            .sample(seed)
            .ok()
            .map(|s| s.term)
    })
}

fn formulas() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Falsum),
        "[A-D]".prop_map(Formula::Atom),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn terms_round_trip(t in generated()) {
        let printed = t.to_string();
        let parsed = parse_term(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(parsed, t);
    }

    #[test]
    fn formulas_round_trip(f in formulas()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[ -~\\n]{0,40}") {
        let _ = parse_term(&s);
        let _ = parse_script(&s);
    }
}
