//! Index-based representation used for alpha-equivalence and hashing.
//!
//! Bound variables become the distance to their binder (innermost = 0). A
//! Visser node pushes its `n` binders in order, so inside the main premise
//! `x_n` is index 0 and `x_1` is index `n - 1`.

use std::hash::{Hash, Hasher};

use super::{Formula, Side, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Nameless {
    Bound(usize),
    Free(String),
    App(Box<Nameless>, Box<Nameless>),
    Abs(Formula, Box<Nameless>),
    Exfalso(Formula, Box<Nameless>),
    Pair(Box<Nameless>, Box<Nameless>),
    Proj(Side, Box<Nameless>),
    Inj(Side, Formula, Box<Nameless>),
    Case(Box<Nameless>, Box<Nameless>, Box<Nameless>),
    Visser {
        binders: Vec<Formula>,
        main: Box<Nameless>,
        left: Box<Nameless>,
        right: Box<Nameless>,
        apps: Vec<Nameless>,
    },
    Harrop {
        annot: Formula,
        main: Box<Nameless>,
        left: Box<Nameless>,
        right: Box<Nameless>,
    },
}

impl Term {
    pub fn to_nameless(&self) -> Nameless {
        let mut scope = Vec::new();
        convert(self, &mut scope)
    }
}

fn under<'a>(scope: &mut Vec<&'a str>, names: impl IntoIterator<Item = &'a str>, t: &'a Term) -> Box<Nameless> {
    let mark = scope.len();
    scope.extend(names);
    let out = convert(t, scope);
    scope.truncate(mark);
    Box::new(out)
}

fn convert<'a>(t: &'a Term, scope: &mut Vec<&'a str>) -> Nameless {
    match t {
        Term::Var(x) => match scope.iter().rev().position(|b| *b == x.as_str()) {
            Some(i) => Nameless::Bound(i),
            None => Nameless::Free(x.clone()),
        },
        Term::App(f, a) => Nameless::App(Box::new(convert(f, scope)), Box::new(convert(a, scope))),
        Term::Abs { binder, annot, body } => Nameless::Abs(annot.clone(), under(scope, [binder.as_str()], body)),
        Term::Exfalso { target, arg } => Nameless::Exfalso(target.clone(), Box::new(convert(arg, scope))),
        Term::Pair(a, b) => Nameless::Pair(Box::new(convert(a, scope)), Box::new(convert(b, scope))),
        Term::Proj(side, a) => Nameless::Proj(*side, Box::new(convert(a, scope))),
        Term::Inj { side, other, arg } => Nameless::Inj(*side, other.clone(), Box::new(convert(arg, scope))),
        Term::Case {
            scrutinee,
            binder,
            left,
            right,
        } => Nameless::Case(
            Box::new(convert(scrutinee, scope)),
            under(scope, [binder.as_str()], left),
            under(scope, [binder.as_str()], right),
        ),
        Term::Visser(v) => Nameless::Visser {
            binders: v.binders.iter().map(|(_, f)| f.clone()).collect(),
            main: under(scope, v.binders.iter().map(|(x, _)| x.as_str()), &v.main),
            left: under(scope, [v.case_binder.as_str()], &v.left),
            right: under(scope, [v.case_binder.as_str()], &v.right),
            apps: v
                .apps
                .iter()
                .map(|u| *under(scope, [v.app_binder.as_str()], u))
                .collect(),
        },
        Term::Harrop(h) => Nameless::Harrop {
            annot: h.annot.clone(),
            main: under(scope, [h.binder.as_str()], &h.main),
            left: under(scope, [h.case_binder.as_str()], &h.left),
            right: under(scope, [h.case_binder.as_str()], &h.right),
        },
    }
}

/// True iff the terms are equal up to consistent renaming of bound names.
pub fn alpha_eq(t: &Term, s: &Term) -> bool {
    t.to_nameless() == s.to_nameless()
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        alpha_eq(self, other)
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.to_nameless().hash(state)
    }
}
