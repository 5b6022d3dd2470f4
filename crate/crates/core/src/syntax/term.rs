use super::Formula;

/// Which component of a pair or which disjunct of a sum; printed as `1` / `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn index(self) -> u8 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }

    pub fn from_index(index: u8) -> Option<Side> {
        match index {
            1 => Some(Side::Left),
            2 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "Left",
            Side::Right => "Right",
        }
    }

    pub fn pick<T>(self, left: T, right: T) -> T {
        match self {
            Side::Left => left,
            Side::Right => right,
        }
    }
}

/// Root-to-node sequence of child indices (see [`Term::child`]).
pub type Path = Vec<usize>;

/// A natural-deduction proof term.
///
/// Binders carry the annotations that make type checking syntax directed:
/// abstractions their domain, injections the *other* disjunct and exfalso its
/// target formula. Equality (`==`) is alpha-equivalence.
#[derive(Clone, Debug)]
pub enum Term {
    Var(String),
    App(Box<Term>, Box<Term>),
    Abs {
        binder: String,
        annot: Formula,
        body: Box<Term>,
    },
    Exfalso {
        target: Formula,
        arg: Box<Term>,
    },
    Pair(Box<Term>, Box<Term>),
    Proj(Side, Box<Term>),
    Inj {
        side: Side,
        other: Formula,
        arg: Box<Term>,
    },
    Case {
        scrutinee: Box<Term>,
        binder: String,
        left: Box<Term>,
        right: Box<Term>,
    },
    Visser(Box<VisserNode>),
    Harrop(Box<HarropNode>),
}

/// `visser (x1 : B1 -> C1, ..). main of { y => left | y => right | z => u1 | .. }`
///
/// The binders scope over `main` only, `case_binder` over `left`/`right` and
/// `app_binder` over every entry of `apps`. `apps` has one entry per binder.
#[derive(Clone, Debug)]
pub struct VisserNode {
    pub binders: Vec<(String, Formula)>,
    pub main: Term,
    pub case_binder: String,
    pub left: Term,
    pub right: Term,
    pub app_binder: String,
    pub apps: Vec<Term>,
}

/// `hop (x : ~B). main of { y => left | y => right }`
#[derive(Clone, Debug)]
pub struct HarropNode {
    pub binder: String,
    pub annot: Formula,
    pub main: Term,
    pub case_binder: String,
    pub left: Term,
    pub right: Term,
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn app(fun: Term, arg: Term) -> Self {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn apps(fun: Term, args: impl IntoIterator<Item = Term>) -> Self {
        args.into_iter().fold(fun, Term::app)
    }

    pub fn lam(binder: impl Into<String>, annot: Formula, body: Term) -> Self {
        Term::Abs {
            binder: binder.into(),
            annot,
            body: Box::new(body),
        }
    }

    /// Iterated abstraction over `binders`, outermost first.
    pub fn lams(binders: &[(String, Formula)], body: Term) -> Self {
        binders
            .iter()
            .rev()
            .fold(body, |acc, (x, a)| Term::lam(x.clone(), a.clone(), acc))
    }

    pub fn exfalso(target: Formula, arg: Term) -> Self {
        Term::Exfalso {
            target,
            arg: Box::new(arg),
        }
    }

    pub fn pair(fst: Term, snd: Term) -> Self {
        Term::Pair(Box::new(fst), Box::new(snd))
    }

    pub fn proj(side: Side, arg: Term) -> Self {
        Term::Proj(side, Box::new(arg))
    }

    pub fn inj(side: Side, other: Formula, arg: Term) -> Self {
        Term::Inj {
            side,
            other,
            arg: Box::new(arg),
        }
    }

    pub fn case(scrutinee: Term, binder: impl Into<String>, left: Term, right: Term) -> Self {
        Term::Case {
            scrutinee: Box::new(scrutinee),
            binder: binder.into(),
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn visser(node: VisserNode) -> Self {
        Term::Visser(Box::new(node))
    }

    pub fn harrop(node: HarropNode) -> Self {
        Term::Harrop(Box::new(node))
    }

    /// Immediate subterms in path order.
    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Var(_) => vec![],
            Term::App(f, a) | Term::Pair(f, a) => vec![f, a],
            Term::Abs { body, .. } => vec![body],
            Term::Exfalso { arg, .. } | Term::Proj(_, arg) | Term::Inj { arg, .. } => vec![arg],
            Term::Case {
                scrutinee,
                left,
                right,
                ..
            } => vec![scrutinee, left, right],
            Term::Visser(v) => {
                let mut out = vec![&v.main, &v.left, &v.right];
                out.extend(v.apps.iter());
                out
            }
            Term::Harrop(h) => vec![&h.main, &h.left, &h.right],
        }
    }

    pub fn child(&self, index: usize) -> Option<&Term> {
        self.children().get(index).copied()
    }

    pub fn child_mut(&mut self, index: usize) -> Option<&mut Term> {
        match (self, index) {
            (Term::App(f, _), 0) | (Term::Pair(f, _), 0) => Some(f),
            (Term::App(_, a), 1) | (Term::Pair(_, a), 1) => Some(a),
            (Term::Abs { body, .. }, 0) => Some(body),
            (Term::Exfalso { arg, .. }, 0) | (Term::Proj(_, arg), 0) | (Term::Inj { arg, .. }, 0) => Some(arg),
            (Term::Case { scrutinee, .. }, 0) => Some(scrutinee),
            (Term::Case { left, .. }, 1) => Some(left),
            (Term::Case { right, .. }, 2) => Some(right),
            (Term::Visser(v), 0) => Some(&mut v.main),
            (Term::Visser(v), 1) => Some(&mut v.left),
            (Term::Visser(v), 2) => Some(&mut v.right),
            (Term::Visser(v), i) => v.apps.get_mut(i - 3),
            (Term::Harrop(h), 0) => Some(&mut h.main),
            (Term::Harrop(h), 1) => Some(&mut h.left),
            (Term::Harrop(h), 2) => Some(&mut h.right),
            _ => None,
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&Term> {
        path.iter().try_fold(self, |t, &i| t.child(i))
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Term> {
        path.iter().try_fold(self, |t, &i| t.child_mut(i))
    }

    /// Replaces the subterm at `path`, returning the old one.
    pub fn replace_at(&mut self, path: &[usize], new: Term) -> Option<Term> {
        self.at_mut(path).map(|slot| std::mem::replace(slot, new))
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Term::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Term::depth).max().unwrap_or(0)
    }

    pub fn contains_visser(&self) -> bool {
        matches!(self, Term::Visser(_)) || self.children().into_iter().any(Term::contains_visser)
    }

    pub fn contains_harrop(&self) -> bool {
        matches!(self, Term::Harrop(_)) || self.children().into_iter().any(Term::contains_harrop)
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}
