use std::collections::BTreeSet;

use super::{HarropNode, Term, VisserNode};

/// Words the concrete syntax reserves; never produced as fresh names.
pub const RESERVED: &[&str] = &[
    "fun", "case", "of", "proj1", "proj2", "inj1", "inj2", "exfalso", "hop", "visser", "def", "calculus", "False",
];

pub fn is_reserved(name: &str) -> bool {
    RESERVED.contains(&name)
}

/// Strips trailing digits from `base` and appends the smallest positive
/// suffix that `taken` rejects and that is not a reserved word.
pub fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { "v" } else { stem };
    (1u64..)
        .map(|k| format!("{stem}{k}"))
        .find(|cand| !taken(cand) && !is_reserved(cand))
        .expect("unbounded suffix search")
}

impl Term {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(self, &mut bound, &mut out);
        out
    }

    pub fn occurs_free(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => y == x,
            Term::App(f, a) | Term::Pair(f, a) => f.occurs_free(x) || a.occurs_free(x),
            Term::Abs { binder, body, .. } => binder != x && body.occurs_free(x),
            Term::Exfalso { arg, .. } | Term::Proj(_, arg) | Term::Inj { arg, .. } => arg.occurs_free(x),
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => scrutinee.occurs_free(x) || (binder != x && (left.occurs_free(x) || right.occurs_free(x))),
            Term::Visser(v) => {
                (!v.binders.iter().any(|(b, _)| b == x) && v.main.occurs_free(x))
                    || (v.case_binder != x && (v.left.occurs_free(x) || v.right.occurs_free(x)))
                    || (v.app_binder != x && v.apps.iter().any(|u| u.occurs_free(x)))
            }
            Term::Harrop(h) => {
                (h.binder != x && h.main.occurs_free(x))
                    || (h.case_binder != x && (h.left.occurs_free(x) || h.right.occurs_free(x)))
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Capture-avoiding `self[x := s]`.
    pub fn substitute(&self, x: &str, s: &Term) -> Term {
        Subst {
            var: x,
            with: s,
            with_free: s.free_vars(),
        }
        .apply(self)
    }

    /// Renames the free variable `from` to `to`, which must not be free in `self`.
    pub fn rename_free(&self, from: &str, to: &str) -> Term {
        self.substitute(from, &Term::var(to))
    }
}

fn collect_free<'a>(t: &'a Term, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
    fn scoped<'a>(names: &[&'a str], t: &'a Term, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        let mark = bound.len();
        bound.extend_from_slice(names);
        collect_free(t, bound, out);
        bound.truncate(mark);
    }
    match t {
        Term::Var(x) => {
            if !bound.contains(&x.as_str()) {
                out.insert(x.clone());
            }
        }
        Term::App(f, a) | Term::Pair(f, a) => {
            collect_free(f, bound, out);
            collect_free(a, bound, out);
        }
        Term::Abs { binder, body, .. } => scoped(&[binder], body, bound, out),
        Term::Exfalso { arg, .. } | Term::Proj(_, arg) | Term::Inj { arg, .. } => collect_free(arg, bound, out),
        Term::Case {
            scrutinee,
            binder,
            left,
            right,
        } => {
            collect_free(scrutinee, bound, out);
            scoped(&[binder], left, bound, out);
            scoped(&[binder], right, bound, out);
        }
        Term::Visser(v) => {
            let xs: Vec<&str> = v.binders.iter().map(|(x, _)| x.as_str()).collect();
            scoped(&xs, &v.main, bound, out);
            scoped(&[&v.case_binder], &v.left, bound, out);
            scoped(&[&v.case_binder], &v.right, bound, out);
            for u in &v.apps {
                scoped(&[&v.app_binder], u, bound, out);
            }
        }
        Term::Harrop(h) => {
            scoped(&[&h.binder], &h.main, bound, out);
            scoped(&[&h.case_binder], &h.left, bound, out);
            scoped(&[&h.case_binder], &h.right, bound, out);
        }
    }
}

struct Subst<'a> {
    var: &'a str,
    with: &'a Term,
    with_free: BTreeSet<String>,
}

impl Subst<'_> {
    fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(y) if y == self.var => self.with.clone(),
            Term::Var(_) => t.clone(),
            Term::App(f, a) => Term::app(self.apply(f), self.apply(a)),
            Term::Pair(f, a) => Term::pair(self.apply(f), self.apply(a)),
            Term::Abs { binder, annot, body } => {
                let (names, mut scopes) = self.under(&[binder], &[body]);
                Term::lam(names[0].clone(), annot.clone(), scopes.remove(0))
            }
            Term::Exfalso { target, arg } => Term::exfalso(target.clone(), self.apply(arg)),
            Term::Proj(side, arg) => Term::proj(*side, self.apply(arg)),
            Term::Inj { side, other, arg } => Term::inj(*side, other.clone(), self.apply(arg)),
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => {
                let (names, mut scopes) = self.under(&[binder], &[left, right]);
                let right = scopes.pop().unwrap();
                let left = scopes.pop().unwrap();
                Term::case(self.apply(scrutinee), names[0].clone(), left, right)
            }
            Term::Visser(v) => {
                let xs: Vec<&String> = v.binders.iter().map(|(x, _)| x).collect();
                let (xs, mut main) = self.under(&xs, &[&v.main]);
                let (y, mut branches) = self.under(&[&v.case_binder], &[&v.left, &v.right]);
                let apps: Vec<&Term> = v.apps.iter().collect();
                let (z, apps) = self.under(&[&v.app_binder], &apps);
                let right = branches.pop().unwrap();
                let left = branches.pop().unwrap();
                Term::visser(VisserNode {
                    binders: xs.into_iter().zip(v.binders.iter().map(|(_, f)| f.clone())).collect(),
                    main: main.remove(0),
                    case_binder: y[0].clone(),
                    left,
                    right,
                    app_binder: z[0].clone(),
                    apps,
                })
            }
            Term::Harrop(h) => {
                let (x, mut main) = self.under(&[&h.binder], &[&h.main]);
                let (y, mut branches) = self.under(&[&h.case_binder], &[&h.left, &h.right]);
                let right = branches.pop().unwrap();
                let left = branches.pop().unwrap();
                Term::harrop(HarropNode {
                    binder: x[0].clone(),
                    annot: h.annot.clone(),
                    main: main.remove(0),
                    case_binder: y[0].clone(),
                    left,
                    right,
                })
            }
        }
    }

    /// Substitutes into `scopes`, each of which is bound by all of `binders`.
    /// Binders that would capture a free variable of the replacement are
    /// renamed first.
    fn under(&self, binders: &[&String], scopes: &[&Term]) -> (Vec<String>, Vec<Term>) {
        let untouched = binders.iter().any(|b| b.as_str() == self.var)
            || !scopes.iter().any(|t| t.occurs_free(self.var));
        if untouched {
            return (
                binders.iter().map(|b| (*b).clone()).collect(),
                scopes.iter().map(|t| (*t).clone()).collect(),
            );
        }
        let mut names: Vec<String> = binders.iter().map(|b| (*b).clone()).collect();
        let mut scopes: Vec<Term> = scopes.iter().map(|t| (*t).clone()).collect();
        for i in 0..names.len() {
            if !self.with_free.contains(&names[i]) {
                continue;
            }
            let scope_free: BTreeSet<String> = scopes.iter().flat_map(|t| t.free_vars()).collect();
            let fresh = fresh_name(&names[i], |cand| {
                cand == self.var
                    || self.with_free.contains(cand)
                    || scope_free.contains(cand)
                    || names.iter().any(|n| n == cand)
            });
            // Only rename where this binder is the innermost one with its name.
            let shadowed_later = names[i + 1..].contains(&names[i]);
            if !shadowed_later {
                scopes = scopes.iter().map(|t| t.rename_free(&names[i], &fresh)).collect();
            }
            names[i] = fresh;
        }
        let scopes = scopes.iter().map(|t| self.apply(t)).collect();
        (names, scopes)
    }
}
