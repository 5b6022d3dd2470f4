//! Syntax-directed type checking for IPC, V and KP.
//!
//! The main premise of a Visser node is checked in a context holding only
//! that node's own binders, whatever the surrounding context is. This is the
//! closedness side condition of the rule. The antecedent list
//! `(B_1 -> C_1, .., B_n -> C_n)` of a branch hypothesis is curried in binder
//! order: `(B_1 -> C_1) -> .. -> (B_n -> C_n) -> X`.

use crate::syntax::{Calculus, Formula, Path, Term, TypingContext, VisserNode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("`{term}` has type {found}, which is not an implication")]
    NotAnImplication { term: String, found: Formula },
    #[error("`{term}` has type {found}, which is not a conjunction")]
    NotAConjunction { term: String, found: Formula },
    #[error("`{term}` has type {found}, which is not a disjunction")]
    NotADisjunction { term: String, found: Formula },
    #[error("`{term}` has type {found}, expected False")]
    NotFalsum { term: String, found: Formula },
    #[error("argument `{term}` has type {found}, expected {expected}")]
    ArgumentMismatch { term: String, expected: Formula, found: Formula },
    #[error("branches conclude different formulas: {first} vs {second}")]
    BranchTypeMismatch { first: Formula, second: Formula },
    #[error("main premise of visser uses open assumptions: {}", .0.join(", "))]
    VisserOpenAssumption(Vec<String>),
    #[error("visser binder `{binder}` must be annotated with an implication, found {found}")]
    VisserBinderNotImplication { binder: String, found: Formula },
    #[error("visser has {binders} binders but {branches} application branches")]
    VisserArity { binders: usize, branches: usize },
    #[error("hop binder `{binder}` must be annotated with a negation, found {found}")]
    HarropBinderNotNegation { binder: String, found: Formula },
    #[error("{construct} is not part of {calculus}")]
    CalculusViolation { construct: &'static str, calculus: Calculus },
    #[error("expected {expected}, got {found}")]
    TypeMismatch { expected: Formula, found: Formula },
}

pub type TypeResult<T> = Result<T, TypeError>;

/// The unique formula `A` with `ctx ⊢ t : A` in `calculus`.
pub fn infer(ctx: &TypingContext, t: &Term, calculus: Calculus) -> TypeResult<Formula> {
    let mut scope: Vec<(String, Formula)> = ctx.iter().map(|(n, f)| (n.to_string(), f.clone())).collect();
    Checker { calculus }.infer(&mut scope, t)
}

/// Infers and compares against `expected`.
pub fn check(ctx: &TypingContext, t: &Term, expected: &Formula, calculus: Calculus) -> TypeResult<()> {
    let found = infer(ctx, t, calculus)?;
    if &found == expected {
        Ok(())
    } else {
        Err(TypeError::TypeMismatch {
            expected: expected.clone(),
            found,
        })
    }
}

/// `(B_1 -> C_1) -> .. -> (B_n -> C_n) -> target`
pub fn visser_hypothesis(binders: &[(String, Formula)], target: Formula) -> Formula {
    Formula::curried(binders.iter().map(|(_, f)| f), target)
}

/// The binders of a Visser node as a context, after checking their shape.
pub fn visser_main_context(v: &VisserNode) -> TypeResult<TypingContext> {
    if v.binders.is_empty() || v.binders.len() != v.apps.len() {
        return Err(TypeError::VisserArity {
            binders: v.binders.len(),
            branches: v.apps.len(),
        });
    }
    for (x, f) in &v.binders {
        if !f.is_implication() {
            return Err(TypeError::VisserBinderNotImplication {
                binder: x.clone(),
                found: f.clone(),
            });
        }
    }
    Ok(v.binders.iter().cloned().collect())
}

/// The typing context in force at `path` inside `t`, where `t` itself is
/// typed under `ctx`. Entering a Visser main premise resets the context to
/// the node's binders.
pub fn context_at(ctx: &TypingContext, t: &Term, path: &[usize], calculus: Calculus) -> TypeResult<TypingContext> {
    let mut ctx = ctx.clone();
    let mut node = t;
    for &i in path {
        ctx = child_context(&ctx, node, i, calculus)?;
        node = match node.child(i) {
            Some(child) => child,
            None => break,
        };
    }
    Ok(ctx)
}

/// Context for child `index` of `t`.
pub fn child_context(ctx: &TypingContext, t: &Term, index: usize, calculus: Calculus) -> TypeResult<TypingContext> {
    Ok(match (t, index) {
        (Term::Abs { binder, annot, .. }, 0) => ctx.extended(binder.clone(), annot.clone()),
        (Term::Case { scrutinee, binder, .. }, 1 | 2) => {
            let ty = infer(ctx, scrutinee, calculus)?;
            let (a, b) = ty.as_disj().ok_or_else(|| TypeError::NotADisjunction {
                term: scrutinee.to_string(),
                found: ty.clone(),
            })?;
            ctx.extended(binder.clone(), if index == 1 { a.clone() } else { b.clone() })
        }
        (Term::Visser(v), 0) => visser_main_context(v)?,
        (Term::Visser(v), 1 | 2) => {
            let main_ty = infer(&visser_main_context(v)?, &v.main, calculus)?;
            let (a1, a2) = main_ty.as_disj().ok_or_else(|| TypeError::NotADisjunction {
                term: v.main.to_string(),
                found: main_ty.clone(),
            })?;
            let disjunct = if index == 1 { a1 } else { a2 };
            ctx.extended(v.case_binder.clone(), visser_hypothesis(&v.binders, disjunct.clone()))
        }
        (Term::Visser(v), j) => {
            visser_main_context(v)?;
            let Some((_, bc)) = v.binders.get(j - 3) else {
                return Ok(ctx.clone());
            };
            let (b, _) = bc.as_impl().expect("checked by visser_main_context");
            ctx.extended(v.app_binder.clone(), visser_hypothesis(&v.binders, b.clone()))
        }
        (Term::Harrop(h), 0) => ctx.extended(h.binder.clone(), h.annot.clone()),
        (Term::Harrop(h), 1 | 2) => {
            let inner = ctx.extended(h.binder.clone(), h.annot.clone());
            let main_ty = infer(&inner, &h.main, calculus)?;
            let (a1, a2) = main_ty.as_disj().ok_or_else(|| TypeError::NotADisjunction {
                term: h.main.to_string(),
                found: main_ty.clone(),
            })?;
            let disjunct = if index == 1 { a1 } else { a2 };
            ctx.extended(h.case_binder.clone(), Formula::implies(h.annot.clone(), disjunct.clone()))
        }
        _ => ctx.clone(),
    })
}

/// Paths of every subterm, paired with the context it is typed under.
pub fn subterm_contexts(ctx: &TypingContext, t: &Term, calculus: Calculus) -> TypeResult<Vec<(Path, TypingContext)>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), ctx.clone())];
    while let Some((path, ctx)) = stack.pop() {
        let node = t.at(&path).expect("path built from children");
        for i in (0..node.children().len()).rev() {
            let mut child = path.clone();
            child.push(i);
            stack.push((child, child_context(&ctx, node, i, calculus)?));
        }
        out.push((path, ctx));
    }
    Ok(out)
}

struct Checker {
    calculus: Calculus,
}

impl Checker {
    fn under(&self, scope: &mut Vec<(String, Formula)>, x: &str, a: Formula, t: &Term) -> TypeResult<Formula> {
        scope.push((x.to_string(), a));
        let out = self.infer(scope, t);
        scope.pop();
        out
    }

    fn infer(&self, scope: &mut Vec<(String, Formula)>, t: &Term) -> TypeResult<Formula> {
        match t {
            Term::Var(x) => scope
                .iter()
                .rev()
                .find(|(n, _)| n == x)
                .map(|(_, f)| f.clone())
                .ok_or_else(|| TypeError::UnknownVariable(x.clone())),
            Term::Abs { binder, annot, body } => {
                let b = self.under(scope, binder, annot.clone(), body)?;
                Ok(Formula::implies(annot.clone(), b))
            }
            Term::App(f, a) => {
                let fty = self.infer(scope, f)?;
                let Formula::Impl(dom, cod) = fty else {
                    return Err(TypeError::NotAnImplication {
                        term: f.to_string(),
                        found: fty,
                    });
                };
                let aty = self.infer(scope, a)?;
                if aty != *dom {
                    return Err(TypeError::ArgumentMismatch {
                        term: a.to_string(),
                        expected: *dom,
                        found: aty,
                    });
                }
                Ok(*cod)
            }
            Term::Exfalso { target, arg } => {
                let ty = self.infer(scope, arg)?;
                if ty != Formula::Falsum {
                    return Err(TypeError::NotFalsum {
                        term: arg.to_string(),
                        found: ty,
                    });
                }
                Ok(target.clone())
            }
            Term::Pair(a, b) => Ok(Formula::and(self.infer(scope, a)?, self.infer(scope, b)?)),
            Term::Proj(side, arg) => {
                let ty = self.infer(scope, arg)?;
                let Formula::Conj(a, b) = ty else {
                    return Err(TypeError::NotAConjunction {
                        term: arg.to_string(),
                        found: ty,
                    });
                };
                Ok(*side.pick(a, b))
            }
            Term::Inj { side, other, arg } => {
                let ty = self.infer(scope, arg)?;
                Ok(match side {
                    crate::syntax::Side::Left => Formula::or(ty, other.clone()),
                    crate::syntax::Side::Right => Formula::or(other.clone(), ty),
                })
            }
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => {
                let (a, b) = self.disjunction(scope, scrutinee)?;
                let d1 = self.under(scope, binder, a, left)?;
                let d2 = self.under(scope, binder, b, right)?;
                same_branch(d1, d2)
            }
            Term::Visser(v) => {
                if !self.calculus.allows_visser() {
                    return Err(TypeError::CalculusViolation {
                        construct: "visser",
                        calculus: self.calculus,
                    });
                }
                let main_ctx = visser_main_context(v)?;
                let open: Vec<String> = v
                    .main
                    .free_vars()
                    .into_iter()
                    .filter(|x| !main_ctx.contains(x))
                    .collect();
                if !open.is_empty() {
                    return Err(TypeError::VisserOpenAssumption(open));
                }
                let mut main_scope: Vec<(String, Formula)> = v.binders.clone();
                let (a1, a2) = self.disjunction(&mut main_scope, &v.main)?;
                let mut result =
                    self.under(scope, &v.case_binder, visser_hypothesis(&v.binders, a1), &v.left)?;
                let d2 = self.under(scope, &v.case_binder, visser_hypothesis(&v.binders, a2), &v.right)?;
                result = same_branch(result, d2)?;
                for ((_, bc), u) in v.binders.iter().zip(&v.apps) {
                    let (b, _) = bc.as_impl().expect("checked by visser_main_context");
                    let d = self.under(scope, &v.app_binder, visser_hypothesis(&v.binders, b.clone()), u)?;
                    result = same_branch(result, d)?;
                }
                Ok(result)
            }
            Term::Harrop(h) => {
                if !self.calculus.allows_harrop() {
                    return Err(TypeError::CalculusViolation {
                        construct: "hop",
                        calculus: self.calculus,
                    });
                }
                if h.annot.as_negation().is_none() {
                    return Err(TypeError::HarropBinderNotNegation {
                        binder: h.binder.clone(),
                        found: h.annot.clone(),
                    });
                }
                scope.push((h.binder.clone(), h.annot.clone()));
                let main = self.disjunction(scope, &h.main);
                scope.pop();
                let (a1, a2) = main?;
                let d1 = self.under(scope, &h.case_binder, Formula::implies(h.annot.clone(), a1), &h.left)?;
                let d2 = self.under(scope, &h.case_binder, Formula::implies(h.annot.clone(), a2), &h.right)?;
                same_branch(d1, d2)
            }
        }
    }

    fn disjunction(&self, scope: &mut Vec<(String, Formula)>, t: &Term) -> TypeResult<(Formula, Formula)> {
        match self.infer(scope, t)? {
            Formula::Disj(a, b) => Ok((*a, *b)),
            other => Err(TypeError::NotADisjunction {
                term: t.to_string(),
                found: other,
            }),
        }
    }
}

fn same_branch(first: Formula, second: Formula) -> TypeResult<Formula> {
    if first == second {
        Ok(first)
    } else {
        Err(TypeError::BranchTypeMismatch { first, second })
    }
}
