//! One-step reduction for IPC, V and KP.
//!
//! Redexes are recognised syntactically. The only rules that need typing
//! information are the two `exfalso` rules, whose reduct rebuilds an
//! `exfalso` annotated with the left disjunct of the main premise; for
//! `hop` this requires the typing context at the redex, which is why the
//! stepping functions take one.

mod context;

use std::fmt;

pub use context::{decompose, Decomposition, Frame, KContext, KFrame, WContext};
pub(crate) use context::{head_shape, HeadShape};

use crate::syntax::{Calculus, Formula, HarropNode, Path, Term, TypingContext, VisserNode};
use crate::typing::{context_at, infer, visser_main_context, TypeError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Beta,
    Projection,
    Case,
    VisserInj,
    VisserEfq,
    VisserApp,
    HarropInj,
    HarropEfq,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::Beta,
        Rule::Projection,
        Rule::Case,
        Rule::VisserInj,
        Rule::VisserEfq,
        Rule::VisserApp,
        Rule::HarropInj,
        Rule::HarropEfq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Beta => "Beta",
            Rule::Projection => "Projection",
            Rule::Case => "Case",
            Rule::VisserInj => "Visser-inj",
            Rule::VisserEfq => "Visser-efq",
            Rule::VisserApp => "Visser-app",
            Rule::HarropInj => "Harrop-inj",
            Rule::HarropEfq => "Harrop-efq",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Whether the rule belongs to `calculus`.
    pub fn allowed_in(self, calculus: Calculus) -> bool {
        match self {
            Rule::VisserInj | Rule::VisserEfq | Rule::VisserApp => calculus.allows_visser(),
            Rule::HarropInj | Rule::HarropEfq => calculus.allows_harrop(),
            _ => true,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("no redex")]
    NoRedex,
    #[error("{rule} does not belong to {calculus}")]
    CalculusViolation { rule: Rule, calculus: Calculus },
    #[error("redex is ill-typed: {0}")]
    IllTyped(#[from] TypeError),
    #[error("no subterm at path {0:?}")]
    InvalidPath(Path),
}

/// The rule that would fire at the root of `t`, judged syntactically.
pub fn redex_rule(t: &Term) -> Option<Rule> {
    match t {
        Term::App(f, _) if matches!(**f, Term::Abs { .. }) => Some(Rule::Beta),
        Term::Proj(_, a) if matches!(**a, Term::Pair(..)) => Some(Rule::Projection),
        Term::Case { scrutinee, .. } if matches!(**scrutinee, Term::Inj { .. }) => Some(Rule::Case),
        Term::Visser(v) => match head_shape(&v.main) {
            HeadShape::Injection(..) => Some(Rule::VisserInj),
            HeadShape::Efq(_) => Some(Rule::VisserEfq),
            HeadShape::VarApp(x, _) if v.binders.iter().any(|(b, _)| b == x) => Some(Rule::VisserApp),
            _ => None,
        },
        Term::Harrop(h) => match head_shape(&h.main) {
            HeadShape::Injection(..) => Some(Rule::HarropInj),
            HeadShape::Efq(_) => Some(Rule::HarropEfq),
            _ => None,
        },
        _ => None,
    }
}

/// Contracts the redex at the root of `t`. `ctx` types the free variables of
/// `t`; it is consulted only by Harrop-efq.
pub fn step_top(ctx: &TypingContext, t: &Term, calculus: Calculus) -> Result<(Rule, Term), StepError> {
    let rule = redex_rule(t).ok_or(StepError::NoRedex)?;
    if !rule.allowed_in(calculus) {
        return Err(StepError::CalculusViolation { rule, calculus });
    }
    let reduct = match t {
        Term::App(f, a) => match &**f {
            Term::Abs { binder, body, .. } => body.substitute(binder, a),
            _ => unreachable!(),
        },
        Term::Proj(side, a) => match &**a {
            Term::Pair(l, r) => side.pick(l, r).as_ref().clone(),
            _ => unreachable!(),
        },
        Term::Case {
            scrutinee,
            binder,
            left,
            right,
        } => match &**scrutinee {
            Term::Inj { side, arg, .. } => side.pick(left, right).substitute(binder, arg),
            _ => unreachable!(),
        },
        Term::Visser(v) => contract_visser(v)?,
        Term::Harrop(h) => contract_harrop(ctx, h)?,
        _ => unreachable!(),
    };
    Ok((rule, reduct))
}

fn left_disjunct(main_type: Formula, main: &Term) -> Result<Formula, StepError> {
    match main_type {
        Formula::Disj(a1, _) => Ok(*a1),
        found => Err(TypeError::NotADisjunction {
            term: main.to_string(),
            found,
        }
        .into()),
    }
}

fn contract_visser(v: &VisserNode) -> Result<Term, StepError> {
    let close = |body: &Term| Term::lams(&v.binders, body.clone());
    Ok(match head_shape(&v.main) {
        HeadShape::Injection(side, payload) => side.pick(&v.left, &v.right).substitute(&v.case_binder, &close(payload)),
        HeadShape::Efq(payload) => {
            let scope = visser_main_context(v)?;
            let a1 = left_disjunct(infer(&scope, &v.main, Calculus::V)?, &v.main)?;
            v.left
                .substitute(&v.case_binder, &close(&Term::exfalso(a1, payload.clone())))
        }
        HeadShape::VarApp(x, payload) => {
            let j = v
                .binders
                .iter()
                .rposition(|(b, _)| b == x)
                .ok_or(StepError::NoRedex)?;
            let u = v.apps.get(j).ok_or(StepError::NoRedex)?;
            u.substitute(&v.app_binder, &close(payload))
        }
        HeadShape::Other => return Err(StepError::NoRedex),
    })
}

fn contract_harrop(ctx: &TypingContext, h: &HarropNode) -> Result<Term, StepError> {
    let close = |body: Term| Term::lam(h.binder.clone(), h.annot.clone(), body);
    Ok(match head_shape(&h.main) {
        HeadShape::Injection(side, payload) => side
            .pick(&h.left, &h.right)
            .substitute(&h.case_binder, &close(payload.clone())),
        HeadShape::Efq(payload) => {
            let scope = ctx.extended(h.binder.clone(), h.annot.clone());
            let a1 = left_disjunct(infer(&scope, &h.main, Calculus::Kp)?, &h.main)?;
            h.left
                .substitute(&h.case_binder, &close(Term::exfalso(a1, payload.clone())))
        }
        _ => return Err(StepError::NoRedex),
    })
}

/// Contracts the redex at `path` in place and reports the rule used.
pub fn contract_at(ctx: &TypingContext, t: &mut Term, path: &[usize], calculus: Calculus) -> Result<Rule, StepError> {
    let sub = t.at(path).ok_or_else(|| StepError::InvalidPath(path.to_vec()))?;
    let rule = redex_rule(sub).ok_or(StepError::NoRedex)?;
    let local;
    let local_ctx = if rule == Rule::HarropEfq && !path.is_empty() {
        local = context_at(ctx, t, path, calculus)?;
        &local
    } else {
        ctx
    };
    let (rule, reduct) = step_top(local_ctx, sub, calculus)?;
    t.replace_at(path, reduct);
    Ok(rule)
}

/// The term obtained by contracting the redex at `path`.
pub fn reduce_at(ctx: &TypingContext, t: &Term, path: &[usize], calculus: Calculus) -> Result<(Rule, Term), StepError> {
    let mut out = t.clone();
    let rule = contract_at(ctx, &mut out, path, calculus)?;
    Ok((rule, out))
}

/// Every redex position of `t` in pre-order (outermost first, then left to
/// right).
pub fn redex_paths(t: &Term) -> Vec<Path> {
    fn walk(t: &Term, path: &mut Path, out: &mut Vec<Path>) {
        if redex_rule(t).is_some() {
            out.push(path.clone());
        }
        for (i, child) in t.children().into_iter().enumerate() {
            path.push(i);
            walk(child, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// The leftmost-outermost redex position, if any.
pub fn leftmost_outermost(t: &Term) -> Option<Path> {
    fn walk(t: &Term, path: &mut Path) -> bool {
        if redex_rule(t).is_some() {
            return true;
        }
        for (i, child) in t.children().into_iter().enumerate() {
            path.push(i);
            if walk(child, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    walk(t, &mut path).then_some(path)
}

pub fn is_normal(t: &Term) -> bool {
    leftmost_outermost(t).is_none()
}

/// A one-step reduct together with where and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduct {
    pub path: Path,
    pub rule: Rule,
    pub term: Term,
}

/// All one-step reducts of `t`, in pre-order of their redex positions. The
/// list is empty iff `t` is normal.
pub fn step_anywhere(ctx: &TypingContext, t: &Term, calculus: Calculus) -> Result<Vec<Reduct>, StepError> {
    redex_paths(t)
        .into_iter()
        .map(|path| {
            let (rule, term) = reduce_at(ctx, t, &path, calculus)?;
            Ok(Reduct { path, rule, term })
        })
        .collect()
}

/// Every position reachable from the root through weak head KP frames,
/// outermost first. Each is a child-0 path.
pub fn k_positions(t: &Term) -> Vec<Path> {
    let mut out = vec![Vec::new()];
    let mut node = t;
    let mut path = Vec::new();
    loop {
        node = match node {
            Term::App(f, _) => f,
            Term::Proj(_, a) => a,
            Term::Case { scrutinee, .. } => scrutinee,
            Term::Harrop(h) => &h.main,
            _ => return out,
        };
        path.push(0);
        out.push(path.clone());
    }
}

/// The position of the weak head redex of `t`: the outermost redex reachable
/// through K frames.
pub fn weak_head_path(t: &Term) -> Option<Path> {
    let mut node = t;
    let mut path = Vec::new();
    loop {
        if redex_rule(node).is_some() {
            return Some(path);
        }
        node = match node {
            Term::App(f, _) => f,
            Term::Proj(_, a) => a,
            Term::Case { scrutinee, .. } => scrutinee,
            Term::Harrop(h) => &h.main,
            _ => return None,
        };
        path.push(0);
    }
}

/// One weak head step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakHeadStep {
    Step(Reduct),
    Stuck,
}

/// One step of the deterministic weak head strategy for KP.
pub fn step_weak_head(ctx: &TypingContext, t: &Term) -> Result<WeakHeadStep, StepError> {
    match weak_head_path(t) {
        None => Ok(WeakHeadStep::Stuck),
        Some(path) => {
            let (rule, term) = reduce_at(ctx, t, &path, Calculus::Kp)?;
            Ok(WeakHeadStep::Step(Reduct { path, rule, term }))
        }
    }
}

/// One recorded reduction step on whole terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub path: Path,
    pub rule: Rule,
    pub before: Term,
    pub after: Term,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every step and compares with the recorded result.
    pub fn replay(&self, ctx: &TypingContext, calculus: Calculus) -> Result<(), String> {
        for (i, step) in self.steps.iter().enumerate() {
            let (rule, after) = reduce_at(ctx, &step.before, &step.path, calculus).map_err(|e| format!("step {i}: {e}"))?;
            if rule != step.rule {
                return Err(format!("step {i}: recorded {}, replay fired {rule}", step.rule));
            }
            if after != step.after {
                return Err(format!("step {i}: replay gives {after}, recorded {}", step.after));
            }
            if let Some(next) = self.steps.get(i + 1) {
                if next.before != step.after {
                    return Err(format!("step {}: does not start where step {i} ended", i + 1));
                }
            }
        }
        Ok(())
    }
}

/// Formats a path as `[0, 2, 1]`; the root is `[]`.
pub fn format_path(path: &[usize]) -> String {
    let inner: Vec<String> = path.iter().map(|i| i.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

#[cfg(test)]
mod tests;
