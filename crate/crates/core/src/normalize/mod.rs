//! Normalizers: plain IPC normalization, the structural evaluation of
//! V-terms into IPC, full normalization of KP-terms, and disjunct extraction.

use crate::reduction::{contract_at, head_shape, leftmost_outermost, weak_head_path, HeadShape, ReductionTrace, Rule, StepError, TraceStep};
use crate::syntax::{Calculus, Formula, Path, Side, Term, TypingContext};
use crate::typing::{infer, visser_main_context, TypeError};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// The step budget: `VKP_BUDGET` if set to a positive integer, otherwise
/// [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var("VKP_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalizeError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("step budget of {budget} exhausted; last term: {last}")]
    BudgetExceeded { budget: u64, last: Box<Term> },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<StepError> for NormalizeError {
    fn from(e: StepError) -> Self {
        NormalizeError::Internal(e.to_string())
    }
}

fn precondition(e: TypeError) -> NormalizeError {
    NormalizeError::PreconditionViolation(e.to_string())
}

/// Which redex to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Weak head redex first, then leftmost-outermost anywhere, to full
    /// normal form.
    Full,
    /// Weak head steps only; stops at weak head normal form.
    WeakHead,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub term: Term,
    pub steps: u64,
    pub trace: Option<ReductionTrace>,
}

/// A configurable step-based normalizer.
#[derive(Clone, Debug)]
pub struct Normalizer {
    pub calculus: Calculus,
    pub strategy: Strategy,
    pub budget: u64,
    pub record: bool,
}

impl Normalizer {
    pub fn new(calculus: Calculus) -> Self {
        Self {
            calculus,
            strategy: Strategy::Full,
            budget: DEFAULT_BUDGET,
            record: false,
        }
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn traced(mut self) -> Self {
        self.record = true;
        self
    }

    /// Type-checks `t` under `ctx`, then reduces it.
    pub fn run(&self, ctx: &TypingContext, t: &Term) -> Result<Outcome, NormalizeError> {
        infer(ctx, t, self.calculus).map_err(precondition)?;
        self.run_unchecked(ctx, t.clone())
    }

    pub(crate) fn run_unchecked(&self, ctx: &TypingContext, mut t: Term) -> Result<Outcome, NormalizeError> {
        let mut trace = self.record.then(ReductionTrace::default);
        let mut steps = 0u64;
        while let Some(path) = self.next_redex(&t) {
            if steps >= self.budget {
                return Err(NormalizeError::BudgetExceeded {
                    budget: self.budget,
                    last: Box::new(t),
                });
            }
            steps += 1;
            match &mut trace {
                Some(trace) => {
                    let before = t.clone();
                    let rule = contract_at(ctx, &mut t, &path, self.calculus)?;
                    trace.steps.push(TraceStep {
                        path,
                        rule,
                        before,
                        after: t.clone(),
                    });
                }
                None => {
                    contract_at(ctx, &mut t, &path, self.calculus)?;
                }
            }
        }
        Ok(Outcome { term: t, steps, trace })
    }

    fn next_redex(&self, t: &Term) -> Option<Path> {
        match self.strategy {
            Strategy::WeakHead => weak_head_path(t),
            Strategy::Full => weak_head_path(t).or_else(|| leftmost_outermost(t)),
        }
    }
}

fn ipc_normal_form(t: Term, budget: u64) -> Result<Term, NormalizeError> {
    // IPC rules never consult the context.
    Ok(Normalizer::new(Calculus::Ipc)
        .budget(budget)
        .run_unchecked(&TypingContext::new(), t)?
        .term)
}

/// The normal form of an IPC-typed term.
pub fn eval_ipc(ctx: &TypingContext, t: &Term) -> Result<Term, NormalizeError> {
    Ok(Normalizer::new(Calculus::Ipc).budget(budget_from_env()).run(ctx, t)?.term)
}

/// Full normalization of a KP-typed term.
pub fn normalize_kp(ctx: &TypingContext, t: &Term, budget: u64) -> Result<Term, NormalizeError> {
    Ok(Normalizer::new(Calculus::Kp).budget(budget).run(ctx, t)?.term)
}

/// The evaluation of a V-typed term into an IPC normal form, by structural
/// recursion. Every Visser node is eliminated by inspecting the evaluated
/// main premise.
pub fn eval_v(ctx: &TypingContext, t: &Term) -> Result<Term, NormalizeError> {
    infer(ctx, t, Calculus::V).map_err(precondition)?;
    Evaluator { budget: budget_from_env() }.eval(t)
}

struct Evaluator {
    budget: u64,
}

impl Evaluator {
    fn nf(&self, t: Term) -> Result<Term, NormalizeError> {
        ipc_normal_form(t, self.budget)
    }

    fn eval(&self, t: &Term) -> Result<Term, NormalizeError> {
        Ok(match t {
            Term::Var(_) => t.clone(),
            Term::App(f, a) => self.nf(Term::app(self.eval(f)?, self.eval(a)?))?,
            Term::Abs { binder, annot, body } => Term::lam(binder.clone(), annot.clone(), self.eval(body)?),
            Term::Exfalso { target, arg } => Term::exfalso(target.clone(), self.eval(arg)?),
            Term::Pair(a, b) => Term::pair(self.eval(a)?, self.eval(b)?),
            Term::Proj(side, a) => self.nf(Term::proj(*side, self.eval(a)?))?,
            Term::Inj { side, other, arg } => Term::inj(*side, other.clone(), self.eval(arg)?),
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => self.nf(Term::case(
                self.eval(scrutinee)?,
                binder.clone(),
                self.eval(left)?,
                self.eval(right)?,
            ))?,
            Term::Visser(v) => {
                let main = self.eval(&v.main)?;
                let close = |body: Term| Term::lams(&v.binders, body);
                let chosen = match head_shape(&main) {
                    HeadShape::Injection(side, payload) => {
                        let branch = self.eval(side.pick(&v.left, &v.right))?;
                        branch.substitute(&v.case_binder, &close(payload.clone()))
                    }
                    HeadShape::Efq(payload) => {
                        let scope = visser_main_context(v).map_err(|e| NormalizeError::Internal(e.to_string()))?;
                        let a1 = match infer(&scope, &v.main, Calculus::V) {
                            Ok(Formula::Disj(a1, _)) => *a1,
                            other => {
                                return Err(NormalizeError::Internal(format!(
                                    "visser main premise is not a disjunction proof: {other:?}"
                                )))
                            }
                        };
                        let branch = self.eval(&v.left)?;
                        branch.substitute(&v.case_binder, &close(Term::exfalso(a1, payload.clone())))
                    }
                    HeadShape::VarApp(x, payload) => {
                        let j = v.binders.iter().rposition(|(b, _)| b == x).ok_or_else(|| {
                            NormalizeError::Internal(format!("head variable `{x}` of a visser main premise is not one of its binders"))
                        })?;
                        let branch = self.eval(&v.apps[j])?;
                        branch.substitute(&v.app_binder, &close(payload.clone()))
                    }
                    HeadShape::Other => {
                        return Err(NormalizeError::Internal(format!(
                            "evaluated visser main premise `{main}` does not decompose"
                        )))
                    }
                };
                self.nf(chosen)?
            }
            Term::Harrop(_) => {
                return Err(NormalizeError::PreconditionViolation(
                    "hop is not part of V".to_string(),
                ))
            }
        })
    }
}

/// Normalizes a closed proof of a disjunction and returns the injected side
/// and its payload. V-terms go through [`eval_v`], KP-terms through the full
/// normalizer.
pub fn extract_disjunct(t: &Term, calculus: Calculus) -> Result<(Side, Term), NormalizeError> {
    let empty = TypingContext::new();
    if !t.is_closed() {
        let names: Vec<String> = t.free_vars().into_iter().collect();
        return Err(NormalizeError::PreconditionViolation(format!(
            "term is not closed (free: {})",
            names.join(", ")
        )));
    }
    let (left, right) = match infer(&empty, t, calculus).map_err(precondition)? {
        Formula::Disj(a, b) => (*a, *b),
        found => {
            return Err(NormalizeError::PreconditionViolation(format!(
                "term proves {found}, not a disjunction"
            )))
        }
    };
    let normal = match calculus {
        Calculus::Ipc => eval_ipc(&empty, t)?,
        Calculus::V => eval_v(&empty, t)?,
        Calculus::Kp => normalize_kp(&empty, t, budget_from_env())?,
    };
    match normal {
        Term::Inj { side, arg, .. } => {
            let expected = side.pick(&left, &right);
            let witness_calculus = if calculus == Calculus::V { Calculus::Ipc } else { calculus };
            match infer(&empty, &arg, witness_calculus) {
                Ok(found) if &found == expected => Ok((side, *arg)),
                other => Err(NormalizeError::Internal(format!(
                    "witness does not prove {expected}: {other:?}"
                ))),
            }
        }
        other => Err(NormalizeError::Internal(format!(
            "normal form `{other}` of a closed disjunction proof is not an injection"
        ))),
    }
}

/// Reduces with the redex chosen by `pick` among all redex positions, until
/// normal. Used to exercise strong normalization under many strategies.
pub fn normalize_with(
    ctx: &TypingContext,
    t: &Term,
    calculus: Calculus,
    budget: u64,
    mut pick: impl FnMut(&[Path]) -> usize,
) -> Result<(Term, u64), NormalizeError> {
    let mut t = t.clone();
    let mut steps = 0;
    loop {
        let paths = crate::reduction::redex_paths(&t);
        if paths.is_empty() {
            return Ok((t, steps));
        }
        if steps >= budget {
            return Err(NormalizeError::BudgetExceeded {
                budget,
                last: Box::new(t),
            });
        }
        steps += 1;
        let path = &paths[pick(&paths) % paths.len()];
        contract_at(ctx, &mut t, path, calculus)?;
    }
}

/// Rule names used in a trace, in order.
pub fn rules_of(trace: &ReductionTrace) -> Vec<Rule> {
    trace.steps.iter().map(|s| s.rule).collect()
}
