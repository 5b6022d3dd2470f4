use std::fmt;

use crate::reduction::{head_shape, is_normal, HeadShape};
use crate::syntax::{Calculus, Formula, Term, TypingContext};
use crate::typing::infer;

/// Head of a neutral term `W⟨x s⟩` / `W⟨exfalso s⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NeutralHead {
    Variable(String),
    Exfalso,
}

/// Which clause of the classification of normal forms a term satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassReport {
    Abstraction,
    VariableInCtx,
    Injection,
    Pair,
    /// `W⟨x s⟩` or `W⟨exfalso s⟩` (implicative contexts).
    ArrowNeutral { head: NeutralHead },
    /// `W⟨exfalso s⟩` (negated contexts).
    NegNeutral,
    /// `x s : False` with `x` a hypothesis (negated contexts).
    VarAppFalsum,
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassReport::Abstraction => f.write_str("abstraction"),
            ClassReport::VariableInCtx => f.write_str("variable in context"),
            ClassReport::Injection => f.write_str("injection"),
            ClassReport::Pair => f.write_str("pair"),
            ClassReport::ArrowNeutral {
                head: NeutralHead::Variable(x),
            } => write!(f, "neutral, headed by `{x}`"),
            ClassReport::ArrowNeutral {
                head: NeutralHead::Exfalso,
            } => f.write_str("neutral, headed by exfalso"),
            ClassReport::NegNeutral => f.write_str("exfalso-neutral"),
            ClassReport::VarAppFalsum => f.write_str("hypothesis applied, proving False"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("normal form `{term}` : {formula} matches no classification clause")]
    ClassificationFailure { term: String, formula: Formula },
}

/// Classifies a normal form typed in an implicative context (IPC, V) or a
/// negated context (KP).
pub fn classify(ctx: &TypingContext, t: &Term, calculus: Calculus) -> Result<ClassReport, ClassifyError> {
    if !is_normal(t) {
        return Err(ClassifyError::PreconditionViolation(format!("`{t}` is not normal")));
    }
    let negated = calculus == Calculus::Kp;
    if negated && !ctx.is_negated() {
        return Err(ClassifyError::PreconditionViolation(
            "context has a hypothesis that is not a negation".into(),
        ));
    }
    if !negated && !ctx.is_implicative() {
        return Err(ClassifyError::PreconditionViolation(
            "context has a hypothesis that is not an implication".into(),
        ));
    }
    let formula = infer(ctx, t, calculus).map_err(|e| ClassifyError::PreconditionViolation(e.to_string()))?;

    match head_shape(t) {
        HeadShape::Efq(_) if negated => return Ok(ClassReport::NegNeutral),
        HeadShape::Efq(_) => {
            return Ok(ClassReport::ArrowNeutral {
                head: NeutralHead::Exfalso,
            })
        }
        HeadShape::VarApp(x, _) if !negated => {
            return Ok(ClassReport::ArrowNeutral {
                head: NeutralHead::Variable(x.to_string()),
            })
        }
        _ => {}
    }

    let report = match (&formula, t) {
        (Formula::Impl(..), Term::Abs { .. }) => Some(ClassReport::Abstraction),
        (Formula::Impl(..), Term::Var(x)) if ctx.contains(x) => Some(ClassReport::VariableInCtx),
        (Formula::Disj(..), Term::Inj { .. }) => Some(ClassReport::Injection),
        (Formula::Conj(..), Term::Pair(..)) => Some(ClassReport::Pair),
        (Formula::Falsum, Term::App(f, _)) if negated => match &**f {
            Term::Var(x) if ctx.contains(x) => Some(ClassReport::VarAppFalsum),
            _ => None,
        },
        _ => None,
    };
    report.ok_or_else(|| ClassifyError::ClassificationFailure {
        term: t.to_string(),
        formula,
    })
}
