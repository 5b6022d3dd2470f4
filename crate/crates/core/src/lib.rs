//! Proof terms for intuitionistic propositional logic extended with Visser's
//! rules (V) and Harrop's rule (KP): parsing, type checking, reduction,
//! normalization and disjunct extraction, plus the independent oracles used
//! to test them.

pub mod normalize;
pub mod oracle;
pub mod parser;
pub mod reduction;
pub mod syntax;
pub mod typing;

pub use normalize::{eval_ipc, eval_v, extract_disjunct, normalize_kp, NormalizeError, Normalizer, Strategy, DEFAULT_BUDGET};
pub use parser::{parse_formula, parse_script, parse_term, ParseError, ProofScript};
pub use reduction::{decompose, step_anywhere, step_top, step_weak_head, Decomposition, ReductionTrace, Rule, StepError};
pub use syntax::{alpha_eq, Calculus, Formula, Side, Term, TypingContext};
pub use typing::{check, infer, TypeError};
