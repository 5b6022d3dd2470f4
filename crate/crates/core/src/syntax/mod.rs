//! Formulas, proof terms and typing contexts.
//!
//! Terms use named binders; alpha-equivalence goes through the index-based
//! [`Nameless`] form, and substitution renames binders on capture by
//! appending the smallest free numeric suffix.

mod context;
mod formula;
mod nameless;
mod subst;
mod term;

use std::fmt;
use std::str::FromStr;

pub use context::TypingContext;
pub use formula::Formula;
pub use nameless::{alpha_eq, Nameless};
pub use subst::{fresh_name, is_reserved, RESERVED};
pub use term::{HarropNode, Path, Side, Term, VisserNode};

/// The three calculi: plain intuitionistic logic, IPC with Visser's rules,
/// and IPC with Harrop's rule (Kreisel-Putnam logic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Calculus {
    Ipc,
    V,
    Kp,
}

impl Calculus {
    pub const ALL: [Calculus; 3] = [Calculus::Ipc, Calculus::V, Calculus::Kp];

    pub fn allows_visser(self) -> bool {
        self == Calculus::V
    }

    pub fn allows_harrop(self) -> bool {
        self == Calculus::Kp
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Calculus::Ipc => "IPC",
            Calculus::V => "V",
            Calculus::Kp => "KP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown calculus `{0}` (expected IPC, V or KP)")]
pub struct UnknownCalculus(pub String);

impl FromStr for Calculus {
    type Err = UnknownCalculus;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "IPC" | "ipc" => Ok(Calculus::Ipc),
            "V" | "v" => Ok(Calculus::V),
            "KP" | "kp" => Ok(Calculus::Kp),
            _ => Err(UnknownCalculus(s.to_string())),
        }
    }
}
