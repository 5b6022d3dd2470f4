use std::collections::BTreeSet;

/// A propositional formula. Negation is not a constructor: `~A` is
/// `Impl(A, Falsum)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Falsum,
    Impl(Box<Formula>, Box<Formula>),
    Conj(Box<Formula>, Box<Formula>),
    Disj(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::Impl(Box::new(lhs), Box::new(rhs))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::Conj(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Disj(Box::new(lhs), Box::new(rhs))
    }

    pub fn negation(inner: Formula) -> Self {
        Formula::implies(inner, Formula::Falsum)
    }

    /// `B_1 -> ... -> B_n -> target`, right-nested.
    pub fn curried<'a>(antecedents: impl DoubleEndedIterator<Item = &'a Formula>, target: Formula) -> Self {
        antecedents.rev().fold(target, |acc, a| Formula::implies(a.clone(), acc))
    }

    /// Returns `B` when the formula is `~B`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Impl(b, rhs) if **rhs == Formula::Falsum => Some(b),
            _ => None,
        }
    }

    pub fn as_impl(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Impl(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_conj(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Conj(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_disj(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Disj(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_implication(&self) -> bool {
        matches!(self, Formula::Impl(..))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Falsum => {}
            Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of connectives and atoms.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 1,
            Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => 1 + a.size() + b.size(),
        }
    }
}
