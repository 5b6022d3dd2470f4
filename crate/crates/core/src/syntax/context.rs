use super::Formula;

/// Ordered map from hypothesis names to formulas. Names are distinct:
/// re-binding a name drops the older entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TypingContext {
    entries: Vec<(String, Formula)>,
}

impl TypingContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn insert(&mut self, name: impl Into<String>, formula: Formula) {
        let name = name.into();
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, formula));
    }

    pub fn extended(&self, name: impl Into<String>, formula: Formula) -> Self {
        let mut out = self.clone();
        out.insert(name, formula);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Formula)> {
        self.entries.iter().map(|(n, f)| (n.as_str(), f))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every hypothesis is an implication (a Γ_→ context).
    pub fn is_implicative(&self) -> bool {
        self.entries.iter().all(|(_, f)| f.is_implication())
    }

    /// Every hypothesis is a negation (a Γ_¬ context).
    pub fn is_negated(&self) -> bool {
        self.entries.iter().all(|(_, f)| f.as_negation().is_some())
    }
}

impl<N: Into<String>> FromIterator<(N, Formula)> for TypingContext {
    fn from_iter<I: IntoIterator<Item = (N, Formula)>>(iter: I) -> Self {
        let mut ctx = TypingContext::new();
        for (n, f) in iter {
            ctx.insert(n, f);
        }
        ctx
    }
}
