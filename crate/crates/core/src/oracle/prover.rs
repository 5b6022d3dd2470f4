//! Decision procedure for IPC: Dyckhoff's contraction-free sequent calculus
//! G4ip, producing proof terms, backed by a Kripke countermodel search for
//! unprovable formulas.

use super::kripke::{find_countermodel, KripkeModel};
use crate::syntax::{Calculus, Formula, Side, Term, TypingContext};
use crate::typing::check;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Provable(Term),
    NotProvable(KripkeModel),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("proof search exceeded its budget of {fuel} sequents (goal {goal})")]
    SearchBudgetExceeded { fuel: u64, goal: Formula },
    #[error("{formula} is not provable, but no countermodel with at most {max_worlds} worlds exists")]
    CountermodelNotFound { formula: Formula, max_worlds: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug)]
pub struct ProverConfig {
    pub fuel: u64,
    pub max_worlds: usize,
}

impl Default for ProverConfig {
    fn default() -> Self {
        Self {
            fuel: 2_000_000,
            max_worlds: 6,
        }
    }
}

/// Decides IPC provability of `f`. Proofs are checked by the IPC type
/// checker and countermodels by direct evaluation of forcing before they are
/// returned.
pub fn ipc_provable(f: &Formula) -> Result<Verdict, OracleError> {
    ipc_provable_with(f, ProverConfig::default())
}

pub fn ipc_provable_with(f: &Formula, config: ProverConfig) -> Result<Verdict, OracleError> {
    match prove(f, config.fuel)? {
        Some(term) => {
            check(&TypingContext::new(), &term, f, Calculus::Ipc)
                .map_err(|e| OracleError::Internal(format!("proof `{term}` does not check: {e}")))?;
            Ok(Verdict::Provable(term))
        }
        None => match find_countermodel(f, config.max_worlds) {
            Some(model) if model.refutes(f) => Ok(Verdict::NotProvable(model)),
            Some(model) => Err(OracleError::Internal(format!("countermodel fails verification:\n{model}"))),
            None => Err(OracleError::CountermodelNotFound {
                formula: f.clone(),
                max_worlds: config.max_worlds,
            }),
        },
    }
}

/// Runs G4ip alone: `Some(proof)` or `None` when `f` is not provable.
pub fn prove(f: &Formula, fuel: u64) -> Result<Option<Term>, OracleError> {
    let mut search = Search {
        fuel,
        used: 0,
        next_name: 0,
    };
    search.sequent(Vec::new(), f)
}

type Hyp = (Term, Formula);

struct Search {
    fuel: u64,
    used: u64,
    next_name: u64,
}

impl Search {
    fn fresh(&mut self) -> String {
        self.next_name += 1;
        format!("h{}", self.next_name)
    }

    fn lam(&mut self, annot: &Formula, body: impl FnOnce(&mut Self, Term) -> Result<Option<Term>, OracleError>) -> Result<Option<Term>, OracleError> {
        let x = self.fresh();
        Ok(body(self, Term::var(x.clone()))?.map(|b| Term::lam(x, annot.clone(), b)))
    }

    /// Proves `goal` from hypotheses given as (proof term, formula) pairs.
    fn sequent(&mut self, hyps: Vec<Hyp>, goal: &Formula) -> Result<Option<Term>, OracleError> {
        self.used += 1;
        if self.used > self.fuel {
            return Err(OracleError::SearchBudgetExceeded {
                fuel: self.fuel,
                goal: goal.clone(),
            });
        }
        let mut hyps = match self.saturate(hyps, goal) {
            Saturated::Closed(t) => return Ok(Some(t)),
            Saturated::Open(h) => h,
        };

        if let Some((e, _)) = hyps.iter().find(|(_, f)| f == goal) {
            return Ok(Some(e.clone()));
        }

        // Invertible right rules.
        match goal {
            Formula::Impl(a, b) => {
                let a = (**a).clone();
                return self.lam(&a.clone(), |s, x| {
                    let mut hyps = hyps;
                    hyps.push((x, a));
                    s.sequent(hyps, b)
                });
            }
            Formula::Conj(a, b) => {
                let Some(l) = self.sequent(hyps.clone(), a)? else { return Ok(None) };
                let Some(r) = self.sequent(hyps, b)? else { return Ok(None) };
                return Ok(Some(Term::pair(l, r)));
            }
            _ => {}
        }

        // Invertible left rule for disjunction.
        if let Some(i) = hyps.iter().position(|(_, f)| matches!(f, Formula::Disj(..))) {
            let (e, f) = hyps.remove(i);
            let Formula::Disj(a, b) = f else { unreachable!() };
            let y = self.fresh();
            let mut left = hyps.clone();
            left.push((Term::var(y.clone()), *a));
            let Some(l) = self.sequent(left, goal)? else { return Ok(None) };
            let mut right = hyps;
            right.push((Term::var(y.clone()), *b));
            let Some(r) = self.sequent(right, goal)? else { return Ok(None) };
            return Ok(Some(Term::case(e, y, l, r)));
        }

        // Non-invertible: right disjunction.
        if let Formula::Disj(a, b) = goal {
            if let Some(t) = self.sequent(hyps.clone(), a)? {
                return Ok(Some(Term::inj(Side::Left, (**b).clone(), t)));
            }
            if let Some(t) = self.sequent(hyps.clone(), b)? {
                return Ok(Some(Term::inj(Side::Right, (**a).clone(), t)));
            }
        }

        // Non-invertible: implication whose antecedent is an implication.
        for i in 0..hyps.len() {
            let Formula::Impl(cd, b) = &hyps[i].1 else { continue };
            let Formula::Impl(c, d) = &**cd else { continue };
            let (c, d, b) = ((**c).clone(), (**d).clone(), (**b).clone());
            let e = hyps[i].0.clone();
            let mut rest = hyps.clone();
            rest.remove(i);

            // D -> B, proved by  fun d => e (fun c => d).
            let dn = self.fresh();
            let cn = self.fresh();
            let d_to_b = Term::lam(
                dn.clone(),
                d.clone(),
                Term::app(e.clone(), Term::lam(cn, c.clone(), Term::var(dn))),
            );
            let mut first = rest.clone();
            first.push((d_to_b, Formula::implies(d.clone(), b.clone())));
            let Some(k) = self.sequent(first, &Formula::implies(c, d))? else { continue };
            let mut second = rest;
            second.push((Term::app(e, k), b));
            if let Some(t) = self.sequent(second, goal)? {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Applies the invertible left rules other than disjunction until none
    /// applies.
    fn saturate(&mut self, hyps: Vec<Hyp>, goal: &Formula) -> Saturated {
        let mut done: Vec<Hyp> = Vec::new();
        let mut todo = hyps;
        while let Some((e, f)) = todo.pop() {
            match f {
                Formula::Falsum => return Saturated::Closed(Term::exfalso(goal.clone(), e)),
                Formula::Conj(a, b) => {
                    todo.push((Term::proj(Side::Left, e.clone()), *a));
                    todo.push((Term::proj(Side::Right, e), *b));
                }
                Formula::Impl(a, b) => match *a {
                    Formula::Falsum => {}
                    Formula::Atom(ref p) => {
                        let present = done
                            .iter()
                            .chain(todo.iter())
                            .find(|(_, g)| matches!(g, Formula::Atom(q) if q == p))
                            .map(|(t, _)| t.clone());
                        match present {
                            Some(arg) => todo.push((Term::app(e, arg), *b)),
                            None => done.push((e, Formula::Impl(a, b))),
                        }
                    }
                    Formula::Conj(c, d) => {
                        let (cn, dn) = (self.fresh(), self.fresh());
                        let body = Term::app(e, Term::pair(Term::var(cn.clone()), Term::var(dn.clone())));
                        let t = Term::lam(cn, (*c).clone(), Term::lam(dn, (*d).clone(), body));
                        todo.push((t, Formula::implies(*c, Formula::implies(*d, *b))));
                    }
                    Formula::Disj(c, d) => {
                        let (cn, dn) = (self.fresh(), self.fresh());
                        let left = Term::lam(
                            cn.clone(),
                            (*c).clone(),
                            Term::app(e.clone(), Term::inj(Side::Left, (*d).clone(), Term::var(cn))),
                        );
                        let right = Term::lam(
                            dn.clone(),
                            (*d).clone(),
                            Term::app(e, Term::inj(Side::Right, (*c).clone(), Term::var(dn))),
                        );
                        todo.push((left, Formula::implies((*c).clone(), (*b).clone())));
                        todo.push((right, Formula::implies(*d, *b)));
                    }
                    Formula::Impl(..) => done.push((e, Formula::Impl(a, b))),
                },
                Formula::Atom(ref p) => {
                    // Release implications waiting for this atom.
                    let (ready, waiting): (Vec<Hyp>, Vec<Hyp>) = done
                        .into_iter()
                        .partition(|(_, g)| matches!(g, Formula::Impl(a, _) if matches!(&**a, Formula::Atom(q) if q == p)));
                    done = waiting;
                    for (h, g) in ready {
                        let Formula::Impl(_, b) = g else { unreachable!() };
                        todo.push((Term::app(h, e.clone()), *b));
                    }
                    done.push((e, f));
                }
                Formula::Disj(..) => done.push((e, f)),
            }
        }
        Saturated::Open(done)
    }
}

enum Saturated {
    Closed(Term),
    Open(Vec<Hyp>),
}
