use std::collections::BTreeMap;
use std::fmt;

use crate::syntax::Formula;

/// A finite rooted Kripke model. World 0 is the root; `up[w]` is the bitmask
/// of worlds `v` with `w ≤ v`, and `valuation[p]` the bitmask of worlds
/// where the atom `p` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    pub worlds: usize,
    pub up: Vec<u64>,
    pub valuation: BTreeMap<String, u64>,
}

fn bit(w: usize) -> u64 {
    1u64 << w
}

impl KripkeModel {
    /// Forcing `w ⊩ f`, evaluated directly from the definition.
    pub fn forces(&self, w: usize, f: &Formula) -> bool {
        match f {
            Formula::Atom(p) => self.valuation.get(p).is_some_and(|m| m & bit(w) != 0),
            Formula::Falsum => false,
            Formula::Conj(a, b) => self.forces(w, a) && self.forces(w, b),
            Formula::Disj(a, b) => self.forces(w, a) || self.forces(w, b),
            Formula::Impl(a, b) => (0..self.worlds)
                .filter(|&v| self.le(w, v))
                .all(|v| !self.forces(v, a) || self.forces(v, b)),
        }
    }

    pub fn le(&self, w: usize, v: usize) -> bool {
        self.up[w] & bit(v) != 0
    }

    /// Reflexive, antisymmetric, transitive, rooted at 0.
    pub fn is_rooted_partial_order(&self) -> bool {
        let n = self.worlds;
        if n == 0 || n > 64 || self.up.len() != n {
            return false;
        }
        let all = (0..n).all(|w| self.le(w, w) && self.le(0, w));
        let antisym = (0..n).all(|w| (0..n).all(|v| w == v || !(self.le(w, v) && self.le(v, w))));
        let trans = (0..n).all(|u| (0..n).all(|v| (0..n).all(|w| !(self.le(u, v) && self.le(v, w)) || self.le(u, w))));
        all && antisym && trans
    }

    /// Every atom valuation is upward closed.
    pub fn valuation_is_monotone(&self) -> bool {
        self.valuation
            .values()
            .all(|&m| (0..self.worlds).all(|w| m & bit(w) == 0 || m & self.up[w] == self.up[w]))
    }

    /// Forcing of `f` is upward closed, checked for `f` and all its
    /// subformulas.
    pub fn forcing_is_monotone(&self, f: &Formula) -> bool {
        let here = (0..self.worlds).all(|w| {
            !self.forces(w, f) || (0..self.worlds).filter(|&v| self.le(w, v)).all(|v| self.forces(v, f))
        });
        here && match f {
            Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => {
                self.forcing_is_monotone(a) && self.forcing_is_monotone(b)
            }
            _ => true,
        }
    }

    /// The model is well formed and its root does not force `f`.
    pub fn refutes(&self, f: &Formula) -> bool {
        self.is_rooted_partial_order() && self.valuation_is_monotone() && self.forcing_is_monotone(f) && !self.forces(0, f)
    }

    /// Immediate successors of `w`.
    pub fn successors(&self, w: usize) -> Vec<usize> {
        (0..self.worlds)
            .filter(|&v| v != w && self.le(w, v))
            .filter(|&v| !(0..self.worlds).any(|u| u != w && u != v && self.le(w, u) && self.le(u, v)))
            .collect()
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "worlds: {} (root w0)", self.worlds)?;
        for w in 0..self.worlds {
            let succ: Vec<String> = self.successors(w).iter().map(|v| format!("w{v}")).collect();
            let atoms: Vec<&str> = self
                .valuation
                .iter()
                .filter(|(_, &m)| m & bit(w) != 0)
                .map(|(p, _)| p.as_str())
                .collect();
            writeln!(
                f,
                "  w{w} -> [{}]  forces {{{}}}",
                succ.join(", "),
                atoms.join(", ")
            )?;
        }
        Ok(())
    }
}

/// Rooted partial orders on `n` worlds, root 0, labelled so that `w ≤ v`
/// implies `w ≤ v` as numbers. Returned as `up` masks.
fn rooted_orders(n: usize) -> Vec<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for subset in 0u64..(1u64 << pairs.len()) {
        let mut up: Vec<u64> = (0..n).map(bit).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if subset & (1 << k) != 0 {
                up[i] |= bit(j);
            }
        }
        // Transitive iff composing never adds anything.
        let transitive = (1..n).all(|i| {
            let reach = (0..n).filter(|&j| up[i] & bit(j) != 0).fold(0, |acc, j| acc | up[j]);
            reach == up[i]
        });
        if transitive {
            up[0] = (1u64 << n) - 1;
            out.push(up);
        }
    }
    out
}

fn up_sets(up: &[u64]) -> Vec<u64> {
    let n = up.len();
    (0u64..(1u64 << n))
        .filter(|&m| (0..n).all(|w| m & bit(w) == 0 || m & up[w] == up[w]))
        .collect()
}

/// Forcing sets computed bottom-up on bitmasks.
struct Evaluator<'a> {
    up: &'a [u64],
    all: u64,
}

impl Evaluator<'_> {
    fn eval(&self, f: &Formula, atoms: &[(String, u64)]) -> u64 {
        match f {
            Formula::Atom(p) => atoms.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m),
            Formula::Falsum => 0,
            Formula::Conj(a, b) => self.eval(a, atoms) & self.eval(b, atoms),
            Formula::Disj(a, b) => self.eval(a, atoms) | self.eval(b, atoms),
            Formula::Impl(a, b) => {
                let a = self.eval(a, atoms);
                let b = self.eval(b, atoms);
                let bad = a & !b;
                (0..self.up.len()).filter(|&w| self.up[w] & bad == 0).fold(0, |acc, w| acc | bit(w)) & self.all
            }
        }
    }
}

/// Searches rooted models of up to `max_worlds` worlds (at most 6 is
/// practical) for one whose root does not force `f`. Smaller models are
/// tried first.
pub fn find_countermodel(f: &Formula, max_worlds: usize) -> Option<KripkeModel> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    for n in 1..=max_worlds.min(16) {
        for up in rooted_orders(n) {
            let ups = up_sets(&up);
            let eval = Evaluator {
                up: &up,
                all: (1u64 << n) - 1,
            };
            let mut choice = vec![0usize; atoms.len()];
            loop {
                let val: Vec<(String, u64)> = atoms.iter().cloned().zip(choice.iter().map(|&i| ups[i])).collect();
                if eval.eval(f, &val) & 1 == 0 {
                    return Some(KripkeModel {
                        worlds: n,
                        up,
                        valuation: val.into_iter().collect(),
                    });
                }
                // Odometer over valuations.
                let mut k = 0;
                loop {
                    if k == choice.len() {
                        break;
                    }
                    choice[k] += 1;
                    if choice[k] < ups.len() {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == choice.len() {
                    break;
                }
            }
        }
    }
    None
}
