//! Random well-typed terms by goal-directed synthesis.
//!
//! A sample starts from a typing context of a chosen shape and a goal
//! formula built from provable templates, then synthesizes a proof of the
//! goal by trying rule families in random order with backtracking. Every
//! returned sample has been re-checked by the type checker.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Calculus, Formula, HarropNode, Side, Term, TypingContext, VisserNode};
use crate::typing::{check, infer, subterm_contexts};

/// Which hypotheses the free variables of a sample may have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContextShape {
    /// Closed terms.
    Empty,
    /// Up to three hypotheses of any shape.
    Arbitrary,
    /// One to three implications.
    Implicative,
    /// One to three negations.
    Negated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoalShape {
    Any,
    Disjunction,
    /// A formula reached from a hypothesis by eliminations (an atom, say),
    /// so that proofs tend to be neutral terms.
    HypothesisTarget,
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub calculus: Calculus,
    pub max_depth: usize,
    pub atom_count: usize,
    pub context: ContextShape,
    pub goal: GoalShape,
    /// Fraction of V / KP samples that must contain a Visser / Harrop node;
    /// the others contain none.
    pub extension_rate: f64,
    /// Synthesis calls per attempt.
    pub fuel: u32,
    pub attempts: u32,
}

impl GenConfig {
    pub fn new(calculus: Calculus, max_depth: usize, atom_count: usize) -> Self {
        Self {
            calculus,
            max_depth,
            atom_count: atom_count.max(1),
            context: ContextShape::Arbitrary,
            goal: GoalShape::Any,
            extension_rate: 0.3,
            fuel: 800,
            attempts: 400,
        }
    }

    pub fn context(mut self, shape: ContextShape) -> Self {
        self.context = shape;
        self
    }

    pub fn goal(mut self, shape: GoalShape) -> Self {
        self.goal = shape;
        self
    }

    pub fn extension_rate(mut self, rate: f64) -> Self {
        self.extension_rate = rate;
        self
    }
}

/// A generated judgment `ctx ⊢ term : formula` in `calculus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub calculus: Calculus,
    pub ctx: TypingContext,
    pub term: Term,
    pub formula: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("no term found after {attempts} attempts")]
    GenerationFailed { attempts: u32 },
    #[error("generator produced an invalid sample: {0}")]
    Internal(String),
}

/// One sample of the default configuration (arbitrary context, any goal).
pub fn generate_typed(calculus: Calculus, max_depth: usize, atom_count: usize, seed: u64) -> Result<Sample, GenError> {
    Generator::new(GenConfig::new(calculus, max_depth, atom_count)).sample(seed)
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub config: GenConfig,
}

impl Generator {
    pub fn new(config: GenConfig) -> Self {
        Self { config }
    }

    /// Deterministic in `seed`.
    pub fn sample(&self, seed: u64) -> Result<Sample, GenError> {
        let cfg = &self.config;
        if cfg.max_depth == 0 {
            return Err(GenError::GenerationFailed { attempts: 0 });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let has_extension = cfg.calculus != Calculus::Ipc;
        let want_extension = has_extension && rng.gen_bool(cfg.extension_rate.clamp(0.0, 1.0));
        let atoms: Vec<Formula> = (0..cfg.atom_count).map(atom_name).map(Formula::Atom).collect();
        for _ in 0..cfg.attempts {
            let mut synth = Synth {
                rng: &mut rng,
                calculus: cfg.calculus,
                atoms: &atoms,
                extensions: if want_extension { 3 } else { 0 },
                fuel: cfg.fuel,
                names: 0,
            };
            let scope = synth.context(cfg.context);
            let goal = synth.goal(cfg.goal, &scope);
            let Some(term) = synth.term(&scope, &goal, cfg.max_depth) else { continue };
            let contains = term.contains_visser() || term.contains_harrop();
            if contains != want_extension {
                continue;
            }
            let ctx: TypingContext = scope.into_iter().collect();
            if term.depth() > cfg.max_depth {
                return Err(GenError::Internal(format!("`{term}` exceeds depth {}", cfg.max_depth)));
            }
            check(&ctx, &term, &goal, cfg.calculus).map_err(|e| GenError::Internal(format!("`{term}`: {e}")))?;
            return Ok(Sample {
                calculus: cfg.calculus,
                ctx,
                term,
                formula: goal,
            });
        }
        Err(GenError::GenerationFailed { attempts: cfg.attempts })
    }
}

fn atom_name(i: usize) -> String {
    const NAMES: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];
    NAMES.get(i).map_or_else(|| format!("P{i}"), |s| s.to_string())
}

type Scope = Vec<(String, Formula)>;

fn with(scope: &Scope, name: &str, f: &Formula) -> Scope {
    let mut out = scope.clone();
    out.push((name.to_string(), f.clone()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Var,
    Intro,
    Elim,
    CaseHyp,
    Efq,
    Beta,
    ProjPair,
    CaseInj,
    Visser,
    Harrop,
}

#[derive(Clone, Debug)]
enum Elim {
    Arg(Formula),
    Proj(Side),
}

/// Elimination steps turning a proof of `f` into one of `goal`.
fn elim_path(f: &Formula, goal: &Formula, max_len: usize) -> Option<Vec<Elim>> {
    if f == goal {
        return Some(Vec::new());
    }
    if max_len == 0 {
        return None;
    }
    let (step, rest) = match f {
        Formula::Impl(a, b) => (Elim::Arg((**a).clone()), elim_path(b, goal, max_len - 1)),
        Formula::Conj(a, b) => match elim_path(a, goal, max_len - 1) {
            Some(p) => (Elim::Proj(Side::Left), Some(p)),
            None => (Elim::Proj(Side::Right), elim_path(b, goal, max_len - 1)),
        },
        _ => return None,
    };
    rest.map(|mut p| {
        p.insert(0, step);
        p
    })
}

struct Synth<'a> {
    rng: &'a mut ChaCha8Rng,
    calculus: Calculus,
    atoms: &'a [Formula],
    /// Remaining attempts at placing a Visser / Harrop node.
    extensions: u32,
    fuel: u32,
    names: u32,
}

impl Synth<'_> {
    fn fresh(&mut self, stem: &str) -> String {
        self.names += 1;
        format!("{stem}{}", self.names)
    }

    fn atom(&mut self) -> Formula {
        self.atoms.choose(self.rng).cloned().expect("at least one atom")
    }

    fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.45) {
            return if self.rng.gen_bool(0.05) { Formula::Falsum } else { self.atom() };
        }
        match self.rng.gen_range(0..10) {
            0..=3 => Formula::implies(self.formula(depth - 1), self.formula(depth - 1)),
            4..=5 => Formula::and(self.formula(depth - 1), self.formula(depth - 1)),
            6..=7 => Formula::or(self.formula(depth - 1), self.formula(depth - 1)),
            _ => Formula::negation(self.formula(depth - 1)),
        }
    }

    fn implication(&mut self) -> Formula {
        Formula::implies(self.formula(1), self.formula(1))
    }

    fn context(&mut self, shape: ContextShape) -> Scope {
        let count = match shape {
            ContextShape::Empty => 0,
            ContextShape::Arbitrary => self.rng.gen_range(0..=3),
            ContextShape::Implicative | ContextShape::Negated => self.rng.gen_range(1..=3),
        };
        (0..count)
            .map(|_| {
                let f = match shape {
                    ContextShape::Implicative => self.implication(),
                    ContextShape::Negated => Formula::negation(self.formula(1)),
                    _ => self.formula(2),
                };
                (self.fresh("h"), f)
            })
            .collect()
    }

    /// A formula with a known proof from `scope`.
    fn provable(&mut self, scope: &Scope) -> Formula {
        if !scope.is_empty() && self.rng.gen_bool(0.5) {
            return scope.choose(self.rng).map(|(_, f)| f.clone()).expect("non-empty");
        }
        let f = self.formula(1);
        Formula::implies(f.clone(), f)
    }

    fn goal(&mut self, shape: GoalShape, scope: &Scope) -> Formula {
        let f = self.formula(2);
        let x = self.formula(1);
        if shape == GoalShape::HypothesisTarget && !scope.is_empty() {
            let mut h = scope.choose(self.rng).map(|(_, f)| f.clone()).expect("non-empty");
            while let Formula::Impl(_, b) | Formula::Conj(_, b) = &h {
                if self.rng.gen_bool(0.2) {
                    break;
                }
                h = match &h {
                    Formula::Conj(a, _) if self.rng.gen_bool(0.5) => (**a).clone(),
                    _ => (**b).clone(),
                };
            }
            return h;
        }
        if shape == GoalShape::Disjunction {
            let p = self.provable(scope);
            return if self.rng.gen_bool(0.5) { Formula::or(p, x) } else { Formula::or(x, p) };
        }
        if !scope.is_empty() && self.rng.gen_bool(0.3) {
            let h = scope.choose(self.rng).map(|(_, f)| f.clone()).expect("non-empty");
            return match self.rng.gen_range(0..3) {
                0 => h,
                1 => Formula::implies(x, h),
                _ => Formula::or(h, x),
            };
        }
        match self.rng.gen_range(0..10) {
            0 => Formula::implies(f.clone(), f),
            1 => Formula::implies(f.clone(), Formula::implies(x, f)),
            2 => Formula::implies(Formula::and(f.clone(), x), f),
            3 => Formula::implies(f.clone(), Formula::or(f, x)),
            4 => {
                let fx = Formula::implies(f.clone(), x.clone());
                Formula::implies(fx.clone(), fx)
            }
            5 => Formula::implies(Formula::and(f.clone(), x.clone()), Formula::and(x, f)),
            6 => Formula::implies(f.clone(), Formula::negation(Formula::negation(f))),
            7 => Formula::implies(Formula::or(f.clone(), f.clone()), f),
            8 => Formula::implies(
                Formula::implies(x.clone(), f.clone()),
                Formula::implies(Formula::negation(f), Formula::negation(x)),
            ),
            _ => Formula::implies(
                Formula::or(f.clone(), x.clone()),
                Formula::implies(Formula::negation(f), Formula::or(x, Formula::Falsum)),
            ),
        }
    }

    /// A formula worth cutting on: usually provable from `scope`.
    fn cut_formula(&mut self, scope: &Scope) -> Formula {
        match self.rng.gen_range(0..20) {
            0..=8 if !scope.is_empty() => scope.choose(self.rng).map(|(_, f)| f.clone()).expect("non-empty"),
            0..=13 => {
                let f = self.formula(1);
                Formula::implies(f.clone(), f)
            }
            _ => self.formula(2),
        }
    }

    fn families(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Vec<Family> {
        let mut weighted: Vec<(Family, u32)> = vec![(Family::Var, 4)];
        if depth >= 2 {
            if matches!(goal, Formula::Impl(..) | Formula::Conj(..) | Formula::Disj(..)) {
                weighted.push((Family::Intro, 5));
            }
            weighted.push((Family::Elim, 4));
            if scope.iter().any(|(_, f)| matches!(f, Formula::Disj(..))) {
                weighted.push((Family::CaseHyp, 2));
            }
        }
        if depth >= 3 {
            if *goal != Formula::Falsum {
                weighted.push((Family::Efq, 1));
            }
            weighted.push((Family::Beta, 2));
            weighted.push((Family::ProjPair, 1));
            weighted.push((Family::CaseInj, 1));
            if self.extensions > 0 {
                let ext = if self.calculus == Calculus::V { Family::Visser } else { Family::Harrop };
                weighted.push((ext, 14));
            }
        }
        let mut order = Vec::with_capacity(weighted.len());
        while !weighted.is_empty() {
            let total: u32 = weighted.iter().map(|(_, w)| w).sum();
            let mut pick = self.rng.gen_range(0..total);
            let i = weighted
                .iter()
                .position(|(_, w)| {
                    if pick < *w {
                        true
                    } else {
                        pick -= w;
                        false
                    }
                })
                .expect("weights sum to total");
            order.push(weighted.swap_remove(i).0);
        }
        order
    }

    /// A term of type `goal` under `scope` with depth at most `depth`.
    fn term(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        if self.fuel == 0 || depth == 0 {
            return None;
        }
        self.fuel -= 1;
        for family in self.families(scope, goal, depth) {
            let found = match family {
                Family::Var => self.var(scope, goal),
                Family::Intro => self.intro(scope, goal, depth),
                Family::Elim => self.elim(scope, goal, depth),
                Family::CaseHyp => self.case_hyp(scope, goal, depth),
                Family::Efq => self.efq(scope, goal, depth),
                Family::Beta => self.beta(scope, goal, depth),
                Family::ProjPair => self.proj_pair(scope, goal, depth),
                Family::CaseInj => self.case_inj(scope, goal, depth),
                Family::Visser => {
                    if self.extensions == 0 {
                        continue;
                    }
                    self.extensions -= 1;
                    self.visser(scope, goal, depth)
                }
                Family::Harrop => {
                    if self.extensions == 0 {
                        continue;
                    }
                    self.extensions -= 1;
                    self.harrop(scope, goal, depth)
                }
            };
            if found.is_some() {
                return found;
            }
            if self.fuel == 0 {
                return None;
            }
        }
        None
    }

    fn var(&mut self, scope: &Scope, goal: &Formula) -> Option<Term> {
        let hits: Vec<&String> = scope.iter().filter(|(_, f)| f == goal).map(|(x, _)| x).collect();
        hits.choose(self.rng).map(|x| Term::var((*x).clone()))
    }

    fn intro(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        match goal {
            Formula::Impl(a, b) => {
                let x = self.fresh("x");
                let body = self.term(&with(scope, &x, a), b, depth - 1)?;
                Some(Term::lam(x, (**a).clone(), body))
            }
            Formula::Conj(a, b) => {
                let l = self.term(scope, a, depth - 1)?;
                let r = self.term(scope, b, depth - 1)?;
                Some(Term::pair(l, r))
            }
            Formula::Disj(a, b) => {
                let mut sides = [Side::Left, Side::Right];
                sides.shuffle(self.rng);
                for side in sides {
                    let (this, other) = side.pick((a, b), (b, a));
                    if let Some(t) = self.term(scope, this, depth - 1) {
                        return Some(Term::inj(side, (**other).clone(), t));
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// Applies eliminations to the head `head : f` so that it proves `goal`.
    fn spine(&mut self, scope: &Scope, head: Term, path: &[Elim], depth: usize) -> Option<Term> {
        let k = path.len();
        let mut t = head;
        for (i, step) in path.iter().enumerate() {
            // The node built at step i sits k - 1 - i levels below the top.
            let node_depth = depth - (k - 1 - i);
            t = match step {
                Elim::Arg(a) => Term::app(t, self.term(scope, a, node_depth - 1)?),
                Elim::Proj(side) => Term::proj(*side, t),
            };
        }
        Some(t)
    }

    fn elim(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let mut hyps: Vec<(String, Vec<Elim>)> = scope
            .iter()
            .filter_map(|(x, f)| elim_path(f, goal, depth - 1).filter(|p| !p.is_empty()).map(|p| (x.clone(), p)))
            .collect();
        hyps.shuffle(self.rng);
        for (x, path) in hyps.into_iter().take(2) {
            if let Some(t) = self.spine(scope, Term::var(x), &path, depth) {
                return Some(t);
            }
        }
        None
    }

    fn case_hyp(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let (x, a, b) = scope
            .iter()
            .filter_map(|(x, f)| f.as_disj().map(|(a, b)| (x.clone(), a.clone(), b.clone())))
            .collect::<Vec<_>>()
            .choose(self.rng)
            .cloned()?;
        let y = self.fresh("y");
        let l = self.term(&with(scope, &y, &a), goal, depth - 1)?;
        let r = self.term(&with(scope, &y, &b), goal, depth - 1)?;
        Some(Term::case(Term::var(x), y, l, r))
    }

    fn efq(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let hyps: Vec<(String, Vec<Elim>)> = scope
            .iter()
            .filter_map(|(x, f)| elim_path(f, &Formula::Falsum, depth - 2).map(|p| (x.clone(), p)))
            .collect();
        let (x, path) = hyps.choose(self.rng).cloned()?;
        let proof = self.spine(scope, Term::var(x), &path, depth - 1)?;
        Some(Term::exfalso(goal.clone(), proof))
    }

    fn beta(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let a = self.cut_formula(scope);
        let x = self.fresh("x");
        let body = self.term(&with(scope, &x, &a), goal, depth - 2)?;
        let arg = self.term(scope, &a, depth - 1)?;
        Some(Term::app(Term::lam(x, a, body), arg))
    }

    fn proj_pair(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let other = self.cut_formula(scope);
        let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let this = self.term(scope, goal, depth - 2)?;
        let that = self.term(scope, &other, depth - 2)?;
        let pair = match side {
            Side::Left => Term::pair(this, that),
            Side::Right => Term::pair(that, this),
        };
        Some(Term::proj(side, pair))
    }

    fn case_inj(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let a = self.cut_formula(scope);
        let other = self.formula(1);
        let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let payload = self.term(scope, &a, depth - 2)?;
        let y = self.fresh("y");
        let (fa, fb) = side.pick((a.clone(), other.clone()), (other.clone(), a));
        let l = self.term(&with(scope, &y, &fa), goal, depth - 1)?;
        let r = self.term(&with(scope, &y, &fb), goal, depth - 1)?;
        Some(Term::case(Term::inj(side, other, payload), y, l, r))
    }

    fn visser(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let n = self.rng.gen_range(1..=2);
        let names: Vec<String> = (0..n).map(|_| self.fresh("v")).collect();
        let mode = self.rng.gen_range(0..3);
        if mode == 2 && depth < 4 {
            return None;
        }
        let mut binders: Vec<(String, Formula)> = names.iter().map(|x| (x.clone(), self.implication())).collect();
        let j = self.rng.gen_range(0..n);
        let (main, a1, a2) = match mode {
            // Injection.
            0 => {
                let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                let this = self.provable(&binders);
                let other = self.formula(1);
                let payload = self.term(&binders, &this, depth - 2)?;
                let (a1, a2) = side.pick((this.clone(), other.clone()), (other.clone(), this));
                (Term::inj(side, other, payload), a1, a2)
            }
            // Hypothesis application: x_j : B_j -> A1 \/ A2.
            1 => {
                let others: Scope = binders.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, b)| b.clone()).collect();
                let b = self.provable(&others);
                let (a1, a2) = (self.formula(1), self.formula(1));
                binders[j].1 = Formula::implies(b.clone(), Formula::or(a1.clone(), a2.clone()));
                let arg = self.term(&binders, &b, depth - 2)?;
                (Term::app(Term::var(names[j].clone()), arg), a1, a2)
            }
            // Exfalso: x_j : B_j -> False.
            _ => {
                let others: Scope = binders.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, b)| b.clone()).collect();
                let b = self.provable(&others);
                let (a1, a2) = (self.formula(1), self.formula(1));
                binders[j].1 = Formula::negation(b.clone());
                let arg = self.term(&binders, &b, depth - 3)?;
                let main = Term::exfalso(
                    Formula::or(a1.clone(), a2.clone()),
                    Term::app(Term::var(names[j].clone()), arg),
                );
                (main, a1, a2)
            }
        };
        let y = self.fresh("y");
        let z = self.fresh("z");
        let hyp = |target: &Formula| Formula::curried(binders.iter().map(|(_, f)| f), target.clone());
        let left = self.term(&with(scope, &y, &hyp(&a1)), goal, depth - 1)?;
        let right = self.term(&with(scope, &y, &hyp(&a2)), goal, depth - 1)?;
        let mut apps = Vec::with_capacity(n);
        for (_, f) in binders.clone() {
            let (bj, _) = f.as_impl().expect("visser binders are implications");
            let bj = bj.clone();
            apps.push(self.term(&with(scope, &z, &hyp(&bj)), goal, depth - 1)?);
        }
        Some(Term::visser(VisserNode {
            binders,
            main,
            case_binder: y,
            left,
            right,
            app_binder: z,
            apps,
        }))
    }

    fn harrop(&mut self, scope: &Scope, goal: &Formula, depth: usize) -> Option<Term> {
        let x = self.fresh("n");
        let mode = self.rng.gen_range(0..3);
        let (b, main, a1, a2) = match mode {
            // Injection.
            0 => {
                let b = self.formula(1);
                let inner = with(scope, &x, &Formula::negation(b.clone()));
                let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                let this = self.provable(&inner);
                let other = self.formula(1);
                let payload = self.term(&inner, &this, depth - 2)?;
                let (a1, a2) = side.pick((this.clone(), other.clone()), (other.clone(), this));
                (b, Term::inj(side, other, payload), a1, a2)
            }
            // Exfalso: refute B with x, for a provable B.
            1 => {
                if depth < 4 {
                    return None;
                }
                let b = self.provable(scope);
                let inner = with(scope, &x, &Formula::negation(b.clone()));
                let (a1, a2) = (self.formula(1), self.formula(1));
                let arg = self.term(&inner, &b, depth - 3)?;
                let main = Term::exfalso(Formula::or(a1.clone(), a2.clone()), Term::app(Term::var(x.clone()), arg));
                (b, main, a1, a2)
            }
            // Open main premise: a hypothesis w : ~B -> A1 \/ A2 applied to x,
            // or any proof of a disjunction that may use x.
            _ => {
                let shaped: Vec<(String, Formula, Formula, Formula)> = scope
                    .iter()
                    .filter_map(|(w, f)| {
                        let (nb, d) = f.as_impl()?;
                        let b = nb.as_negation()?;
                        let (a1, a2) = d.as_disj()?;
                        Some((w.clone(), b.clone(), a1.clone(), a2.clone()))
                    })
                    .collect();
                match shaped.choose(self.rng).cloned() {
                    Some((w, b, a1, a2)) => (b, Term::app(Term::var(w), Term::var(x.clone())), a1, a2),
                    None => {
                        let b = self.formula(1);
                        let inner = with(scope, &x, &Formula::negation(b.clone()));
                        let a1 = self.provable(&inner);
                        let a2 = self.formula(1);
                        let main = self.term(&inner, &Formula::or(a1.clone(), a2.clone()), depth - 1)?;
                        (b, main, a1, a2)
                    }
                }
            }
        };
        let nb = Formula::negation(b);
        let y = self.fresh("y");
        let left = self.term(&with(scope, &y, &Formula::implies(nb.clone(), a1)), goal, depth - 1)?;
        let right = self.term(&with(scope, &y, &Formula::implies(nb.clone(), a2)), goal, depth - 1)?;
        Some(Term::harrop(HarropNode {
            binder: x,
            annot: nb,
            main,
            case_binder: y,
            left,
            right,
        }))
    }
}

/// Smaller variants of a sample that still type-check at the same formula:
/// unused hypotheses dropped, subterms replaced by a hypothesis of the same
/// type, or by one of their own subterms of the same type.
pub fn shrink(sample: &Sample) -> Vec<Sample> {
    let mut out = Vec::new();
    let free = sample.term.free_vars();
    for name in sample.ctx.names() {
        if !free.contains(name) {
            let ctx: TypingContext = sample
                .ctx
                .iter()
                .filter(|(n, _)| *n != name)
                .map(|(n, f)| (n.to_string(), f.clone()))
                .collect();
            out.push(Sample {
                ctx,
                ..sample.clone()
            });
        }
    }
    let Ok(positions) = subterm_contexts(&sample.ctx, &sample.term, sample.calculus) else {
        return out;
    };
    let size = sample.term.size();
    for (path, local) in positions {
        let Some(sub) = sample.term.at(&path) else { continue };
        let Ok(ty) = infer(&local, sub, sample.calculus) else { continue };
        let mut candidates: Vec<Term> = Vec::new();
        if !sub.is_var() {
            candidates.extend(local.iter().filter(|(_, f)| **f == ty).map(|(x, _)| Term::var(x)));
        }
        candidates.extend(sub.children().into_iter().cloned());
        for replacement in candidates {
            if infer(&local, &replacement, sample.calculus).as_ref() != Ok(&ty) {
                continue;
            }
            let mut term = sample.term.clone();
            term.replace_at(&path, replacement);
            if term.size() < size && check(&sample.ctx, &term, &sample.formula, sample.calculus).is_ok() {
                out.push(Sample {
                    term,
                    ..sample.clone()
                });
            }
        }
    }
    out
}
