#![allow(dead_code)]

use proptest::prelude::any;
use proptest::strategy::{NewTree, Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use vkp_core::oracle::{shrink, GenConfig, Generator, Sample};
use vkp_core::{parse_formula, Formula};

/// Generated samples as a proptest strategy. Shrinking walks the
/// type-preserving candidates of [`shrink`].
#[derive(Clone, Debug)]
pub struct Samples(pub GenConfig);

impl Strategy for Samples {
    type Tree = SampleTree;
    type Value = Sample;

    fn new_tree(&self, runner: &mut TestRunner) -> NewTree<Self> {
        let generator = Generator::new(self.0.clone());
        for _ in 0..50 {
            let seed = any::<u64>().new_tree(runner)?.current();
            if let Ok(sample) = generator.sample(seed) {
                return Ok(SampleTree::new(sample));
            }
        }
        Err("generator kept failing".into())
    }
}

pub struct SampleTree {
    current: Sample,
    candidates: Vec<Sample>,
    next: usize,
    previous: Option<(Sample, Vec<Sample>, usize)>,
}

impl SampleTree {
    fn new(sample: Sample) -> Self {
        Self {
            candidates: shrink(&sample),
            current: sample,
            next: 0,
            previous: None,
        }
    }
}

impl ValueTree for SampleTree {
    type Value = Sample;

    fn current(&self) -> Sample {
        self.current.clone()
    }

    fn simplify(&mut self) -> bool {
        let Some(candidate) = self.candidates.get(self.next).cloned() else {
            return false;
        };
        let candidates = shrink(&candidate);
        let old = std::mem::replace(&mut self.current, candidate);
        let old_candidates = std::mem::replace(&mut self.candidates, candidates);
        self.previous = Some((old, old_candidates, self.next + 1));
        self.next = 0;
        true
    }

    fn complicate(&mut self) -> bool {
        match self.previous.take() {
            Some((sample, candidates, next)) => {
                self.current = sample;
                self.candidates = candidates;
                self.next = next;
                true
            }
            None => false,
        }
    }
}

/// Theorems of intuitionistic propositional logic.
pub const TAUTOLOGIES: &[&str] = &[
    "A -> A",
    "A -> B -> A",
    "(A -> B -> C) -> (A -> B) -> A -> C",
    "A /\\ B -> A",
    "A /\\ B -> B",
    "A -> B -> A /\\ B",
    "A -> A \\/ B",
    "B -> A \\/ B",
    "(A -> C) -> (B -> C) -> A \\/ B -> C",
    "False -> A",
    "A /\\ B -> B /\\ A",
    "A \\/ B -> B \\/ A",
    "(A -> B) -> (B -> C) -> A -> C",
    "A -> ~~A",
    "~~~A -> ~A",
    "~A -> A -> B",
    "~~(A \\/ ~A)",
    "(A -> B) -> ~B -> ~A",
    "~(A \\/ B) -> ~A /\\ ~B",
    "~A /\\ ~B -> ~(A \\/ B)",
    "~A \\/ ~B -> ~(A /\\ B)",
    "(A \\/ B) /\\ C -> A /\\ C \\/ B /\\ C",
    "A /\\ C \\/ B /\\ C -> (A \\/ B) /\\ C",
    "A \\/ B /\\ C -> (A \\/ B) /\\ (A \\/ C)",
    "(A \\/ B) /\\ (A \\/ C) -> A \\/ B /\\ C",
    "(A /\\ B -> C) -> A -> B -> C",
    "(A -> B -> C) -> A /\\ B -> C",
    "(A \\/ B -> C) -> (A -> C) /\\ (B -> C)",
    "(A -> C) /\\ (B -> C) -> A \\/ B -> C",
    "(A -> B /\\ C) -> (A -> B) /\\ (A -> C)",
    "(A -> B) /\\ (A -> C) -> A -> B /\\ C",
    "(A -> B) \\/ (A -> C) -> A -> B \\/ C",
    "~~(~~A -> A)",
    "~~((A -> B) \\/ (B -> A))",
    "~~(((A -> B) -> A) -> A)",
    "(A -> B) -> (A -> ~B) -> ~A",
    "~(A /\\ ~A)",
    "A \\/ ~A -> ~~A -> A",
    "((A -> B) -> A) -> (A -> B) -> B",
    "(A -> B) -> (C -> D) -> A /\\ C -> B /\\ D",
    "(A -> B) -> (C -> D) -> A \\/ C -> B \\/ D",
    "A \\/ A -> A",
    "A -> A /\\ A",
    "A \\/ False -> A",
    "(A -> False) -> ~A",
    "(A \\/ B -> False) -> ~B",
    "(~B -> A1) \\/ (~B -> A2) -> ~B -> A1 \\/ A2",
    "~~(A /\\ B) -> ~~A /\\ ~~B",
    "~~A /\\ ~~B -> ~~(A /\\ B)",
    "~~(A -> B) -> ~~A -> ~~B",
    "(~~A -> ~~B) -> ~~(A -> B)",
    "(A -> B) -> ((A -> B) -> C) -> C",
    "((((A -> B) -> A) -> A) -> B) -> B",
    "(A -> B \\/ C) -> (B -> D) -> (C -> D) -> A -> D",
    "A /\\ (B \\/ C) -> A /\\ B \\/ A /\\ C",
    "~(A -> B) -> ~B",
    "A \\/ B -> ~A -> B",
    "(A -> B) -> ~~A -> ~~B",
];

pub fn tautologies() -> Vec<Formula> {
    TAUTOLOGIES.iter().map(|s| parse_formula(s).expect("tautology parses")).collect()
}
