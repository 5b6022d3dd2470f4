//! Weak head contexts and the decomposition of disjunction proofs.

use crate::syntax::{Formula, HarropNode, Side, Term};

/// One layer of a weak head IPC context `W ::= □ | W t | proj_i W | case W of ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frame {
    Arg(Term),
    Proj(Side),
    Case { binder: String, left: Term, right: Term },
}

impl Frame {
    fn plug(&self, t: Term) -> Term {
        match self {
            Frame::Arg(a) => Term::app(t, a.clone()),
            Frame::Proj(side) => Term::proj(*side, t),
            Frame::Case { binder, left, right } => Term::case(t, binder.clone(), left.clone(), right.clone()),
        }
    }
}

/// A weak head IPC context; `frames[0]` is the outermost layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WContext {
    pub frames: Vec<Frame>,
}

impl WContext {
    pub fn hole() -> Self {
        Self::default()
    }

    pub fn is_hole(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn plug(&self, t: Term) -> Term {
        self.frames.iter().rev().fold(t, |acc, frame| frame.plug(acc))
    }
}

/// A layer of a weak head KP context: a W layer, or the main premise of `hop`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KFrame {
    W(Frame),
    HarropMain {
        binder: String,
        annot: Formula,
        case_binder: String,
        left: Term,
        right: Term,
    },
}

/// A weak head KP context; `frames[0]` is the outermost layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KContext {
    pub frames: Vec<KFrame>,
}

impl KContext {
    pub fn hole() -> Self {
        Self::default()
    }

    pub fn plug(&self, t: Term) -> Term {
        self.frames.iter().rev().fold(t, |acc, frame| match frame {
            KFrame::W(w) => w.plug(acc),
            KFrame::HarropMain {
                binder,
                annot,
                case_binder,
                left,
                right,
            } => Term::harrop(HarropNode {
                binder: binder.clone(),
                annot: annot.clone(),
                main: acc,
                case_binder: case_binder.clone(),
                left: left.clone(),
                right: right.clone(),
            }),
        })
    }

    /// Splits `t` along the K-path `path` (each step must enter the function
    /// of an application, the argument of a projection, the scrutinee of a
    /// case or the main premise of `hop`).
    pub fn split<'a>(t: &'a Term, path: &[usize]) -> Option<(KContext, &'a Term)> {
        let mut frames = Vec::new();
        let mut node = t;
        for &i in path {
            if i != 0 {
                return None;
            }
            let (frame, next) = match node {
                Term::App(f, a) => (KFrame::W(Frame::Arg((**a).clone())), &**f),
                Term::Proj(side, a) => (KFrame::W(Frame::Proj(*side)), &**a),
                Term::Case {
                    scrutinee,
                    binder,
                    left,
                    right,
                } => (
                    KFrame::W(Frame::Case {
                        binder: binder.clone(),
                        left: (**left).clone(),
                        right: (**right).clone(),
                    }),
                    &**scrutinee,
                ),
                Term::Harrop(h) => (
                    KFrame::HarropMain {
                        binder: h.binder.clone(),
                        annot: h.annot.clone(),
                        case_binder: h.case_binder.clone(),
                        left: h.left.clone(),
                        right: h.right.clone(),
                    },
                    &h.main,
                ),
                _ => return None,
            };
            frames.push(frame);
            node = next;
        }
        Some((KContext { frames }, node))
    }
}

/// The shape of a disjunction proof as seen by the Visser and Harrop rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `inj_i payload`, at the very top.
    IsInjection(Side, Term),
    /// `W⟨exfalso payload⟩`.
    EfqUnderW(WContext, Term),
    /// `W⟨x first_arg⟩`; further arguments of `x` belong to `W`.
    VarAppUnderW(WContext, String, Term),
    NotDecomposable,
}

/// Borrowed form of [`Decomposition`] without the context.
#[derive(Clone, Copy, Debug)]
pub(crate) enum HeadShape<'a> {
    Injection(Side, &'a Term),
    Efq(&'a Term),
    VarApp(&'a str, &'a Term),
    Other,
}

pub(crate) fn head_shape(t: &Term) -> HeadShape<'_> {
    if let Term::Inj { side, arg, .. } = t {
        return HeadShape::Injection(*side, arg);
    }
    let mut node = t;
    let mut innermost_arg: Option<&Term> = None;
    loop {
        match node {
            Term::App(f, a) => {
                innermost_arg = Some(a);
                node = f;
            }
            Term::Proj(_, a) => {
                innermost_arg = None;
                node = a;
            }
            Term::Case { scrutinee, .. } => {
                innermost_arg = None;
                node = scrutinee;
            }
            Term::Exfalso { arg, .. } => return HeadShape::Efq(arg),
            Term::Var(x) => {
                return match innermost_arg {
                    Some(a) => HeadShape::VarApp(x, a),
                    None => HeadShape::Other,
                }
            }
            _ => return HeadShape::Other,
        }
    }
}

/// Walks the weak head spine of `t` (function of an application, argument of
/// a projection, scrutinee of a case).
pub fn decompose(t: &Term) -> Decomposition {
    if let Term::Inj { side, arg, .. } = t {
        return Decomposition::IsInjection(*side, (**arg).clone());
    }
    let mut frames = Vec::new();
    let mut node = t;
    loop {
        match node {
            Term::App(f, a) => {
                frames.push(Frame::Arg((**a).clone()));
                node = f;
            }
            Term::Proj(side, a) => {
                frames.push(Frame::Proj(*side));
                node = a;
            }
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => {
                frames.push(Frame::Case {
                    binder: binder.clone(),
                    left: (**left).clone(),
                    right: (**right).clone(),
                });
                node = scrutinee;
            }
            Term::Exfalso { arg, .. } => return Decomposition::EfqUnderW(WContext { frames }, (**arg).clone()),
            Term::Var(x) => {
                return match frames.pop() {
                    Some(Frame::Arg(first)) => Decomposition::VarAppUnderW(WContext { frames }, x.clone(), first),
                    _ => Decomposition::NotDecomposable,
                }
            }
            _ => return Decomposition::NotDecomposable,
        }
    }
}
