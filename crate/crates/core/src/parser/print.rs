use std::fmt::{self, Display, Formatter, Write};

use crate::syntax::{Formula, Term};

// Formula precedence: higher binds tighter.
const IMPL: u8 = 0;
const DISJ: u8 = 1;
const CONJ: u8 = 2;
const UNARY: u8 = 3;

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Impl(_, rhs) if **rhs != Formula::Falsum => IMPL,
        Formula::Disj(..) => DISJ,
        Formula::Conj(..) => CONJ,
        _ => UNARY,
    }
}

fn write_formula(out: &mut Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    let parens = formula_prec(f) < min;
    if parens {
        out.write_char('(')?;
    }
    match f {
        Formula::Atom(p) => out.write_str(p)?,
        Formula::Falsum => out.write_str("False")?,
        Formula::Impl(a, b) if **b == Formula::Falsum => {
            out.write_char('~')?;
            write_formula(out, a, UNARY)?;
        }
        Formula::Impl(a, b) => {
            write_formula(out, a, DISJ)?;
            out.write_str(" -> ")?;
            write_formula(out, b, IMPL)?;
        }
        Formula::Disj(a, b) => {
            write_formula(out, a, CONJ)?;
            out.write_str(" \\/ ")?;
            write_formula(out, b, DISJ)?;
        }
        Formula::Conj(a, b) => {
            write_formula(out, a, UNARY)?;
            out.write_str(" /\\ ")?;
            write_formula(out, b, CONJ)?;
        }
    }
    if parens {
        out.write_char(')')?;
    }
    Ok(())
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_formula(f, self, IMPL)
    }
}

/// Syntactic position a term is printed in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Top,
    Head,
    Prefix,
    Arg,
}

fn term_rank(t: &Term) -> Slot {
    match t {
        Term::Abs { .. } => Slot::Top,
        Term::App(..) => Slot::Head,
        Term::Proj(..) | Term::Inj { .. } | Term::Exfalso { .. } => Slot::Prefix,
        _ => Slot::Arg,
    }
}

struct TermPrinter {
    annotations: bool,
}

impl TermPrinter {
    fn write(&self, out: &mut Formatter<'_>, t: &Term, slot: Slot) -> fmt::Result {
        let parens = term_rank(t) < slot;
        if parens {
            out.write_char('(')?;
        }
        self.write_bare(out, t)?;
        if parens {
            out.write_char(')')?;
        }
        Ok(())
    }

    fn annot(&self, out: &mut Formatter<'_>, f: &Formula) -> fmt::Result {
        if self.annotations {
            write!(out, "[{f}]")?;
        }
        Ok(())
    }

    fn binder(&self, out: &mut Formatter<'_>, x: &str, f: &Formula) -> fmt::Result {
        if self.annotations {
            write!(out, "{x} : {f}")
        } else {
            out.write_str(x)
        }
    }

    fn branches(&self, out: &mut Formatter<'_>, arms: &[(&str, &Term)]) -> fmt::Result {
        out.write_str("{ ")?;
        for (i, (y, body)) in arms.iter().enumerate() {
            if i > 0 {
                out.write_str(" | ")?;
            }
            write!(out, "{y} => ")?;
            self.write(out, body, Slot::Top)?;
        }
        out.write_str(" }")
    }

    fn write_bare(&self, out: &mut Formatter<'_>, t: &Term) -> fmt::Result {
        match t {
            Term::Var(x) => out.write_str(x),
            Term::App(f, a) => {
                self.write(out, f, Slot::Head)?;
                out.write_char(' ')?;
                self.write(out, a, Slot::Arg)
            }
            Term::Abs { binder, annot, body } => {
                out.write_str("fun (")?;
                self.binder(out, binder, annot)?;
                out.write_str(") => ")?;
                self.write(out, body, Slot::Top)
            }
            Term::Exfalso { target, arg } => {
                out.write_str("exfalso")?;
                self.annot(out, target)?;
                out.write_char(' ')?;
                self.write(out, arg, Slot::Prefix)
            }
            Term::Pair(a, b) => {
                out.write_char('(')?;
                self.write(out, a, Slot::Top)?;
                out.write_str(", ")?;
                self.write(out, b, Slot::Top)?;
                out.write_char(')')
            }
            Term::Proj(side, arg) => {
                write!(out, "proj{} ", side.index())?;
                self.write(out, arg, Slot::Prefix)
            }
            Term::Inj { side, other, arg } => {
                write!(out, "inj{}", side.index())?;
                self.annot(out, other)?;
                out.write_char(' ')?;
                self.write(out, arg, Slot::Prefix)
            }
            Term::Case {
                scrutinee,
                binder,
                left,
                right,
            } => {
                out.write_str("case ")?;
                self.write(out, scrutinee, Slot::Top)?;
                out.write_str(" of ")?;
                self.branches(out, &[(binder, left), (binder, right)])
            }
            Term::Visser(v) => {
                out.write_str("visser (")?;
                for (i, (x, f)) in v.binders.iter().enumerate() {
                    if i > 0 {
                        out.write_str(", ")?;
                    }
                    self.binder(out, x, f)?;
                }
                out.write_str("). ")?;
                self.write(out, &v.main, Slot::Top)?;
                out.write_str(" of ")?;
                let mut arms = vec![(v.case_binder.as_str(), &v.left), (v.case_binder.as_str(), &v.right)];
                arms.extend(v.apps.iter().map(|u| (v.app_binder.as_str(), u)));
                self.branches(out, &arms)
            }
            Term::Harrop(h) => {
                out.write_str("hop (")?;
                self.binder(out, &h.binder, &h.annot)?;
                out.write_str("). ")?;
                self.write(out, &h.main, Slot::Top)?;
                out.write_str(" of ")?;
                self.branches(out, &[(&h.case_binder, &h.left), (&h.case_binder, &h.right)])
            }
        }
    }
}

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        TermPrinter { annotations: true }.write(f, self, Slot::Top)
    }
}

/// Prints a term with all formula annotations dropped, the way terms are
/// usually written on paper. The output does not re-parse.
pub struct Erased<'a>(pub &'a Term);

impl Display for Erased<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        TermPrinter { annotations: false }.write(f, self.0, Slot::Top)
    }
}
