//! Concrete syntax for formulas, terms and `.vkp` proof scripts.
//!
//! Formulas: atoms, `False`, `~A` (sugar for `A -> False`), `/\`, `\/` and
//! `->`, binding in that order from tightest to loosest; all binary
//! connectives associate to the right.
//!
//! Terms:
//!
//! ```text
//! fun (x : A) => t        t s                (t, s)
//! proj1 t   proj2 t       inj1[B] t          inj2[B] t         exfalso[A] t
//! case t of { y => s1 | y => s2 }
//! hop (x : ~B). t of { y => s1 | y => s2 }
//! visser (x1 : B1 -> C1, .., xn : Bn -> Cn). t of { y => s1 | y => s2 | z => u1 | .. | z => un }
//! ```
//!
//! The annotation on `injI[B]` is the other disjunct; the one on
//! `exfalso[A]` is the formula being concluded.

mod lexer;
mod print;
mod script;

use std::fmt;

pub use lexer::Position;
use lexer::{tokenize, Token};
pub use print::Erased;
pub use script::{parse_script, Declaration, ProofScript};

use crate::syntax::{Formula, HarropNode, Term, VisserNode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}:{}: {kind}", .position.line, .position.column)]
pub struct ParseError {
    pub position: Position,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(position: Position, kind: ParseErrorKind) -> Self {
        Self { position, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected {found}, expected {}", .expected.join(", "))]
    Unexpected { found: String, expected: Vec<String> },
    #[error("invalid character `{0}`")]
    InvalidCharacter(char),
    #[error("visser binds {binders} hypotheses but has {branches} application branches")]
    ArityMismatch { binders: usize, branches: usize },
    #[error("branches must bind the same name (`{first}` vs `{second}`)")]
    BinderMismatch { first: String, second: String },
    #[error("visser binds `{0}` twice")]
    DuplicateBinder(String),
    #[error("duplicate definition `{0}`")]
    DuplicateDefinition(String),
    #[error("unknown calculus `{0}` (expected IPC, V or KP)")]
    UnknownCalculus(String),
}

pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(input)?;
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(input)?;
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

pub(crate) struct Parser {
    tokens: Vec<(Token, Position)>,
    index: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    pub(crate) fn new(input: &str) -> PResult<Self> {
        Ok(Self {
            tokens: tokenize(input)?,
            index: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.index].0
    }

    fn position(&self) -> Position {
        self.tokens[self.index].1
    }

    fn advance(&mut self) -> Token {
        let tok = self.tokens[self.index].0.clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        tok
    }

    fn unexpected<T>(&self, expected: &[&str]) -> PResult<T> {
        let mut expected: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        expected.sort();
        expected.dedup();
        Err(ParseError::new(
            self.position(),
            ParseErrorKind::Unexpected {
                found: self.peek().to_string(),
                expected,
            },
        ))
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Token) -> PResult<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.unexpected(&[&tok.to_string()])
        }
    }

    fn expect_eof(&mut self) -> PResult<()> {
        self.expect(Token::Eof)
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Token::Ident(name) => {
                let name = name.clone();
                self.advance();
                Ok(name)
            }
            _ => self.unexpected(&["identifier"]),
        }
    }

    pub(crate) fn formula(&mut self) -> PResult<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Arrow) {
            Ok(Formula::implies(lhs, self.formula()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let lhs = self.conjunction()?;
        if self.eat(&Token::Or) {
            Ok(Formula::or(lhs, self.disjunction()?))
        } else {
            Ok(lhs)
        }
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let lhs = self.unary_formula()?;
        if self.eat(&Token::And) {
            Ok(Formula::and(lhs, self.conjunction()?))
        } else {
            Ok(lhs)
        }
    }

    fn unary_formula(&mut self) -> PResult<Formula> {
        match self.peek() {
            Token::Tilde => {
                self.advance();
                Ok(Formula::negation(self.unary_formula()?))
            }
            Token::False => {
                self.advance();
                Ok(Formula::Falsum)
            }
            Token::Ident(_) => Ok(Formula::Atom(self.ident()?)),
            Token::LParen => {
                self.advance();
                let f = self.formula()?;
                self.expect(Token::RParen)?;
                Ok(f)
            }
            _ => self.unexpected(&["identifier", "`False`", "`~`", "`(`"]),
        }
    }

    fn bracketed_formula(&mut self) -> PResult<Formula> {
        self.expect(Token::LBracket)?;
        let f = self.formula()?;
        self.expect(Token::RBracket)?;
        Ok(f)
    }

    pub(crate) fn term(&mut self) -> PResult<Term> {
        if self.eat(&Token::Fun) {
            let mut binders = Vec::new();
            loop {
                self.expect(Token::LParen)?;
                let x = self.ident()?;
                self.expect(Token::Colon)?;
                let a = self.formula()?;
                self.expect(Token::RParen)?;
                binders.push((x, a));
                if self.peek() != &Token::LParen {
                    break;
                }
            }
            self.expect(Token::FatArrow)?;
            let body = self.term()?;
            return Ok(Term::lams(&binders, body));
        }
        self.application()
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Token::Ident(_) | Token::LParen | Token::Case | Token::Hop | Token::Visser
        )
    }

    fn application(&mut self) -> PResult<Term> {
        let mut head = self.prefixed()?;
        while self.starts_atom() {
            let arg = self.atom()?;
            head = Term::app(head, arg);
        }
        Ok(head)
    }

    fn prefixed(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Token::Proj(side) => {
                self.advance();
                Ok(Term::proj(side, self.prefixed()?))
            }
            Token::Inj(side) => {
                self.advance();
                let other = self.bracketed_formula()?;
                Ok(Term::inj(side, other, self.prefixed()?))
            }
            Token::Exfalso => {
                self.advance();
                let target = self.bracketed_formula()?;
                Ok(Term::exfalso(target, self.prefixed()?))
            }
            _ if self.starts_atom() => self.atom(),
            _ => self.unexpected(&[
                "identifier",
                "`(`",
                "`fun`",
                "`case`",
                "`hop`",
                "`visser`",
                "`proj1`",
                "`proj2`",
                "`inj1`",
                "`inj2`",
                "`exfalso`",
            ]),
        }
    }

    fn atom(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Token::Ident(_) => Ok(Term::Var(self.ident()?)),
            Token::LParen => {
                self.advance();
                let t = self.term()?;
                if self.eat(&Token::Comma) {
                    let s = self.term()?;
                    self.expect(Token::RParen)?;
                    return Ok(Term::pair(t, s));
                }
                if self.eat(&Token::RParen) {
                    return Ok(t);
                }
                self.unexpected(&["`,`", "`)`"])
            }
            Token::Case => {
                self.advance();
                let scrutinee = self.term()?;
                self.expect(Token::Of)?;
                let (y, left, right) = self.two_branches(true)?;
                Ok(Term::case(scrutinee, y, left, right))
            }
            Token::Hop => {
                self.advance();
                self.expect(Token::LParen)?;
                let binder = self.ident()?;
                self.expect(Token::Colon)?;
                let annot = self.formula()?;
                self.expect(Token::RParen)?;
                self.expect(Token::Dot)?;
                let main = self.term()?;
                self.expect(Token::Of)?;
                let (case_binder, left, right) = self.two_branches(true)?;
                Ok(Term::harrop(HarropNode {
                    binder,
                    annot,
                    main,
                    case_binder,
                    left,
                    right,
                }))
            }
            Token::Visser => self.visser(),
            _ => self.unexpected(&["identifier", "`(`", "`case`", "`hop`", "`visser`"]),
        }
    }

    fn branch(&mut self) -> PResult<(String, Position, Term)> {
        let pos = self.position();
        let name = self.ident()?;
        self.expect(Token::FatArrow)?;
        Ok((name, pos, self.term()?))
    }

    /// `{ y => s1 | y => s2` and, when `close` is set, the closing brace.
    fn two_branches(&mut self, close: bool) -> PResult<(String, Term, Term)> {
        self.expect(Token::LBrace)?;
        let (y, _, left) = self.branch()?;
        self.expect(Token::Bar)?;
        let (y2, pos, right) = self.branch()?;
        if y != y2 {
            return Err(ParseError::new(
                pos,
                ParseErrorKind::BinderMismatch { first: y, second: y2 },
            ));
        }
        if close {
            self.expect(Token::RBrace)?;
        }
        Ok((y, left, right))
    }

    fn visser(&mut self) -> PResult<Term> {
        let start = self.position();
        self.expect(Token::Visser)?;
        self.expect(Token::LParen)?;
        let mut binders: Vec<(String, Formula)> = Vec::new();
        loop {
            let pos = self.position();
            let x = self.ident()?;
            if binders.iter().any(|(b, _)| *b == x) {
                return Err(ParseError::new(pos, ParseErrorKind::DuplicateBinder(x)));
            }
            self.expect(Token::Colon)?;
            binders.push((x, self.formula()?));
            if !self.eat(&Token::Comma) {
                break;
            }
        }
        self.expect(Token::RParen)?;
        self.expect(Token::Dot)?;
        let main = self.term()?;
        self.expect(Token::Of)?;
        let (case_binder, left, right) = self.two_branches(false)?;
        let mut app_binder: Option<String> = None;
        let mut apps = Vec::new();
        while self.eat(&Token::Bar) {
            let (z, pos, u) = self.branch()?;
            match &app_binder {
                Some(first) if *first != z => {
                    return Err(ParseError::new(
                        pos,
                        ParseErrorKind::BinderMismatch {
                            first: first.clone(),
                            second: z,
                        },
                    ))
                }
                Some(_) => {}
                None => app_binder = Some(z),
            }
            apps.push(u);
        }
        if self.peek() != &Token::RBrace {
            return self.unexpected(&["`|`", "`}`"]);
        }
        if apps.len() != binders.len() {
            return Err(ParseError::new(
                start,
                ParseErrorKind::ArityMismatch {
                    binders: binders.len(),
                    branches: apps.len(),
                },
            ));
        }
        self.advance();
        Ok(Term::visser(VisserNode {
            binders,
            main,
            case_binder,
            left,
            right,
            app_binder: app_binder.expect("at least one binder"),
            apps,
        }))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[cfg(test)]
mod tests;
