use std::fmt;

use super::{ParseError, ParseErrorKind};
use crate::syntax::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Fun,
    Case,
    Of,
    Proj(Side),
    Inj(Side),
    Exfalso,
    Hop,
    Visser,
    Def,
    Calculus,
    False,
    Tilde,
    Arrow,
    And,
    Or,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Colon,
    ColonEq,
    Comma,
    Dot,
    FatArrow,
    Bar,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::Ident(name) => return write!(f, "identifier `{name}`"),
            Token::Fun => "`fun`",
            Token::Case => "`case`",
            Token::Of => "`of`",
            Token::Proj(Side::Left) => "`proj1`",
            Token::Proj(Side::Right) => "`proj2`",
            Token::Inj(Side::Left) => "`inj1`",
            Token::Inj(Side::Right) => "`inj2`",
            Token::Exfalso => "`exfalso`",
            Token::Hop => "`hop`",
            Token::Visser => "`visser`",
            Token::Def => "`def`",
            Token::Calculus => "`calculus`",
            Token::False => "`False`",
            Token::Tilde => "`~`",
            Token::Arrow => "`->`",
            Token::And => "`/\\`",
            Token::Or => "`\\/`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::LBracket => "`[`",
            Token::RBracket => "`]`",
            Token::LBrace => "`{`",
            Token::RBrace => "`}`",
            Token::Colon => "`:`",
            Token::ColonEq => "`:=`",
            Token::Comma => "`,`",
            Token::Dot => "`.`",
            Token::FatArrow => "`=>`",
            Token::Bar => "`|`",
            Token::Eof => "end of input",
        };
        f.write_str(s)
    }
}

fn keyword(word: &str) -> Option<Token> {
    Some(match word {
        "fun" => Token::Fun,
        "case" => Token::Case,
        "of" => Token::Of,
        "proj1" => Token::Proj(Side::Left),
        "proj2" => Token::Proj(Side::Right),
        "inj1" => Token::Inj(Side::Left),
        "inj2" => Token::Inj(Side::Right),
        "exfalso" => Token::Exfalso,
        "hop" => Token::Hop,
        "visser" => Token::Visser,
        "def" => Token::Def,
        "calculus" => Token::Calculus,
        "False" => Token::False,
        _ => return None,
    })
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

pub fn tokenize(input: &str) -> Result<Vec<(Token, Position)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let mut pos = Position { line: 1, column: 1 };

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                pos.line += 1;
                pos.column = 1;
            } else if c.is_some() {
                pos.column += 1;
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if is_ident_start(c) {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_continue(c) {
                    break;
                }
                word.push(c);
                bump!();
            }
            out.push((keyword(&word).unwrap_or(Token::Ident(word)), start));
            continue;
        }
        bump!();
        let tok = match c {
            '-' => match chars.peek() {
                Some('>') => {
                    bump!();
                    Token::Arrow
                }
                Some('-') => {
                    while let Some(&c) = chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        bump!();
                    }
                    continue;
                }
                _ => return Err(ParseError::new(start, ParseErrorKind::InvalidCharacter('-'))),
            },
            '/' if chars.peek() == Some(&'\\') => {
                bump!();
                Token::And
            }
            '\\' if chars.peek() == Some(&'/') => {
                bump!();
                Token::Or
            }
            '=' if chars.peek() == Some(&'>') => {
                bump!();
                Token::FatArrow
            }
            ':' if chars.peek() == Some(&'=') => {
                bump!();
                Token::ColonEq
            }
            ':' => Token::Colon,
            '~' => Token::Tilde,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            '{' => Token::LBrace,
            '}' => Token::RBrace,
            ',' => Token::Comma,
            '.' => Token::Dot,
            '|' => Token::Bar,
            other => return Err(ParseError::new(start, ParseErrorKind::InvalidCharacter(other))),
        };
        out.push((tok, start));
    }
    out.push((Token::Eof, pos));
    Ok(out)
}
