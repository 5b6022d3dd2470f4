use super::lexer::{Position, Token};
use super::{ParseError, ParseErrorKind, Parser};
use crate::syntax::{Calculus, Formula, Term};

/// One `def name : FORMULA := TERM` entry. References to earlier
/// definitions are already inlined in `body`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declaration {
    pub name: String,
    pub claimed: Formula,
    pub body: Term,
    pub calculus: Calculus,
    pub position: Position,
}

/// A parsed `.vkp` file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub declarations: Vec<Declaration>,
}

impl ProofScript {
    pub fn get(&self, name: &str) -> Option<&Declaration> {
        self.declarations.iter().find(|d| d.name == name)
    }
}

/// Parses a script: `calculus IPC|V|KP` pragmas (applying to the
/// definitions after them, `IPC` before the first one), `def` entries, and
/// `--` comments.
pub fn parse_script(input: &str) -> Result<ProofScript, ParseError> {
    let mut p = Parser::new(input)?;
    let mut calculus = Calculus::Ipc;
    let mut script = ProofScript::default();
    loop {
        match p.peek() {
            Token::Eof => return Ok(script),
            Token::Calculus => {
                p.advance();
                let pos = p.position();
                let name = p.ident()?;
                calculus = name
                    .parse()
                    .map_err(|_| ParseError::new(pos, ParseErrorKind::UnknownCalculus(name)))?;
            }
            Token::Def => {
                p.advance();
                let position = p.position();
                let name = p.ident()?;
                if script.get(&name).is_some() {
                    return Err(ParseError::new(position, ParseErrorKind::DuplicateDefinition(name)));
                }
                p.expect(Token::Colon)?;
                let claimed = p.formula()?;
                p.expect(Token::ColonEq)?;
                let mut body = p.term()?;
                for earlier in &script.declarations {
                    if body.occurs_free(&earlier.name) {
                        body = body.substitute(&earlier.name, &earlier.body);
                    }
                }
                if !matches!(p.peek(), Token::Eof | Token::Def | Token::Calculus) {
                    return p.unexpected(&["`def`", "`calculus`", "end of input", "an argument"]);
                }
                script.declarations.push(Declaration {
                    name,
                    claimed,
                    body,
                    calculus,
                    position,
                });
            }
            _ => return p.unexpected(&["`def`", "`calculus`", "end of input"]),
        }
    }
}
