//! Recursive-descent parser for the LTL text grammar.
//!
//! Precedence, tightest first:
//!   unary `!`, `X`, `F`, `G`
//!   `U`, `R`        (right-associative, one level)
//!   `&`
//!   `|`
//!   `->`, `<->`     (right-associative, one level)
//! Parentheses override. Whitespace is insignificant.

use crate::atom::AtomSet;
use crate::formula::Formula;
use crate::LtlError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    NextOp,
    EvOp,
    GlobOp,
    UntilOp,
    ReleaseOp,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: u32,
    col: u32,
}

struct Lexer<'a> {
    src: &'a [u8],
    idx: usize,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            idx: 0,
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.idx];
        self.idx += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn next_token(&mut self) -> Result<(Tok, Pos), LtlError> {
        while self.idx < self.src.len() && self.src[self.idx].is_ascii_whitespace() {
            self.bump();
        }
        let pos = self.pos();
        if self.idx >= self.src.len() {
            return Ok((Tok::Eof, pos));
        }
        let c = self.src[self.idx];
        let tok = match c {
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'!' => {
                self.bump();
                Tok::Not
            }
            b'&' => {
                self.bump();
                Tok::And
            }
            b'|' => {
                self.bump();
                Tok::Or
            }
            b'-' => {
                self.bump();
                if self.idx < self.src.len() && self.src[self.idx] == b'>' {
                    self.bump();
                    Tok::Implies
                } else {
                    return Err(LtlError::Syntax {
                        line: pos.line,
                        col: pos.col,
                        msg: "expected '->'".into(),
                    });
                }
            }
            b'<' => {
                self.bump();
                if self.idx + 1 < self.src.len()
                    && self.src[self.idx] == b'-'
                    && self.src[self.idx + 1] == b'>'
                {
                    self.bump();
                    self.bump();
                    Tok::Iff
                } else {
                    return Err(LtlError::Syntax {
                        line: pos.line,
                        col: pos.col,
                        msg: "expected '<->'".into(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.idx;
                while self.idx < self.src.len()
                    && (self.src[self.idx].is_ascii_alphanumeric() || self.src[self.idx] == b'_')
                {
                    self.bump();
                }
                let word = std::str::from_utf8(&self.src[start..self.idx]).unwrap();
                match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "X" => Tok::NextOp,
                    "F" => Tok::EvOp,
                    "G" => Tok::GlobOp,
                    "U" => Tok::UntilOp,
                    "R" => Tok::ReleaseOp,
                    _ => Tok::Ident(word.to_string()),
                }
            }
            other => {
                return Err(LtlError::Syntax {
                    line: pos.line,
                    col: pos.col,
                    msg: format!("unexpected character '{}'", other as char),
                })
            }
        };
        Ok((tok, pos))
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    cursor: usize,
    atoms: &'a AtomSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.cursor].0
    }

    fn peek_pos(&self) -> Pos {
        self.toks[self.cursor].1
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.cursor].0.clone();
        if self.cursor < self.toks.len() - 1 {
            self.cursor += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LtlError> {
        let pos = self.peek_pos();
        Err(LtlError::Syntax {
            line: pos.line,
            col: pos.col,
            msg: msg.into(),
        })
    }

    // implication level: `a -> b <-> c` parses as `a -> (b <-> c)`
    fn parse_implication(&mut self) -> Result<Formula, LtlError> {
        let lhs = self.parse_disjunction()?;
        match self.peek() {
            Tok::Implies => {
                self.advance();
                let rhs = self.parse_implication()?;
                Ok(Formula::implies(lhs, rhs))
            }
            Tok::Iff => {
                self.advance();
                let rhs = self.parse_implication()?;
                Ok(Formula::iff(lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn parse_disjunction(&mut self) -> Result<Formula, LtlError> {
        let mut lhs = self.parse_conjunction()?;
        while *self.peek() == Tok::Or {
            self.advance();
            let rhs = self.parse_conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_conjunction(&mut self) -> Result<Formula, LtlError> {
        let mut lhs = self.parse_temporal_binary()?;
        while *self.peek() == Tok::And {
            self.advance();
            let rhs = self.parse_temporal_binary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    // `U`/`R` level, right-associative: `p U q R r` is `p U (q R r)`.
    fn parse_temporal_binary(&mut self) -> Result<Formula, LtlError> {
        let lhs = self.parse_unary()?;
        match self.peek() {
            Tok::UntilOp => {
                self.advance();
                let rhs = self.parse_temporal_binary()?;
                Ok(Formula::until(lhs, rhs))
            }
            Tok::ReleaseOp => {
                self.advance();
                let rhs = self.parse_temporal_binary()?;
                Ok(Formula::release(lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn parse_unary(&mut self) -> Result<Formula, LtlError> {
        match self.peek().clone() {
            Tok::Not => {
                self.advance();
                Ok(Formula::not(self.parse_unary()?))
            }
            Tok::NextOp => {
                self.advance();
                Ok(Formula::next(self.parse_unary()?))
            }
            Tok::EvOp => {
                self.advance();
                Ok(Formula::eventually(self.parse_unary()?))
            }
            Tok::GlobOp => {
                self.advance();
                Ok(Formula::globally(self.parse_unary()?))
            }
            _ => self.parse_primary(),
        }
    }

    fn parse_primary(&mut self) -> Result<Formula, LtlError> {
        let pos = self.peek_pos();
        match self.advance() {
            Tok::True => Ok(Formula::tt()),
            Tok::False => Ok(Formula::ff()),
            Tok::Ident(name) => match self.atoms.lookup(&name) {
                Some(a) => Ok(Formula::atom(a.clone())),
                None => Err(LtlError::UnknownAtomAt {
                    line: pos.line,
                    col: pos.col,
                    name,
                }),
            },
            Tok::LParen => {
                let inner = self.parse_implication()?;
                if self.advance() != Tok::RParen {
                    self.err("expected ')'")
                } else {
                    Ok(inner)
                }
            }
            Tok::Eof => self.err("unexpected end of input"),
            other => self.err(format!("unexpected token {:?}", other)),
        }
    }
}

/// Parses `text` against the declared atom set.
pub fn parse(text: &str, atoms: &AtomSet) -> Result<Formula, LtlError> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let (tok, pos) = lexer.next_token()?;
        let done = tok == Tok::Eof;
        toks.push((tok, pos));
        if done {
            break;
        }
    }
    let mut parser = Parser {
        toks,
        cursor: 0,
        atoms,
    };
    let f = parser.parse_implication()?;
    if *parser.peek() != Tok::Eof {
        return parser.err("trailing input after formula");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap() -> AtomSet {
        AtomSet::new::<&str>(&[], &["p", "q", "r"]).unwrap()
    }

    fn f(s: &str) -> Formula {
        parse(s, &ap()).unwrap()
    }

    #[test]
    fn grammar_forced_shapes() {
        let ap = ap();
        let p = Formula::atom(ap.lookup("p").unwrap().clone());
        let q = Formula::atom(ap.lookup("q").unwrap().clone());
        assert_eq!(f("p U q"), Formula::until(p.clone(), q.clone()));
        assert_eq!(f("X X p"), Formula::next(Formula::next(p.clone())));
        assert!(parse("p U", &ap).is_err());
    }

    #[test]
    fn precedence() {
        // & binds tighter than |, U tighter than &, unary tightest.
        assert_eq!(f("p | q & r"), f("p | (q & r)"));
        assert_eq!(f("p & q U r"), f("p & (q U r)"));
        assert_eq!(f("! p U q"), f("(! p) U q"));
        assert_eq!(f("X p U q"), f("(X p) U q"));
        // -> and <-> share one right-associative level.
        assert_eq!(f("p -> q <-> r"), f("p -> (q <-> r)"));
        assert_eq!(f("p <-> q -> r"), f("p <-> (q -> r)"));
        // U and R are right-associative and share one level.
        assert_eq!(f("p U q R r"), f("p U (q R r)"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("p U\nq U", &ap()) {
            Err(LtlError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse("zzz", &ap()) {
            Err(LtlError::UnknownAtomAt { name, .. }) => assert_eq!(name, "zzz"),
            other => panic!("expected unknown atom, got {:?}", other),
        }
    }
}
