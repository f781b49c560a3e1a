//! Parser for polynomial expressions.
//!
//! Accepts the canonical text form written by [`MPoly::to_text`] and the
//! looser notation used when transcribing displayed formulas: integers,
//! single-letter variables, `+ - * ^`, parentheses, and implicit
//! multiplication by juxtaposition (`3i^2m(m-i)`). Because variables are a
//! single letter, `im` reads as `i*m`.

use num_bigint::BigInt;

use super::mpoly::MPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    while p < bytes.len() {
        let c = bytes[p] as char;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                p += 1;
                continue;
            }
            '0'..='9' => {
                let start = p;
                while p < bytes.len() && bytes[p].is_ascii_digit() {
                    p += 1;
                }
                out.push((start, Tok::Int(s[start..p].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => Tok::Var(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    pos: p,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((p, tok));
        p += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<MPoly> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                MPoly::constant(n)
            }
            Some(Tok::Var(c)) => {
                self.pos += 1;
                MPoly::var(&c.to_string())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                inner
            }
            _ => return self.err("expected a number, variable or `(`"),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => u32::try_from(n.clone()).or_else(|_| self.err("exponent too large"))?,
                _ => return self.err("expected an integer exponent"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

pub fn parse_poly(s: &str) -> Result<MPoly> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    #[test]
    fn implicit_multiplication() {
        let p = parse_poly("3im^3(m-i)").unwrap();
        let v = p.eval_at(&[("i", int(2)), ("m", int(5))]).unwrap();
        assert_eq!(v, int(3 * 2 * 125 * 3));
    }

    #[test]
    fn unary_and_power() {
        assert_eq!(parse_poly("-x^2").unwrap().eval_at(&[("x", int(3))]).unwrap(), int(-9));
        assert_eq!(parse_poly("(x+1)^2 - (x^2+2x+1)").unwrap().num_terms(), 0);
    }

    #[test]
    fn errors_carry_position() {
        match parse_poly("x + $") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("(x+1").is_err());
        assert!(parse_poly("x^y").is_err());
        assert!(parse_poly("x )").is_err());
    }
}
