use std::str::FromStr;

use super::rational::parse_rational;
use super::scalar::ParamScalar;
use super::symbol::Sym;
use crate::error::{Error, Result};

/// Parses expressions like `2/5*A - 9/10*B` or `(A + h)^2/3` into the
/// parameter field. Numbers must be integers or `n/d` fractions.
pub fn parse_scalar(src: &str) -> Result<ParamScalar> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {src:?}")));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            if i < cs.len() && (cs[i] == '.' || cs[i] == 'e' || cs[i] == 'E') {
                return Err(Error::Parse(format!("floating point not accepted: {src:?}")));
            }
            out.push(Tok::Num(cs[s..i].iter().collect()));
        } else if c.is_alphabetic() {
            let s = i;
            while i < cs.len() && cs[i].is_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(cs[s..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let n = match self.toks.get(self.pos) {
                Some(Tok::Num(s)) => s
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad exponent {s}")))?,
                _ => return Err(Error::Parse("expected integer exponent".into())),
            };
            self.pos += 1;
            return base.pow(if neg { -n } else { n });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamScalar> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                Ok(ParamScalar::from_rational(parse_rational(&s)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let s = Sym::from_str(&name)
                    .map_err(|_| Error::Parse(format!("unknown symbol {name:?}")))?;
                Ok(ParamScalar::sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parses_linear_forms() {
        let v = parse_scalar("-2/5*A + 9/10*B").unwrap();
        let a = ParamScalar::sym(Sym::A).scale(&rat(-2, 5));
        let b = ParamScalar::sym(Sym::B).scale(&rat(9, 10));
        assert_eq!(v, &a + &b);
    }

    #[test]
    fn parses_powers_and_quotients() {
        let v = parse_scalar("(A + h)^2 / (A + h)").unwrap();
        assert_eq!(v, parse_scalar("h + A").unwrap());
        assert_eq!(parse_scalar("B^-1 * B").unwrap(), ParamScalar::one());
    }

    #[test]
    fn rejects_floats() {
        assert!(parse_scalar("0.5*A").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("Q").is_err());
    }
}
