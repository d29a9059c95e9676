//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := primary ('^' nat)? ('[' int ']')?
//! primary := atom | '0' | '(' expr ')' | func '(' args ')'
//! atom    := Z | Q | R | T | Sol | A | Afin | Z/nat | Z_p | Q_p | Q_p/Z_p
//! ```

use std::fmt;

use crate::atom::{Atom, Prime};
use crate::error::{Error, Result};
use crate::group::FlcaGroup;
use crate::structure::PROPERTY_NAMES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Dual,
    Hom,
    Tensor,
    Rhom,
    Dtensor,
    Ext,
    K0,
    K0Mul,
    Ranks,
    Filt,
    PComp,
    ResI,
    ResP,
    Is,
}

impl Func {
    pub const ALL: [Func; 14] = [
        Func::Dual,
        Func::Hom,
        Func::Tensor,
        Func::Rhom,
        Func::Dtensor,
        Func::Ext,
        Func::K0,
        Func::K0Mul,
        Func::Ranks,
        Func::Filt,
        Func::PComp,
        Func::ResI,
        Func::ResP,
        Func::Is,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Dual => "dual",
            Func::Hom => "hom",
            Func::Tensor => "tensor",
            Func::Rhom => "rhom",
            Func::Dtensor => "dtensor",
            Func::Ext => "ext",
            Func::K0 => "k0",
            Func::K0Mul => "k0mul",
            Func::Ranks => "ranks",
            Func::Filt => "filt",
            Func::PComp => "pcomp",
            Func::ResI => "resI",
            Func::ResP => "resP",
            Func::Is => "is",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    fn arity(self) -> usize {
        match self {
            Func::Ext => 3,
            Func::Hom | Func::Tensor | Func::Rhom | Func::Dtensor | Func::K0Mul | Func::PComp | Func::Is => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    Int(i64),
    Prime(Prime),
    Property(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// An atom literal, a decomposed ℤ/m, or `0`.
    Group(FlcaGroup),
    Sum(Vec<Expr>),
    Power(Box<Expr>, u64),
    Shift(Box<Expr>, i64),
    Call(Func, Vec<Arg>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(u64),
    Plus,
    Minus,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Ident(word)));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            let n = digits
                .parse::<u64>()
                .map_err(|_| Error::syntax(pos, format!("number `{digits}` is too large")))?;
            out.push((pos, Tok::Nat(n)));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            _ => return Err(Error::syntax(pos, format!("unexpected character `{c}`"))),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {t}")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => Error::syntax(self.pos(), format!("{wanted}, found {t}")),
            None => Error::syntax(self.pos(), format!("{wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.eat(&Tok::Plus) {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        if self.eat(&Tok::Caret) {
            match self.bump() {
                Some((_, Tok::Nat(k))) => e = Expr::Power(Box::new(e), k),
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("expected a repetition count after `^`"));
                }
            }
        }
        if self.eat(&Tok::LBracket) {
            let n = self.int()?;
            self.expect(Tok::RBracket)?;
            e = Expr::Shift(Box::new(e), n);
        }
        Ok(e)
    }

    fn int(&mut self) -> Result<i64> {
        let negative = self.eat(&Tok::Minus);
        let pos = self.pos();
        match self.bump() {
            Some((_, Tok::Nat(n))) => {
                let v = i64::try_from(n).map_err(|_| Error::syntax(pos, format!("integer `{n}` is too large")))?;
                Ok(if negative { -v } else { v })
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("expected an integer"))
            }
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some((_, Tok::LParen)) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some((_, Tok::Nat(0))) => Ok(Expr::Group(FlcaGroup::zero())),
            Some((_, Tok::Ident(word))) => {
                if let Some(func) = Func::from_name(&word) {
                    if self.peek() == Some(&Tok::LParen) {
                        return self.call(func);
                    }
                }
                self.atom(&word, pos)
            }
            Some(_) => {
                self.at -= 1;
                Err(self.unexpected("expected a group, `(` or a function"))
            }
            None => Err(self.unexpected("expected a group, `(` or a function")),
        }
    }

    fn atom(&mut self, word: &str, pos: usize) -> Result<Expr> {
        let simple = match word {
            "Q" => Some(Atom::Rat),
            "R" => Some(Atom::Real),
            "T" => Some(Atom::Circle),
            "Sol" => Some(Atom::Solenoid),
            "A" => Some(Atom::Adele),
            "Afin" => Some(Atom::FinAdele),
            _ => None,
        };
        if let Some(a) = simple {
            return Ok(Expr::Group(a.into()));
        }
        if word == "Z" {
            if !self.eat(&Tok::Slash) {
                return Ok(Expr::Group(Atom::Int.into()));
            }
            let m_pos = self.pos();
            return match self.bump() {
                Some((_, Tok::Nat(m))) => FlcaGroup::cyclic(m)
                    .map(Expr::Group)
                    .map_err(|e| invalid(m_pos, &format!("Z/{m}"), e)),
                _ => {
                    self.at -= 1;
                    Err(self.unexpected("expected an order after `Z/`"))
                }
            };
        }
        if let Some(sub) = word.strip_prefix("Z_") {
            let p = subscript(sub, word, pos)?;
            return Ok(Expr::Group(Atom::ProInt(p).into()));
        }
        if let Some(sub) = word.strip_prefix("Q_") {
            let p = subscript(sub, word, pos)?;
            if !self.eat(&Tok::Slash) {
                return Ok(Expr::Group(Atom::PAdic(p).into()));
            }
            let z_pos = self.pos();
            return match self.bump() {
                Some((_, Tok::Ident(denominator))) if denominator == format!("Z_{sub}") => {
                    Ok(Expr::Group(Atom::Pruefer(p).into()))
                }
                Some((_, Tok::Ident(denominator))) => Err(Error::InvalidToken {
                    pos: z_pos,
                    token: format!("{word}/{denominator}"),
                    reason: "quotient primes differ".into(),
                }),
                _ => {
                    self.at -= 1;
                    Err(self.unexpected(&format!("expected `Z_{sub}` after `{word}/`")))
                }
            };
        }
        if Func::from_name(word).is_some() {
            return Err(Error::syntax(self.pos(), format!("expected `(` after function `{word}`")));
        }
        Err(Error::InvalidToken { pos, token: word.to_string(), reason: "unknown group".into() })
    }

    fn call(&mut self, func: Func) -> Result<Expr> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if !self.eat(&Tok::RParen) {
            loop {
                let index = args.len();
                args.push(self.arg(func, index)?);
                if self.eat(&Tok::RParen) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        if args.len() != func.arity() {
            return Err(Error::Arity { func: func.name().into(), expected: func.arity(), got: args.len() });
        }
        Ok(Expr::Call(func, args))
    }

    fn arg(&mut self, func: Func, index: usize) -> Result<Arg> {
        match (func, index) {
            (Func::Ext, 0) => Ok(Arg::Int(self.int()?)),
            (Func::PComp, 1) => {
                let pos = self.pos();
                match self.bump() {
                    Some((_, Tok::Nat(n))) => Prime::new(n).map(Arg::Prime).map_err(|e| invalid(pos, &n.to_string(), e)),
                    _ => {
                        self.at -= 1;
                        Err(self.unexpected("expected a prime"))
                    }
                }
            }
            (Func::Is, 0) => {
                let pos = self.pos();
                match self.bump() {
                    Some((_, Tok::Ident(name))) if PROPERTY_NAMES.contains(&name.as_str()) => Ok(Arg::Property(name)),
                    Some((_, Tok::Ident(name))) => Err(Error::InvalidToken {
                        pos,
                        token: name,
                        reason: format!("unknown property (expected one of {})", PROPERTY_NAMES.join(", ")),
                    }),
                    _ => {
                        self.at -= 1;
                        Err(self.unexpected("expected a property name"))
                    }
                }
            }
            _ => Ok(Arg::Expr(self.expr()?)),
        }
    }
}

fn invalid(pos: usize, token: &str, e: Error) -> Error {
    Error::InvalidToken { pos, token: token.to_string(), reason: e.to_string() }
}

fn subscript(sub: &str, word: &str, pos: usize) -> Result<Prime> {
    let n: u64 = sub.parse().map_err(|_| Error::InvalidToken {
        pos,
        token: word.to_string(),
        reason: format!("subscript `{sub}` is not a number"),
    })?;
    Prime::new(n).map_err(|e| invalid(pos, word, e))
}

pub fn parse(input: &str) -> Result<Expr> {
    let toks = lex(input)?;
    let mut parser = Parser { toks, at: 0, end: input.len() };
    let e = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("expected `+` or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::p;

    fn group(s: &str) -> FlcaGroup {
        match parse(s).unwrap() {
            Expr::Group(g) => g,
            other => panic!("{s} parsed to {other:?}"),
        }
    }

    #[test]
    fn atom_literals() {
        assert_eq!(group("Z"), Atom::Int.into());
        assert_eq!(group("Sol"), Atom::Solenoid.into());
        assert_eq!(group("Afin"), Atom::FinAdele.into());
        assert_eq!(group("Z_5"), Atom::ProInt(p(5)).into());
        assert_eq!(group("Q_5"), Atom::PAdic(p(5)).into());
        assert_eq!(group("Q_5/Z_5"), Atom::Pruefer(p(5)).into());
        assert_eq!(group(" Q_5 / Z_5 "), Atom::Pruefer(p(5)).into());
        assert_eq!(group("Z/12").to_string(), "Z/4 + Z/3");
        assert_eq!(group("Z/1"), FlcaGroup::zero());
        assert_eq!(group("0"), FlcaGroup::zero());
    }

    #[test]
    fn sums_powers_and_shifts() {
        let e = parse("Z_5 + T^2").unwrap();
        assert_eq!(
            e,
            Expr::Sum(vec![
                Expr::Group(Atom::ProInt(p(5)).into()),
                Expr::Power(Box::new(Expr::Group(Atom::Circle.into())), 2)
            ])
        );
        assert_eq!(
            parse("Z^2[-1]").unwrap(),
            Expr::Shift(Box::new(Expr::Power(Box::new(Expr::Group(Atom::Int.into())), 2)), -1)
        );
        assert!(matches!(parse("(Z + T)[1]").unwrap(), Expr::Shift(_, 1)));
    }

    #[test]
    fn applications() {
        assert_eq!(
            parse("rhom(T, Z)").unwrap(),
            Expr::Call(Func::Rhom, vec![Arg::Expr(Expr::Group(Atom::Circle.into())), Arg::Expr(Expr::Group(Atom::Int.into()))])
        );
        assert!(matches!(parse("ext(-1, T, Z)").unwrap(), Expr::Call(Func::Ext, ref a) if a[0] == Arg::Int(-1)));
        assert!(matches!(parse("pcomp(Afin, 5)").unwrap(), Expr::Call(Func::PComp, ref a) if a[1] == Arg::Prime(p(5))));
        assert!(matches!(parse("is(in_I, R)").unwrap(), Expr::Call(Func::Is, _)));
        assert!(matches!(parse("k0mul(k0(T), k0(T))").unwrap(), Expr::Call(Func::K0Mul, _)));
    }

    #[test]
    fn errors() {
        let e = parse("Z_6").unwrap_err();
        assert!(e.to_string().contains("6 is not prime"), "{e}");
        assert!(e.to_string().contains("Z_6"), "{e}");
        assert!(matches!(parse("Z/0").unwrap_err(), Error::InvalidToken { .. }));
        assert!(matches!(parse("Q_5/Z_3").unwrap_err(), Error::InvalidToken { .. }));
        assert_eq!(parse("hom(Z)").unwrap_err(), Error::Arity { func: "hom".into(), expected: 2, got: 1 });
        assert!(matches!(parse("ext(Z, T, Z)").unwrap_err(), Error::Syntax { .. }));
        assert!(matches!(parse("is(shiny, Z)").unwrap_err(), Error::InvalidToken { .. }));
        assert!(matches!(parse("pcomp(Z, 4)").unwrap_err(), Error::InvalidToken { .. }));
        assert_eq!(parse("Z + ").unwrap_err(), Error::Syntax { pos: 4, message: "expected a group, `(` or a function, found end of input".into() });
        assert!(matches!(parse("Z T").unwrap_err(), Error::Syntax { pos: 2, .. }));
        assert!(matches!(parse("E").unwrap_err(), Error::InvalidToken { .. }));
        assert!(matches!(parse("Z $").unwrap_err(), Error::Syntax { pos: 2, .. }));
        assert!(matches!(parse("hom").unwrap_err(), Error::Syntax { .. }));
    }
}
