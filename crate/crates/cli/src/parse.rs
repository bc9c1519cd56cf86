//! Expression syntax: lexer, Pratt parser and a precedence-aware printer.
//!
//! Binding powers, loosest first: `+ -` (10), `* /` (20), prefix `-` (25),
//! `o` (30), `^` (40). All binary operators associate to the left. The
//! exponent of `^` must be a natural-number literal.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Compose,
}

impl BinOp {
    fn bp(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 10,
            BinOp::Mul | BinOp::Div => 20,
            BinOp::Compose => 30,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Compose => " o ",
        }
    }
}

const NEG_BP: u8 = 25;
const POW_BP: u8 = 40;
const ATOM_BP: u8 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

impl Expr {
    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn ident(s: &str) -> Expr {
        Expr::Ident(s.to_string())
    }

    pub fn num(n: i64) -> Expr {
        Expr::Num(BigInt::from(n))
    }

    fn bp(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.bp(),
            Expr::Neg(_) => NEG_BP,
            Expr::Pow(..) => POW_BP,
            _ => ATOM_BP,
        }
    }

    /// Immediate subexpressions, left to right.
    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Num(_) | Expr::Ident(_) => vec![],
            Expr::Neg(a) | Expr::Pow(a, _) => vec![a],
            Expr::Bin(_, a, b) => vec![a, b],
            Expr::Call(_, args) => args.iter().collect(),
        }
    }

    /// Does the identifier `name` occur anywhere in the tree?
    pub fn mentions(&self, name: &str) -> bool {
        matches!(self, Expr::Ident(n) if n == name) || self.children().iter().any(|c| c.mentions(name))
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min_bp: u8) -> fmt::Result {
    if e.bp() < min_bp {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Ident(s) => f.write_str(s),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, NEG_BP)
            }
            Expr::Bin(op, a, b) => {
                write_child(f, a, op.bp())?;
                f.write_str(op.symbol())?;
                write_child(f, b, op.bp() + 1)
            }
            Expr::Pow(a, k) => {
                write_child(f, a, POW_BP)?;
                write!(f, "^{k}")
            }
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: expected {}", expected.join(" or "))]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(BinOp),
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Op(BinOp::Add)),
            b'-' => Some(Tok::Op(BinOp::Sub)),
            b'*' => Some(Tok::Op(BinOp::Mul)),
            b'/' => Some(Tok::Op(BinOp::Div)),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((start, t));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            let word = &src[start..i];
            out.push((start, if word == "o" { Tok::Op(BinOp::Compose) } else { Tok::Ident(word.to_string()) }));
        } else {
            return Err(SyntaxError { offset: start, expected: vec!["an operator", "an operand"] });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const OPERAND: [&str; 4] = ["a number", "an identifier", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, SyntaxError> {
        Err(SyntaxError { offset: self.offset(), expected: expected.to_vec() })
    }

    fn expect(&mut self, t: Tok, what: &'static str) -> Result<(), SyntaxError> {
        if *self.peek() == t {
            self.next();
            Ok(())
        } else {
            self.fail(&[what])
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, SyntaxError> {
        let mut lhs = self.prefix()?;
        loop {
            match self.peek().clone() {
                Tok::Caret if POW_BP >= min_bp => {
                    self.next();
                    let off = self.offset();
                    match self.next() {
                        Tok::Num(n) => {
                            let k = u32::try_from(&n)
                                .map_err(|_| SyntaxError { offset: off, expected: vec!["a small exponent"] })?;
                            lhs = Expr::Pow(Box::new(lhs), k);
                        }
                        _ => return Err(SyntaxError { offset: off, expected: vec!["a natural-number exponent"] }),
                    }
                }
                Tok::Op(op) if op.bp() >= min_bp => {
                    self.next();
                    let rhs = self.expr(op.bp() + 1)?;
                    lhs = Expr::bin(op, lhs, rhs);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn prefix(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.next();
                Ok(Expr::Num(n))
            }
            Tok::Op(BinOp::Sub) => {
                self.next();
                Ok(Expr::Neg(Box::new(self.expr(NEG_BP)?)))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr(0)?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.next();
                if *self.peek() != Tok::LParen {
                    return Ok(Expr::Ident(name));
                }
                self.next();
                let mut args = vec![self.expr(0)?];
                loop {
                    match self.peek() {
                        Tok::Comma => {
                            self.next();
                            args.push(self.expr(0)?);
                        }
                        Tok::RParen => {
                            self.next();
                            return Ok(Expr::Call(name, args));
                        }
                        _ => return self.fail(&["','", "')'"]),
                    }
                }
            }
            _ => self.fail(&OPERAND),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr(0)?;
    if *p.peek() != Tok::End {
        return p.fail(&["an operator", "end of input"]);
    }
    Ok(e)
}

/// Splits `name = rhs` and parses the right-hand side.
pub fn parse_definition(src: &str) -> Result<(String, Expr), SyntaxError> {
    let eq = src.find('=').ok_or(SyntaxError { offset: src.len(), expected: vec!["'='"] })?;
    let name = src[..eq].trim().to_string();
    let rhs = parse(&src[eq + 1..]).map_err(|e| SyntaxError { offset: e.offset + eq + 1, ..e })?;
    Ok((name, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn fibonacci_quotient() {
        let one = || Expr::num(1);
        let want = Expr::bin(
            BinOp::Div,
            one(),
            Expr::bin(
                BinOp::Sub,
                Expr::bin(BinOp::Sub, one(), Expr::ident("x")),
                Expr::Pow(Box::new(Expr::ident("x")), 2),
            ),
        );
        assert_eq!(p("1/(1-x-x^2)"), want);
    }

    #[test]
    fn composition_with_sum() {
        let want =
            Expr::bin(BinOp::Compose, Expr::ident("starx"), Expr::bin(BinOp::Add, Expr::ident("u"), Expr::ident("z")));
        assert_eq!(p("starx o (u+z)"), want);
    }

    #[test]
    fn misplaced_operator() {
        let e = parse("1+*x").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.expected.contains(&"a number"));
    }

    #[test]
    fn precedence_ladder() {
        assert_eq!(p("a + b o c * d"), p("a + ((b o c) * d)"));
        assert_eq!(p("f o g^2"), p("f o (g^2)"));
        assert_eq!(p("f o g o h"), p("(f o g) o h"));
        assert_eq!(p("-x^2"), Expr::Neg(Box::new(p("x^2"))));
        assert_eq!(p("-u*z"), p("(-u)*z"));
        assert_eq!(p("a-b-c"), p("(a-b)-c"));
        assert_eq!(p("a/b*c"), p("(a/b)*c"));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("x^y").unwrap_err().offset, 2);
        assert_eq!(parse("(x").unwrap_err().offset, 2);
        assert_eq!(parse("f(x;").unwrap_err().offset, 3);
        assert_eq!(parse("x x").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }

    #[test]
    fn identifiers_containing_o() {
        assert_eq!(p("cosx o over"), Expr::bin(BinOp::Compose, Expr::ident("cosx"), Expr::ident("over")));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "-(a+b)",
            "f o (-g)",
            "(-x)^2",
            "a-(b-c)",
            "(f o g)^3",
            "shuffle(a, b*c)",
            "x^2^3",
            "1/(1-z)*(expx o (-u*z/(1-z)))",
        ] {
            let e = p(s);
            assert_eq!(p(&e.to_string()), e, "{s} printed as {e}");
        }
    }

    #[test]
    fn definitions() {
        let (name, rhs) = parse_definition("derangement = set o nonLoopCycle").unwrap();
        assert_eq!(name, "derangement");
        assert_eq!(rhs.to_string(), "set o nonLoopCycle");
        assert_eq!(parse_definition("a = 1+").unwrap_err().offset, 6);
    }
}
