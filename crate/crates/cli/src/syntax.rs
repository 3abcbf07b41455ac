//! Text syntax for Weyl algebra elements.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := product ('@' product)*
//! product := power ('*' power)*
//! power   := atom ['^' integer]
//! atom    := rational | x<i> | d<i> | x | d | '(' expr ')'
//! ```
//!
//! A `*`-product of variables denotes the normal-ordered monomial
//! `x^α ∂^β`, so every `x` factor has to come before every `d` factor.
//! Operator products are written with `@`. Plain `x`, `d` stand for the
//! single-variable algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use weyl_core::scalar::BigRat;
use weyl_core::{Error as CoreError, MultiIndex, WeylElement, WeylMonomial};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var { d: bool, index: Option<usize> },
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
        } else if c == b'x' || c == b'd' {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = if i > start + 1 {
                let k: usize = text[start + 1..i]
                    .parse()
                    .map_err(|_| ParseError { pos: start, msg: "variable index too large".into() })?;
                if k == 0 {
                    return err(start, "variable indices start at 1");
                }
                Some(k)
            } else {
                None
            };
            out.push((start, Tok::Var { d: c == b'd', index }));
        } else if b"+-*/^@()".contains(&c) {
            out.push((start, Tok::Op(c as char)));
            i += 1;
        } else {
            let ch = text[start..].chars().next().expect("non-empty");
            return err(start, format!("unexpected character `{ch}`"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Node {
    Num(BigRat),
    /// `x<index>` or `d<index>` (1-based; `None` for plain `x`, `d`) raised to `exp`.
    Var {
        pos: usize,
        d: bool,
        index: Option<usize>,
        exp: u32,
    },
    Group(Box<Node>),
    Pow(Box<Node>, u32),
    Product(Vec<(usize, Node)>),
    Compose(Vec<Node>),
    Sum(Vec<(bool, Node)>),
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
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut terms = Vec::new();
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        terms.push((neg, self.term()?));
        loop {
            if self.eat('+') {
                terms.push((false, self.term()?));
            } else if self.eat('-') {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(Node::Sum(terms))
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut parts = vec![self.product()?];
        while self.eat('@') {
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Node::Compose(parts) })
    }

    fn product(&mut self) -> Result<Node, ParseError> {
        let mut factors = vec![(self.pos(), self.power()?)];
        while self.eat('*') {
            factors.push((self.pos(), self.power()?));
        }
        Ok(Node::Product(factors))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        if self.eat('-') {
            return err(pos, "negative exponent");
        }
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.at += 1;
                u32::try_from(k).or_else(|_| err(pos, "exponent too large"))
            }
            _ => err(pos, "expected integer exponent after `^`"),
        }
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let k = self.exponent()?;
        Ok(match atom {
            Node::Var { pos, d, index, exp } => Node::Var { pos, d, index, exp: exp * k },
            other => Node::Pow(Box::new(other), k),
        })
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                if self.eat('/') {
                    let dpos = self.pos();
                    match self.peek().cloned() {
                        Some(Tok::Num(den)) if !den.is_zero() => {
                            self.at += 1;
                            Ok(Node::Num(BigRat::new(n, den)))
                        }
                        Some(Tok::Num(_)) => err(dpos, "zero denominator"),
                        _ => err(dpos, "expected denominator after `/`"),
                    }
                } else {
                    Ok(Node::Num(BigRat::from_integer(n)))
                }
            }
            Some(Tok::Var { d, index }) => {
                self.at += 1;
                Ok(Node::Var { pos, d, index, exp: 1 })
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return err(self.pos(), "expected `)`");
                }
                Ok(Node::Group(Box::new(inner)))
            }
            Some(Tok::Op(c)) => err(pos, format!("unexpected `{c}`")),
            None => err(pos, "unexpected end of input"),
        }
    }
}

/// Naming style seen in the input, used to settle the arity.
#[derive(Default)]
struct Arity {
    plain: Option<usize>,
    indexed: Option<usize>,
    max: usize,
}

fn scan(node: &Node, a: &mut Arity) {
    match node {
        Node::Num(_) => {}
        Node::Var { pos, index, .. } => match index {
            None => {
                a.plain.get_or_insert(*pos);
                a.max = a.max.max(1);
            }
            Some(k) => {
                a.indexed.get_or_insert(*pos);
                a.max = a.max.max(*k);
            }
        },
        Node::Group(inner) | Node::Pow(inner, _) => scan(inner, a),
        Node::Product(fs) => fs.iter().for_each(|(_, f)| scan(f, a)),
        Node::Compose(ps) => ps.iter().for_each(|p| scan(p, a)),
        Node::Sum(ts) => ts.iter().for_each(|(_, t)| scan(t, a)),
    }
}

fn core(pos: usize, e: CoreError) -> ParseError {
    ParseError { pos, msg: e.to_string() }
}

struct Eval {
    n: usize,
}

impl Eval {
    fn scalar(&self, c: BigRat) -> WeylElement {
        WeylElement::constant(self.n, c).expect("positive arity")
    }

    fn eval(&self, node: &Node, pos: usize) -> Result<WeylElement, ParseError> {
        match node {
            Node::Num(c) => Ok(self.scalar(c.clone())),
            Node::Var { .. } => self.eval_product(&[(pos, node.clone())]),
            Node::Group(inner) => self.eval(inner, pos),
            Node::Pow(inner, k) => Ok(self.eval(inner, pos)?.pow(*k)),
            Node::Product(fs) => self.eval_product(fs),
            Node::Compose(ps) => {
                let mut acc = self.eval(&ps[0], pos)?;
                for p in &ps[1..] {
                    acc = acc.compose(&self.eval(p, pos)?).map_err(|e| core(pos, e))?;
                }
                Ok(acc)
            }
            Node::Sum(ts) => {
                let mut acc = WeylElement::zero(self.n).expect("positive arity");
                for (neg, t) in ts {
                    let v = self.eval(t, pos)?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                Ok(acc)
            }
        }
    }

    fn eval_product(&self, fs: &[(usize, Node)]) -> Result<WeylElement, ParseError> {
        let mut coeff = BigRat::one();
        let mut alpha = vec![0u32; self.n];
        let mut beta = vec![0u32; self.n];
        let mut seen_d = false;
        let mut has_vars = false;
        let mut block: Option<(usize, WeylElement)> = None;
        for (pos, f) in fs {
            match f {
                Node::Var { d, index, exp, .. } => {
                    let i = index.map_or(0, |k| k - 1);
                    if *d {
                        seen_d = true;
                        beta[i] += exp;
                    } else {
                        if seen_d {
                            return err(
                                *pos,
                                "x factor after d factor breaks normal order; write the operator product with `@`",
                            );
                        }
                        alpha[i] += exp;
                    }
                    has_vars = true;
                }
                other => {
                    let v = self.eval(other, *pos)?;
                    let constant = v.terms().all(|(m, _)| m == &WeylMonomial::unit(self.n));
                    if constant {
                        coeff *= v.coeff(&WeylMonomial::unit(self.n));
                    } else if block.is_some() {
                        return err(*pos, "product of two non-scalar factors; use `@` for composition");
                    } else {
                        block = Some((*pos, v));
                    }
                }
            }
        }
        match block {
            Some((pos, _)) if has_vars => {
                err(pos, "product mixes variables with a non-scalar group; use `@` for composition")
            }
            Some((_, v)) => Ok(v.scale(&coeff)),
            None => {
                let m = WeylMonomial::new(MultiIndex::new(alpha), MultiIndex::new(beta)).expect("same arity");
                Ok(WeylElement::from_monomial(m, coeff).expect("positive arity"))
            }
        }
    }
}

/// Parses `text` as an element of `A_n`. Without `n` the arity is the
/// largest variable index used (1 for plain `x`, `d` or constants).
pub fn parse(text: &str, n: Option<usize>) -> Result<WeylElement, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let tree = p.expr()?;
    if p.at < p.toks.len() {
        let c = match &p.toks[p.at].1 {
            Tok::Op(c) => c.to_string(),
            _ => "term".to_string(),
        };
        return err(p.pos(), format!("unexpected {c}; expected `+`, `-`, `*` or `@`"));
    }
    let mut a = Arity::default();
    scan(&tree, &mut a);
    if let (Some(_), Some(ipos)) = (a.plain, a.indexed) {
        return err(ipos, "mixes plain `x`/`d` with indexed variables");
    }
    let n = match n {
        Some(0) => return err(0, "arity must be positive"),
        Some(n) => {
            if let Some(pos) = a.plain {
                if n > 1 {
                    return err(pos, format!("plain `x`/`d` only allowed for n = 1, got n = {n}"));
                }
            }
            if a.max > n {
                return err(a.indexed.unwrap_or(0), format!("variable index {} exceeds n = {n}", a.max));
            }
            n
        }
        None => a.max.max(1),
    };
    Eval { n }.eval(&tree, 0)
}

/// Canonical text; `parse(&format(x), Some(x.arity()))` returns `x`.
pub fn format(x: &WeylElement) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use weyl_core::scalar::rat;

    fn el(a: &[u32], b: &[u32], c: i64) -> WeylElement {
        WeylElement::from_monomial(WeylMonomial::from_exps(a, b), rat(c)).unwrap()
    }

    #[test]
    fn basic_terms() {
        let x = parse("x*d + 1", None).unwrap();
        assert_eq!(x, &el(&[1], &[1], 1) + &el(&[0], &[0], 1));
        assert_eq!(parse("d @ x", None).unwrap(), x);
        assert_eq!(format(&x), "1 + x*d");
        assert_eq!(format(&parse("0", None).unwrap()), "0");
    }

    #[test]
    fn normal_order_is_enforced() {
        let e = parse("d*x", None).unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(e.msg.contains('@'));
        assert!(parse("x1*d1*x2", None).is_err());
        assert_eq!(parse("x1*x2*d1", None).unwrap(), el(&[1, 1], &[1, 0], 1));
    }

    #[test]
    fn coefficients_and_powers() {
        let v = parse("-3/2*x^2*d - 7", None).unwrap();
        assert_eq!(v, &el(&[2], &[1], 1).scale(&BigRat::new((-3).into(), 2.into())) - &el(&[0], &[0], 7));
        assert_eq!(parse("x*x*d^2*d", None).unwrap(), el(&[2], &[3], 1));
        assert_eq!(parse("(x*d)^2", None).unwrap(), &el(&[2], &[2], 1) + &el(&[1], &[1], 1));
        assert_eq!(parse("2*(x + d)", None).unwrap(), &el(&[1], &[0], 2) + &el(&[0], &[1], 2));
        assert_eq!(parse("2^3", None).unwrap(), el(&[0], &[0], 8));
    }

    #[test]
    fn arity_rules() {
        assert_eq!(parse("x2", None).unwrap().arity(), 2);
        assert_eq!(parse("x1", Some(3)).unwrap().arity(), 3);
        assert_eq!(parse("x1", Some(1)).unwrap(), parse("x", None).unwrap());
        assert!(parse("x", Some(2)).is_err());
        assert!(parse("x + x2", None).is_err());
        assert!(parse("x3", Some(2)).is_err());
        assert!(parse("x", Some(0)).is_err());
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert_eq!(parse("x + ", None).unwrap_err().pos, 4);
        assert_eq!(parse("x ^ -1", None).unwrap_err().pos, 4);
        assert_eq!(parse("(x", None).unwrap_err().pos, 2);
        assert_eq!(parse("x $ d", None).unwrap_err().pos, 2);
        assert_eq!(parse("1/0", None).unwrap_err().pos, 2);
        assert_eq!(parse("x d", None).unwrap_err().pos, 2);
        assert!(parse("(x + d)*(x + d)", None).is_err());
        assert!(parse("x*(x + d)", None).is_err());
    }
}
