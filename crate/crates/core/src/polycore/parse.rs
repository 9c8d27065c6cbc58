//! Text form of polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var | var '^' uint | '(' expr ')' | '-' factor
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and multiplication is always explicit.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Variables};
use crate::error::ParseError;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut end = i + 1;
                    while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'.') {
                        end += 1;
                    }
                    return Err(ParseError::Literal {
                        offset: start,
                        text: text[start..end].to_string(),
                        reason: "only integers and integer fractions are accepted".into(),
                    });
                }
                let value: BigInt = text[start..i].parse().expect("ascii digits parse");
                out.push((Tok::Int(value), start));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax { offset: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, C> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a Variables,
    _field: std::marker::PhantomData<C>,
}

impl<C: Field> Parser<'_, C> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { offset, message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    return self.syntax(self.offset(), "implicit multiplication is not allowed; write `*`");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<C>, ParseError> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::Minus => Ok(-&self.factor()?),
            Tok::Int(numer) => {
                let mut denom = BigInt::one();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(d), doff) => {
                            if d.is_zero() {
                                return Err(ParseError::Literal {
                                    offset,
                                    text: format!("{numer}/{d}"),
                                    reason: "zero denominator".into(),
                                });
                            }
                            let _ = doff;
                            denom = d;
                        }
                        (_, doff) => return self.syntax(doff, "expected an unsigned integer denominator"),
                    }
                }
                let c = C::from_ratio(&numer, &denom).ok_or_else(|| ParseError::Literal {
                    offset,
                    text: format!("{numer}/{denom}"),
                    reason: "not representable in the coefficient field".into(),
                })?;
                Ok(Polynomial::constant(self.vars.clone(), c))
            }
            Tok::Ident(name) => {
                let index = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(ParseError::UnknownVariable { offset, name: name.clone() })?;
                let mut exp = 1u32;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(e), eoff) => {
                            exp = u32::try_from(&e).map_err(|_| ParseError::Literal {
                                offset: eoff,
                                text: e.to_string(),
                                reason: "exponent too large".into(),
                            })?;
                        }
                        (_, eoff) => return self.syntax(eoff, "expected an unsigned integer exponent"),
                    }
                }
                let mut e = vec![0u32; self.vars.len()];
                e[index] = exp;
                Ok(Polynomial::monomial(self.vars.clone(), Monomial::from_exponents(e), C::one()))
            }
            Tok::LParen => {
                if *self.peek() == Tok::End {
                    return self.syntax(offset, "unclosed `(`");
                }
                let inner = self.expr()?;
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                        Ok(inner)
                    }
                    Tok::End => self.syntax(offset, "unclosed `(`"),
                    _ => self.syntax(self.offset(), "expected `)`"),
                }
            }
            Tok::End => self.syntax(offset, "unexpected end of input"),
            Tok::Slash => self.syntax(offset, "`/` is only allowed inside a rational literal"),
            other => self.syntax(offset, format!("unexpected {}", describe(&other))),
        }
    }
}

fn describe(tok: &Tok) -> &'static str {
    match tok {
        Tok::Int(_) => "number",
        Tok::Ident(_) => "identifier",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::End => "end of input",
    }
}

/// Parses `text` into a polynomial over `vars`.
pub fn parse_polynomial<C: Field>(text: &str, vars: &Variables) -> Result<Polynomial<C>, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, vars, _field: std::marker::PhantomData };
    let poly = p.expr()?;
    match p.peek() {
        Tok::End => Ok(poly),
        Tok::Slash => p.syntax(p.offset(), "`/` is only allowed inside a rational literal"),
        Tok::Caret => p.syntax(p.offset(), "`^` must follow a variable"),
        other => {
            let msg = format!("unexpected {}", describe(other));
            p.syntax(p.offset(), msg)
        }
    }
}

/// Canonical text: terms descending in degree-reverse-lexicographic order,
/// reparseable by [`parse_polynomial`].
impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.sorted_terms(MonomialOrder::GlobalDegRevLex).into_iter().enumerate() {
            let q = c.to_ratio();
            let negative = q.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = q.abs();
            let mut first = true;
            if mono.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.variables()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::polynomial::variables;
    use num_rational::{BigRational, Ratio};
    use proptest::prelude::*;

    type P = Polynomial<BigRational>;

    fn zvars() -> Variables {
        variables(&["z0", "z1", "z2", "z3"])
    }

    #[test]
    fn parses_curve_equation() {
        let p: P = parse_polynomial("z0^2*z1 - z2^3", &zvars()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(p.to_string(), "z0^2*z1 - z2^3");
    }

    #[test]
    fn zero_and_constants() {
        let p: P = parse_polynomial("0", &zvars()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
        let p: P = parse_polynomial("-3/6 + 1", &zvars()).unwrap();
        assert_eq!(p.to_string(), "1/2");
    }

    #[test]
    fn trailing_open_paren_is_reported_at_its_offset() {
        let vars = variables(&["x1"]);
        let err = parse_polynomial::<BigRational>("6*x1 + x1*(", &vars).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 10, .. }), "{err:?}");
    }

    #[test]
    fn implicit_multiplication_is_an_error() {
        let vars = variables(&["x"]);
        let err = parse_polynomial::<BigRational>("2x", &vars).unwrap_err();
        assert_eq!(err.offset(), 1);
        let err = parse_polynomial::<BigRational>("2 x", &vars).unwrap_err();
        assert_eq!(err.offset(), 2);
    }

    #[test]
    fn literal_errors() {
        let vars = variables(&["x"]);
        assert!(matches!(parse_polynomial::<BigRational>("1.5*x", &vars), Err(ParseError::Literal { offset: 0, .. })));
        assert!(matches!(
            parse_polynomial::<BigRational>("x + 1/0", &vars),
            Err(ParseError::Literal { offset: 4, .. })
        ));
        let huge = "99999999999999999999999";
        assert!(matches!(parse_polynomial::<Ratio<i64>>(huge, &vars), Err(ParseError::Literal { .. })));
    }

    #[test]
    fn unknown_variable() {
        let vars = variables(&["x"]);
        let err = parse_polynomial::<BigRational>("x + y", &vars).unwrap_err();
        assert_eq!(err, ParseError::UnknownVariable { offset: 4, name: "y".into() });
    }

    #[test]
    fn misc_syntax_errors() {
        let vars = variables(&["x", "y"]);
        for bad in ["", "x +", "x ^ y", "(x", "x)", "x/2", "x^2^3", "2^3", "x $ y"] {
            assert!(parse_polynomial::<BigRational>(bad, &vars).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn nested_expressions() {
        let vars = variables(&["x", "y"]);
        let p: P = parse_polynomial("-(x - y)*(x + y) + 2/3*-x", &vars).unwrap();
        let q: P = parse_polynomial("y^2 - x^2 - 2/3*x", &vars).unwrap();
        assert_eq!(p, q);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        let vars = variables(&["a", "b", "c"]);
        proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..5), 0..6).prop_map(move |ts| {
            P::from_terms(
                vars.clone(),
                ts.into_iter().map(|((a, b, c), n, d)| {
                    (Monomial::from_exponents(vec![a, b, c]), BigRational::new(n.into(), d.into()))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = p.to_string();
            let back: P = parse_polynomial(&text, p.variables()).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
