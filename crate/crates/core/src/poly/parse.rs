//! Polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | name | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. `*` may be omitted, so `3x^2y` is accepted
//! when `x` and `y` are declared names.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// Names used when printing without explicit names: `x, y, z` for up to three
/// variables, otherwise `x1 .. xn`.
pub fn default_var_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

pub fn parse_poly<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Poly> {
    parse_poly_at(text, names, 1, 1)
}

/// Parses `text` as if it started at (`line`, `column`) of a larger input, so
/// error positions point into that input.
pub fn parse_poly_at<S: AsRef<str>>(
    text: &str,
    names: &[S],
    line: usize,
    column: usize,
) -> Result<Poly> {
    let names: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        col: column,
        names: &names,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(poly)
}

/// Parses `p` or `p/q` with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let poly = parse_poly::<&str>(text, &[])?;
    poly.constant_value().ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: format!("not a rational number: {text}"),
    })
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.col,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
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

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                acc = &acc * &self.factor()?;
                continue;
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() || c == '(' || c == '_' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rat::from_integer(num);
                if self.eat('/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("division by zero".into()));
                    }
                    value /= Rat::from_integer(den);
                }
                Ok(Poly::constant(self.nvars(), value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let (line, col) = (self.line, self.col);
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Poly::var(self.nvars(), i)),
                    None => Err(Error::Syntax {
                        line,
                        column: col,
                        message: format!("unknown variable '{name}'"),
                    }),
                }
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'".into()));
                }
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer".into()));
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}
