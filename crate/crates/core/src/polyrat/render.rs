//! Plain-text and LaTeX rendering of rational functions over Q, plus a parser
//! for exactly those two output grammars.
//!
//! Text: `x/(1 - x - x^2)`, `(x - x^2)/(1 - 2x - 2x^2 + x^3)`, non-integer
//! coefficients parenthesized as `(1/2)x^2`.
//! LaTeX: `\frac{x - x^{2}}{1 - 2x - 2x^{2} + x^{3}}`, coefficients as `\frac{1}{2}x^{2}`.
//! Terms always appear in ascending degree.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::qfield::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn coef_str(mag: &Rational, style: Style) -> String {
    if mag.is_integer() {
        return mag.numer().to_string();
    }
    match style {
        Style::Text => format!("({}/{})", mag.numer(), mag.denom()),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()),
    }
}

fn power_str(i: usize, style: Style) -> String {
    match (i, style) {
        (1, _) => "x".into(),
        (_, Style::Text) => format!("x^{i}"),
        (_, Style::Latex) => format!("x^{{{i}}}"),
    }
}

pub fn render_poly(p: &Polynomial<Rational>, style: Style) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if i == 0 {
            coef_str(&mag, style)
        } else if mag.is_one() {
            power_str(i, style)
        } else {
            format!("{}{}", coef_str(&mag, style), power_str(i, style))
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render(f: &RationalFunction<Rational>, style: Style) -> String {
    let num = render_poly(f.num(), style);
    if let Some(p) = f.as_polynomial() {
        return render_poly(p, style);
    }
    let den = render_poly(f.den(), style);
    match style {
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
        Style::Text => {
            let terms = f.num().coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms > 1 {
                format!("({num})/({den})")
            } else {
                format!("{num}/({den})")
            }
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.ws();
        self.pos == self.s.len()
    }

    fn uint(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn attempt<T>(&mut self, f: impl FnOnce(&mut Self) -> Option<T>) -> Option<T> {
        let save = self.pos;
        let out = f(self);
        if out.is_none() {
            self.pos = save;
        }
        out
    }

    fn coef(&mut self) -> Option<Rational> {
        if let Some(n) = self.uint() {
            return Some(Rational::from_integer(n));
        }
        if let Some(r) = self.attempt(|c| {
            c.eat("(").then_some(())?;
            let n = c.uint()?;
            c.eat("/").then_some(())?;
            let d = c.uint()?;
            c.eat(")").then_some(())?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }) {
            return Some(r);
        }
        self.attempt(|c| {
            c.eat("\\frac{").then_some(())?;
            let n = c.uint()?;
            c.eat("}{").then_some(())?;
            let d = c.uint()?;
            c.eat("}").then_some(())?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        })
    }

    fn term(&mut self) -> Option<(Rational, usize)> {
        let coef = self.coef();
        if !self.eat("x") {
            return coef.map(|c| (c, 0));
        }
        let mut power = 1;
        if self.eat("^") {
            power = if self.eat("{") {
                let e = self.uint()?;
                self.eat("}").then_some(())?;
                e
            } else {
                self.uint()?
            }
            .try_into()
            .ok()?;
        }
        Some((coef.unwrap_or_else(Rational::one), power))
    }

    fn poly(&mut self) -> Option<Polynomial<Rational>> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut push = |c: Rational, k: usize| {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = &coeffs[k] + c;
        };
        self.ws();
        let neg = self.eat("-");
        self.ws();
        let (c, k) = self.term()?;
        push(if neg { -c } else { c }, k);
        loop {
            let save = self.pos;
            self.ws();
            let neg = if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                self.pos = save;
                break;
            };
            self.ws();
            match self.term() {
                Some((c, k)) => push(if neg { -c } else { c }, k),
                None => {
                    self.pos = save;
                    break;
                }
            }
        }
        Some(Polynomial::new(&(), coeffs))
    }

    fn group(&mut self, open: &str, close: &str) -> Option<Polynomial<Rational>> {
        self.attempt(|c| {
            c.ws();
            c.eat(open).then_some(())?;
            let p = c.poly()?;
            c.ws();
            c.eat(close).then_some(p)
        })
    }
}

/// Parses either output grammar back into a canonical rational function.
pub fn parse(input: &str) -> Result<RationalFunction<Rational>> {
    let mut c = Cursor { s: input.trim().as_bytes(), pos: 0 };
    let err = || Error::Parse(format!("not a rendered rational function: `{input}`"));

    if let Some(p) = c.attempt(|c| c.poly().filter(|_| c.at_end())) {
        return Ok(RationalFunction::from_poly(p));
    }
    if let Some((n, d)) = c.attempt(|c| {
        c.eat("\\frac{").then_some(())?;
        let n = c.poly()?;
        c.ws();
        c.eat("}{").then_some(())?;
        let d = c.poly()?;
        c.ws();
        c.eat("}").then_some(())?;
        c.at_end().then_some((n, d))
    }) {
        return RationalFunction::new(n, d);
    }
    let (n, d) = c
        .attempt(|c| {
            let n = c.group("(", ")").or_else(|| c.poly())?;
            c.ws();
            c.eat("/").then_some(())?;
            let d = c.group("(", ")")?;
            c.at_end().then_some((n, d))
        })
        .ok_or_else(err)?;
    RationalFunction::new(n, d)
}
