//! Text grammar and canonical printing for field specs, polynomials and
//! rational functions.
//!
//! Grammar: integer coefficients (prime fields) or `w`-polynomial
//! coefficients (extensions), `t` as the variable, `^` for powers, `*` for
//! products, a single top-level `/` separating numerator and denominator,
//! e.g. `(t^3+2*t)/(t+1)`. Field specs look like `GF(3)` or `GF(4;w^2+w+1)`.
//!
//! Canonical printing: monic denominator, terms in decreasing exponent
//! order, no spaces, coefficients as reduced residues (never `-`), the
//! denominator omitted when it is 1.

use num_bigint::BigUint;
use num_traits::Zero;
use std::fmt::Write as _;

use super::field::FieldDescriptor;
use super::poly::Polynomial;
use super::ratfunc::RatFunc;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    W,
    T,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Semi,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn err(position: usize, expected: &str) -> AlgebraError {
    AlgebraError::SyntaxError {
        position,
        expected: expected.to_string(),
    }
}

fn lex(text: &str) -> Result<Lexer, AlgebraError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut val: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    val = val
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or_else(|| err(start, "a smaller integer"))?;
                    i += 1;
                }
                toks.push((start, Tok::Int(val)));
            }
            b'w' => {
                toks.push((i, Tok::W));
                i += 1;
            }
            b't' => {
                toks.push((i, Tok::T));
                i += 1;
            }
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            b'/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b';' => {
                toks.push((i, Tok::Semi));
                i += 1;
            }
            _ => return Err(err(i, "a coefficient, t, w or an operator")),
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: text.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), AlgebraError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.here(), what))
        }
    }
}

/// sum := ['-'] product (('+'|'-') product)*
fn parse_sum(lx: &mut Lexer, field: &FieldDescriptor) -> Result<Polynomial, AlgebraError> {
    let mut negate = false;
    if lx.peek() == Some(&Tok::Minus) {
        lx.next();
        negate = true;
    }
    let mut acc = parse_product(lx, field)?;
    if negate {
        acc = acc.neg(field);
    }
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                let rhs = parse_product(lx, field)?;
                acc = acc.add(field, &rhs);
            }
            Some(Tok::Minus) => {
                lx.next();
                let rhs = parse_product(lx, field)?;
                acc = acc.sub(field, &rhs);
            }
            _ => return Ok(acc),
        }
    }
}

/// product := power ('*' power)*
fn parse_product(lx: &mut Lexer, field: &FieldDescriptor) -> Result<Polynomial, AlgebraError> {
    let mut acc = parse_power(lx, field)?;
    while lx.peek() == Some(&Tok::Star) {
        lx.next();
        let rhs = parse_power(lx, field)?;
        acc = acc.mul(field, &rhs);
    }
    Ok(acc)
}

/// power := atom ('^' int)?
fn parse_power(lx: &mut Lexer, field: &FieldDescriptor) -> Result<Polynomial, AlgebraError> {
    let base = parse_atom(lx, field)?;
    if lx.peek() == Some(&Tok::Caret) {
        lx.next();
        match lx.next() {
            Some(Tok::Int(e)) => Ok(base.pow(field, &BigUint::from(e))),
            _ => Err(err(lx.here(), "an exponent")),
        }
    } else {
        Ok(base)
    }
}

fn parse_atom(lx: &mut Lexer, field: &FieldDescriptor) -> Result<Polynomial, AlgebraError> {
    match lx.next() {
        Some(Tok::Int(v)) => Ok(Polynomial::constant(field, field.from_u64(v))),
        Some(Tok::T) => Ok(Polynomial::t(field)),
        Some(Tok::W) => {
            if field.extension_degree() == 1 {
                Err(err(lx.here(), "w only in extension fields"))
            } else {
                Ok(Polynomial::constant(field, field.gen_w()))
            }
        }
        Some(Tok::LParen) => {
            let inner = parse_sum(lx, field)?;
            lx.expect(Tok::RParen, "a closing parenthesis")?;
            Ok(inner)
        }
        _ => Err(err(lx.here(), "a coefficient, t, w or a parenthesis")),
    }
}

/// Parse a polynomial; the whole input must be consumed.
pub fn parse_polynomial(field: &FieldDescriptor, text: &str) -> Result<Polynomial, AlgebraError> {
    let mut lx = lex(text)?;
    let p = parse_sum(&mut lx, field)?;
    if lx.peek().is_some() {
        return Err(err(lx.here(), "end of input"));
    }
    Ok(p)
}

/// Parse a rational function `num` or `num/den`; one top-level `/` only.
pub fn parse_ratfunc(field: &FieldDescriptor, text: &str) -> Result<RatFunc, AlgebraError> {
    let mut lx = lex(text)?;
    let num = parse_sum(&mut lx, field)?;
    match lx.peek() {
        None => RatFunc::new(field, num, Polynomial::one(field)),
        Some(Tok::Slash) => {
            lx.next();
            let den = parse_sum(&mut lx, field)?;
            if lx.peek().is_some() {
                return Err(err(lx.here(), "end of input"));
            }
            RatFunc::new(field, num, den)
        }
        Some(_) => Err(err(lx.here(), "'/' or end of input")),
    }
}

/// Parse `GF(p)` or `GF(q;modulus)` where the modulus is a `w`-polynomial.
pub fn parse_field_spec(spec: &str) -> Result<FieldDescriptor, AlgebraError> {
    let s = spec.trim();
    let inner = s
        .strip_prefix("GF(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| err(0, "a field spec like GF(3) or GF(4;w^2+w+1)"))?;
    match inner.split_once(';') {
        None => {
            let q: u64 = inner
                .trim()
                .parse()
                .map_err(|_| err(3, "a prime order"))?;
            FieldDescriptor::prime(q)
        }
        Some((q_text, mod_text)) => {
            let q: u64 = q_text
                .trim()
                .parse()
                .map_err(|_| err(3, "a prime power order"))?;
            let coeffs = parse_w_poly(mod_text)?;
            let n = coeffs.len().saturating_sub(1);
            if n == 0 {
                return Err(AlgebraError::ModulusConstant);
            }
            // recover p from q = p^n
            let p = integer_nth_root(q, n).ok_or(AlgebraError::NonPrime(q))?;
            let field = FieldDescriptor::extension(p, &coeffs)?;
            if field.order_u64() != Some(q) {
                return Err(AlgebraError::NonPrime(q));
            }
            Ok(field)
        }
    }
}

fn integer_nth_root(q: u64, n: usize) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let mut p = 2u64;
    loop {
        let mut acc: u64 = 1;
        for _ in 0..n {
            acc = acc.checked_mul(p)?;
        }
        match acc.cmp(&q) {
            std::cmp::Ordering::Equal => return Some(p),
            std::cmp::Ordering::Greater => return None,
            std::cmp::Ordering::Less => p += 1,
        }
    }
}

/// Parse a `w`-polynomial like `w^2+w+1` into ascending integer coefficients.
fn parse_w_poly(text: &str) -> Result<Vec<u64>, AlgebraError> {
    let mut lx = lex(text)?;
    let mut coeffs: Vec<u64> = Vec::new();
    let add_term = |coef: u64, exp: usize, coeffs: &mut Vec<u64>| {
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += coef;
    };
    loop {
        // term := int | int '*' w-power | w-power
        let (coef, exp) = match lx.next() {
            Some(Tok::Int(v)) => {
                if lx.peek() == Some(&Tok::Star) {
                    lx.next();
                    let e = parse_w_power(&mut lx)?;
                    (v, e)
                } else {
                    (v, 0)
                }
            }
            Some(Tok::W) => (1, parse_w_exponent(&mut lx)?),
            _ => return Err(err(lx.here(), "a modulus term")),
        };
        add_term(coef, exp, &mut coeffs);
        match lx.next() {
            None => break,
            Some(Tok::Plus) => {}
            _ => return Err(err(lx.here(), "'+' between modulus terms")),
        }
    }
    Ok(coeffs)
}

fn parse_w_power(lx: &mut Lexer) -> Result<usize, AlgebraError> {
    match lx.next() {
        Some(Tok::W) => parse_w_exponent(lx),
        _ => Err(err(lx.here(), "w")),
    }
}

fn parse_w_exponent(lx: &mut Lexer) -> Result<usize, AlgebraError> {
    if lx.peek() == Some(&Tok::Caret) {
        lx.next();
        match lx.next() {
            Some(Tok::Int(e)) => Ok(e as usize),
            _ => Err(err(lx.here(), "an exponent")),
        }
    } else {
        Ok(1)
    }
}

/// Canonical polynomial text: decreasing exponents, reduced coefficients.
pub fn poly_text(field: &FieldDescriptor, p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        if i > 0 {
            out.push('+');
        }
        let coeff_text = field.element_text(c);
        let coeff_is_one = coeff_text == "1";
        if e.is_zero() {
            out.push_str(&coeff_text);
            continue;
        }
        if !coeff_is_one {
            if field.element_term_count(c) > 1 {
                let _ = write!(out, "({coeff_text})*");
            } else {
                let _ = write!(out, "{coeff_text}*");
            }
        }
        if **e == BigUint::from(1u32) {
            out.push('t');
        } else {
            let _ = write!(out, "t^{e}");
        }
    }
    out
}

/// Canonical rational function text; the denominator is omitted when 1,
/// multi-term sides are parenthesized.
pub fn ratfunc_text(field: &FieldDescriptor, x: &RatFunc) -> String {
    let num = poly_text(field, x.num());
    if x.den().is_one(field) {
        return num;
    }
    let den = poly_text(field, x.den());
    let num_wrapped = if x.num().term_count() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den_wrapped = if x.den().term_count() > 1 {
        format!("({den})")
    } else {
        den
    };
    format!("{num_wrapped}/{den_wrapped}")
}
