use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::mpoly::MPoly;
use super::ring::{Rational, Ring};
use super::unipoly::UniPoly;

/// Rejection of malformed polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ParseError: {0}")]
pub struct ParseError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '.' => return err("floating-point literals are not accepted"),
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else if d == '.' {
                        return err("floating-point literals are not accepted");
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(digits.parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            other => return err(format!("unexpected character '{other}'")),
        }
    }
    Ok(toks)
}

/// Parse the plain polynomial format, e.g. `x^2 - 3/2*x + 2`. Returns the
/// polynomial and the variable name, `None` when the text is constant.
/// Floating literals, several distinct variables, and negative or
/// fractional exponents are all rejected.
pub fn parse_poly(text: &str) -> Result<(UniPoly<Rational>, Option<String>), ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err("empty polynomial");
    }
    let mut var: Option<String> = None;
    let mut acc: UniPoly<Rational> = Ring::zero();
    let mut pos = 0usize;

    while pos < toks.len() {
        // Sign prefix: mandatory between terms, optional before the first.
        let mut negate = false;
        match toks[pos] {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                negate = true;
                pos += 1;
            }
            _ if pos > 0 => return err("expected '+' or '-' between terms"),
            _ => {}
        }
        let mut coeff: Rational = Rational::from_integer(1.into());
        let mut degree = 0usize;
        loop {
            match toks.get(pos) {
                Some(Tok::Int(n)) => {
                    pos += 1;
                    let mut value = Rational::from_integer(n.clone());
                    if let Some(Tok::Slash) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Tok::Int(d)) if !d.is_zero() => {
                                value = Rational::new(n.clone(), d.clone());
                                pos += 1;
                            }
                            Some(Tok::Int(_)) => return err("zero denominator"),
                            _ => return err("expected an integer denominator after '/'"),
                        }
                    }
                    coeff *= value;
                }
                Some(Tok::Ident(name)) => {
                    pos += 1;
                    match &var {
                        None => var = Some(name.clone()),
                        Some(v) if v == name => {}
                        Some(v) => {
                            return err(format!(
                                "a univariate polynomial may not mix '{v}' and '{name}'"
                            ))
                        }
                    }
                    let mut e = 1usize;
                    if let Some(Tok::Caret) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Tok::Int(n)) => {
                                e = n
                                    .to_usize()
                                    .filter(|&e| e <= u16::MAX as usize)
                                    .ok_or_else(|| ParseError("exponent out of range".into()))?;
                                pos += 1;
                            }
                            _ => return err("expected a nonnegative integer exponent"),
                        }
                    }
                    degree += e;
                }
                _ => return err("expected a number or variable"),
            }
            if let Some(Tok::Star) = toks.get(pos) {
                pos += 1;
                continue;
            }
            break;
        }
        if negate {
            coeff = -coeff;
        }
        acc = acc.add(&UniPoly::monomial(coeff, degree));
        match toks.get(pos) {
            None | Some(Tok::Plus) | Some(Tok::Minus) => {}
            Some(_) => return err("expected '+' or '-' between terms"),
        }
    }
    Ok((acc, var))
}

fn rational_magnitude(c: &Rational) -> String {
    c.abs().to_string()
}

/// Render in descending powers with explicit `*` and `^`, matching the
/// parse format: `2*r^2 - 5*r + 2`.
pub fn format_poly(p: &UniPoly<Rational>, var: &str) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if Ring::is_zero(&c) {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = rational_magnitude(&c);
        let unit = mag == "1";
        match (k, unit) {
            (0, _) => out.push_str(&mag),
            (1, true) => out.push_str(var),
            (1, false) => {
                out.push_str(&mag);
                out.push('*');
                out.push_str(var);
            }
            (_, true) => out.push_str(&format!("{var}^{k}")),
            (_, false) => out.push_str(&format!("{mag}*{var}^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Render a polynomial whose coefficients are themselves multivariate
/// polynomials. Single-term coefficients are inlined; sums are
/// parenthesized, e.g. `c*r^2 + (-b^2 + 2*c)*r + c`.
pub fn format_sym_poly(p: &UniPoly<MPoly>, var: &str) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if Ring::is_zero(&c) {
            continue;
        }
        let terms = c.terms_desc();
        let single = terms.len() == 1;
        let (body, neg) = if single {
            let (mono, coeff) = &terms[0];
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !Ring::is_one(&mag) || (mono.is_empty() && k == 0) {
                pieces.push(mag.to_string());
            }
            for (name, e) in mono {
                if *e == 1 {
                    pieces.push(name.clone());
                } else {
                    pieces.push(format!("{name}^{e}"));
                }
            }
            (pieces.join("*"), neg)
        } else {
            (format!("({c})"), false)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut piece = body;
        match k {
            0 => {
                if piece.is_empty() {
                    piece = "1".to_string();
                }
            }
            1 => {
                if piece.is_empty() {
                    piece = var.to_string();
                } else {
                    piece = format!("{piece}*{var}");
                }
            }
            _ => {
                if piece.is_empty() {
                    piece = format!("{var}^{k}");
                } else {
                    piece = format!("{piece}*{var}^{k}");
                }
            }
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
