//! Parser for the canonical string form of polynomials and rational
//! functions. `print` followed by `parse` round-trips exactly.

use std::sync::Arc;

use num_bigint::BigInt;

use super::frac::{RationalFunction, SymError};
use super::poly::Polynomial;
use super::vars::VariableTable;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Tok>, SymError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i]
                    .parse()
                    .map_err(|_| SymError::Parse(format!("bad integer at {start}")))?;
                toks.push(Tok::Int(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push(Tok::Sym(input[start..i].to_owned()));
            }
            _ => return Err(SymError::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    table: &'a Arc<VariableTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_exponent(&mut self) -> Result<i32, SymError> {
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.next();
        }
        match self.next() {
            Some(Tok::Int(n)) => {
                let e: i32 = n
                    .try_into()
                    .map_err(|_| SymError::Parse("exponent out of range".into()))?;
                Ok(if neg { -e } else { e })
            }
            got => Err(SymError::Parse(format!("expected exponent, got {got:?}"))),
        }
    }

    /// factor := int | sym [^ exp]
    fn parse_factor(&mut self) -> Result<Polynomial, SymError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(self.table, n)),
            Some(Tok::Sym(s)) => {
                if self.table.index_of(&s).is_none() {
                    return Err(SymError::UnknownSymbol(s));
                }
                let e = if matches!(self.peek(), Some(Tok::Caret)) {
                    self.next();
                    self.parse_exponent()?
                } else {
                    1
                };
                Ok(Polynomial::symbol_pow(self.table, &s, e))
            }
            got => Err(SymError::Parse(format!("expected factor, got {got:?}"))),
        }
    }

    /// term := factor (* factor)*
    fn parse_term(&mut self) -> Result<Polynomial, SymError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    /// poly := [-] term ((+|-) term)*
    fn parse_poly(&mut self) -> Result<Polynomial, SymError> {
        let mut negate = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            negate = true;
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

pub fn parse_polynomial(
    table: &Arc<VariableTable>,
    input: &str,
) -> Result<Polynomial, SymError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
        table,
    };
    let poly = p.parse_poly()?;
    if p.pos != p.toks.len() {
        return Err(SymError::Parse("trailing tokens".into()));
    }
    Ok(poly)
}

/// Accepts the canonical `(num)/(den)` form as well as a bare polynomial.
pub fn parse_rational(
    table: &Arc<VariableTable>,
    input: &str,
) -> Result<RationalFunction, SymError> {
    let toks = lex(input)?;
    // canonical fraction: ( poly ) / ( poly )
    if toks.first() == Some(&Tok::LParen) {
        // Find the matching close paren of the leading group.
        let mut depth = 0usize;
        let mut close = None;
        for (i, t) in toks.iter().enumerate() {
            match t {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        if let Some(ci) = close {
            if toks.get(ci + 1) == Some(&Tok::Slash) && toks.get(ci + 2) == Some(&Tok::LParen) {
                let num = {
                    let mut p = Parser {
                        toks: toks[1..ci].to_vec(),
                        pos: 0,
                        table,
                    };
                    let poly = p.parse_poly()?;
                    if p.pos != p.toks.len() {
                        return Err(SymError::Parse("trailing tokens in numerator".into()));
                    }
                    poly
                };
                if toks.last() != Some(&Tok::RParen) {
                    return Err(SymError::Parse("unterminated denominator".into()));
                }
                let den = {
                    let mut p = Parser {
                        toks: toks[ci + 3..toks.len() - 1].to_vec(),
                        pos: 0,
                        table,
                    };
                    let poly = p.parse_poly()?;
                    if p.pos != p.toks.len() {
                        return Err(SymError::Parse("trailing tokens in denominator".into()));
                    }
                    poly
                };
                return RationalFunction::new(num, den);
            }
        }
    }
    Ok(RationalFunction::from_poly(parse_polynomial(table, input)?))
}

/// Parse an integer or `a/b` fraction as a rational function (CLI inputs).
pub fn parse_simple_rational(
    table: &Arc<VariableTable>,
    input: &str,
) -> Result<RationalFunction, SymError> {
    if let Some((a, b)) = input.split_once('/') {
        let num = parse_polynomial(table, a.trim())?;
        let den = parse_polynomial(table, b.trim())?;
        RationalFunction::new(num, den)
    } else {
        parse_rational(table, input.trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<VariableTable> {
        VariableTable::new(&[("b", true), ("q", true), ("z1", true), ("z2", true)])
    }

    #[test]
    fn round_trip_polynomial() {
        let t = table();
        let p = parse_polynomial(&t, "q^2*z1^-1*z2 - b").unwrap();
        assert_eq!(p.to_string(), "q^2*z1^-1*z2 - b");
    }

    #[test]
    fn round_trip_rational() {
        let t = table();
        let r = parse_rational(&t, "(b*q - 1)/(q^2*z1 + 1)").unwrap();
        let printed = r.to_string();
        let again = parse_rational(&t, &printed).unwrap();
        assert!(r.eq_sym(&again));
        assert_eq!(printed, again.to_string());
    }

    #[test]
    fn coefficient_one_omitted() {
        let t = table();
        let p = parse_polynomial(&t, "2*b + z1").unwrap();
        assert_eq!(p.to_string(), "2*b + z1");
    }

    #[test]
    fn unknown_symbol_rejected() {
        let t = table();
        assert!(matches!(
            parse_polynomial(&t, "w + 1"),
            Err(SymError::UnknownSymbol(_))
        ));
    }
}
