//! The plain-text ideal format.
//!
//! ```text
//! # anything after '#' is ignored
//! n 3
//! 1 1 1
//! 0 2 1
//! ```
//!
//! The first non-blank line is the header `n <variables>`; every further
//! non-blank line is one generator given by its exponent vector.

use monospread::{minimalize_reporting, Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: negative exponent {token}")]
    NegativeExponent { line: usize, token: String },
    #[error("line {line}: expected {expected} exponents, found {found}")]
    WidthMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: exponent {token} is too large")]
    Overflow { line: usize, token: String },
    #[error("line {line}: the unit monomial cannot be a generator")]
    UnitGenerator { line: usize },
    #[error("the file lists no generators")]
    EmptyIdeal,
}

/// A parsed file together with the generators dropped by minimalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub ideal: MonomialIdeal,
    pub dropped: Vec<Monomial>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

fn exponent(token: &str, line: usize) -> Result<u16, ParseError> {
    if let Some(rest) = token.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::NegativeExponent {
                line,
                token: token.to_string(),
            });
        }
    }
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Syntax {
            line,
            message: format!("expected a nonnegative integer, found {token:?}"),
        });
    }
    token.parse::<u16>().map_err(|_| ParseError::Overflow {
        line,
        token: token.to_string(),
    })
}

pub fn parse_ideal(text: &str) -> Result<Parsed, ParseError> {
    let mut ambient: Option<usize> = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let Some(n) = ambient else {
            let n = match tokens.as_slice() {
                ["n", v] => v.parse::<usize>().ok().filter(|&n| n > 0),
                _ => None,
            };
            ambient = Some(n.ok_or_else(|| ParseError::Syntax {
                line,
                message: format!("expected header \"n <variables>\", found {body:?}"),
            })?);
            continue;
        };
        if tokens.len() != n {
            return Err(ParseError::WidthMismatch {
                line,
                expected: n,
                found: tokens.len(),
            });
        }
        let exps = tokens
            .iter()
            .map(|t| exponent(t, line))
            .collect::<Result<Vec<u16>, _>>()?;
        let u = Monomial::new(exps).map_err(|e| ParseError::Syntax {
            line,
            message: e.to_string(),
        })?;
        if u.is_unit() {
            return Err(ParseError::UnitGenerator { line });
        }
        gens.push(u);
    }
    let Some(n) = ambient else {
        return Err(ParseError::EmptyIdeal);
    };
    if gens.is_empty() {
        return Err(ParseError::EmptyIdeal);
    }
    let (kept, dropped) = minimalize_reporting(&gens).map_err(|e| ParseError::Syntax {
        line: 0,
        message: e.to_string(),
    })?;
    let ideal = MonomialIdeal::from_minimal(n, kept).map_err(|e| ParseError::Syntax {
        line: 0,
        message: e.to_string(),
    })?;
    Ok(Parsed { ideal, dropped })
}

/// The ideal in file format, generators in their stored order.
pub fn write_ideal(i: &MonomialIdeal) -> String {
    let mut out = format!("n {}\n", i.ambient());
    for g in i.generators() {
        out.push_str(&g.exponent_string());
        out.push('\n');
    }
    out
}
