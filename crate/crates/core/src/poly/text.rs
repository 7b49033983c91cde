//! Canonical text form: `1 + 6x + 9x^2 + 3x^3`.
//!
//! The parser accepts the same grammar with arbitrary whitespace, an optional
//! `*` between coefficient and variable, and terms in any order (repeated
//! powers are summed).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Polynomial};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| PolyError::Parse(format!("{msg} in {s:?}"));
        let words: Vec<&str> = s.split_whitespace().collect();
        if words.windows(2).any(|w| {
            w[0].ends_with(|c: char| c.is_ascii_digit())
                && w[1].starts_with(|c: char| c.is_ascii_digit())
        }) {
            return Err(err("digits separated by whitespace"));
        }
        let compact: Vec<char> = words.concat().chars().collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        while i < compact.len() {
            let mut negative = false;
            match compact[i] {
                '+' | '-' => {
                    negative = compact[i] == '-';
                    i += 1;
                }
                _ if i > 0 => return Err(err("expected '+' or '-'")),
                _ => {}
            }
            let start = i;
            while i < compact.len() && compact[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = compact[start..i].iter().collect();
            let mut has_var = false;
            if i < compact.len() && compact[i] == '*' {
                if digits.is_empty() {
                    return Err(err("'*' without a coefficient"));
                }
                i += 1;
                if i >= compact.len() || compact[i] != 'x' {
                    return Err(err("expected 'x' after '*'"));
                }
            }
            let mut exponent = 0usize;
            if i < compact.len() && compact[i] == 'x' {
                has_var = true;
                exponent = 1;
                i += 1;
                if i < compact.len() && compact[i] == '^' {
                    i += 1;
                    let es = i;
                    while i < compact.len() && compact[i].is_ascii_digit() {
                        i += 1;
                    }
                    if es == i {
                        return Err(err("missing exponent"));
                    }
                    let exp: String = compact[es..i].iter().collect();
                    exponent = exp.parse().map_err(|_| err("exponent too large"))?;
                }
            }
            if digits.is_empty() && !has_var {
                return Err(err("empty term"));
            }
            let mut c = if digits.is_empty() {
                BigInt::one()
            } else {
                digits
                    .parse::<BigInt>()
                    .map_err(|_| err("bad coefficient"))?
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= exponent {
                coeffs.resize(exponent + 1, BigInt::zero());
            }
            coeffs[exponent] += c;
        }
        Ok(Polynomial::new(coeffs))
    }
}
