//! Text syntax for scalars in Q(t) and Laurent polynomials over Q(t).
//!
//! Grammar: sums and differences of products and quotients of powers;
//! atoms are integers, `t`, declared variables and parenthesized
//! expressions. Exponents are integers and may be negative (`z^-1`) when the
//! base is a single term. Division is only by single terms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::scalar::{Rational, TScalar};

/// Names that cannot be used as ring variables.
pub const RESERVED_NAMES: &[&str] = &["t", "s", "u"];

pub fn validate_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Input(format!("invalid variable name {n:?}")));
        }
        if RESERVED_NAMES.contains(&n.as_str()) {
            return Err(Error::Input(format!("variable name {n:?} is reserved")));
        }
        if names[..i].contains(n) {
            return Err(Error::Input(format!("duplicate variable name {n:?}")));
        }
    }
    Ok(())
}

/// Splits `x,y,z` into names and validates them.
pub fn parse_vars(s: &str) -> Result<Vec<String>> {
    let names: Vec<String> = s.split(',').map(|v| v.trim().to_string()).collect();
    validate_names(&names)?;
    Ok(names)
}

pub fn parse_poly(src: &str, vars: &[String]) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        vars,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

pub fn parse_scalar(src: &str) -> Result<TScalar> {
    let f = parse_poly(src, &[])?;
    Ok(f.as_constant().expect("no variables declared"))
}

/// Parses an ideal file: one polynomial per line, `#` starts a comment.
pub fn parse_ideal_text(text: &str, vars: &[String]) -> Result<Vec<LaurentPoly>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let f = parse_poly(body, vars).map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: lineno + 1,
                column,
                message,
            },
            other => other,
        })?;
        out.push(f);
    }
    Ok(out)
}

/// Parses a list separated by commas, semicolons or newlines.
pub fn parse_poly_list(text: &str, vars: &[String]) -> Result<Vec<LaurentPoly>> {
    let joined = text.replace([',', ';'], "\n");
    parse_ideal_text(&joined, vars)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Parse {
            line,
            column: col,
            message: message.to_string(),
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                let inv = invert_term(&d).ok_or_else(|| {
                    self.pos = at;
                    self.error("division is only defined by a nonzero single term")
                })?;
                acc = acc.mul(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let k = self.integer()?;
        if paren && !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        let k: u32 = k
            .try_into()
            .map_err(|_| self.error("exponent out of range"))?;
        if neg {
            let inv = invert_term(&base).ok_or_else(|| {
                self.pos = at;
                self.error("negative powers are only defined for nonzero single terms")
            })?;
            Ok(inv.pow(k))
        } else {
            Ok(base.pow(k))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(LaurentPoly::constant(
                    self.n(),
                    TScalar::from_rational(Rational::from_integer(k)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "t" {
                    return Ok(LaurentPoly::constant(self.n(), TScalar::t()));
                }
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(LaurentPoly::var(self.n(), i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable {name:?}")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Inverse of a nonzero polynomial made of one term whose coefficient is a
/// unit of Q(t) (any nonzero scalar).
fn invert_term(f: &LaurentPoly) -> Option<LaurentPoly> {
    if let Some(c) = f.as_constant() {
        if c.is_zero() {
            return None;
        }
        return Some(LaurentPoly::constant(f.nvars(), c.inv()?));
    }
    let (m, c) = f.as_term()?;
    let inv_m = Monomial::one(m.len()).div(m);
    Some(LaurentPoly::term(&TScalar::one() / c, inv_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn names(s: &str) -> Vec<String> {
        s.split(',').map(String::from).collect()
    }

    #[test]
    fn scalars() {
        let a = parse_scalar("(2*t + t^2)/t").unwrap();
        assert_eq!(a, &TScalar::from_int(2) + &TScalar::t());
        assert_eq!(parse_scalar("t^-2").unwrap(), TScalar::split(-2));
        assert_eq!(parse_scalar("3/6").unwrap(), TScalar::from_rational(crate::scalar::rat(1, 2)));
        let q = parse_scalar("(1+t)/(1-t)").unwrap();
        assert_eq!(q.to_string(), "(-t - 1)/(t - 1)");
        assert_eq!(
            parse_poly("x/(x+1)", &names("x")).unwrap_err(),
            Error::Parse { line: 1, column: 2, message: "division is only defined by a nonzero single term".into() }
        );
    }

    #[test]
    fn polynomials() {
        let v = names("x,y,z");
        let f = parse_poly("(x-1)*(y-1-t*z) - t*(y-1)^2", &v).unwrap();
        assert_eq!(f.len(), 7);
        let g = parse_poly("x^-1*(y - 1)", &v).unwrap();
        assert_eq!(g.coeff(&Monomial::new([-1, 1, 0])), TScalar::one());
        let h = parse_poly("(y-1)/x", &v).unwrap();
        assert_eq!(g, h);
        assert_eq!(parse_poly("-x^2", &v).unwrap().coeff(&Monomial::new([2, 0, 0])), TScalar::from_int(-1));
        assert_eq!(parse_poly("z^(-1)", &v).unwrap(), parse_poly("1/z", &v).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let v = names("x,y");
        match parse_poly("x + w", &v) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        let text = "# comment\nx - 1\n\ny +* 2\n";
        match parse_ideal_text(text, &v) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ideal_files_and_lists() {
        let v = names("x,y");
        let gens = parse_ideal_text("x - 1   # first\n\n# skip\ny^2\n", &v).unwrap();
        assert_eq!(gens.len(), 2);
        let list = parse_poly_list("x^2 - 2*x + 1, y - 1", &v).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[1].coeff(&Monomial::one(2)), TScalar::from_rational(-int(1)));
    }

    #[test]
    fn variable_names() {
        assert!(parse_vars("x,y,z").is_ok());
        assert!(parse_vars("x,t").is_err());
        assert!(parse_vars("x,x").is_err());
        assert!(parse_vars("1x").is_err());
    }
}
