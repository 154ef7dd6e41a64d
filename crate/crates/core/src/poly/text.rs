//! Parser for scalar and polynomial text.
//!
//! Grammar, with juxtaposition meaning multiplication:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := NUMBER | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers: `z` (ζ), `k` or `kappa`, `c0`, `c<l>` (diagonal class
//! parameter), `d<j>` (any integer `j`, folded mod `r/p`), `x<i>` (1-based).

use num_bigint::BigInt;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{ParamScalar, Params};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    params: &'a Params,
    n: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, m: &str) -> Result<T> {
        Err(Error::Parse(format!("{m} at token {}", self.pos)))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                let s = match d.as_scalar() {
                    Some(s) => s,
                    None if d.is_zero() => return self.err("division by zero"),
                    None => return self.err("division by a non-constant polynomial"),
                };
                match s.inverse() {
                    Some(inv) => acc = acc.scale(&inv),
                    None => return self.err("division by zero"),
                }
            } else if self.starts_atom() {
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(v)) => {
                let v: u32 = v.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                v
            }
            _ => return self.err("expected integer exponent"),
        };
        let b = if neg {
            match base.as_scalar().and_then(|s| s.inverse()) {
                Some(inv) => Poly::constant(self.n, inv),
                None => return self.err("negative power of a non-invertible value"),
            }
        } else {
            base
        };
        let mut acc = Poly::constant(self.n, self.params.one());
        for _ in 0..e {
            acc = acc.mul(&b);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        let t = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        let ps = self.params;
        let konst = |s: ParamScalar| Poly::constant(self.n, s);
        match t {
            Tok::Num(v) => Ok(konst(ps.rational(crate::scalar::Rational::from_integer(v)))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Tok::Sym(c) => self.err(&format!("unexpected {c:?}")),
            Tok::Ident(name) => {
                let idx = |p: &str| -> Option<i64> { name.strip_prefix(p)?.parse().ok() };
                if name == "z" {
                    Ok(konst(ps.cyc(1)))
                } else if name == "k" || name == "kappa" {
                    Ok(konst(ps.kappa()))
                } else if name == "c0" {
                    Ok(konst(ps.c0()))
                } else if let Some(l) = idx("c") {
                    Ok(konst(ps.c_diag(l)))
                } else if let Some(j) = idx("d") {
                    Ok(konst(ps.d(j)))
                } else if let Some(i) = idx("x") {
                    if i < 1 || i as usize > self.n {
                        return self.err(&format!("variable x{i} out of range"));
                    }
                    Ok(Poly::var(ps, self.n, i as usize - 1))
                } else {
                    self.err(&format!("unknown identifier {name:?}"))
                }
            }
        }
    }
}

/// Parses a polynomial in `x_1..x_n`.
pub fn parse_poly(params: &Params, n: usize, s: &str) -> Result<Poly> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        params,
        n,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a parameter-dependent scalar.
pub fn parse_scalar(params: &Params, s: &str) -> Result<ParamScalar> {
    let p = parse_poly(params, 0, s)?;
    Ok(p.as_scalar().unwrap_or_else(|| params.zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn ps() -> Params {
        Params::generic(GroupSpec::new(4, 2, 2).unwrap())
    }

    #[test]
    fn scalars() {
        let ps = ps();
        assert_eq!(parse_scalar(&ps, "z^4").unwrap(), ps.one());
        assert_eq!(parse_scalar(&ps, "z^-1").unwrap(), ps.cyc(3));
        assert_eq!(parse_scalar(&ps, "d0 + d1").unwrap(), ps.zero());
        assert_eq!(parse_scalar(&ps, "d3").unwrap(), ps.d(1));
        assert_eq!(
            parse_scalar(&ps, "2 k c0 - 1/3").unwrap(),
            &(&ps.int(2) * &(&ps.kappa() * &ps.c0())) - &ps.rational(crate::scalar::rat(1, 3))
        );
        assert!(parse_scalar(&ps, "1/(k - k)").is_err());
        assert!(parse_scalar(&ps, "q").is_err());
    }

    #[test]
    fn scalar_print_roundtrip() {
        let ps = ps();
        let s = &(&ps.kappa() - &ps.cyc(1) * &ps.d(1)) / &(&ps.c0().pow(2) + &ps.int(3));
        assert_eq!(parse_scalar(&ps, &s.to_string()).unwrap(), s);
    }

    #[test]
    fn polynomials() {
        let ps = ps();
        let f = parse_poly(&ps, 2, "x1^2 x2 - 3 * x2 + (k) * x1").unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coeff(&[2, 1]), Some(&ps.one()));
        assert!(parse_poly(&ps, 2, "x3").is_err());
    }
}
