//! Sparse polynomials in `x_1..x_n` and the polynomial representation M(1).

mod rep;
mod relations;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::Result;
use crate::group::GroupElem;
use crate::scalar::{cyc, ParamPoint, ParamScalar, Params};

pub use rep::{Fault, Operator, PolyRep};
pub use relations::{check_relations, RelationReport};
pub use text::{parse_poly, parse_scalar};

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Exponent, ParamScalar>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: Exponent, c: ParamScalar) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn constant(n: usize, c: ParamScalar) -> Self {
        Self::monomial(vec![0; n], c)
    }

    /// The variable `x_{i+1}`.
    pub fn var(params: &Params, n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, params.one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&ParamScalar> {
        self.terms.get(e)
    }

    pub fn add_term(&mut self, e: Exponent, c: ParamScalar) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &Poly, s: &ParamScalar) {
        if s.is_zero() {
            return;
        }
        let unit = s.is_one();
        for (e, c) in &other.terms {
            self.add_term(e.clone(), if unit { c.clone() } else { c * s });
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &ParamScalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplication by `x_{i+1}`.
    pub fn mul_x(&self, i: usize) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// The automorphism `f ↦ w.f` induced by `w x_i = ζ^{c_i} x_{w(i)}`.
    pub fn act(&self, w: &GroupElem) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            let (k, nu) = w.act_monomial(e);
            let c = if k == 0 {
                c.clone()
            } else {
                c.scale(&cyc(w.r(), k as i64))
            };
            out.terms.insert(nu, c);
        }
        out
    }

    /// Largest total degree of a term; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The value if the polynomial is constant.
    pub fn as_scalar(&self) -> Option<ParamScalar> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&vec![0; self.n][..]).cloned(),
            _ => None,
        }
    }

    /// Substitutes a parameter point into every coefficient.
    pub fn specialize(&self, point: &ParamPoint) -> Result<Poly> {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), ParamScalar::Special(c.specialize(point)?));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| json!({"exp": e, "coeff": c.to_string()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    /// Inverse of [`Poly::to_json`].
    pub fn from_json(params: &Params, v: &Value) -> Result<Poly> {
        use crate::error::Error;
        let bad = |m: &str| Error::Parse(format!("polynomial JSON: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut out = Poly::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let e: Exponent = t["exp"]
                .as_array()
                .ok_or_else(|| bad("missing exp"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<_>>()?;
            if e.len() != n {
                return Err(bad("exponent length"));
            }
            let c = parse_scalar(params, t["coeff"].as_str().ok_or_else(|| bad("missing coeff"))?)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| {
            if a == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, a)
            }
        })
        .collect();
    parts.join(" ")
}

impl fmt::Display for Poly {
    /// Terms in decreasing lex order, `coeff * x1^a x2^b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_monomial(e);
            let rational = c.as_constant().and_then(|v| v.as_rational().cloned());
            let (neg, body) = match &rational {
                Some(q) => {
                    use num_traits::Signed;
                    (q.is_negative(), crate::scalar::fmt_rational(&q.abs()))
                }
                None => (false, format!("({c})")),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (mono.is_empty(), body.as_str()) {
                (true, _) => write!(f, "{body}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) => write!(f, "{body} * {mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// All exponent vectors of length `n` and total degree `d`, in lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![vec![4]]);
        assert_eq!(monomials_of_degree(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn group_action_examples() {
        let spec = GroupSpec::new(2, 1, 2).unwrap();
        let ps = Params::generic(spec);
        let x1 = Poly::var(&ps, 2, 0);
        let x2 = Poly::var(&ps, 2, 1);
        let id = GroupElem::identity(2, 2);
        let f = x1.mul(&x2).add(&x2.mul(&x2).scale(&ps.kappa()));
        assert_eq!(f.act(&id), f);
        let z1 = GroupElem::diagonal(2, 2, 0, 1);
        assert_eq!(x1.act(&z1), x1.neg());
        let s = GroupElem::transposition(2, 2, 0, 1);
        let g = x1.mul(&x2).mul(&x2);
        assert_eq!(g.act(&s), x1.mul(&x1).mul(&x2));
    }

    #[test]
    fn display_and_json_roundtrip() {
        let spec = GroupSpec::new(3, 1, 2).unwrap();
        let ps = Params::generic(spec);
        let x1 = Poly::var(&ps, 2, 0);
        let x2 = Poly::var(&ps, 2, 1);
        let c = &(&ps.kappa() - &ps.c0()) / &(&ps.d(1) + &ps.int(2));
        let f = x1.mul(&x1).sub(&x2.scale(&c)).add(&Poly::constant(2, ps.cyc(1)));
        let s = f.to_string();
        assert_eq!(parse_poly(&ps, 2, &s).unwrap(), f, "{s}");
        assert_eq!(Poly::from_json(&ps, &f.to_json()).unwrap(), f);
    }
}
