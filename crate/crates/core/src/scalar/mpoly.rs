//! Sparse multivariate polynomials over Q(ζ_r) in the parameter variables,
//! with exact division and a recursive gcd.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycScalar;

/// Exponent vector with trailing zeros removed, so that the derived `Ord`
/// on `Vec` is lexicographic order with variable 0 largest.
pub type Mono = Vec<u16>;

fn trim(m: &mut Mono) {
    while m.last() == Some(&0) {
        m.pop();
    }
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = vec![0u16; a.len().max(b.len())];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    trim(&mut out);
    out
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.clone();
    for (i, e) in b.iter().enumerate() {
        if out[i] < *e {
            return None;
        }
        out[i] -= e;
    }
    trim(&mut out);
    Some(out)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    r: u32,
    terms: BTreeMap<Mono, CycScalar>,
}

impl MPoly {
    pub fn zero(r: u32) -> Self {
        MPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        let mut p = Self::zero(c.order());
        if !c.is_zero() {
            p.terms.insert(vec![], c);
        }
        p
    }

    pub fn one(r: u32) -> Self {
        Self::constant(CycScalar::one(r))
    }

    /// The variable with index `v`.
    pub fn var(r: u32, v: usize) -> Self {
        let mut m = vec![0u16; v + 1];
        m[v] = 1;
        let mut p = Self::zero(r);
        p.terms.insert(m, CycScalar::one(r));
        p
    }

    pub fn from_terms(r: u32, terms: impl IntoIterator<Item = (Mono, CycScalar)>) -> Self {
        let mut p = Self::zero(r);
        for (mut m, c) in terms {
            trim(&mut m);
            p.add_term(m, c);
        }
        p
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<CycScalar> {
        match self.terms.len() {
            0 => Some(CycScalar::zero(self.r)),
            1 => self.terms.get(&vec![]).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    fn add_term(&mut self, m: Mono, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Mono, &CycScalar)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            r: self.r,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.r);
        }
        MPoly {
            r: self.r,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        let mut out = Self::zero(self.r);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    fn mul_term(&self, m: &Mono, c: &CycScalar) -> Self {
        MPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mono_mul(mm, m), cc * c))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inverse().unwrap()));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let dc_inv = dc.inverse().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero(self.r);
        while let Some((rm, rc)) = rem.leading() {
            let qm = mono_div(rm, &dm)?;
            let qc = rc * &dc_inv;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max().filter(|&l| l > 0).map(|l| l - 1)
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Coefficients with respect to variable `v`, as polynomials in the others.
    fn coeffs_in(&self, v: usize) -> BTreeMap<u16, MPoly> {
        let mut out: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(v).copied().unwrap_or(0);
            let mut rest = m.clone();
            if v < rest.len() {
                rest[v] = 0;
                trim(&mut rest);
            }
            out.entry(e)
                .or_insert_with(|| MPoly::zero(self.r))
                .add_term(rest, c.clone());
        }
        out
    }

    /// Divides by the leading coefficient, giving a monic polynomial.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.as_constant().is_some() || o.as_constant().is_some() {
            return Self::one(self.r);
        }
        if self == o {
            return self.monic();
        }
        gcd_rec(self, o).monic()
    }

    /// Evaluates at a point; `vals[v]` is the value of variable `v`.
    pub fn eval(&self, vals: &[CycScalar]) -> CycScalar {
        let mut acc = CycScalar::zero(self.r);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &vals[v].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

fn content_in(p: &MPoly, v: usize) -> MPoly {
    let cs = p.coeffs_in(v);
    let mut g: Option<MPoly> = None;
    for c in cs.values() {
        g = Some(match g {
            None => c.monic(),
            Some(g) => g.gcd(c),
        });
        if g.as_ref().unwrap().is_one() {
            break;
        }
    }
    g.unwrap_or_else(|| MPoly::one(p.r))
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn prem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lb = bc.get(&db).unwrap().clone();
    let mut rem = a.clone();
    loop {
        if rem.is_zero() {
            return rem;
        }
        let dr = rem.degree_in(v);
        if dr < db {
            return rem;
        }
        let rc = rem.coeffs_in(v);
        let lr = rc.get(&dr).unwrap().clone();
        // rem := lb * rem - lr * v^(dr-db) * b
        let mut shift = vec![0u16; v + 1];
        shift[v] = dr - db;
        let t = b.mul(&lr).mul_term(&shift, &CycScalar::one(a.r));
        rem = rem.mul(&lb).sub(&t);
    }
}

fn gcd_rec(a: &MPoly, b: &MPoly) -> MPoly {
    let r = a.r;
    let va = a.max_var();
    let vb = b.max_var();
    let v = match (va, vb) {
        (None, _) | (_, None) => return MPoly::one(r),
        (Some(x), Some(y)) => x.max(y),
    };
    // If only one side involves v, the gcd is the gcd of the other with
    // every coefficient in v.
    if a.degree_in(v) == 0 {
        return gcd_with_coeffs(a, b, v);
    }
    if b.degree_in(v) == 0 {
        return gcd_with_coeffs(b, a, v);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cont = ca.gcd(&cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() && q.degree_in(v) > 0 {
        let rem = prem(&p, &q, v);
        p = q;
        if rem.is_zero() {
            q = rem;
            break;
        }
        let cr = content_in(&rem, v);
        q = rem.div_exact(&cr).unwrap();
    }
    let g = if q.is_zero() {
        let cp = content_in(&p, v);
        p.div_exact(&cp).unwrap()
    } else {
        MPoly::one(r)
    };
    g.mul(&cont)
}

fn gcd_with_coeffs(free: &MPoly, other: &MPoly, v: usize) -> MPoly {
    let mut g = free.monic();
    for c in other.coeffs_in(v).values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn var_name(v: usize) -> String {
    match v {
        0 => "k".to_string(),
        1 => "c0".to_string(),
        j => format!("d{}", j - 1),
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        var_name(v)
                    } else {
                        format!("{}^{}", var_name(v), e)
                    }
                })
                .collect();
            let cs = c.to_string();
            let simple = c.as_rational().is_some();
            let (neg, body) = if simple && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else {
                (false, cs)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = if simple { body } else { format!("({body})") };
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", body, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl MPoly {
    /// True if the leading coefficient is one.
    pub fn is_monic(&self) -> bool {
        self.leading().is_none_or(|(_, c)| c.is_one())
    }

    /// True if every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cyclotomic::cyc;

    fn v(i: usize) -> MPoly {
        MPoly::var(3, i)
    }
    fn c(k: i64) -> MPoly {
        MPoly::constant(CycScalar::from_int(3, k))
    }

    #[test]
    fn lex_leading_term() {
        let p = v(1).mul(&v(1)).add(&v(0));
        assert_eq!(p.leading().unwrap().0, &vec![1u16]);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = v(0).add(&v(1).scale(&cyc(3, 1))).add(&c(2));
        let b = v(2).sub(&v(0)).add(&c(-1));
        let p = a.mul(&b).mul(&a);
        assert_eq!(p.div_exact(&a).unwrap(), a.mul(&b));
        assert!(p.div_exact(&v(1).add(&c(7))).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let g = v(0).sub(&v(1).scale(&cyc(3, 2))).add(&c(1));
        let a = g.mul(&v(2).add(&c(3))).mul(&v(0));
        let b = g.mul(&g).mul(&v(1).sub(&v(2)));
        assert_eq!(a.gcd(&b), g.monic());
        let coprime = v(0).add(&c(1)).gcd(&v(1).add(&c(1)));
        assert!(coprime.is_one());
    }

    #[test]
    fn display() {
        let p = v(0).scale(&CycScalar::from_int(3, 2)).sub(&v(1)).add(&c(1));
        assert_eq!(p.to_string(), "2*k - c0 + 1");
    }
}
