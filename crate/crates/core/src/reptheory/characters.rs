//! Graded characters of L(1) and the Catalan series.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{elements, GroupElem, GroupSpec};
use crate::scalar::{cyc, fmt_rational, CycScalar, Rational};

use super::invariants::{coxeter_number, degrees, is_irreducible};

/// Dense polynomial in `t`, lowest degree first.
pub type TPoly = Vec<CycScalar>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn tpoly_mul(a: &[CycScalar], b: &[CycScalar], r: u32) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CycScalar::zero(r); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

/// `1 - c t^e`.
fn binomial(r: u32, c: CycScalar, e: usize) -> TPoly {
    let mut p = vec![CycScalar::zero(r); e + 1];
    p[0] = CycScalar::one(r);
    p[e] = &p[e] - &c;
    trim(p)
}

/// Power series `num / den` to `t^trunc`; `den(0)` must be invertible.
pub fn series_div(num: &[CycScalar], den: &[CycScalar], r: u32, trunc: usize) -> TPoly {
    let inv0 = den[0].inverse().expect("denominator has nonzero constant term");
    let mut out: TPoly = Vec::with_capacity(trunc + 1);
    for d in 0..=trunc {
        let mut acc = num.get(d).cloned().unwrap_or_else(|| CycScalar::zero(r));
        for j in 1..den.len().min(d + 1) {
            acc = &acc - &(&den[j] * &out[d - j]);
        }
        out.push(&acc * &inv0);
    }
    out
}

/// Exact quotient `a / b` of polynomials, if `b` divides `a`.
pub fn tpoly_div_exact(a: &[CycScalar], b: &[CycScalar], r: u32) -> Option<TPoly> {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let lead_inv = b.last()?.inverse()?;
    if rem.len() < b.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut q = vec![CycScalar::zero(r); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - &(&c * bj);
        }
        q[shift] = c;
        rem = trim(rem);
    }
    rem.is_empty().then(|| trim(q))
}

/// `det(1 - t^k w_V) / det(1 - t w_{h*})` for one group element, where `V`
/// is spanned by `x_1^k, …, x_n^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedChar {
    pub r: u32,
    pub num: TPoly,
    pub den: TPoly,
}

impl GradedChar {
    pub fn series(&self, trunc: usize) -> TPoly {
        series_div(&self.num, &self.den, self.r, trunc)
    }

    /// The character as a polynomial, when the quotient is exact.
    pub fn as_polynomial(&self) -> Option<TPoly> {
        tpoly_div_exact(&self.num, &self.den, self.r)
    }

    /// Value at `t = 1` when the quotient is a polynomial.
    pub fn value_at_one(&self) -> Option<CycScalar> {
        let p = self.as_polynomial()?;
        Some(p.iter().fold(CycScalar::zero(self.r), |a, b| &a + b))
    }
}

/// The product formula, computed cycle by cycle: a cycle of length `L` and
/// total color `C` contributes `1 - ζ^{kC} t^{kL}` above and `1 - ζ^C t^L`
/// below.
pub fn graded_char_l1(w: &GroupElem, k: u32) -> GradedChar {
    let r = w.r();
    let mut num = vec![CycScalar::one(r)];
    let mut den = vec![CycScalar::one(r)];
    for (cycle, color) in w.cycles() {
        let len = cycle.len();
        num = tpoly_mul(&num, &binomial(r, cyc(r, k as i64 * color as i64), k as usize * len), r);
        den = tpoly_mul(&den, &binomial(r, cyc(r, color as i64), len), r);
    }
    GradedChar { r, num, den }
}

/// `det(1 - t^e M)` by the Leibniz formula, for a matrix of field elements.
pub fn det_one_minus(m: &[Vec<CycScalar>], e: usize, r: u32) -> TPoly {
    let n = m.len();
    // Entries of 1 - t^e M as polynomials in t.
    let entry = |i: usize, j: usize| -> TPoly {
        let mut p = vec![CycScalar::zero(r); e + 1];
        if i == j {
            p[0] = CycScalar::one(r);
        }
        p[e] = &p[e] - &m[i][j];
        trim(p)
    };
    let mut total: TPoly = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p: &[usize]| {
        let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = vec![CycScalar::one(r)];
        for (i, &j) in p.iter().enumerate() {
            term = tpoly_mul(&term, &entry(i, j), r);
        }
        if inv % 2 == 1 {
            term = term.iter().map(|c| -c).collect();
        }
        let len = total.len().max(term.len());
        total.resize(len, CycScalar::zero(r));
        for (i, c) in term.into_iter().enumerate() {
            total[i] = &total[i] + &c;
        }
    });
    trim(total)
}

fn permute(p: &mut Vec<usize>, at: usize, f: &mut dyn FnMut(&[usize])) {
    if at == p.len() {
        f(p);
        return;
    }
    for i in at..p.len() {
        p.swap(at, i);
        permute(p, at + 1, f);
        p.swap(at, i);
    }
}

/// `(1/|W|) Σ_w` of the graded characters, expanded to `t^trunc`.
pub fn invariant_series(spec: &GroupSpec, k: u32, trunc: usize) -> Vec<Rational> {
    let r = spec.r;
    let group = elements(spec);
    let sum = group
        .par_iter()
        .map(|w| graded_char_l1(w, k).series(trunc))
        .reduce(
            || vec![CycScalar::zero(r); trunc + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let inv = Rational::new(1.into(), (group.len() as i64).into());
    sum.iter()
        .map(|c| {
            c.as_rational()
                .map(|q| q * &inv)
                .expect("invariant dimensions are rational")
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalanSeries {
    pub group: String,
    pub coxeter_number: u32,
    pub degrees: Vec<u32>,
    /// Coefficients of `t^0 .. t^trunc`.
    pub coeffs: Vec<String>,
    /// `Π (h + d_i) / d_i`.
    pub value_at_one: String,
    #[serde(skip)]
    pub exact: Vec<Rational>,
    #[serde(skip)]
    pub value: Rational,
}

/// `Π (1 - t^{h+d_i}) / (1 - t^{d_i})` truncated at `t^trunc`.
pub fn catalan_series(spec: &GroupSpec, trunc: usize) -> Result<CatalanSeries> {
    if !is_irreducible(spec) {
        return Err(Error::Domain(format!("{spec} does not act irreducibly")));
    }
    let h = coxeter_number(spec)?;
    let degs = degrees(spec);
    let r = 1;
    let one = CycScalar::one(r);
    let mut num = vec![one.clone()];
    let mut den = vec![one.clone()];
    for &d in &degs {
        num = tpoly_mul(&num, &binomial(r, one.clone(), (h + d) as usize), r);
        den = tpoly_mul(&den, &binomial(r, one.clone(), d as usize), r);
    }
    let exact: Vec<Rational> = series_div(&num, &den, r, trunc)
        .iter()
        .map(|c| c.as_rational().unwrap().clone())
        .collect();
    let mut value = Rational::from_integer(1.into());
    for &d in &degs {
        value *= Rational::new(((h + d) as i64).into(), (d as i64).into());
    }
    Ok(CatalanSeries {
        group: spec.to_string(),
        coxeter_number: h,
        degrees: degs,
        coeffs: exact.iter().map(fmt_rational).collect(),
        value_at_one: fmt_rational(&value),
        exact,
        value,
    })
}
