//! Operators on M(1): `x_i`, Dunkl operators `y_i`, `t_w`, `z_i` and `h`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::{Exponent, Poly};
use crate::group::{reflections, GroupElem, ReflClass, ReflKind, Reflection};
use crate::scalar::{cyc, CycScalar, ParamScalar, Params};

/// Deliberate perturbations used to show that the checkers catch errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Flips the sign of the transposition-type terms of `y_1`.
    DunklSign,
    /// Flips the sign of `π_i`.
    PiSign,
}

impl std::str::FromStr for Fault {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "dunkl-sign" => Ok(Fault::DunklSign),
            "pi-sign" => Ok(Fault::PiSign),
            _ => Err(crate::error::Error::Parse(format!("unknown fault {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Operator {
    X(usize),
    Dunkl(usize),
    Tw(GroupElem),
    Z(usize),
    H,
    /// Applied right to left, like a product of operators.
    Compose(Vec<Operator>),
}

type Memo = RwLock<HashMap<(usize, Exponent), Arc<Poly>>>;

/// The polynomial representation with its parameter context and memo tables.
pub struct PolyRep {
    params: Params,
    refl: Vec<Reflection>,
    refl_c: Vec<ParamScalar>,
    fault: Option<Fault>,
    dunkl_memo: Memo,
    z_memo: Memo,
}

/// Term count above which operator application is split across threads.
const PAR_THRESHOLD: usize = 24;

impl PolyRep {
    pub fn new(params: Params) -> Self {
        Self::with_fault(params, None)
    }

    pub fn with_fault(params: Params, fault: Option<Fault>) -> Self {
        let refl = reflections(params.spec());
        let refl_c = refl
            .iter()
            .map(|s| match s.class {
                ReflClass::Transposition => params.c0(),
                ReflClass::Diagonal(l) => params.c_diag(l as i64),
            })
            .collect();
        PolyRep {
            params,
            refl,
            refl_c,
            fault,
            dunkl_memo: RwLock::new(HashMap::new()),
            z_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.spec().n
    }

    pub fn r(&self) -> u32 {
        self.params.r()
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.refl
    }

    /// The parameter `c_s` attached to each entry of [`PolyRep::reflections`].
    pub fn reflection_params(&self) -> &[ParamScalar] {
        &self.refl_c
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    fn embed(&self, c: CycScalar) -> ParamScalar {
        self.params.embed(c)
    }

    /// Applies a per-monomial map linearly, in parallel for large inputs.
    fn linear<F>(&self, f: &Poly, op: F) -> Poly
    where
        F: Fn(&Exponent) -> Arc<Poly> + Sync,
    {
        let n = f.n();
        if f.num_terms() < PAR_THRESHOLD {
            let mut out = Poly::zero(n);
            for (e, c) in f.terms() {
                out.add_scaled(&op(e), c);
            }
            return out;
        }
        let terms: Vec<(&Exponent, &ParamScalar)> = f.terms().collect();
        terms
            .par_chunks(8)
            .map(|chunk| {
                let mut acc = Poly::zero(n);
                for (e, c) in chunk {
                    acc.add_scaled(&op(e), c);
                }
                acc
            })
            .reduce(|| Poly::zero(n), |a, b| a.add(&b))
    }

    fn memo(&self, table: &Memo, key: (usize, Exponent), build: impl FnOnce() -> Poly) -> Arc<Poly> {
        if let Some(v) = table.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(build());
        table.write().unwrap().entry(key).or_insert(v).clone()
    }

    /// `(x^mu - s.x^mu) / α_s`, expanded along the line of `α_s`.
    pub fn divided_difference_monomial(&self, s: &Reflection, mu: &[u32]) -> Vec<(Exponent, CycScalar)> {
        let r = self.r();
        let mut out = Vec::new();
        match s.kind {
            ReflKind::Transposition { i, j, l } => {
                let (a, b) = (mu[i], mu[j]);
                let l = l as i64;
                if a > b {
                    for t in 0..(a - b) {
                        let mut e = mu.to_vec();
                        e[i] = a - 1 - t;
                        e[j] = b + t;
                        out.push((e, cyc(r, l * t as i64)));
                    }
                } else if a < b {
                    let d = (b - a) as i64;
                    for t in 0..(b - a) {
                        let mut e = mu.to_vec();
                        e[i] = b - 1 - t;
                        e[j] = a + t;
                        out.push((e, -cyc(r, l * (t as i64 - d))));
                    }
                }
            }
            ReflKind::Diagonal { i, l } => {
                let a = mu[i];
                if a > 0 {
                    // s x_i = ζ^{-l} x_i and α = β x_i.
                    let val = &CycScalar::one(r) - &cyc(r, -(l as i64) * a as i64);
                    if !val.is_zero() {
                        let mut e = mu.to_vec();
                        e[i] -= 1;
                        out.push((e, &val / &s.alpha[i]));
                    }
                }
            }
        }
        out
    }

    /// `(f - s.f) / α_s`.
    pub fn divided_difference(&self, f: &Poly, s: &Reflection) -> Poly {
        let mut out = Poly::zero(f.n());
        for (e, c) in f.terms() {
            for (e2, v) in self.divided_difference_monomial(s, e) {
                out.add_term(e2, c.scale(&v));
            }
        }
        out
    }

    fn dunkl_monomial(&self, i: usize, mu: &Exponent) -> Arc<Poly> {
        self.memo(&self.dunkl_memo, (i, mu.clone()), || {
            let n = self.n();
            let mut out = Poly::zero(n);
            if mu[i] > 0 {
                let mut e = mu.clone();
                e[i] -= 1;
                out.add_term(e, &self.params.kappa() * &self.params.int(mu[i] as i64));
            }
            for (s, cs) in self.refl.iter().zip(&self.refl_c) {
                let a = &s.alpha[i];
                if a.is_zero() {
                    continue;
                }
                let mut coeff = -cs.scale(a);
                if self.fault == Some(Fault::DunklSign)
                    && i == 0
                    && matches!(s.kind, ReflKind::Transposition { .. })
                {
                    coeff = -coeff;
                }
                for (e, v) in self.divided_difference_monomial(s, mu) {
                    out.add_term(e, coeff.scale(&v));
                }
            }
            out
        })
    }

    pub fn x(&self, i: usize, f: &Poly) -> Poly {
        f.mul_x(i)
    }

    /// The Dunkl operator `y_i`.
    pub fn dunkl(&self, i: usize, f: &Poly) -> Poly {
        self.linear(f, |e| self.dunkl_monomial(i, e))
    }

    pub fn tw(&self, w: &GroupElem, f: &Poly) -> Poly {
        f.act(w)
    }

    /// `φ_i = Σ_{j<i} Σ_l t_{ζ_i^l s_ij ζ_i^{-l}}` on a monomial.
    fn phi_monomial(&self, i: usize, mu: &[u32]) -> Poly {
        let n = self.n();
        let mut out = Poly::zero(n);
        for s in &self.refl {
            if let ReflKind::Transposition { i: a, j: b, .. } = s.kind {
                if b == i && a < i {
                    let (k, nu) = s.elem.act_monomial(mu);
                    out.add_term(nu, self.embed(cyc(self.r(), k as i64)));
                }
            }
        }
        out
    }

    fn z_monomial(&self, i: usize, mu: &Exponent) -> Arc<Poly> {
        self.memo(&self.z_memo, (i, mu.clone()), || {
            let mut e = mu.clone();
            e[i] += 1;
            let mut out = (*self.dunkl_monomial(i, &e)).clone();
            out.add_scaled(&self.phi_monomial(i, mu), &self.params.c0());
            out
        })
    }

    /// `z_i = y_i x_i + c0 φ_i`.
    pub fn z(&self, i: usize, f: &Poly) -> Poly {
        self.linear(f, |e| self.z_monomial(i, e))
    }

    /// Column of `z_i` at a monomial, as stored in the memo table.
    pub fn z_column(&self, i: usize, mu: &Exponent) -> Arc<Poly> {
        self.z_monomial(i, mu)
    }

    /// `h = Σ x_i y_i + Σ_s c_s (1 - t_s)`.
    pub fn h(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.n());
        for i in 0..self.n() {
            out = out.add(&self.dunkl(i, f).mul_x(i));
        }
        for (s, cs) in self.refl.iter().zip(&self.refl_c) {
            out.add_scaled(&f.sub(&f.act(&s.elem)), cs);
        }
        out
    }

    /// `π_i = Σ_l t_{ζ_i^l ζ_{i+1}^{-l}}`.
    pub fn pi(&self, i: usize, f: &Poly) -> Poly {
        let (n, r) = (self.n(), self.r());
        let mut out = Poly::zero(n);
        for l in 0..r as i64 {
            let mut g = GroupElem::diagonal(n, r, i, -l);
            g = g.compose(&GroupElem::diagonal(n, r, i + 1, l));
            out = out.add(&f.act(&g));
        }
        if self.fault == Some(Fault::PiSign) {
            out = out.neg();
        }
        out
    }

    pub fn apply(&self, op: &Operator, f: &Poly) -> Poly {
        match op {
            Operator::X(i) => self.x(*i, f),
            Operator::Dunkl(i) => self.dunkl(*i, f),
            Operator::Tw(w) => self.tw(w, f),
            Operator::Z(i) => self.z(*i, f),
            Operator::H => self.h(f),
            Operator::Compose(ops) => ops.iter().rev().fold(f.clone(), |acc, o| self.apply(o, &acc)),
        }
    }
}
