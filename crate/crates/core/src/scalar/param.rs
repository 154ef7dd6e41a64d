//! Parameter-dependent scalars and the parameter context.
//!
//! In generic mode a scalar is a rational function in `κ, c0, d1, …, d_{m-1}`
//! (variable indices 0, 1, 2, …). `d0` is not independent: it is
//! eliminated via `d0 + d1 + … + d_{m-1} = 0`. In specialized mode every
//! scalar is an element of Q(ζ_r).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use super::cyclotomic::{fmt_rational, CycScalar, Rational};
use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::group::GroupSpec;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ParamScalar {
    Generic(RatFunc),
    Special(CycScalar),
}

impl ParamScalar {
    pub fn order(&self) -> u32 {
        match self {
            ParamScalar::Generic(f) => f.order(),
            ParamScalar::Special(c) => c.order(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ParamScalar::Generic(f) => f.is_zero(),
            ParamScalar::Special(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ParamScalar::Generic(f) => f.as_constant().is_some_and(|c| c.is_one()),
            ParamScalar::Special(c) => c.is_one(),
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, ParamScalar::Generic(_))
    }

    /// A zero scalar of the same mode and field.
    pub fn zero_like(&self) -> Self {
        match self {
            ParamScalar::Generic(f) => {
                ParamScalar::Generic(RatFunc::from_poly(MPoly::zero(f.order())))
            }
            ParamScalar::Special(c) => ParamScalar::Special(CycScalar::zero(c.order())),
        }
    }

    /// Embeds a field element in the same mode as `self`.
    pub fn embed_like(&self, c: CycScalar) -> Self {
        match self {
            ParamScalar::Generic(_) => ParamScalar::Generic(RatFunc::constant(c)),
            ParamScalar::Special(_) => ParamScalar::Special(c),
        }
    }

    /// The value if it does not depend on the parameters.
    pub fn as_constant(&self) -> Option<CycScalar> {
        match self {
            ParamScalar::Generic(f) => f.as_constant(),
            ParamScalar::Special(c) => Some(c.clone()),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        match self {
            ParamScalar::Generic(f) => ParamScalar::Generic(f.scale(c)),
            ParamScalar::Special(x) => ParamScalar::Special(x * c),
        }
    }

    pub fn scale_int(&self, v: i64) -> Self {
        self.scale(&CycScalar::from_int(self.order(), v))
    }

    pub fn inverse(&self) -> Option<Self> {
        match self {
            ParamScalar::Generic(f) => f.inverse().map(ParamScalar::Generic),
            ParamScalar::Special(c) => c.inverse().map(ParamScalar::Special),
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        Some(self * &o.inverse()?)
    }

    /// Evaluates at a parameter point. Fails with [`Error::Pole`] when the
    /// reduced denominator vanishes there.
    pub fn specialize(&self, point: &ParamPoint) -> Result<CycScalar> {
        match self {
            ParamScalar::Special(c) => Ok(c.clone()),
            ParamScalar::Generic(f) => {
                let vals = point.values(f.order());
                let den = f.den().eval(&vals);
                if den.is_zero() {
                    return Err(Error::Pole {
                        factor: f.den().to_string(),
                    });
                }
                Ok(&f.num().eval(&vals) / &den)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = self.embed_like(CycScalar::one(self.order()));
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn binop(
        &self,
        o: &Self,
        g: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
        s: impl Fn(&CycScalar, &CycScalar) -> CycScalar,
    ) -> Self {
        match (self, o) {
            (ParamScalar::Generic(a), ParamScalar::Generic(b)) => ParamScalar::Generic(g(a, b)),
            (ParamScalar::Special(a), ParamScalar::Special(b)) => ParamScalar::Special(s(a, b)),
            _ => panic!("mixing generic and specialized scalars"),
        }
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        self.binop(o, |a, b| a.add(b), |a, b| a + b)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        self.binop(o, |a, b| a.sub(b), |a, b| a - b)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        self.binop(o, |a, b| a.mul(b), |a, b| a * b)
    }
}

impl Div for &ParamScalar {
    type Output = ParamScalar;
    fn div(self, o: &ParamScalar) -> ParamScalar {
        self.checked_div(o).expect("division by a zero scalar")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        match self {
            ParamScalar::Generic(f) => ParamScalar::Generic(f.neg()),
            ParamScalar::Special(c) => ParamScalar::Special(-c),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: &ParamScalar) -> ParamScalar {
                (&self).$m(o)
            }
        }
        impl $tr<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamScalar::Generic(x) => write!(f, "{x}"),
            ParamScalar::Special(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A point in parameter space: `κ`, `c0` and `d1, …, d_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub kappa: Rational,
    pub c0: Rational,
    pub d: Vec<CycScalar>,
}

impl ParamPoint {
    /// Builds a point from `c0` and the diagonal-class parameters
    /// `c_p, c_{2p}, …, c_{(m-1)p}`.
    pub fn from_c(spec: &GroupSpec, kappa: Rational, c0: Rational, c: &[CycScalar]) -> Result<Self> {
        let d = d_from_c(spec, c)?;
        Ok(ParamPoint {
            kappa,
            c0,
            d: d[1..].to_vec(),
        })
    }

    /// The point `κ = 1`, `c_s = (h+1)/h` for every reflection class.
    pub fn gordon(spec: &GroupSpec) -> Result<Self> {
        let h = crate::reptheory::coxeter_number(spec)?;
        let c = Rational::new((h as i64 + 1).into(), (h as i64).into());
        let diag = vec![CycScalar::from_rational(spec.r, c.clone()); spec.m() as usize - 1];
        Self::from_c(spec, Rational::one(), c, &diag)
    }

    /// `[κ, c0, d1, …]` as field elements, the order used by parameter variables.
    pub fn values(&self, r: u32) -> Vec<CycScalar> {
        let mut v = vec![
            CycScalar::from_rational(r, self.kappa.clone()),
            CycScalar::from_rational(r, self.c0.clone()),
        ];
        v.extend(self.d.iter().cloned());
        v
    }

    /// `d_j` with the index read modulo `m`.
    pub fn d(&self, j: i64) -> CycScalar {
        let m = self.d.len() as i64 + 1;
        let j = j.rem_euclid(m);
        if j == 0 {
            let r = self.d.first().map(|c| c.order());
            match r {
                None => CycScalar::zero(1),
                Some(r) => self.d.iter().fold(CycScalar::zero(r), |a, b| &a - b),
            }
        } else {
            self.d[j as usize - 1].clone()
        }
    }

    /// `d_j` for a field of order `r` (needed when `m = 1`, where all `d` vanish).
    pub fn d_in(&self, r: u32, j: i64) -> CycScalar {
        if self.d.is_empty() {
            CycScalar::zero(r)
        } else {
            self.d(j)
        }
    }

    pub fn describe(&self) -> String {
        let mut s = format!("k={}, c0={}", fmt_rational(&self.kappa), fmt_rational(&self.c0));
        for (j, dj) in self.d.iter().enumerate() {
            s.push_str(&format!(", d{}={}", j + 1, dj));
        }
        s
    }
}

/// `d_j = Σ_{l=1}^{r-1} ζ^{lj} c_l` for `j = 0..m`, where `c_l = 0` unless
/// `p | l`. Input is `c_p, c_{2p}, …, c_{(m-1)p}`.
pub fn d_from_c(spec: &GroupSpec, c: &[CycScalar]) -> Result<Vec<CycScalar>> {
    let (r, p, m) = (spec.r, spec.p, spec.m());
    if c.len() != m as usize - 1 {
        return Err(Error::Domain(format!(
            "expected {} diagonal class parameters, got {}",
            m - 1,
            c.len()
        )));
    }
    let mut d = Vec::with_capacity(m as usize);
    for j in 0..m as i64 {
        let mut acc = CycScalar::zero(r);
        for (t, cl) in c.iter().enumerate() {
            let l = (t as i64 + 1) * p as i64;
            acc = &acc + &(&crate::scalar::cyc(r, l * j) * cl);
        }
        d.push(acc);
    }
    Ok(d)
}

/// Inverse of [`d_from_c`]: `c_{l p} = (1/m) Σ_{j<m} ζ^{-l p j} d_j`.
pub fn c_from_d(spec: &GroupSpec, d: &[CycScalar]) -> Result<Vec<CycScalar>> {
    let (r, p, m) = (spec.r, spec.p, spec.m());
    if d.len() != m as usize {
        return Err(Error::Domain(format!("expected {} values d_0..d_{{m-1}}", m)));
    }
    let inv_m = Rational::new(1.into(), (m as i64).into());
    let mut c = Vec::new();
    for t in 1..m as i64 {
        let l = t * p as i64;
        let mut acc = CycScalar::zero(r);
        for (j, dj) in d.iter().enumerate() {
            acc = &acc + &(&crate::scalar::cyc(r, -l * j as i64) * dj);
        }
        c.push(acc.scale(&inv_m));
    }
    Ok(c)
}

/// Parameter context: the group and, optionally, a specialization point.
#[derive(Clone, Debug)]
pub struct Params {
    spec: GroupSpec,
    point: Option<ParamPoint>,
}

impl Params {
    pub fn generic(spec: GroupSpec) -> Self {
        Params { spec, point: None }
    }

    pub fn special(spec: GroupSpec, point: ParamPoint) -> Result<Self> {
        if point.d.len() + 1 != spec.m() as usize {
            return Err(Error::Domain(format!(
                "point has {} d-values but G({},{},{}) needs {}",
                point.d.len(),
                spec.r,
                spec.p,
                spec.n,
                spec.m() - 1
            )));
        }
        if point.d.iter().any(|c| c.order() != spec.r) {
            return Err(Error::Domain("d-values live in the wrong cyclotomic field".into()));
        }
        Ok(Params {
            spec,
            point: Some(point),
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn point(&self) -> Option<&ParamPoint> {
        self.point.as_ref()
    }

    pub fn is_generic(&self) -> bool {
        self.point.is_none()
    }

    pub fn r(&self) -> u32 {
        self.spec.r
    }

    /// Number of parameter variables in generic mode.
    pub fn num_vars(&self) -> usize {
        self.spec.m() as usize + 1
    }

    pub fn cyc(&self, k: i64) -> ParamScalar {
        self.embed(crate::scalar::cyc(self.r(), k))
    }

    pub fn embed(&self, c: CycScalar) -> ParamScalar {
        match self.point {
            None => ParamScalar::Generic(RatFunc::constant(c)),
            Some(_) => ParamScalar::Special(c),
        }
    }

    pub fn int(&self, v: i64) -> ParamScalar {
        self.embed(CycScalar::from_int(self.r(), v))
    }

    pub fn rational(&self, q: Rational) -> ParamScalar {
        self.embed(CycScalar::from_rational(self.r(), q))
    }

    pub fn zero(&self) -> ParamScalar {
        self.int(0)
    }

    pub fn one(&self) -> ParamScalar {
        self.int(1)
    }

    fn var(&self, v: usize) -> ParamScalar {
        ParamScalar::Generic(RatFunc::from_poly(MPoly::var(self.r(), v)))
    }

    pub fn kappa(&self) -> ParamScalar {
        match &self.point {
            None => self.var(0),
            Some(p) => self.rational(p.kappa.clone()),
        }
    }

    pub fn c0(&self) -> ParamScalar {
        match &self.point {
            None => self.var(1),
            Some(p) => self.rational(p.c0.clone()),
        }
    }

    /// `d_j`, with `j` read modulo `m` and `d_0 = -(d_1 + … + d_{m-1})`.
    pub fn d(&self, j: i64) -> ParamScalar {
        let m = self.spec.m() as i64;
        let j = j.rem_euclid(m);
        if let Some(p) = &self.point {
            return ParamScalar::Special(p.d_in(self.r(), j));
        }
        if j == 0 {
            let mut acc = self.zero();
            for t in 1..m {
                acc = &acc - &self.var(t as usize + 1);
            }
            acc
        } else {
            self.var(j as usize + 1)
        }
    }

    /// Diagonal-class parameter `c_l = (1/r) Σ_{j<r} ζ^{-lj} d_j`; zero unless `p | l`.
    pub fn c_diag(&self, l: i64) -> ParamScalar {
        let r = self.r() as i64;
        let mut acc = self.zero();
        for j in 0..r {
            acc = &acc + &(&self.cyc(-l * j) * &self.d(j));
        }
        acc.scale(&CycScalar::from_rational(self.r(), Rational::new(1.into(), r.into())))
    }
}
