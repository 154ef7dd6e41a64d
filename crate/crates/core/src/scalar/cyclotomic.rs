//! Exact arithmetic in the cyclotomic field Q(ζ_r).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(r)-1}` of
//! `Q[x]/Φ_r(x)`, so two elements are equal iff their coefficient vectors are.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Per-order data: the cyclotomic polynomial and reduced powers of ζ.
#[derive(Debug)]
struct CycloData {
    /// Coefficients of Φ_r, lowest degree first; monic of degree φ(r).
    modulus: Vec<Rational>,
    /// `powers[k]` is ζ^k in the reduced basis, for `0 <= k < r`.
    powers: Vec<Vec<Rational>>,
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer-coefficient polynomials, `a / b` with `b` monic.
fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return vec![];
    }
    let mut q = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            rem[k - db + j] -= &c * bj;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

fn cyclotomic_poly(r: u32) -> Vec<Rational> {
    // x^r - 1 divided by Φ_d for every proper divisor d of r.
    let mut p = vec![Rational::zero(); r as usize + 1];
    p[0] = -Rational::one();
    p[r as usize] = Rational::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            p = poly_div_exact(&p, &phi_d);
        }
    }
    p
}

fn reduce_in_place(v: &mut Vec<Rational>, modulus: &[Rational]) {
    let deg = modulus.len() - 1;
    if v.len() > deg {
        for k in (deg..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in modulus.iter().take(deg).enumerate() {
                v[k - deg + j] -= &c * mj;
            }
        }
        v.truncate(deg);
    }
    v.resize(deg, Rational::zero());
}

fn data(r: u32) -> Arc<CycloData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&r) {
        return d.clone();
    }
    let modulus = cyclotomic_poly(r);
    let mut powers = Vec::with_capacity(r as usize);
    for k in 0..r as usize {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        reduce_in_place(&mut v, &modulus);
        powers.push(v);
    }
    let d = Arc::new(CycloData { modulus, powers });
    cache.lock().unwrap().insert(r, d.clone());
    d
}

/// Euler's totient.
pub fn totient(r: u32) -> usize {
    (1..=r).filter(|k| num_integer::gcd(*k, r) == 1).count()
}

/// An element of Q(ζ_r) with ζ = e^{2πi/r}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    r: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero(r: u32) -> Self {
        assert!(r >= 1, "root of unity order must be positive");
        CycScalar {
            r,
            coeffs: vec![Rational::zero(); totient(r)],
        }
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(r, Rational::one())
    }

    pub fn from_int(r: u32, v: i64) -> Self {
        Self::from_rational(r, Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: u32, v: Rational) -> Self {
        let mut s = Self::zero(r);
        s.coeffs[0] = v;
        s
    }

    /// Builds an element from an arbitrary (unreduced) coefficient vector in
    /// powers of ζ.
    pub fn from_power_coeffs(r: u32, mut coeffs: Vec<Rational>) -> Self {
        let d = data(r);
        reduce_in_place(&mut coeffs, &d.modulus);
        CycScalar { r, coeffs }
    }

    /// ζ^k, periodic in k with period r.
    pub fn root(r: u32, k: i64) -> Self {
        let d = data(r);
        let k = k.rem_euclid(r as i64) as usize;
        CycScalar {
            r,
            coeffs: d.powers[k].clone(),
        }
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the value as a rational number if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.r, other.r,
            "mixing elements of Q(ζ_{}) and Q(ζ_{})",
            self.r, other.r
        );
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycScalar {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(self.r, q.recip()));
        }
        // Extended Euclid in Q[x]: find u with u * a ≡ 1 mod Φ_r.
        let d = data(self.r);
        let mut a = self.coeffs.clone();
        poly_trim(&mut a);
        let mut b = d.modulus.clone();
        let (mut ua, mut ub) = (vec![Rational::one()], Vec::<Rational>::new());
        while !b.is_empty() {
            let (q, rem) = poly_divrem(&a, &b);
            let next = poly_sub(&ua, &poly_mul(&q, &ub));
            a = std::mem::replace(&mut b, rem);
            ua = std::mem::replace(&mut ub, next);
        }
        // a is now a nonzero constant gcd.
        let inv_c = a[0].recip();
        let u: Vec<Rational> = ua.into_iter().map(|c| c * &inv_c).collect();
        Some(Self::from_power_coeffs(self.r, u))
    }

    /// Galois-free numerical embedding ζ ↦ e^{2πi/r}.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.r as f64;
            re += cf * ang.cos();
            im += cf * ang.sin();
        }
        (re, im)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.r);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut q = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = &rem[k] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k - db + j] -= &c * bj;
        }
        q[k - db] = c;
    }
    rem.truncate(db);
    poly_trim(&mut rem);
    poly_trim(&mut q);
    (q, rem)
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, o: &CycScalar) -> CycScalar {
        self.check(o);
        CycScalar {
            r: self.r,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, o: &CycScalar) -> CycScalar {
        self.check(o);
        CycScalar {
            r: self.r,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, o: &CycScalar) -> CycScalar {
        self.check(o);
        if self.coeffs.len() == 1 {
            return CycScalar {
                r: self.r,
                coeffs: vec![&self.coeffs[0] * &o.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * self.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycScalar::from_power_coeffs(self.r, prod)
    }
}

impl Div for &CycScalar {
    type Output = CycScalar;
    fn div(self, o: &CycScalar) -> CycScalar {
        self * &o.inverse().expect("division by zero in Q(ζ)")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $m(self, o: CycScalar) -> CycScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, o: &CycScalar) -> CycScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycScalar {
    /// Renders as a sum `a + b*z + c*z^2 …`, with `z` standing for ζ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if zpart.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{zpart}")?;
            } else {
                write!(f, "{}*{zpart}", fmt_rational(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar<{}>({})", self.r, self)
    }
}

/// ζ^k in Q(ζ_r).
pub fn cyc(r: u32, k: i64) -> CycScalar {
    CycScalar::root(r, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &CycScalar, re: f64, im: f64) -> bool {
        let (x, y) = a.to_complex();
        (x - re).abs() < 1e-12 && (y - im).abs() < 1e-12
    }

    #[test]
    fn cyclotomic_polynomials() {
        let to_i = |v: Vec<Rational>| -> Vec<i64> {
            v.iter().map(|c| c.numer().try_into().unwrap()).collect()
        };
        assert_eq!(to_i(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(to_i(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(to_i(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(cyc(4, 4).is_one());
        assert_eq!(cyc(2, 1), CycScalar::from_int(2, -1));
        assert!((cyc(4, 1) * cyc(4, 3)).is_one());
        let one = CycScalar::one(4);
        let lhs = (&one + &cyc(4, 1)) * (&one + &cyc(4, 3));
        assert_eq!(lhs, CycScalar::from_int(4, 2));
        assert!(close(&lhs, 2.0, 0.0));
        assert_eq!(cyc(5, -1), cyc(5, 4));
        assert_eq!(cyc(3, 7), cyc(3, 1));
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for r in 2..=12u32 {
            let mut s = CycScalar::zero(r);
            for k in 0..r as i64 {
                s = s + cyc(r, k);
            }
            assert!(s.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn inverse_and_numeric_shadow() {
        for r in [3u32, 5, 8, 12] {
            let a = CycScalar::from_int(r, 2) + cyc(r, 1) - cyc(r, 2).scale(&rat(1, 3));
            let inv = a.inverse().unwrap();
            assert!((&a * &inv).is_one());
            let (x, y) = a.to_complex();
            let (u, v) = inv.to_complex();
            assert!((x * u - y * v - 1.0).abs() < 1e-9);
            assert!((x * v + y * u).abs() < 1e-9);
        }
        assert!(CycScalar::zero(5).inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(CycScalar::zero(3).to_string(), "0");
        let a = CycScalar::from_rational(3, rat(1, 2)) - cyc(3, 1).scale(&rat(2, 1));
        assert_eq!(a.to_string(), "1/2 - 2*z");
        assert_eq!(cyc(3, 2).to_string(), "-1 - z");
    }
}
