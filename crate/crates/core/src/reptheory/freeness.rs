//! Exponents of `V = C{x_1^m, …, x_n^m}` and the determinant identities
//! showing that `V` is free.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::scalar::{CycScalar, MPoly};

use super::invariants::{coxeter_number, degrees};

fn monomial(e: &[u32]) -> MPoly {
    let mut m: Vec<u16> = e.iter().map(|&x| x as u16).collect();
    while m.last() == Some(&0) {
        m.pop();
    }
    MPoly::from_terms(1, [(m, CycScalar::one(1))])
}

fn x_pow(n: usize, j: usize, e: u32) -> MPoly {
    let mut v = vec![0; n];
    v[j] = e;
    monomial(&v)
}

/// Determinant by the Leibniz formula.
pub fn det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let mut total = MPoly::zero(1);
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(p: &mut Vec<usize>, at: usize, sign: bool, m: &[Vec<MPoly>], total: &mut MPoly) {
        if at == p.len() {
            let mut t = MPoly::one(1);
            for (i, &j) in p.iter().enumerate() {
                t = t.mul(&m[i][j]);
            }
            *total = if sign { total.sub(&t) } else { total.add(&t) };
            return;
        }
        for i in at..p.len() {
            p.swap(at, i);
            rec(p, at + 1, sign ^ (i != at), m, total);
            p.swap(at, i);
        }
    }
    rec(&mut perm, 0, false, m, &mut total);
    total
}

/// `(x_1 ⋯ x_n)^a Π_{i<j} (x_i^r - x_j^r)`.
fn target(n: usize, r: u32, a: u32) -> MPoly {
    let mut out = monomial(&vec![a; n]);
    for i in 0..n {
        for j in i + 1..n {
            out = out.mul(&x_pow(n, i, r).sub(&x_pow(n, j, r)));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DetCheck {
    /// Whether the determinant equals `± target`.
    pub verified: bool,
    /// The sign `s` with `det = s · target`, when verified.
    pub sign: i32,
}

fn compare(d: &MPoly, t: &MPoly) -> DetCheck {
    if d == t {
        DetCheck { verified: true, sign: 1 }
    } else if d == &t.neg() {
        DetCheck { verified: true, sign: -1 }
    } else {
        DetCheck { verified: false, sign: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub group: String,
    pub m: u32,
    pub m_bar: u32,
    pub m_prime: u32,
    pub exponents: Vec<u32>,
    /// `det(x_j^{(i-1)r + m̄})` against `(x_1⋯x_n)^{m̄} Π (x_i^r - x_j^r)`.
    pub det_f: DetCheck,
    /// For `p > 1`: the matrix with last row `v_1, …, v_n`, against
    /// `(x_1⋯x_n)^{m'} Π (x_i^r - x_j^r)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det_a: Option<DetCheck>,
    pub degrees: Vec<u32>,
    /// `{m - e_i} = {d_i}`; only evaluated when `m = h + 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiset_match: Option<bool>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.det_f.verified && self.det_a.as_ref().is_none_or(|d| d.verified) && self.multiset_match != Some(false)
    }
}

pub fn exponents(spec: &GroupSpec, m: u32) -> Result<Vec<u32>> {
    let (r, p, n) = (spec.r, spec.p, spec.n as u32);
    if m.is_multiple_of(r) {
        return Err(Error::Domain(format!("r = {r} divides m = {m}")));
    }
    let mb = m % r;
    let mp = m % spec.m();
    let mut e: Vec<u32> = (0..n).map(|i| mb + i * r).collect();
    if p > 1 {
        e[n as usize - 1] = (n - 1) * (r - mb) + n * mp;
    }
    e.sort_unstable();
    Ok(e)
}

pub fn exponents_and_freeness(spec: &GroupSpec, m: u32) -> Result<FreenessReport> {
    let e = exponents(spec, m)?;
    let (r, p, n) = (spec.r, spec.p, spec.n);
    let mb = m % r;
    let mp = m % spec.m();
    let f: Vec<Vec<MPoly>> = (0..n)
        .map(|i| (0..n).map(|j| x_pow(n, j, i as u32 * r + mb)).collect())
        .collect();
    let det_f = compare(&det(&f), &target(n, r, mb));
    let det_a = (p > 1).then(|| {
        let mut a = f.clone();
        a[n - 1] = (0..n)
            .map(|j| {
                let v: Vec<u32> = (0..n).map(|i| if i == j { mp } else { r - mb + mp }).collect();
                monomial(&v)
            })
            .collect();
        compare(&det(&a), &target(n, r, mp))
    });
    let degs = degrees(spec);
    let multiset_match = match coxeter_number(spec) {
        Ok(h) if m == h + 1 => {
            let mut lhs: Vec<u32> = e.iter().map(|&x| m - x).collect();
            lhs.sort_unstable();
            Some(lhs == degs)
        }
        _ => None,
    };
    Ok(FreenessReport {
        group: spec.to_string(),
        m,
        m_bar: mb,
        m_prime: mp,
        exponents: e,
        det_f,
        det_a,
        degrees: degs,
        multiset_match,
    })
}
