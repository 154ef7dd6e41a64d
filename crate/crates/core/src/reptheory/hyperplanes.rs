//! The hyperplanes `H_{j,k}` and `H_x`, and the genericity guard.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::jack::Composition;
use crate::scalar::{fmt_rational, CycScalar, ParamPoint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperplaneId {
    /// `d_0 - d_{-j} + r c_0 (n - k) = j`, with `j ≢ 0 mod r` and `1 <= k <= n`.
    Hjk { j: u32, k: usize },
    /// `c_0 = x`.
    Hx(Rational),
}

impl fmt::Display for HyperplaneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperplaneId::Hjk { j, k } => write!(f, "H_{{{j},{k}}}"),
            HyperplaneId::Hx(x) => write!(f, "H_{}", fmt_rational(x)),
        }
    }
}

fn require_kappa_one(point: &ParamPoint) -> Result<()> {
    if point.kappa != Rational::from_integer(1.into()) {
        return Err(Error::Domain("hyperplane tests assume κ = 1".into()));
    }
    Ok(())
}

pub fn on_hyperplane(spec: &GroupSpec, point: &ParamPoint, id: &HyperplaneId) -> Result<bool> {
    require_kappa_one(point)?;
    let r = spec.r;
    match id {
        HyperplaneId::Hjk { j, k } => {
            if j % r == 0 || *k == 0 || *k > spec.n {
                return Err(Error::Domain(format!("{id} is not a hyperplane for {spec}")));
            }
            let lhs = &(&point.d_in(r, 0) - &point.d_in(r, -(*j as i64)))
                + &CycScalar::from_rational(
                    r,
                    &point.c0 * Rational::from_integer(((r as usize * (spec.n - k)) as i64).into()),
                );
            Ok(lhs == CycScalar::from_int(r, *j as i64))
        }
        HyperplaneId::Hx(x) => Ok(&point.c0 == x),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GuardReport {
    pub passed: bool,
    pub k: u32,
    pub bound: u32,
    pub violations: Vec<String>,
}

/// Default scan bound for `H_{l,j}`: `max(2k, 4h)`.
pub fn default_bound(k: u32, h: u32) -> u32 {
    (2 * k).max(4 * h)
}

/// Checks that the point lies on `H_{k,1}`, on no other `H_{l,j}` with
/// `l <= bound`, and that `c_0 ∉ (1/j) Z_{>0}` for `j <= n`.
pub fn genericity_guard(spec: &GroupSpec, point: &ParamPoint, k: u32, bound: u32) -> Result<GuardReport> {
    require_kappa_one(point)?;
    let mut violations = Vec::new();
    if k.is_multiple_of(spec.r) {
        return Err(Error::Domain(format!("k = {k} is divisible by r = {}", spec.r)));
    }
    if !on_hyperplane(spec, point, &HyperplaneId::Hjk { j: k, k: 1 })? {
        violations.push(format!("not on H_{{{k},1}}"));
    }
    for l in (1..=bound).filter(|l| l % spec.r != 0) {
        for j in 1..=spec.n {
            if (l, j) == (k, 1) {
                continue;
            }
            let id = HyperplaneId::Hjk { j: l, k: j };
            if on_hyperplane(spec, point, &id)? {
                violations.push(format!("also on {id}"));
            }
        }
    }
    for j in 1..=spec.n as i64 {
        let x = &point.c0 * Rational::from_integer(j.into());
        if x.is_integer() && x > Rational::from_integer(0.into()) {
            violations.push(format!("c0 = {} lies in (1/{j})Z>0", fmt_rational(&point.c0)));
            break;
        }
    }
    Ok(GuardReport {
        passed: violations.is_empty(),
        k,
        bound,
        violations,
    })
}

/// Whether `f_μ` lies in the radical of M(1) under the hypotheses of the guard.
pub fn radical_membership(mu: &Composition, k: u32) -> bool {
    mu.max_part() >= k
}

/// `dim L(1)` as the number of compositions with all parts `< k`.
pub fn quotient_dimension(n: usize, k: u32) -> u64 {
    (k as u64).pow(n as u32)
}

/// `Σ_d #{μ : |μ| = d, all parts < k} t^d`, counted directly.
pub fn quotient_hilbert_series(n: usize, k: u32) -> Vec<u64> {
    let top = n as u32 * (k - 1);
    (0..=top)
        .map(|d| {
            crate::jack::compositions(n, d)
                .iter()
                .filter(|mu| !radical_membership(mu, k))
                .count() as u64
        })
        .collect()
}
