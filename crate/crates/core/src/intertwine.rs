//! The intertwiners `σ_i`, `Φ = x_n t_{s_{n-1}⋯s_1}` and `Ψ = y_1 t_{s_1⋯s_{n-1}}` on M(1).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::jack::{Composition, Eigenbasis, JackVector, Weight};
use crate::poly::{Poly, PolyRep};
use crate::scalar::{ParamScalar, Params};

/// `x_i ↦ x_{i-1}` cyclically, so that `x_n t_w` raises `μ` to `φ.μ`.
fn cycle(n: usize, r: u32) -> GroupElem {
    let perm = (0..n).map(|i| (i + n - 1) % n).collect();
    GroupElem::new(r, perm, vec![0; n]).expect("cyclic shift")
}

/// `σ_i` on a `t`-eigenvector of weight `w`:
/// `t_{s_i} f + c_0 π_i f / (w(z_i) - w(z_{i+1}))`.
pub fn sigma_raw(rep: &PolyRep, i: usize, f: &Poly, w: &Weight) -> Result<Poly> {
    let (n, r) = (rep.n(), rep.r());
    let t = f.act(&GroupElem::transposition(n, r, i, i + 1));
    let pi = rep.pi(i, f);
    if pi.is_zero() {
        return Ok(t);
    }
    let delta = &w.zvals[i] - &w.zvals[i + 1];
    let coef = rep
        .params()
        .c0()
        .checked_div(&delta)
        .ok_or_else(|| Error::SingularIntertwiner(format!("z_{} = z_{} on the input", i + 1, i + 2)))?;
    Ok(t.add(&pi.scale(&coef)))
}

pub fn phi_raw(rep: &PolyRep, f: &Poly) -> Poly {
    let n = rep.n();
    f.act(&cycle(n, rep.r())).mul_x(n - 1)
}

pub fn psi_raw(rep: &PolyRep, f: &Poly) -> Poly {
    rep.dunkl(0, &f.act(&cycle(rep.n(), rep.r()).inverse()))
}

/// Result of an intertwiner on a basis vector.
#[derive(Clone, Debug)]
pub enum IntertwinerImage {
    Zero,
    Scaled { scalar: ParamScalar, vector: std::sync::Arc<JackVector> },
}

impl IntertwinerImage {
    pub fn scalar(&self, params: &Params) -> ParamScalar {
        match self {
            IntertwinerImage::Zero => params.zero(),
            IntertwinerImage::Scaled { scalar, .. } => scalar.clone(),
        }
    }
}

/// Expresses `p` as a multiple of the basis vector `f_ν`.
fn as_multiple(basis: &Eigenbasis, p: Poly, nu: &Composition) -> Result<IntertwinerImage> {
    if p.is_zero() {
        return Ok(IntertwinerImage::Zero);
    }
    let target = basis.get(nu)?;
    let scalar = p
        .coeff(nu.entries())
        .cloned()
        .ok_or_else(|| Error::Internal(format!("image has no x^{nu} term")))?;
    if target.poly.scale(&scalar) != p {
        return Err(Error::Internal(format!("image is not a multiple of f_{nu}")));
    }
    Ok(IntertwinerImage::Scaled { scalar, vector: target })
}

pub fn apply_sigma(basis: &Eigenbasis, i: usize, v: &JackVector) -> Result<IntertwinerImage> {
    let p = sigma_raw(basis.rep(), i, &v.poly, &v.weight)?;
    as_multiple(basis, p, &v.mu.swap(i))
}

/// `Φ f_μ`, which is exactly `f_{φ.μ}`.
pub fn apply_phi(basis: &Eigenbasis, v: &JackVector) -> Result<std::sync::Arc<JackVector>> {
    let p = phi_raw(basis.rep(), &v.poly);
    match as_multiple(basis, p, &v.mu.phi())? {
        IntertwinerImage::Scaled { scalar, vector } if scalar.is_one() => Ok(vector),
        other => Err(Error::Internal(format!(
            "Φ f_{} has coefficient {}",
            v.mu,
            other.scalar(basis.rep().params())
        ))),
    }
}

pub fn apply_psi(basis: &Eigenbasis, v: &JackVector) -> Result<IntertwinerImage> {
    let p = psi_raw(basis.rep(), &v.poly);
    match v.mu.psi() {
        Some(nu) => as_multiple(basis, p, &nu),
        None if p.is_zero() => Ok(IntertwinerImage::Zero),
        None => Err(Error::Internal(format!("Ψ f_{} should vanish", v.mu))),
    }
}

/// `ω(z_i) - ω(z_{i+1})` for `ω = wt(μ)`.
pub fn weight_gap(params: &Params, i: usize, mu: &Composition) -> ParamScalar {
    let w = Weight::of(mu, params);
    &w.zvals[i] - &w.zvals[i + 1]
}

/// `δ = κ(μ_i - μ_{i+1}) - c_0 r (w^{-1}(i+1) - w^{-1}(i))` with
/// `w^{-1}(j) = n + 1 - v_μ(j)`.
pub fn closed_delta(params: &Params, i: usize, mu: &Composition) -> ParamScalar {
    let n = mu.n() as i64;
    let e = mu.entries();
    let winv = |j: usize| n + 1 - mu.v(j) as i64;
    let a = params.kappa().scale_int(e[i] as i64 - e[i + 1] as i64);
    let b = params.c0().scale_int(params.r() as i64 * (winv(i + 1) - winv(i)));
    &a - &b
}

/// Closed-form scalar `c` with `σ_i f_μ = c f_{s_i.μ}`.
pub fn sigma_coefficient(params: &Params, i: usize, mu: &Composition) -> ParamScalar {
    let e = mu.entries();
    let r = params.r();
    if e[i] == e[i + 1] {
        return params.zero();
    }
    if e[i] < e[i + 1] || e[i] % r != e[i + 1] % r {
        return params.one();
    }
    let delta = closed_delta(params, i, mu);
    let rc = params.c0().scale_int(r as i64);
    let num = &(&delta - &rc) * &(&delta + &rc);
    num.checked_div(&(&delta * &delta)).expect("δ vanishes")
}

/// Closed-form scalar `c` with `Ψ f_μ = c f_{ψ.μ}` (zero when `μ_n = 0`).
pub fn psi_coefficient(params: &Params, mu: &Composition) -> ParamScalar {
    let n = mu.n();
    let mn = mu.entries()[n - 1] as i64;
    if mn == 0 {
        return params.zero();
    }
    let a = params.kappa().scale_int(mn);
    let b = &params.d(0) - &params.d(-mn);
    let c = params.c0().scale_int(params.r() as i64 * (mu.v(n - 1) as i64 - 1));
    &(&a - &b) - &c
}

/// `ΨΦ = z_1` acting on `f_μ`.
pub fn psiphi_scalar(params: &Params, mu: &Composition) -> ParamScalar {
    Weight::of(mu, params).zvals[0].clone()
}

/// `ΦΨ = z_n - κ + Σ_j (d_j - d_{j-1}) ε_{nj}` acting on `f_μ`, where
/// `ε_{nj}` is the indicator of `j ≡ -μ_n mod r`.
pub fn phipsi_scalar(params: &Params, mu: &Composition) -> ParamScalar {
    let n = mu.n();
    let mn = mu.entries()[n - 1] as i64;
    let z = &Weight::of(mu, params).zvals[n - 1];
    let d = &params.d(-mn) - &params.d(-mn - 1);
    &(z - &params.kappa()) + &d
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IntertwinerWitness {
    pub check: String,
    pub mu: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntertwinerReport {
    pub status: &'static str,
    pub checked: Vec<(String, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntertwinerWitness>,
}

impl IntertwinerReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// One check outcome: name, index (1-based), and a failure description.
type Outcome = (&'static str, Option<usize>, Option<String>);

fn expect_eq(name: &'static str, idx: Option<usize>, lhs: &Poly, rhs: &Poly) -> Outcome {
    let d = lhs.sub(rhs);
    (name, idx, (!d.is_zero()).then(|| format!("defect {d}")))
}

fn run_grid<F>(grid: &[Composition], f: F) -> IntertwinerReport
where
    F: Fn(&Composition) -> Result<Vec<Outcome>> + Sync,
{
    let results: Vec<(Composition, Result<Vec<Outcome>>)> =
        grid.par_iter().map(|mu| (mu.clone(), f(mu))).collect();
    let mut checked: Vec<(String, usize)> = Vec::new();
    let mut witness = None;
    for (mu, res) in results {
        let outcomes = match res {
            Ok(o) => o,
            Err(e) => vec![("construction", None, Some(e.to_string()))],
        };
        for (name, idx, fail) in outcomes {
            match checked.iter_mut().find(|(k, _)| k == name) {
                Some(entry) => entry.1 += 1,
                None => checked.push((name.to_string(), 1)),
            }
            if let (Some(detail), None) = (fail, &witness) {
                witness = Some(IntertwinerWitness {
                    check: name.to_string(),
                    mu: mu.entries().to_vec(),
                    index: idx,
                    detail,
                });
            }
        }
        if witness.is_some() {
            break;
        }
    }
    IntertwinerReport {
        status: if witness.is_none() { "pass" } else { "fail" },
        checked,
        witness,
    }
}

/// Every case of the closed-form action of `σ_i`, `Φ`, `Ψ` on the basis,
/// plus `ΨΦ`, `ΦΨ` and the weight twist of `Φ`, against raw application.
pub fn verify_action_lemma(basis: &Eigenbasis, grid: &[Composition]) -> IntertwinerReport {
    let rep = basis.rep();
    let params = rep.params();
    let n = rep.n();
    run_grid(grid, |mu| {
        let v = basis.get(mu)?;
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let img = sigma_raw(rep, i, &v.poly, &v.weight)?;
            let c = sigma_coefficient(params, i, mu);
            let expect = if c.is_zero() {
                Poly::zero(n)
            } else {
                basis.get(&mu.swap(i))?.poly.scale(&c)
            };
            out.push(expect_eq("sigma", Some(i + 1), &img, &expect));
            let e = mu.entries();
            if e[i] % rep.r() == e[i + 1] % rep.r() {
                let (a, b) = (closed_delta(params, i, mu), weight_gap(params, i, mu));
                out.push(("delta", Some(i + 1), (a != b).then(|| format!("{a} vs {b}"))));
            }
        }
        let phi = phi_raw(rep, &v.poly);
        out.push(expect_eq("phi", None, &phi, &basis.get(&mu.phi())?.poly));
        let tw = v.weight.phi_twist(params, mu.entries()[0]);
        for j in 0..n {
            out.push(expect_eq("phi-weight", Some(j + 1), &rep.z(j, &phi), &phi.scale(&tw.zvals[j])));
        }
        let psi = psi_raw(rep, &v.poly);
        let c = psi_coefficient(params, mu);
        let expect = match mu.psi() {
            Some(nu) if !c.is_zero() => basis.get(&nu)?.poly.scale(&c),
            _ => Poly::zero(n),
        };
        out.push(expect_eq("psi", None, &psi, &expect));
        let psiphi = psi_raw(rep, &phi);
        out.push(expect_eq("psi-phi", None, &psiphi, &v.poly.scale(&psiphi_scalar(params, mu))));
        let phipsi = phi_raw(rep, &psi);
        out.push(expect_eq("phi-psi", None, &phipsi, &v.poly.scale(&phipsi_scalar(params, mu))));
        Ok(out)
    })
}

/// `σ_i² = 1 - (c_0 π_i / (z_i - z_{i+1}))²` on eigenvectors, the z-exchange
/// `z_j σ_i = σ_i z_{s_i(j)}`, and the braid relations of the `σ_i`.
pub fn verify_braid_and_quadratic(basis: &Eigenbasis, grid: &[Composition]) -> IntertwinerReport {
    let rep = basis.rep();
    let params = rep.params();
    let n = rep.n();
    let r = rep.r();
    // Applies σ_{i_k} ⋯ σ_{i_1} to v, tracking the weight.
    let word = |v: &JackVector, is: &[usize]| -> Result<Poly> {
        let (mut p, mut w) = (v.poly.clone(), v.weight.clone());
        for &i in is {
            if p.is_zero() {
                break;
            }
            p = sigma_raw(rep, i, &p, &w)?;
            w = w.swap(i);
        }
        Ok(p)
    };
    run_grid(grid, |mu| {
        let v = basis.get(mu)?;
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let u = sigma_raw(rep, i, &v.poly, &v.weight)?;
            let sw = v.weight.swap(i);
            for j in 0..n {
                out.push(expect_eq("sigma-exchange", Some(i + 1), &rep.z(j, &u), &u.scale(&sw.zvals[j])));
            }
            let sq = word(&v, &[i, i])?;
            let delta = &v.weight.zvals[i] - &v.weight.zvals[i + 1];
            let rho = if v.weight.zeta_exps[i] % r == v.weight.zeta_exps[i + 1] % r {
                params.int(r as i64)
            } else {
                params.zero()
            };
            let t = (&params.c0() * &rho)
                .checked_div(&delta)
                .ok_or_else(|| Error::SingularIntertwiner(format!("at {mu}")))?;
            let scalar = &params.one() - &(&t * &t);
            out.push(expect_eq("sigma-square", Some(i + 1), &sq, &v.poly.scale(&scalar)));
        }
        for i in 0..n.saturating_sub(2) {
            let a = word(&v, &[i, i + 1, i])?;
            let b = word(&v, &[i + 1, i, i + 1])?;
            out.push(expect_eq("braid", Some(i + 1), &a, &b));
        }
        for i in 0..n.saturating_sub(1) {
            for j in i + 2..n.saturating_sub(1) {
                let a = word(&v, &[i, j])?;
                let b = word(&v, &[j, i])?;
                out.push(expect_eq("commute", Some(i + 1), &a, &b));
            }
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::jack::{compositions_up_to, Method};
    use crate::poly::Fault;
    use crate::scalar::ParamPoint;

    fn rep(r: u32, p: u32, n: usize) -> PolyRep {
        PolyRep::new(Params::generic(GroupSpec::new(r, p, n).unwrap()))
    }

    #[test]
    fn action_lemma_holds() {
        for (r, p, n, d) in [(2, 1, 2, 4), (3, 1, 2, 3), (2, 2, 2, 3), (2, 1, 3, 2)] {
            let rp = rep(r, p, n);
            let b = Eigenbasis::new(&rp, Method::Solve);
            let rep = verify_action_lemma(&b, &compositions_up_to(n, d));
            assert!(rep.passed(), "G({r},{p},{n}): {:?}", rep.witness);
        }
    }

    #[test]
    fn braid_and_quadratic_hold() {
        let rp = rep(2, 1, 3);
        let b = Eigenbasis::new(&rp, Method::Solve);
        let rep = verify_braid_and_quadratic(&b, &compositions_up_to(3, 3));
        assert!(rep.passed(), "{:?}", rep.witness);
        assert!(rep.checked.iter().any(|(k, c)| k == "braid" && *c > 0));
    }

    #[test]
    fn pi_fault_is_caught() {
        let ps = Params::generic(GroupSpec::new(2, 1, 2).unwrap());
        let rp = PolyRep::with_fault(ps, Some(Fault::PiSign));
        let b = Eigenbasis::new(&rp, Method::Solve);
        let rep = verify_braid_and_quadratic(&b, &compositions_up_to(2, 2));
        let w = rep.witness.expect("fault should be detected");
        assert!(w.check.starts_with("sigma"));
    }

    #[test]
    fn sigma_cases() {
        let rp = rep(2, 1, 2);
        let b = Eigenbasis::new(&rp, Method::Solve);
        let ps = rp.params();
        let eq = b.get(&Composition::new(vec![1, 1])).unwrap();
        assert!(matches!(apply_sigma(&b, 0, &eq).unwrap(), IntertwinerImage::Zero));
        let up = b.get(&Composition::new(vec![0, 1])).unwrap();
        match apply_sigma(&b, 0, &up).unwrap() {
            IntertwinerImage::Scaled { scalar, vector } => {
                assert!(scalar.is_one());
                assert_eq!(vector.mu.entries(), &[1, 0]);
            }
            _ => panic!("expected f_(1,0)"),
        }
        let down = b.get(&Composition::new(vec![2, 0])).unwrap();
        let img = apply_sigma(&b, 0, &down).unwrap();
        // Oracle: raw coefficient from the weight gap.
        let delta = weight_gap(ps, 0, &down.mu);
        let rc = ps.c0().scale_int(2);
        let expect = (&(&delta - &rc) * &(&delta + &rc)).checked_div(&(&delta * &delta)).unwrap();
        assert_eq!(img.scalar(ps), expect);
    }

    #[test]
    fn phi_on_one() {
        let rp = rep(3, 1, 3);
        let ps = rp.params();
        let one = Poly::constant(3, ps.one());
        assert_eq!(phi_raw(&rp, &one), Poly::monomial(vec![0, 0, 1], ps.one()));
        assert!(psi_raw(&rp, &one).is_zero());
    }

    /// The first-coordinate reading of the idempotent in `ΦΨ` disagrees with
    /// raw application as soon as `μ_1 ≢ μ_n mod m`.
    #[test]
    fn phipsi_uses_last_coordinate() {
        let rp = rep(2, 1, 2);
        let ps = rp.params();
        let b = Eigenbasis::new(&rp, Method::Solve);
        let mu = Composition::new(vec![0, 1]);
        let v = b.get(&mu).unwrap();
        let raw = phi_raw(&rp, &psi_raw(&rp, &v.poly));
        let m1 = mu.entries()[0] as i64;
        let z = &Weight::of(&mu, ps).zvals[1];
        let literal = &(z - &ps.kappa()) + &(&ps.d(-m1) - &ps.d(-m1 - 1));
        assert_ne!(raw, v.poly.scale(&literal));
        assert_eq!(raw, v.poly.scale(&phipsi_scalar(ps, &mu)));
    }

    #[test]
    fn gordon_psi_vanishes() {
        let spec = GroupSpec::new(2, 1, 2).unwrap();
        let ps = Params::special(spec, ParamPoint::gordon(&spec).unwrap()).unwrap();
        let mu = Composition::new(vec![0, 5]);
        assert!(psi_coefficient(&ps, &mu).is_zero());
        let rp = PolyRep::new(ps);
        let v = crate::jack::jack_by_solve(&rp, &mu).unwrap();
        assert!(psi_raw(&rp, &v.poly).is_zero());
    }
}
