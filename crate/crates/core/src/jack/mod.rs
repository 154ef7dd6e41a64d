//! Compositions, weights and the eigenbasis `f_μ` of M(1).

mod composition;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

pub use composition::{
    bruhat_le, compositions, compositions_up_to, dominance_le, length, linear_extension_key, order_lt,
    Composition,
};

use crate::error::{Error, Result};
use crate::intertwine;
use crate::poly::{Exponent, Poly, PolyRep};
use crate::scalar::{ParamScalar, Params};

/// The character of `t` on `f_μ`: eigenvalues of `z_1..z_n` and exponents
/// `e_i` with `ζ_i ↦ ζ^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub zvals: Vec<ParamScalar>,
    pub zeta_exps: Vec<u32>,
}

impl Weight {
    pub fn of(mu: &Composition, params: &Params) -> Self {
        let r = params.r();
        let n = mu.n();
        let kappa = params.kappa();
        let c0 = params.c0();
        let d0 = params.d(0);
        let zvals = (0..n)
            .map(|i| {
                let m = mu.entries()[i] as i64;
                let a = kappa.scale_int(m + 1);
                let b = &d0 - &params.d(-m - 1);
                let c = c0.scale_int(r as i64 * (mu.v(i) as i64 - 1));
                &(&a - &b) - &c
            })
            .collect();
        let zeta_exps = mu
            .entries()
            .iter()
            .map(|&m| (-(m as i64)).rem_euclid(r as i64) as u32)
            .collect();
        Weight { zvals, zeta_exps }
    }

    /// `s_i` acting by swapping positions `i` and `i+1`.
    pub fn swap(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.zvals.swap(i, i + 1);
        w.zeta_exps.swap(i, i + 1);
        w
    }

    /// The weight `ω ∘ φ` seen by `Φ v` when `v` has weight `ω` and first
    /// entry `μ_1`: the z-values rotate, and the wrapped one picks up
    /// `κ - (d_{-μ_1-1} - d_{-μ_1-2})`.
    pub fn phi_twist(&self, params: &Params, mu1: u32) -> Self {
        let n = self.zvals.len();
        let r = params.r() as i64;
        let m = mu1 as i64;
        let mut zvals: Vec<ParamScalar> = self.zvals[1..].to_vec();
        let shift = &params.kappa() - &(&params.d(-m - 1) - &params.d(-m - 2));
        zvals.push(&self.zvals[0] + &shift);
        let mut zeta_exps: Vec<u32> = self.zeta_exps[1..].to_vec();
        zeta_exps.push((self.zeta_exps[0] as i64 - 1).rem_euclid(r) as u32);
        debug_assert_eq!(zvals.len(), n);
        Weight { zvals, zeta_exps }
    }

    pub fn to_json(&self) -> Value {
        let z: Vec<String> = self.zvals.iter().map(|s| s.to_string()).collect();
        json!({"z": z, "zeta": self.zeta_exps})
    }
}

/// A monic `t`-eigenvector `f_μ = x^μ + lower terms`.
#[derive(Clone, Debug, PartialEq)]
pub struct JackVector {
    pub mu: Composition,
    pub poly: Poly,
    pub weight: Weight,
}

impl JackVector {
    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu.entries(),
            "weight": self.weight.to_json(),
            "terms": self.poly.to_json()["terms"],
        })
    }

    /// `z_i f - ω(z_i) f` for every `i`; all zero for a genuine eigenvector.
    pub fn residuals(&self, rep: &PolyRep) -> Vec<Poly> {
        (0..self.mu.n())
            .map(|i| rep.z(i, &self.poly).sub(&self.poly.scale(&self.weight.zvals[i])))
            .collect()
    }

    pub fn is_eigenvector(&self, rep: &PolyRep) -> bool {
        self.residuals(rep).iter().all(Poly::is_zero)
    }
}

/// Monomials that can occur in `f_μ`: same degree, same residues mod `r`,
/// sorted from the top of a linear extension of the order downwards.
fn solve_support(mu: &Composition, r: u32) -> Vec<Composition> {
    let mut out: Vec<Composition> = compositions(mu.n(), mu.size())
        .into_iter()
        .filter(|nu| nu.entries().iter().zip(mu.entries()).all(|(a, b)| a % r == b % r))
        .collect();
    out.sort_by(|a, b| {
        linear_extension_key(b)
            .cmp(&linear_extension_key(a))
            .then_with(|| b.cmp(a))
    });
    out
}

fn exp(c: &Composition) -> Exponent {
    c.entries().to_vec()
}

/// `f_μ` by solving the triangular eigen-system of the `z_i` directly.
pub fn jack_by_solve(rep: &PolyRep, mu: &Composition) -> Result<JackVector> {
    let params = rep.params();
    let n = mu.n();
    if n != rep.n() {
        return Err(Error::Domain(format!("composition {mu} has length {n}, expected {}", rep.n())));
    }
    let weight = Weight::of(mu, params);
    let support = solve_support(mu, rep.r());
    let start = support
        .iter()
        .position(|nu| nu == mu)
        .ok_or_else(|| Error::Internal("μ missing from its own support".into()))?;

    let mut f = Poly::zero(n);
    let mut acc: Vec<Poly> = vec![Poly::zero(n); n];
    for nu in &support[start..] {
        let e = exp(nu);
        let a = if nu == mu {
            params.one()
        } else {
            let wn = Weight::of(nu, params);
            let mut found = None;
            for i in 0..n {
                let delta = &weight.zvals[i] - &wn.zvals[i];
                if !delta.is_zero() {
                    let rhs = acc[i].coeff(&e).cloned().unwrap_or_else(|| params.zero());
                    found = Some(
                        rhs.checked_div(&delta)
                            .ok_or_else(|| Error::Internal("division by zero weight gap".into()))?,
                    );
                    break;
                }
            }
            match found {
                Some(a) => a,
                None => {
                    if acc.iter().all(|p| p.coeff(&e).is_none()) {
                        params.zero()
                    } else {
                        return Err(Error::NonGeneric { nu: nu.entries().to_vec() });
                    }
                }
            }
        };
        if a.is_zero() {
            continue;
        }
        if nu != mu && !order_lt(nu, mu) {
            return Err(Error::Internal(format!("f_{mu} has a term at {nu}, not below μ")));
        }
        let wn = Weight::of(nu, params);
        for i in 0..n {
            let col = rep.z_column(i, &e);
            for (t, c) in col.terms() {
                if *t == e {
                    if *c != wn.zvals[i] {
                        return Err(Error::Internal(format!("z_{} diagonal at {nu} disagrees with wt", i + 1)));
                    }
                } else if !order_lt(&Composition::new(t.clone()), nu) {
                    return Err(Error::Internal(format!("z_{} is not triangular at {nu}", i + 1)));
                }
            }
            acc[i].add_scaled(&col, &a);
        }
        f.add_term(e, a);
    }
    let v = JackVector {
        mu: mu.clone(),
        poly: f,
        weight,
    };
    if !v.is_eigenvector(rep) {
        return Err(match params.is_generic() {
            true => Error::Internal(format!("f_{mu} failed the eigen-equation")),
            false => Error::NonGeneric { nu: mu.entries().to_vec() },
        });
    }
    Ok(v)
}

/// Makes `p` monic on `x^μ`.
fn monic_on(p: Poly, mu: &Composition) -> Result<Poly> {
    let lead = p
        .coeff(mu.entries())
        .cloned()
        .ok_or_else(|| Error::NonGeneric { nu: mu.entries().to_vec() })?;
    if lead.is_one() {
        return Ok(p);
    }
    let inv = lead
        .inverse()
        .ok_or_else(|| Error::NonGeneric { nu: mu.entries().to_vec() })?;
    Ok(p.scale(&inv))
}

/// Which construction an [`Eigenbasis`] uses for cache misses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Solve,
    Intertwiners,
}

/// Memoized eigenbasis of one polynomial representation.
pub struct Eigenbasis<'a> {
    rep: &'a PolyRep,
    method: Method,
    cache: RwLock<HashMap<Composition, Arc<JackVector>>>,
}

impl<'a> Eigenbasis<'a> {
    pub fn new(rep: &'a PolyRep, method: Method) -> Self {
        Eigenbasis {
            rep,
            method,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rep(&self) -> &'a PolyRep {
        self.rep
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn get(&self, mu: &Composition) -> Result<Arc<JackVector>> {
        if let Some(v) = self.cache.read().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let v = Arc::new(match self.method {
            Method::Solve => jack_by_solve(self.rep, mu)?,
            Method::Intertwiners => self.build_by_intertwiners(mu)?,
        });
        self.cache.write().unwrap().insert(mu.clone(), v.clone());
        Ok(v)
    }

    fn build_by_intertwiners(&self, mu: &Composition) -> Result<JackVector> {
        let rep = self.rep;
        let params = rep.params();
        let n = mu.n();
        if n != rep.n() {
            return Err(Error::Domain(format!("composition {mu} has length {n}, expected {}", rep.n())));
        }
        let weight = Weight::of(mu, params);
        if mu.size() == 0 {
            return Ok(JackVector {
                mu: mu.clone(),
                poly: Poly::constant(n, params.one()),
                weight,
            });
        }
        let poly = if let Some(prev) = mu.psi() {
            let base = self.get(&prev)?;
            intertwine::phi_raw(rep, &base.poly)
        } else {
            let e = mu.entries();
            let i = (0..n - 1)
                .find(|&i| e[i] > e[i + 1])
                .ok_or_else(|| Error::Internal(format!("{mu} has no descent")))?;
            let base = self.get(&mu.swap(i))?;
            intertwine::sigma_raw(rep, i, &base.poly, &base.weight).map_err(|err| match err {
                Error::SingularIntertwiner(_) => Error::NonGeneric { nu: mu.entries().to_vec() },
                other => other,
            })?
        };
        Ok(JackVector {
            mu: mu.clone(),
            poly: monic_on(poly, mu)?,
            weight,
        })
    }
}

pub fn jack_by_intertwiners(rep: &PolyRep, mu: &Composition) -> Result<JackVector> {
    let basis = Eigenbasis::new(rep, Method::Intertwiners);
    basis.get(mu).map(|v| (*v).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::linalg::nullspace;

    fn rep(r: u32, p: u32, n: usize) -> PolyRep {
        PolyRep::new(Params::generic(GroupSpec::new(r, p, n).unwrap()))
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn trivial_cases() {
        let rp = rep(2, 1, 2);
        let f0 = jack_by_solve(&rp, &comp(&[0, 0])).unwrap();
        assert_eq!(f0.poly, Poly::constant(2, rp.params().one()));
        let r1 = rep(3, 1, 1);
        for m in 0..6 {
            let f = jack_by_solve(&r1, &comp(&[m])).unwrap();
            assert_eq!(f.poly, Poly::monomial(vec![m], r1.params().one()));
        }
    }

    #[test]
    fn weight_of_zero() {
        let rp = rep(2, 1, 2);
        let ps = rp.params();
        let w = Weight::of(&comp(&[0, 0]), ps);
        let base = &ps.kappa() - &(&ps.d(0) - &ps.d(1));
        assert_eq!(w.zvals[0], &base - &ps.c0().scale_int(2));
        assert_eq!(w.zvals[1], base);
        // Cross-check against z_i applied to 1.
        let one = Poly::constant(2, ps.one());
        for i in 0..2 {
            assert_eq!(rp.z(i, &one), one.scale(&w.zvals[i]));
        }
        assert_eq!(Weight::of(&comp(&[1, 0]), ps).zeta_exps, vec![1, 0]);
    }

    #[test]
    fn weight_swap() {
        let ps = Params::generic(GroupSpec::new(3, 1, 3).unwrap());
        for mu in compositions_up_to(3, 4) {
            for i in 0..2 {
                if mu.entries()[i] != mu.entries()[i + 1] {
                    assert_eq!(Weight::of(&mu.swap(i), &ps), Weight::of(&mu, &ps).swap(i), "{mu} {i}");
                }
            }
        }
    }

    #[test]
    fn phi_twist_matches() {
        for (r, p) in [(2, 1), (3, 1), (4, 2), (3, 3)] {
            let ps = Params::generic(GroupSpec::new(r, p, 3).unwrap());
            for mu in compositions_up_to(3, 3) {
                let lhs = Weight::of(&mu.phi(), &ps);
                let rhs = Weight::of(&mu, &ps).phi_twist(&ps, mu.entries()[0]);
                assert_eq!(lhs, rhs, "G({r},{p},3) {mu}");
            }
        }
    }

    /// Eigenvectors of the 2x2 matrix of `z_1` on the degree-1 space, found
    /// as nullspaces of `z_1 - λ` for the two diagonal entries.
    #[test]
    fn degree_one_oracle() {
        let rp = rep(2, 1, 2);
        let ps = rp.params();
        let basis = [vec![1u32, 0], vec![0, 1]];
        let mat: Vec<Vec<ParamScalar>> = basis
            .iter()
            .map(|row| {
                basis
                    .iter()
                    .map(|col| {
                        rp.z(0, &Poly::monomial(col.clone(), ps.one()))
                            .coeff(row)
                            .cloned()
                            .unwrap_or_else(|| ps.zero())
                    })
                    .collect()
            })
            .collect();
        for (k, mu) in basis.iter().enumerate() {
            let lambda = mat[k][k].clone();
            let shifted: Vec<Vec<ParamScalar>> = (0..2)
                .map(|a| {
                    (0..2)
                        .map(|b| if a == b { &mat[a][b] - &lambda } else { mat[a][b].clone() })
                        .collect()
                })
                .collect();
            let ns = nullspace(&shifted, &ps.zero(), &ps.one());
            assert_eq!(ns.len(), 1);
            let v = &ns[0];
            let inv = v[k].inverse().unwrap();
            let f = jack_by_solve(&rp, &Composition::new(mu.clone())).unwrap();
            for (j, e) in basis.iter().enumerate() {
                let c = f.poly.coeff(e).cloned().unwrap_or_else(|| ps.zero());
                assert_eq!(c, &v[j] * &inv, "μ={mu:?} coefficient at {e:?}");
            }
        }
    }

    #[test]
    fn constructions_agree_small() {
        for (r, p, n, d) in [(2, 1, 2, 3), (3, 3, 2, 3), (2, 2, 2, 3), (1, 1, 3, 3), (2, 1, 3, 2)] {
            let rp = rep(r, p, n);
            let b = Eigenbasis::new(&rp, Method::Intertwiners);
            for mu in compositions_up_to(n, d) {
                let a = jack_by_solve(&rp, &mu).unwrap();
                let c = b.get(&mu).unwrap();
                assert_eq!(a.poly, c.poly, "G({r},{p},{n}) {mu}");
                assert!(c.is_eigenvector(&rp));
            }
        }
    }

    #[test]
    fn phi_of_one() {
        let rp = rep(3, 1, 3);
        let v = jack_by_intertwiners(&rp, &comp(&[0, 0, 1])).unwrap();
        assert_eq!(v.poly, Poly::monomial(vec![0, 0, 1], rp.params().one()));
    }

    #[test]
    fn json_shape() {
        let rp = rep(2, 1, 2);
        let v = jack_by_solve(&rp, &comp(&[1, 1])).unwrap();
        let j = v.to_json();
        assert_eq!(j["mu"], json!([1, 1]));
        assert!(j["terms"].as_array().unwrap().len() >= 1);
        assert_eq!(j["weight"]["zeta"], json!([1, 1]));
    }
}
