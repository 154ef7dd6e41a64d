//! Verification of the defining relations on M(1), monomial by monomial.

use rayon::prelude::*;
use serde::Serialize;

use super::{monomials_of_degree, Exponent, Poly, PolyRep};
use crate::group::{elements, GroupElem};
use crate::scalar::{rat, ParamScalar};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationWitness {
    pub relation: String,
    pub indices: Vec<usize>,
    pub monomial: Exponent,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    /// Left side minus right side.
    pub defect: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub status: &'static str,
    pub max_deg: u32,
    /// Number of instances checked per relation, in check order.
    pub checked: Vec<(String, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RelationWitness>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

struct Ctx<'a> {
    rep: &'a PolyRep,
    n: usize,
    r: u32,
}

impl Ctx<'_> {
    fn mono(&self, e: &Exponent) -> Poly {
        Poly::monomial(e.clone(), self.rep.params().one())
    }

    fn embed_root(&self, k: i64) -> ParamScalar {
        self.rep.params().cyc(k)
    }

    /// Sum of `t_g f` over the reflections `x_i ↦ ζ^l x_j, x_j ↦ ζ^{-l} x_i`,
    /// each weighted by `weight(l)`.
    fn transposition_sum(&self, i: usize, j: usize, f: &Poly, weight: impl Fn(i64) -> ParamScalar) -> Poly {
        let mut out = Poly::zero(self.n);
        for l in 0..self.r as i64 {
            let g = GroupElem::colored_transposition(self.n, self.r, i, j, l);
            out.add_scaled(&f.act(&g), &weight(l));
        }
        out
    }

    /// The normalized `ζ_i^l`: `x_i ↦ ζ^{-l} x_i`.
    fn zeta(&self, i: usize, l: i64) -> GroupElem {
        GroupElem::diagonal(self.n, self.r, i, -l)
    }

    fn commutator(&self, i: usize, j: usize, f: &Poly) -> Poly {
        let a = self.rep.dunkl(i, &f.mul_x(j));
        let b = self.rep.dunkl(i, f).mul_x(j);
        a.sub(&b)
    }

    fn cf3_common(&self, i: usize, f: &Poly) -> Poly {
        let ps = self.rep.params();
        let mut rhs = f.scale(&ps.kappa());
        for j in (0..self.n).filter(|&j| j != i) {
            let t = self.transposition_sum(i, j, f, |_| ps.one());
            rhs.add_scaled(&t, &-ps.c0());
        }
        rhs
    }

    fn cf2(&self, i: usize, j: usize, f: &Poly) -> Poly {
        let ps = self.rep.params();
        let rhs = self
            .transposition_sum(i, j, f, |l| self.embed_root(-l))
            .scale(&ps.c0());
        self.commutator(i, j, f).sub(&rhs)
    }

    fn cf3(&self, i: usize, f: &Poly) -> Poly {
        let ps = self.rep.params();
        let mut rhs = self.cf3_common(i, f);
        for l in 1..self.r as i64 {
            let c = ps.c_diag(l);
            if c.is_zero() {
                continue;
            }
            let w = &c * &(&ps.one() - &self.embed_root(-l));
            rhs.add_scaled(&f.act(&self.zeta(i, l)), &-w);
        }
        self.commutator(i, i, f).sub(&rhs)
    }

    fn cf3_prime(&self, i: usize, f: &Poly) -> Poly {
        let ps = self.rep.params();
        let mut rhs = self.cf3_common(i, f);
        let inv_r = ps.rational(rat(1, self.r as i64));
        for j in 0..self.r as i64 {
            let dd = &ps.d(j) - &ps.d(j - 1);
            if dd.is_zero() {
                continue;
            }
            let mut eps = Poly::zero(self.n);
            for l in 0..self.r as i64 {
                eps.add_scaled(&f.act(&self.zeta(i, l)), &self.embed_root(-l * j));
            }
            rhs.add_scaled(&eps, &-(&dd * &inv_r));
        }
        self.commutator(i, i, f).sub(&rhs)
    }

    fn tw_x(&self, w: &GroupElem, i: usize, f: &Poly) -> Poly {
        let lhs = f.mul_x(i).act(w);
        let rhs = f.act(w).mul_x(w.perm()[i]).scale(&self.embed_root(w.colors()[i] as i64));
        lhs.sub(&rhs)
    }

    fn tw_y(&self, w: &GroupElem, i: usize, f: &Poly) -> Poly {
        let lhs = self.rep.dunkl(i, f).act(w);
        let rhs = self
            .rep
            .dunkl(w.perm()[i], &f.act(w))
            .scale(&self.embed_root(-(w.colors()[i] as i64)));
        lhs.sub(&rhs)
    }

    fn yy(&self, i: usize, j: usize, f: &Poly) -> Poly {
        let rep = self.rep;
        rep.dunkl(i, &rep.dunkl(j, f)).sub(&rep.dunkl(j, &rep.dunkl(i, f)))
    }

    fn zz(&self, i: usize, j: usize, f: &Poly) -> Poly {
        let rep = self.rep;
        rep.z(i, &rep.z(j, f)).sub(&rep.z(j, &rep.z(i, f)))
    }

    /// `y_i (g f) - g (y_i f) = κ (∂_i g) f - Σ_s c_s ⟨α_s, y_i⟩ ((g - s g)/α_s) (s f)`.
    fn fundamental(&self, i: usize, g: &Poly, f: &Poly) -> Poly {
        let rep = self.rep;
        let ps = rep.params();
        let lhs = rep.dunkl(i, &g.mul(f)).sub(&g.mul(&rep.dunkl(i, f)));
        let mut dg = Poly::zero(self.n);
        for (e, c) in g.terms() {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                dg.add_term(e2, c * &ps.int(e[i] as i64));
            }
        }
        let mut rhs = dg.mul(f).scale(&ps.kappa());
        for (s, cs) in rep.reflections().iter().zip(rep.reflection_params()) {
            let a = &s.alpha[i];
            if a.is_zero() {
                continue;
            }
            let t = rep.divided_difference(g, s).mul(&f.act(&s.elem));
            rhs.add_scaled(&t, &-cs.scale(a));
        }
        lhs.sub(&rhs)
    }
}

/// Checks the commutation relations between `x_i`, `y_i` and `t_w`, the
/// commutativity of the `y_i` and of the `z_i`, and the fundamental
/// commutator with a fixed cubic, on every monomial of degree `<= max_deg`.
/// Stops at the first failing instance.
pub fn check_relations(rep: &PolyRep, max_deg: u32) -> RelationReport {
    let n = rep.n();
    let ctx = Ctx { rep, n, r: rep.r() };
    let monos: Vec<Exponent> = (0..=max_deg).flat_map(|d| monomials_of_degree(n, d)).collect();
    let lower: Vec<Exponent> = (0..max_deg.saturating_sub(1))
        .flat_map(|d| monomials_of_degree(n, d))
        .collect();
    let group = elements(rep.params().spec());
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut checked = Vec::new();
    let mut cubic = vec![0u32; n];
    cubic[0] += 2;
    cubic[n - 1] += 1;
    let g = ctx.mono(&cubic);

    type Check<'a> = Box<dyn Fn(&Exponent) -> Option<RelationWitness> + Sync + 'a>;
    let wit = |name: &str, idx: Vec<usize>, e: &Exponent, w: Option<&GroupElem>, d: Poly| {
        if d.is_zero() {
            None
        } else {
            Some(RelationWitness {
                relation: name.to_string(),
                indices: idx.iter().map(|i| i + 1).collect(),
                monomial: e.clone(),
                element: w.map(|w| w.to_string()),
                defect: d.to_string(),
            })
        }
    };
    let suites: Vec<(&str, &Vec<Exponent>, usize, Check)> = vec![
        (
            "cf2",
            &monos,
            n * n.saturating_sub(1),
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                pairs
                    .iter()
                    .filter(|(i, j)| i != j)
                    .find_map(|&(i, j)| wit("cf2", vec![i, j], e, None, ctx.cf2(i, j, &f)))
            }),
        ),
        (
            "cf3",
            &monos,
            n,
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                (0..n).find_map(|i| wit("cf3", vec![i], e, None, ctx.cf3(i, &f)))
            }),
        ),
        (
            "cf3'",
            &monos,
            n,
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                (0..n).find_map(|i| wit("cf3'", vec![i], e, None, ctx.cf3_prime(i, &f)))
            }),
        ),
        (
            "tw-x",
            &monos,
            n * group.len(),
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                group.iter().find_map(|w| {
                    (0..n).find_map(|i| wit("tw-x", vec![i], e, Some(w), ctx.tw_x(w, i, &f)))
                })
            }),
        ),
        (
            "tw-y",
            &monos,
            n * group.len(),
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                group.iter().find_map(|w| {
                    (0..n).find_map(|i| wit("tw-y", vec![i], e, Some(w), ctx.tw_y(w, i, &f)))
                })
            }),
        ),
        (
            "yy",
            &monos,
            n * n.saturating_sub(1) / 2,
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                pairs
                    .iter()
                    .filter(|(i, j)| i < j)
                    .find_map(|&(i, j)| wit("yy", vec![i, j], e, None, ctx.yy(i, j, &f)))
            }),
        ),
        (
            "zz",
            &monos,
            n * n.saturating_sub(1) / 2,
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                pairs
                    .iter()
                    .filter(|(i, j)| i < j)
                    .find_map(|&(i, j)| wit("zz", vec![i, j], e, None, ctx.zz(i, j, &f)))
            }),
        ),
        (
            "fundamental",
            &lower,
            n,
            Box::new(|e: &Exponent| {
                let f = ctx.mono(e);
                (0..n).find_map(|i| wit("fundamental", vec![i], e, None, ctx.fundamental(i, &g, &f)))
            }),
        ),
    ];
    for (name, set, per, check) in &suites {
        checked.push((name.to_string(), set.len() * per));
        if let Some(w) = set.par_iter().find_map_first(check) {
            return RelationReport {
                status: "fail",
                max_deg,
                checked,
                witness: Some(w),
            };
        }
    }
    RelationReport {
        status: "pass",
        max_deg,
        checked,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::poly::Fault;
    use crate::scalar::Params;

    fn rep(r: u32, p: u32, n: usize, fault: Option<Fault>) -> PolyRep {
        PolyRep::with_fault(Params::generic(GroupSpec::new(r, p, n).unwrap()), fault)
    }

    #[test]
    fn relations_hold() {
        for (r, p, n, d) in [(2, 1, 2, 4), (3, 3, 2, 3), (1, 1, 3, 3), (4, 2, 2, 3)] {
            let rep_ = rep(r, p, n, None);
            let report = check_relations(&rep_, d);
            assert!(report.passed(), "G({r},{p},{n}): {:?}", report.witness);
        }
    }

    #[test]
    fn dunkl_fault_is_caught() {
        let report = check_relations(&rep(2, 1, 2, Some(Fault::DunklSign)), 2);
        let w = report.witness.expect("fault must be detected");
        assert_eq!(w.relation, "cf2");
        assert_eq!(w.indices, vec![1, 2]);
    }
}
