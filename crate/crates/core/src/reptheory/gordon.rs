//! Singular vectors at the point `c_s = (h+1)/h` and the quotient L(1).

use serde::Serialize;

use super::characters::graded_char_l1;
use super::hyperplanes::{default_bound, genericity_guard, quotient_dimension, quotient_hilbert_series, GuardReport};
use super::invariants::{coxeter_number, degrees};
use crate::error::Result;
use crate::group::{elements, GroupElem, GroupSpec};
use crate::jack::{jack_by_solve, Composition, Eigenbasis, Method};
use crate::linalg::nullspace;
use crate::poly::{Poly, PolyRep};
use crate::scalar::{cyc, CycScalar, ParamPoint, ParamScalar, Params};

#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    pub guard: GuardReport,
    /// Construction failures, one entry per failed `f_{k e_i}`.
    pub construction_errors: Vec<String>,
    /// Whether the solve and the intertwiner recursion agree on each `f_{k e_i}`.
    pub constructions_agree: bool,
    /// `(i, j)` pairs, 1-based, with `y_j f_{k e_i} ≠ 0`.
    pub not_annihilated: Vec<(usize, usize)>,
    pub w_stable: bool,
    pub span_dim: usize,
    /// Elements (printed) whose trace on the span differs from the trace on `V`.
    pub character_mismatch: Vec<String>,
}

impl SingularReport {
    pub fn passed(&self) -> bool {
        self.guard.passed
            && self.construction_errors.is_empty()
            && self.constructions_agree
            && self.not_annihilated.is_empty()
            && self.w_stable
            && self.character_mismatch.is_empty()
    }
}

/// Coordinates of `g` in the linearly independent family `basis`.
fn coordinates(params: &Params, basis: &[Poly], g: &Poly) -> Option<Vec<ParamScalar>> {
    let mut monos: Vec<&Vec<u32>> = basis.iter().flat_map(|f| f.terms().map(|(e, _)| e)).collect();
    monos.extend(g.terms().map(|(e, _)| e));
    monos.sort();
    monos.dedup();
    let zero = params.zero();
    let rows: Vec<Vec<ParamScalar>> = monos
        .iter()
        .map(|e| {
            let mut row: Vec<ParamScalar> = basis
                .iter()
                .map(|f| f.coeff(e).cloned().unwrap_or_else(|| zero.clone()))
                .collect();
            row.push(-g.coeff(e).cloned().unwrap_or_else(|| zero.clone()));
            row
        })
        .collect();
    let ns = nullspace(&rows, &zero, &params.one());
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    let last = v.last()?.inverse()?;
    Some(v[..basis.len()].iter().map(|c| c * &last).collect())
}

/// Trace of `w` on `C{x_1^k, …, x_n^k}`.
fn trace_on_v(w: &GroupElem, k: u32) -> CycScalar {
    let r = w.r();
    (0..w.n())
        .filter(|&i| w.perm()[i] == i)
        .fold(CycScalar::zero(r), |a, i| &a + &cyc(r, k as i64 * w.colors()[i] as i64))
}

pub fn singular_vector_check(spec: &GroupSpec, point: &ParamPoint, k: u32) -> Result<SingularReport> {
    let h = coxeter_number(spec)?;
    let guard = genericity_guard(spec, point, k, default_bound(k, h))?;
    let params = Params::special(*spec, point.clone())?;
    let rep = PolyRep::new(params.clone());
    let n = spec.n;
    let mus: Vec<Composition> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = k;
            Composition::new(e)
        })
        .collect();
    let recursion = Eigenbasis::new(&rep, Method::Intertwiners);
    let mut construction_errors = Vec::new();
    let mut constructions_agree = true;
    let mut fs = Vec::new();
    for mu in &mus {
        match (jack_by_solve(&rep, mu), recursion.get(mu)) {
            (Ok(a), Ok(b)) => {
                constructions_agree &= a.poly == b.poly;
                fs.push(a.poly);
            }
            (Ok(a), Err(e)) => {
                construction_errors.push(format!("intertwiners at {mu}: {e}"));
                fs.push(a.poly);
            }
            (Err(e), _) => construction_errors.push(format!("solve at {mu}: {e}")),
        }
    }
    let mut not_annihilated = Vec::new();
    let mut w_stable = fs.len() == n;
    let mut character_mismatch = Vec::new();
    if w_stable {
        for (i, f) in fs.iter().enumerate() {
            for j in 0..n {
                if !rep.dunkl(j, f).is_zero() {
                    not_annihilated.push((i + 1, j + 1));
                }
            }
        }
        for w in elements(spec) {
            let mut trace = params.zero();
            for (i, f) in fs.iter().enumerate() {
                match coordinates(&params, &fs, &f.act(&w)) {
                    Some(c) => trace = &trace + &c[i],
                    None => {
                        w_stable = false;
                        break;
                    }
                }
            }
            if !w_stable {
                break;
            }
            if trace != params.embed(trace_on_v(&w, k)) {
                character_mismatch.push(w.to_string());
            }
        }
    }
    let span_dim = if fs.is_empty() {
        0
    } else {
        let monos: Vec<Vec<u32>> = {
            let mut m: Vec<Vec<u32>> = fs.iter().flat_map(|f| f.terms().map(|(e, _)| e.clone())).collect();
            m.sort();
            m.dedup();
            m
        };
        let rows: Vec<Vec<ParamScalar>> = fs
            .iter()
            .map(|f| monos.iter().map(|e| f.coeff(e).cloned().unwrap_or_else(|| params.zero())).collect())
            .collect();
        crate::linalg::rank(&rows)
    };
    Ok(SingularReport {
        guard,
        construction_errors,
        constructions_agree,
        not_annihilated,
        w_stable,
        span_dim,
        character_mismatch,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GordonReport {
    pub group: String,
    pub coxeter_number: u32,
    pub k: u32,
    pub point: String,
    pub singular: SingularReport,
    /// `dim L(1)` from the composition count, the `t → 1` limit of the
    /// identity character, and the quotient basis by degree.
    pub dim_count: u64,
    pub dim_character: String,
    pub dim_basis: u64,
    /// Identity character coefficients, lowest degree first.
    pub hilbert_series: Vec<String>,
    pub series_match: bool,
    /// The quotient series dominates `Π (1 - t^{d_i}) / (1 - t)^n`.
    pub coinvariant_dominated: bool,
}

impl GordonReport {
    pub fn passed(&self) -> bool {
        let n_dim = self.dim_count.to_string();
        self.singular.passed()
            && self.dim_character == n_dim
            && self.dim_basis == self.dim_count
            && self.series_match
            && self.coinvariant_dominated
    }
}

/// Coinvariant Hilbert series `Π_i (1 + t + … + t^{d_i - 1})`.
fn coinvariant_series(degs: &[u32]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &d in degs {
        let mut next = vec![0u64; out.len() + d as usize - 1];
        for (i, c) in out.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        out = next;
    }
    out
}

pub fn gordon_report(spec: &GroupSpec) -> Result<GordonReport> {
    let h = coxeter_number(spec)?;
    let k = h + 1;
    let point = ParamPoint::gordon(spec)?;
    let singular = singular_vector_check(spec, &point, k)?;
    let n = spec.n;
    let id = graded_char_l1(&GroupElem::identity(n, spec.r), k);
    let poly = id.as_polynomial().unwrap_or_default();
    let dim_character = id
        .value_at_one()
        .map(|v| v.to_string())
        .unwrap_or_else(|| "undefined".into());
    let basis = quotient_hilbert_series(n, k);
    let series_match = poly.len() == basis.len()
        && poly
            .iter()
            .zip(&basis)
            .all(|(a, &b)| *a == CycScalar::from_int(spec.r, b as i64));
    let coinv = coinvariant_series(&degrees(spec));
    let coinvariant_dominated = coinv
        .iter()
        .enumerate()
        .all(|(i, &c)| basis.get(i).copied().unwrap_or(0) >= c);
    Ok(GordonReport {
        group: spec.to_string(),
        coxeter_number: h,
        k,
        point: point.describe(),
        singular,
        dim_count: quotient_dimension(n, k),
        dim_character,
        dim_basis: basis.iter().sum(),
        hilbert_series: poly.iter().map(|c| c.to_string()).collect(),
        series_match,
        coinvariant_dominated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_gordon() {
        let sp = GroupSpec::new(2, 1, 2).unwrap();
        let rep = gordon_report(&sp).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.dim_count, 25);
        assert_eq!(rep.singular.span_dim, 2);
    }

    #[test]
    fn generic_singular_vector_is_not_annihilated() {
        let sp = GroupSpec::new(2, 1, 2).unwrap();
        let rep = PolyRep::new(Params::generic(sp));
        let f = jack_by_solve(&rep, &Composition::new(vec![5, 0])).unwrap();
        assert!(!rep.dunkl(0, &f.poly).is_zero());
    }

    #[test]
    fn coinvariant_series_b2() {
        assert_eq!(coinvariant_series(&[2, 4]), vec![1, 2, 2, 2, 1]);
    }
}
