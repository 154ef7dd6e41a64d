//! Drinfeld Hecke forms and the PBW conditions.
//!
//! `V = h* ⊕ h` has basis `x_1..x_n, y_1..y_n`, indexed `0..2n`. A family
//! assigns to group elements skew forms `B_w` with `[u, v] = Σ_w B_w(u, v) t_w`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::group::{elements, GroupElem, GroupSpec};
use crate::scalar::{cyc, CycScalar, ParamScalar, Params};

/// Sparse skew form: entries `(a, b)` with `a < b`; `B(b, a) = -B(a, b)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SkewForm {
    entries: BTreeMap<(usize, usize), ParamScalar>,
}

impl SkewForm {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c (e_a ∧ e_b)`, i.e. `B(a, b) += c` and `B(b, a) -= c`.
    pub fn add(&mut self, a: usize, b: usize, c: ParamScalar) {
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        match self.entries.get(&key) {
            Some(old) => {
                let s = old + &c;
                if s.is_zero() {
                    self.entries.remove(&key);
                } else {
                    self.entries.insert(key, s);
                }
            }
            None => {
                self.entries.insert(key, c);
            }
        }
    }

    pub fn get(&self, a: usize, b: usize) -> Option<ParamScalar> {
        if a < b {
            self.entries.get(&(a, b)).cloned()
        } else {
            self.entries.get(&(b, a)).map(|c| -c)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        let mut out = SkewForm::new();
        for (&(a, b), c) in &self.entries {
            out.add(a, b, c * s);
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &ParamScalar)> {
        self.entries.iter()
    }
}

/// `v e_a = λ e_{π(a)}` on `V`, with `h` carrying the contragredient action.
fn act_basis(v: &GroupElem, a: usize) -> (usize, i64) {
    let n = v.n();
    if a < n {
        (v.perm()[a], v.colors()[a] as i64)
    } else {
        (n + v.perm()[a - n], -(v.colors()[a - n] as i64))
    }
}

#[derive(Clone)]
pub struct FormFamily {
    params: Params,
    n: usize,
    forms: HashMap<GroupElem, SkewForm>,
}

impl FormFamily {
    pub fn new(params: Params) -> Self {
        let n = params.spec().n;
        FormFamily {
            params,
            n,
            forms: HashMap::new(),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Replaces the form at `w`; zero forms are dropped.
    pub fn insert(&mut self, w: GroupElem, form: SkewForm) {
        if form.is_zero() {
            self.forms.remove(&w);
        } else {
            self.forms.insert(w, form);
        }
    }

    pub fn form(&self, w: &GroupElem) -> Option<&SkewForm> {
        self.forms.get(w)
    }

    pub fn value(&self, w: &GroupElem, a: usize, b: usize) -> ParamScalar {
        self.form(w)
            .and_then(|f| f.get(a, b))
            .unwrap_or_else(|| self.params.zero())
    }

    /// Support in a deterministic order.
    pub fn support(&self) -> Vec<&GroupElem> {
        let mut s: Vec<&GroupElem> = self.forms.keys().collect();
        s.sort_by_key(|w| (w.perm().to_vec(), w.colors().to_vec()));
        s
    }

    /// The family `B'_{v w v^{-1}}(v a, v b) = B_w(a, b)`.
    pub fn conjugate(&self, v: &GroupElem) -> Self {
        let mut out = FormFamily::new(self.params.clone());
        let vinv = v.inverse();
        for (w, f) in &self.forms {
            let mut g = SkewForm::new();
            for (&(a, b), c) in f.entries() {
                let (pa, la) = act_basis(v, a);
                let (pb, lb) = act_basis(v, b);
                // B'(v e_a, v e_b) = B(e_a, e_b), and v e_a = ζ^{la} e_{pa}.
                g.add(pa, pb, c * &self.params.cyc(-la - lb));
            }
            out.insert(v.compose(w).compose(&vinv), g);
        }
        out
    }
}

/// The rational Cherednik algebra forms: `B_1(x_i, y_j) = -κ δ_ij` and
/// `B_s(x, y) = c_s ⟨α_s, y⟩ ⟨x, α_s^∨⟩` for reflections `s`.
pub fn rca_forms(params: &Params) -> FormFamily {
    let spec = params.spec();
    let (n, r) = (spec.n, spec.r);
    let mut fam = FormFamily::new(params.clone());
    let mut id = SkewForm::new();
    for i in 0..n {
        id.add(i, n + i, -params.kappa());
    }
    fam.insert(GroupElem::identity(n, r), id);
    for s in crate::group::reflections(spec) {
        let cs = match s.class {
            crate::group::ReflClass::Transposition => params.c0(),
            crate::group::ReflClass::Diagonal(l) => params.c_diag(l as i64),
        };
        let mut f = SkewForm::new();
        for i in 0..n {
            for j in 0..n {
                let v = &s.alpha[j] * &s.alpha_check[i];
                if !v.is_zero() {
                    f.add(i, n + j, cs.scale(&v));
                }
            }
        }
        fam.insert(s.elem.clone(), f);
    }
    fam
}

fn basis_name(n: usize, a: usize) -> String {
    if a < n {
        format!("x{}", a + 1)
    } else {
        format!("y{}", a - n + 1)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PbwWitness {
    /// `"a"` or `"b"`.
    pub condition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    pub w: String,
    pub basis: Vec<String>,
    pub defect: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PbwReport {
    pub status: &'static str,
    pub support: usize,
    pub checked_a: usize,
    pub checked_b: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PbwWitness>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// `w e_c - e_c` as a sparse vector `{index: coefficient}`.
fn moved(w: &GroupElem, c: usize, r: u32) -> BTreeMap<usize, CycScalar> {
    let (pc, lc) = act_basis(w, c);
    let mut out = BTreeMap::new();
    out.insert(pc, cyc(r, lc));
    let e = out.entry(c).or_insert_with(|| CycScalar::zero(r));
    *e = &*e - &CycScalar::one(r);
    out.retain(|_, v| !v.is_zero());
    out
}

/// Checks conditions (a) and (b) on basis vectors; the first failing
/// instance, in deterministic order, is reported.
pub fn check_pbw(fam: &FormFamily, spec: &GroupSpec) -> PbwReport {
    let ps = fam.params();
    let (n, r, dim) = (spec.n, spec.r, fam.dim());
    let group = elements(spec);
    let support = fam.support();
    // (a): B_{v w v^{-1}}(v e_a, v e_b) = B_w(e_a, e_b).
    let a_items: Vec<(&GroupElem, &GroupElem)> = group
        .iter()
        .flat_map(|v| support.iter().map(move |w| (v, *w)))
        .collect();
    let wit_a = a_items.par_iter().find_map_first(|&(v, w)| {
        let conj = v.compose(w).compose(&v.inverse());
        for a in 0..dim {
            for b in a + 1..dim {
                let (pa, la) = act_basis(v, a);
                let (pb, lb) = act_basis(v, b);
                let lhs = fam.value(&conj, pa, pb) * ps.cyc(la + lb);
                let rhs = fam.value(w, a, b);
                if lhs != rhs {
                    return Some(PbwWitness {
                        condition: "a".into(),
                        v: Some(v.to_string()),
                        w: w.to_string(),
                        basis: vec![basis_name(n, a), basis_name(n, b)],
                        defect: (&lhs - &rhs).to_string(),
                    });
                }
            }
        }
        None
    });
    let checked_a = a_items.len() * dim * (dim - 1) / 2;
    if wit_a.is_some() {
        return PbwReport {
            status: "fail",
            support: support.len(),
            checked_a,
            checked_b: 0,
            witness: wit_a,
        };
    }
    // (b): B(x,y)(wz - z) + B(y,z)(wx - x) + B(z,x)(wy - y) = 0.
    let triples: Vec<(usize, usize, usize)> = (0..dim)
        .flat_map(|a| (0..dim).flat_map(move |b| (0..dim).map(move |c| (a, b, c))))
        .collect();
    let wit_b = support.par_iter().find_map_first(|w| {
        let mv: Vec<BTreeMap<usize, CycScalar>> = (0..dim).map(|c| moved(w, c, r)).collect();
        for &(x, y, z) in &triples {
            let mut acc: BTreeMap<usize, ParamScalar> = BTreeMap::new();
            for (p, q, t) in [(x, y, z), (y, z, x), (z, x, y)] {
                let bpq = fam.value(w, p, q);
                if bpq.is_zero() {
                    continue;
                }
                for (&i, c) in &mv[t] {
                    let e = acc.entry(i).or_insert_with(|| ps.zero());
                    *e = &*e + &bpq.scale(c);
                }
            }
            if let Some((&i, c)) = acc.iter().find(|(_, c)| !c.is_zero()) {
                return Some(PbwWitness {
                    condition: "b".into(),
                    v: None,
                    w: w.to_string(),
                    basis: vec![basis_name(n, x), basis_name(n, y), basis_name(n, z)],
                    defect: format!("({c}) {}", basis_name(n, i)),
                });
            }
        }
        None
    });
    PbwReport {
        status: if wit_b.is_none() { "pass" } else { "fail" },
        support: support.len(),
        checked_a,
        checked_b: support.len() * triples.len(),
        witness: wit_b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, p: u32, n: usize) -> Params {
        Params::generic(GroupSpec::new(r, p, n).unwrap())
    }

    #[test]
    fn rca_b2_passes() {
        let ps = params(2, 1, 2);
        let rep = check_pbw(&rca_forms(&ps), ps.spec());
        assert!(rep.passed(), "{:?}", rep.witness);
        assert_eq!(rep.support, 1 + 4);
    }

    #[test]
    fn isotropy_and_support() {
        let ps = params(3, 1, 2);
        let fam = rca_forms(&ps);
        let n = 2;
        for w in elements(ps.spec()) {
            match fam.form(&w) {
                None => assert!(w.fixed_codim() > 1, "{w}"),
                Some(f) => {
                    for (&(a, b), _) in f.entries() {
                        assert!(a < n && b >= n, "{w}: ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_one_diagonal_value() {
        // r = 2, n = 1: s x = -x, so with α = x_1 the coroot is 2 y_1 and
        // ⟨x_1, y_1⟩_s = 2 c_1.
        let ps = params(2, 1, 1);
        let fam = rca_forms(&ps);
        let s = GroupElem::diagonal(1, 2, 0, 1);
        let two_c1 = ps.c_diag(1).scale_int(2);
        assert_eq!(fam.value(&s, 0, 1), two_c1);
        assert_eq!(fam.value(&s, 1, 0), -two_c1);
    }

    #[test]
    fn class_fault_breaks_a() {
        let ps = params(2, 1, 2);
        let mut fam = rca_forms(&ps);
        let s = GroupElem::colored_transposition(2, 2, 0, 1, 1);
        let f = fam.form(&s).unwrap().scale(&ps.int(2));
        fam.insert(s, f);
        let rep = check_pbw(&fam, ps.spec());
        assert_eq!(rep.witness.unwrap().condition, "a");
    }

    #[test]
    fn conjugation_invariance() {
        let ps = params(3, 1, 2);
        let fam = rca_forms(&ps);
        for v in elements(ps.spec()).iter().take(6) {
            let c = fam.conjugate(v);
            assert!(check_pbw(&c, ps.spec()).passed());
            for w in fam.support() {
                let cw = v.compose(w).compose(&v.inverse());
                assert!(c.form(&cw).is_some());
            }
        }
    }

    /// Brute force over non-reflection diagonal elements of corank 2 and
    /// simple candidate forms, looking for one that keeps (a) but breaks (b).
    #[test]
    fn corank_two_counterexample() {
        let ps = params(2, 1, 2);
        let spec = *ps.spec();
        let n = 2;
        let mut candidates: Vec<SkewForm> = Vec::new();
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                let mut f = SkewForm::new();
                f.add(a, b, ps.one());
                candidates.push(f);
            }
        }
        let mut symp = SkewForm::new();
        for i in 0..n {
            symp.add(i, n + i, ps.one());
        }
        candidates.push(symp);
        let mut found = None;
        'outer: for w in elements(&spec) {
            if w.perm().iter().enumerate().any(|(i, &p)| p != i) || w.fixed_codim() != 2 {
                continue;
            }
            for f in &candidates {
                let mut fam = rca_forms(&ps);
                fam.insert(w.clone(), f.clone());
                let rep = check_pbw(&fam, &spec);
                if let Some(wit) = rep.witness {
                    if wit.condition == "b" {
                        found = Some(wit);
                        break 'outer;
                    }
                }
            }
        }
        let wit = found.expect("a corank-2 counterexample exists");
        assert_eq!(wit.basis.len(), 3);
    }
}
