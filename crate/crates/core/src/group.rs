//! The complex reflection groups G(r,p,n) and their reflections.
//!
//! An element acts on coordinates by `w x_i = ζ^{colors[i]} x_{perm[i]}`
//! and on the dual space by `w y_i = ζ^{-colors[i]} y_{perm[i]}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{cyc, CycScalar};

/// The parameters `(r, p, n)` of G(r,p,n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub r: u32,
    pub p: u32,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(r: u32, p: u32, n: usize) -> Result<Self> {
        if r == 0 || p == 0 || n == 0 {
            return Err(Error::Domain(format!("G({r},{p},{n}): r, p, n must be positive")));
        }
        if !r.is_multiple_of(p) {
            return Err(Error::Domain(format!("G({r},{p},{n}): p must divide r")));
        }
        Ok(GroupSpec { r, p, n })
    }

    /// `m = r/p`.
    pub fn m(&self) -> u32 {
        self.r / self.p
    }

    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        (self.r as u64).pow(self.n as u32) * fact / self.p as u64
    }

    /// Parses `"r,p,n"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected r,p,n, got {s:?}")));
        }
        let num = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad group parameter {t:?}")))
        };
        Self::new(num(parts[0])?, num(parts[1])?, num(parts[2])? as usize)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.r, self.p, self.n)
    }
}

/// A monomial matrix: a permutation together with colors in Z/r.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    r: u32,
    perm: Vec<usize>,
    colors: Vec<u32>,
}

impl GroupElem {
    pub fn new(r: u32, perm: Vec<usize>, colors: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        if colors.len() != n {
            return Err(Error::Domain("perm and colors differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let colors = colors.into_iter().map(|c| c % r).collect();
        Ok(GroupElem { r, perm, colors })
    }

    pub fn identity(n: usize, r: u32) -> Self {
        GroupElem {
            r,
            perm: (0..n).collect(),
            colors: vec![0; n],
        }
    }

    /// The transposition `s_{ij}`.
    pub fn transposition(n: usize, r: u32, i: usize, j: usize) -> Self {
        let mut g = Self::identity(n, r);
        g.perm.swap(i, j);
        g
    }

    /// The diagonal element `x_i ↦ ζ^a x_i`.
    pub fn diagonal(n: usize, r: u32, i: usize, a: i64) -> Self {
        let mut g = Self::identity(n, r);
        g.colors[i] = a.rem_euclid(r as i64) as u32;
        g
    }

    /// The reflection `x_i ↦ ζ^l x_j`, `x_j ↦ ζ^{-l} x_i`.
    pub fn colored_transposition(n: usize, r: u32, i: usize, j: usize, l: i64) -> Self {
        let mut g = Self::transposition(n, r, i, j);
        g.colors[i] = l.rem_euclid(r as i64) as u32;
        g.colors[j] = (-l).rem_euclid(r as i64) as u32;
        g
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self * o`, acting by `o` first.
    pub fn compose(&self, o: &Self) -> Self {
        assert_eq!(self.n(), o.n());
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            let j = o.perm[i];
            perm[i] = self.perm[j];
            colors[i] = (o.colors[i] + self.colors[j]) % self.r;
        }
        GroupElem {
            r: self.r,
            perm,
            colors,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            colors[self.perm[i]] = (self.r - self.colors[i]) % self.r;
        }
        GroupElem {
            r: self.r,
            perm,
            colors,
        }
    }

    /// Membership in G(r,p,n): the color sum is divisible by `p`.
    pub fn in_group(&self, p: u32) -> bool {
        self.colors.iter().map(|&c| c as u64).sum::<u64>() % p as u64 == 0
    }

    /// `w x^mu = ζ^k x^nu`; returns `(k mod r, nu)`.
    pub fn act_monomial(&self, mu: &[u32]) -> (u32, Vec<u32>) {
        let mut nu = vec![0; mu.len()];
        let mut k: u64 = 0;
        for (i, &e) in mu.iter().enumerate() {
            nu[self.perm[i]] = e;
            k += self.colors[i] as u64 * e as u64;
        }
        ((k % self.r as u64) as u32, nu)
    }

    /// Image of a vector of `x`-coordinates (coefficients on `x_1..x_n`).
    pub fn act_x(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(self.r); v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] = &v[i] * &cyc(self.r, self.colors[i] as i64);
        }
        out
    }

    /// Image of a vector of `y`-coordinates, using the contragredient action.
    pub fn act_y(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(self.r); v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] = &v[i] * &cyc(self.r, -(self.colors[i] as i64));
        }
        out
    }

    /// The matrix on `span(x_1..x_n)`; column `i` is the image of `x_i`.
    pub fn matrix(&self) -> Vec<Vec<CycScalar>> {
        let n = self.n();
        let mut m = vec![vec![CycScalar::zero(self.r); n]; n];
        for i in 0..n {
            m[self.perm[i]][i] = cyc(self.r, self.colors[i] as i64);
        }
        m
    }

    /// Cycles of the underlying permutation with the color sum along each.
    pub fn cycles(&self) -> Vec<(Vec<usize>, u32)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc_ = Vec::new();
            let mut c = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc_.push(i);
                c = (c + self.colors[i]) % self.r;
                i = self.perm[i];
            }
            out.push((cyc_, c));
        }
        out
    }

    /// Codimension of the fixed space of the action on `x`-coordinates.
    pub fn fixed_codim(&self) -> usize {
        let mut m = self.matrix();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - &CycScalar::one(self.r);
        }
        crate::linalg::rank(&m)
    }

    /// Parses cycle notation with an optional color list, e.g. `(1 2)[0,1]`.
    pub fn parse(s: &str, r: u32, n: usize) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("group element {s:?}: {m}"));
        let s = s.trim();
        let (cycles_part, colors_part) = match s.find('[') {
            Some(k) => (&s[..k], Some(&s[k..])),
            None => (s, None),
        };
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rest = cycles_part.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = &rest[1..close];
            let pts: Vec<usize> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad index")))
                .collect::<Result<_>>()?;
            if pts.iter().any(|&p| p == 0 || p > n) {
                return Err(bad("index out of range"));
            }
            let cycle_perm = {
                let mut q: Vec<usize> = (0..n).collect();
                for (t, &a) in pts.iter().enumerate() {
                    q[a - 1] = pts[(t + 1) % pts.len()] - 1;
                }
                q
            };
            // Cycles are composed right to left, as written.
            let composed: Vec<usize> = (0..n).map(|i| perm[cycle_perm[i]]).collect();
            perm = composed;
            rest = rest[close + 1..].trim_start();
        }
        let colors = match colors_part {
            None => vec![0; n],
            Some(c) => {
                let c = c.trim();
                if !c.ends_with(']') {
                    return Err(bad("unclosed color list"));
                }
                let v: Vec<u32> = c[1..c.len() - 1]
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<i64>()
                            .map(|x| x.rem_euclid(r as i64) as u32)
                            .map_err(|_| bad("bad color"))
                    })
                    .collect::<Result<_>>()?;
                if v.len() != n {
                    return Err(bad("wrong number of colors"));
                }
                v
            }
        };
        GroupElem::new(r, perm, colors)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (cycle, _) in self.cycles() {
            if cycle.len() > 1 {
                any = true;
                let s: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "({})", s.join(" "))?;
            }
        }
        if !any {
            write!(f, "()")?;
        }
        let c: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// All elements of G(r,p,n), identity first.
pub fn elements(spec: &GroupSpec) -> Vec<GroupElem> {
    let n = spec.n;
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
    perms.sort();
    let mut colorings = Vec::new();
    let total = (spec.r as u64).pow(n as u32);
    for mut code in 0..total {
        let mut c = vec![0u32; n];
        for slot in c.iter_mut() {
            *slot = (code % spec.r as u64) as u32;
            code /= spec.r as u64;
        }
        if c.iter().map(|&x| x as u64).sum::<u64>() % spec.p as u64 == 0 {
            colorings.push(c);
        }
    }
    let mut out = Vec::with_capacity(perms.len() * colorings.len());
    for p in &perms {
        for c in &colorings {
            out.push(GroupElem {
                r: spec.r,
                perm: p.clone(),
                colors: c.clone(),
            });
        }
    }
    out
}

fn permutations(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == a.len() {
        out.push(a.clone());
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, out);
        a.swap(k, i);
    }
}

/// Conjugacy class of a reflection, which indexes its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflClass {
    /// Reflections of transposition type, parameter `c0`.
    Transposition,
    /// `x_i ↦ ζ^{-l} x_i`, parameter `c_l`.
    Diagonal(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflKind {
    /// `x_i ↦ ζ^l x_j`, `x_j ↦ ζ^{-l} x_i` with `i < j`.
    Transposition { i: usize, j: usize, l: u32 },
    /// `x_i ↦ ζ^{-l} x_i`.
    Diagonal { i: usize, l: u32 },
}

#[derive(Clone, Debug)]
pub struct Reflection {
    pub elem: GroupElem,
    pub kind: ReflKind,
    pub class: ReflClass,
    /// Root in the `x`-coordinates: `s` acts on it by its non-trivial eigenvalue.
    pub alpha: Vec<CycScalar>,
    /// Coroot in the `y`-coordinates.
    pub alpha_check: Vec<CycScalar>,
}

impl Reflection {
    /// `⟨α, y_i⟩`, the `x_i`-coefficient of the root.
    pub fn alpha_at(&self, i: usize) -> &CycScalar {
        &self.alpha[i]
    }
}

/// All reflections of G(r,p,n): transposition type first, then diagonal.
pub fn reflections(spec: &GroupSpec) -> Vec<Reflection> {
    let (r, n) = (spec.r, spec.n);
    let zero = || vec![CycScalar::zero(r); n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in 0..r {
                let mut alpha = zero();
                alpha[i] = CycScalar::one(r);
                alpha[j] = -cyc(r, l as i64);
                let mut check = zero();
                check[i] = CycScalar::one(r);
                check[j] = -cyc(r, -(l as i64));
                out.push(Reflection {
                    elem: GroupElem::colored_transposition(n, r, i, j, l as i64),
                    kind: ReflKind::Transposition { i, j, l },
                    class: ReflClass::Transposition,
                    alpha,
                    alpha_check: check,
                });
            }
        }
    }
    for i in 0..n {
        for l in (spec.p..r).step_by(spec.p as usize) {
            let mut alpha = zero();
            alpha[i] = cyc(r, -(l as i64) - 1);
            let mut check = zero();
            check[i] = cyc(r, l as i64 + 1) - cyc(r, 1);
            out.push(Reflection {
                elem: GroupElem::diagonal(n, r, i, -(l as i64)),
                kind: ReflKind::Diagonal { i, l },
                class: ReflClass::Diagonal(l),
                alpha,
                alpha_check: check,
            });
        }
    }
    out
}

/// `⟨x, y⟩` for coordinate vectors.
pub fn pairing(x: &[CycScalar], y: &[CycScalar]) -> CycScalar {
    let r = x[0].order();
    x.iter().zip(y).fold(CycScalar::zero(r), |a, (u, v)| &a + &(u * v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(r: u32, p: u32, n: usize) -> GroupSpec {
        GroupSpec::new(r, p, n).unwrap()
    }

    #[test]
    fn orders() {
        for (r, p, n) in [(1, 1, 3), (2, 1, 2), (2, 2, 3), (3, 1, 2), (4, 2, 2), (3, 3, 2)] {
            let s = spec(r, p, n);
            assert_eq!(elements(&s).len() as u64, s.order());
        }
        assert!(GroupSpec::new(4, 3, 2).is_err());
    }

    #[test]
    fn composition_matches_matrices() {
        let s = spec(3, 1, 3);
        let els = elements(&s);
        let mul = |a: &Vec<Vec<CycScalar>>, b: &Vec<Vec<CycScalar>>| {
            let n = a.len();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(CycScalar::zero(3), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        };
        for g in els.iter().step_by(7) {
            for h in els.iter().step_by(11) {
                assert_eq!(g.compose(h).matrix(), mul(&g.matrix(), &h.matrix()));
            }
            assert!(g.compose(&g.inverse()).is_identity());
        }
    }

    #[test]
    fn reflection_counts_and_roots() {
        for (r, p, n) in [(2, 1, 2), (3, 1, 2), (4, 2, 3), (3, 3, 2), (6, 2, 2)] {
            let s = spec(r, p, n);
            let refl = reflections(&s);
            let m = s.m() as usize;
            assert_eq!(refl.len(), r as usize * n * (n - 1) / 2 + n * (m - 1));
            for rf in &refl {
                assert!(rf.elem.in_group(p));
                assert_eq!(rf.elem.fixed_codim(), 1);
                // s α = λ α with λ ≠ 1, and ⟨α, α^∨⟩ = 1 - λ.
                let img = rf.elem.act_x(&rf.alpha);
                let k = rf.alpha.iter().position(|c| !c.is_zero()).unwrap();
                let lambda = &img[k] / &rf.alpha[k];
                assert!(!lambda.is_one());
                let scaled: Vec<CycScalar> = rf.alpha.iter().map(|c| c * &lambda).collect();
                assert_eq!(img, scaled);
                let one = CycScalar::one(r);
                assert_eq!(pairing(&rf.alpha, &rf.alpha_check), &one - &lambda);
                // s fixes ker(α^∨) pointwise: s x = x - ⟨x, α^∨⟩ α.
                for e in 0..n {
                    let mut x = vec![CycScalar::zero(r); n];
                    x[e] = one.clone();
                    let pr = pairing(&x, &rf.alpha_check);
                    let expect: Vec<CycScalar> =
                        x.iter().zip(&rf.alpha).map(|(a, b)| a - &(&pr * b)).collect();
                    assert_eq!(rf.elem.act_x(&x), expect);
                }
            }
        }
    }

    #[test]
    fn reflections_are_all_codim_one_elements() {
        let s = spec(4, 2, 2);
        let by_search = elements(&s).into_iter().filter(|g| g.fixed_codim() == 1).count();
        assert_eq!(by_search, reflections(&s).len());
    }

    #[test]
    fn text_roundtrip() {
        let s = spec(3, 1, 3);
        for g in elements(&s) {
            let t = g.to_string();
            assert_eq!(GroupElem::parse(&t, 3, 3).unwrap(), g, "{t}");
        }
        let g = GroupElem::parse("(1 2)[0,1,0]", 3, 3).unwrap();
        assert_eq!(g.act_monomial(&[1, 0, 0]), (0, vec![0, 1, 0]));
        assert_eq!(g.act_monomial(&[0, 1, 0]), (1, vec![1, 0, 0]));
    }
}
