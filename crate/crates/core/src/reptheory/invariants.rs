//! Numerical invariants of G(r,p,n): Coxeter number, degrees, irreducibility.

use crate::error::{Error, Result};
use crate::group::GroupSpec;

/// `h = r(n-1) + r/p` for `p < r` and `h = r(n-1)` for `p = r`.
pub fn coxeter_number(spec: &GroupSpec) -> Result<u32> {
    if spec.r == 1 {
        return Err(Error::Unsupported(
            "the Coxeter number formula assumes r > 1".into(),
        ));
    }
    let base = spec.r * (spec.n as u32 - 1);
    Ok(if spec.p < spec.r { base + spec.m() } else { base })
}

/// Degrees of the basic invariants: `r, 2r, …, (n-1)r` and `n r/p`.
pub fn degrees(spec: &GroupSpec) -> Vec<u32> {
    let mut d: Vec<u32> = (1..spec.n as u32).map(|i| i * spec.r).collect();
    d.push(spec.n as u32 * spec.m());
    d.sort_unstable();
    d
}

/// Whether G(r,p,n) acts irreducibly on its reflection representation.
///
/// The reducible cases are the trivial group acting on C^n (r = 1 here
/// covers the symmetric group, whose reflection representation contains the
/// trivial summand), G(2,2,2) (the Klein four-group), and G(r,r,1) (trivial).
pub fn is_irreducible(spec: &GroupSpec) -> bool {
    let (r, p, n) = (spec.r, spec.p, spec.n);
    !(r == 1 || (r == 2 && p == 2 && n == 2) || (n == 1 && p == r))
}
