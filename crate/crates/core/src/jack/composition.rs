use std::fmt;

use serde::Serialize;

/// A composition `μ ∈ Z_{≥0}^n` with its rearrangements and the permutation `v_μ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    entries: Vec<u32>,
    #[serde(skip)]
    plus: Vec<u32>,
    #[serde(skip)]
    minus: Vec<u32>,
    /// One-line notation of `v_μ`, 1-based.
    #[serde(skip)]
    v: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        let mut minus = entries.clone();
        minus.sort_unstable();
        let mut plus = minus.clone();
        plus.reverse();
        let n = entries.len();
        let v = (0..n)
            .map(|i| {
                let a = (0..i).filter(|&j| entries[j] < entries[i]).count();
                let b = (i + 1..n).filter(|&j| entries[j] <= entries[i]).count();
                a + b + 1
            })
            .collect();
        Composition {
            entries,
            plus,
            minus,
            v,
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn parse(s: &str) -> crate::Result<Self> {
        let v: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        v.map(Self::new)
            .map_err(|_| crate::Error::Parse(format!("bad composition {s:?}")))
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Non-increasing rearrangement.
    pub fn plus(&self) -> &[u32] {
        &self.plus
    }

    /// Non-decreasing rearrangement.
    pub fn minus(&self) -> &[u32] {
        &self.minus
    }

    /// `v_μ(i)` for 0-based `i`, valued in `1..=n`.
    pub fn v(&self, i: usize) -> usize {
        self.v[i]
    }

    pub fn v_perm(&self) -> &[usize] {
        &self.v
    }

    pub fn max_part(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// `s_i.μ`, swapping entries `i` and `i+1` (0-based).
    pub fn swap(&self, i: usize) -> Self {
        let mut e = self.entries.clone();
        e.swap(i, i + 1);
        Self::new(e)
    }

    /// `φ.μ = (μ_2, …, μ_n, μ_1 + 1)`.
    pub fn phi(&self) -> Self {
        let mut e: Vec<u32> = self.entries[1..].to_vec();
        e.push(self.entries[0] + 1);
        Self::new(e)
    }

    /// `ψ.μ = (μ_n - 1, μ_1, …, μ_{n-1})`, defined when `μ_n > 0`.
    pub fn psi(&self) -> Option<Self> {
        let last = *self.entries.last()?;
        if last == 0 {
            return None;
        }
        let mut e = vec![last - 1];
        e.extend_from_slice(&self.entries[..self.n() - 1]);
        Some(Self::new(e))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Number of inversions of a permutation in one-line notation.
pub fn length(w: &[usize]) -> usize {
    let n = w.len();
    (0..n)
        .map(|i| (i + 1..n).filter(|&j| w[i] > w[j]).count())
        .sum()
}

/// Bruhat order `u ≤ w` by the rank-matrix criterion:
/// `#{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}` for all `i, j`.
pub fn bruhat_le(u: &[usize], w: &[usize]) -> bool {
    let n = u.len();
    assert_eq!(n, w.len());
    for j in 1..=n {
        let (mut ru, mut rw) = (0, 0);
        for i in 0..n {
            ru += (u[i] >= j) as usize;
            rw += (w[i] >= j) as usize;
            if ru > rw {
                return false;
            }
        }
    }
    true
}

/// Dominance `λ ≤ μ` on partitions of the same size (partial sums).
pub fn dominance_le(lambda: &[u32], mu: &[u32]) -> bool {
    if lambda.iter().sum::<u32>() != mu.iter().sum::<u32>() {
        return false;
    }
    let (mut a, mut b) = (0u32, 0u32);
    for (x, y) in lambda.iter().zip(mu) {
        a += x;
        b += y;
        if a > b {
            return false;
        }
    }
    true
}

/// The strict partial order: `λ_+ < μ_+` in dominance, or `λ_+ = μ_+` and
/// `v_λ < v_μ` in Bruhat order.
pub fn order_lt(lambda: &Composition, mu: &Composition) -> bool {
    assert_eq!(lambda.n(), mu.n());
    if lambda.plus == mu.plus {
        lambda.v != mu.v && bruhat_le(&lambda.v, &mu.v)
    } else {
        dominance_le(&lambda.plus, &mu.plus)
    }
}

/// Sort key of a linear extension of [`order_lt`]: larger keys are larger.
pub fn linear_extension_key(c: &Composition) -> (Vec<u32>, usize) {
    (c.plus.clone(), length(&c.v))
}

/// All compositions of length `n` and size `d`.
pub fn compositions(n: usize, d: u32) -> Vec<Composition> {
    crate::poly::monomials_of_degree(n, d)
        .into_iter()
        .map(Composition::new)
        .collect()
}

/// All compositions of length `n` and size at most `d`.
pub fn compositions_up_to(n: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|k| compositions(n, k)).collect()
}
