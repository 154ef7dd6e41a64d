//! Exact Gaussian elimination over the scalar fields.

use crate::scalar::{CycScalar, ParamScalar};

pub trait Field: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for CycScalar {
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
}

impl Field for ParamScalar {
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
}

/// Reduces `rows` to reduced row echelon form in place and returns the
/// pivot columns.
pub fn rref<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].inv();
        for x in rows[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i != row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..ncols {
                    let t = rows[row][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A basis of `{v : A v = 0}`.
pub fn nullspace<F: Field>(rows: &[Vec<F>], zero: &F, one: &F) -> Vec<Vec<F>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = zero.sub(&m[i][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> CycScalar {
        CycScalar::from_int(3, v)
    }

    #[test]
    fn rank_and_nullspace() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]];
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, &q(0), &q(1));
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(q(0), |acc, (x, y)| &acc + &(x * y));
            assert!(dot.is_zero());
        }
    }
}
