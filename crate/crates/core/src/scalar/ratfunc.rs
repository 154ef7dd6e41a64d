//! Reduced rational functions in the parameter variables.

use std::fmt;

use super::cyclotomic::CycScalar;
use super::mpoly::MPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic, so equality of
/// values is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let r = num.order();
        if num.is_zero() {
            return Self::from_poly(MPoly::zero(r));
        }
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.inverse().unwrap()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalized(num, den)
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inverse().unwrap();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(num: MPoly) -> Self {
        let r = num.order();
        RatFunc {
            num,
            den: MPoly::one(r),
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<CycScalar> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a_cof = self.den.div_exact(&g).unwrap();
        let b_cof = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&b_cof).add(&o.num.mul(&a_cof));
        Self::new(num, self.den.mul(&b_cof))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let r = self.order();
        if self.is_zero() || o.is_zero() {
            return Self::from_poly(MPoly::zero(r));
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        // Cross-cancel, which keeps the product reduced.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let an = self.num.div_exact(&g1).unwrap();
        let bd = o.den.div_exact(&g1).unwrap();
        let bn = o.num.div_exact(&g2).unwrap();
        let ad = self.den.div_exact(&g2).unwrap();
        let num = an.mul(&bn);
        let den = ad.mul(&bd);
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.inverse().unwrap()));
        }
        Self::normalized(num, den)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::from_poly(MPoly::zero(self.order()));
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(if let Some(c) = self.num.as_constant() {
            Self::from_poly(self.den.scale(&c.inverse().unwrap()))
        } else {
            Self::normalized(self.den.clone(), self.num.clone())
        })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inverse()?))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MPoly| {
            if p.num_terms() == 1 && p.as_constant().is_some() {
                let s = p.to_string();
                if s.contains('/') || s.contains(' ') {
                    format!("({s})")
                } else {
                    s
                }
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
