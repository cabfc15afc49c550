//! Unevaluated-sum ("double-double") arithmetic over any [`Real`].
//!
//! Used where a series cancels catastrophically and the working precision
//! alone cannot hold the result. Error-free transforms rely on `mul_add`
//! being fused.

use std::ops::{Add, Mul, Neg};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd<T> {
    pub hi: T,
    pub lo: T,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> Dd<T> {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

#[inline]
fn quick_two_sum<T: Real>(a: T, b: T) -> Dd<T> {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> Dd<T> {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl<T: Real> Dd<T> {
    pub fn new(hi: T) -> Self {
        Dd { hi, lo: T::zero() }
    }

    /// Splits an `f64` pair carrying ~32 significant digits into `T`.
    pub fn from_f64_pair(hi: f64, lo: f64) -> Self {
        let h: T = crate::scalar::lit(hi);
        let rest = (hi - crate::scalar::to_f64(h)) + lo;
        quick_two_sum(h, crate::scalar::lit(rest))
    }

    pub fn to_real(self) -> T {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < T::zero() {
            -self
        } else {
            self
        }
    }

    pub fn mul_real(self, b: T) -> Self {
        let p = two_prod(self.hi, b);
        quick_two_sum(p.hi, p.lo + self.lo * b)
    }

    pub fn div_real(self, b: T) -> Self {
        let q1 = self.hi / b;
        let p = two_prod(q1, b);
        let s = two_sum(self.hi, -p.hi);
        let r = s.hi + (s.lo - p.lo + self.lo);
        let q2 = r / b;
        quick_two_sum(q1, q2)
    }
}

impl<T: Real> Add for Dd<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = two_sum(self.hi, rhs.hi);
        let t = two_sum(self.lo, rhs.lo);
        let s = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(s.hi, s.lo + t.lo)
    }
}

impl<T: Real> Mul for Dd<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = two_prod(self.hi, rhs.hi);
        let lo = p.lo + (self.hi * rhs.lo + self.lo * rhs.hi);
        quick_two_sum(p.hi, lo)
    }
}

impl<T: Real> Neg for Dd<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}
