//! The biquadratic extension generated by
//! `Δ₁ = sqrt(i² + n − 1)` and `Δ₂ = sqrt(4i⁴ + 8i²n − 3i² + n − 1)`.
//!
//! [`ExtElem`] is the symbolic version with rational-function coordinates;
//! [`ExtNum`] is its specialization at a point, with rational coordinates
//! and an exact sign test.

use std::sync::OnceLock;

use num_traits::Zero;

use super::mpoly::{poly, MPoly};
use super::rat::{self, Rat};
use super::ratfunc::RatFunc;
use super::surd::{surd_sign, SurdExpr};
use crate::error::Result;

/// `Δ₁² = i² + n − 1`.
pub fn delta1_sq() -> &'static MPoly {
    static P: OnceLock<MPoly> = OnceLock::new();
    P.get_or_init(|| poly("i^2 + n - 1"))
}

/// `Δ₂² = 4i⁴ + 8i²n − 3i² + n − 1`.
pub fn delta2_sq() -> &'static MPoly {
    static P: OnceLock<MPoly> = OnceLock::new();
    P.get_or_init(|| poly("4i^4 + 8i^2n - 3i^2 + n - 1"))
}

/// `c00 + c10·Δ₁ + c01·Δ₂ + c11·Δ₁Δ₂`.
#[derive(Clone, Debug)]
pub struct ExtElem {
    pub c00: RatFunc,
    pub c10: RatFunc,
    pub c01: RatFunc,
    pub c11: RatFunc,
}

impl ExtElem {
    pub fn new(c00: RatFunc, c10: RatFunc, c01: RatFunc, c11: RatFunc) -> Self {
        Self { c00, c10, c01, c11 }
    }

    pub fn from_ratfunc(c: RatFunc) -> Self {
        Self::new(c, RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn zero() -> Self {
        Self::from_ratfunc(RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::from_ratfunc(RatFunc::one())
    }

    pub fn delta1() -> Self {
        Self::new(RatFunc::zero(), RatFunc::one(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn delta2() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero(), RatFunc::one(), RatFunc::zero())
    }

    pub fn delta12() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), RatFunc::one())
    }

    fn coords(&self) -> [&RatFunc; 4] {
        [&self.c00, &self.c10, &self.c01, &self.c11]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.c00.add(&o.c00), self.c10.add(&o.c10), self.c01.add(&o.c01), self.c11.add(&o.c11))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.c00.sub(&o.c00), self.c10.sub(&o.c10), self.c01.sub(&o.c01), self.c11.sub(&o.c11))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::new(self.c00.mul(c), self.c10.mul(c), self.c01.mul(c), self.c11.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        ext_reduce_mul(self, o)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coordinatewise identity test.
    pub fn equals(&self, o: &Self) -> bool {
        self.coords().iter().zip(o.coords()).all(|(a, b)| a.equals(b))
    }

    pub fn specialize(&self, i: i64, n: i64) -> Result<ExtNum> {
        let pt = [("i", rat::int(i)), ("n", rat::int(n))];
        Ok(ExtNum {
            c: [
                self.c00.eval_at(&pt)?,
                self.c10.eval_at(&pt)?,
                self.c01.eval_at(&pt)?,
                self.c11.eval_at(&pt)?,
            ],
            r1: delta1_sq().eval_at(&pt)?,
            r2: delta2_sq().eval_at(&pt)?,
        })
    }
}

fn mul_opt(a: &RatFunc, b: &RatFunc) -> Option<RatFunc> {
    if a.is_zero() || b.is_zero() {
        None
    } else {
        Some(a.mul(b))
    }
}

fn sum(parts: impl IntoIterator<Item = Option<RatFunc>>) -> RatFunc {
    parts.into_iter().flatten().fold(RatFunc::zero(), |acc, x| acc.add(&x))
}

/// Product reduced by `Δ₁² = i² + n − 1` and `Δ₂² = 4i⁴ + 8i²n − 3i² + n − 1`.
pub fn ext_reduce_mul(x: &ExtElem, y: &ExtElem) -> ExtElem {
    let r1 = RatFunc::from_poly(delta1_sq().clone());
    let r2 = RatFunc::from_poly(delta2_sq().clone());
    let r12 = RatFunc::from_poly(delta1_sq() * delta2_sq());
    let [a0, a1, a2, a3] = x.coords();
    let [b0, b1, b2, b3] = y.coords();
    let scaled = |p: Option<RatFunc>, r: &RatFunc| p.map(|p| p.mul(r));
    ExtElem::new(
        sum([
            mul_opt(a0, b0),
            scaled(mul_opt(a1, b1), &r1),
            scaled(mul_opt(a2, b2), &r2),
            scaled(mul_opt(a3, b3), &r12),
        ]),
        sum([
            mul_opt(a0, b1),
            mul_opt(a1, b0),
            scaled(mul_opt(a2, b3), &r2),
            scaled(mul_opt(a3, b2), &r2),
        ]),
        sum([
            mul_opt(a0, b2),
            mul_opt(a2, b0),
            scaled(mul_opt(a1, b3), &r1),
            scaled(mul_opt(a3, b1), &r1),
        ]),
        sum([mul_opt(a0, b3), mul_opt(a3, b0), mul_opt(a1, b2), mul_opt(a2, b1)]),
    )
}

/// Numeric element `c[0] + c[1]·√r1 + c[2]·√r2 + c[3]·√r1·√r2` with
/// `r1, r2 ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtNum {
    pub c: [Rat; 4],
    pub r1: Rat,
    pub r2: Rat,
}

impl ExtNum {
    pub fn rational(x: Rat, r1: Rat, r2: Rat) -> Self {
        Self { c: [x, Rat::zero(), Rat::zero(), Rat::zero()], r1, r2 }
    }

    fn with(&self, c: [Rat; 4]) -> Self {
        Self { c, r1: self.r1.clone(), r2: self.r2.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert!(self.r1 == o.r1 && self.r2 == o.r2);
        self.with(std::array::from_fn(|k| &self.c[k] + &o.c[k]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.with(std::array::from_fn(|k| &self.c[k] - &o.c[k]))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        self.with(std::array::from_fn(|k| &self.c[k] * s))
    }

    pub fn add_rat(&self, s: &Rat) -> Self {
        let mut c = self.c.clone();
        c[0] += s;
        self.with(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (&self.c, &o.c);
        let (r1, r2) = (&self.r1, &self.r2);
        let r12 = r1 * r2;
        self.with([
            &a[0] * &b[0] + &a[1] * &b[1] * r1 + &a[2] * &b[2] * r2 + &a[3] * &b[3] * &r12,
            &a[0] * &b[1] + &a[1] * &b[0] + (&a[2] * &b[3] + &a[3] * &b[2]) * r2,
            &a[0] * &b[2] + &a[2] * &b[0] + (&a[1] * &b[3] + &a[3] * &b[1]) * r1,
            &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1],
        ])
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExtNum::rational(Rat::from_integer(1.into()), self.r1.clone(), self.r2.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact sign, writing the element as `P + Q·√r2` with `P, Q` in
    /// `Q(√r1)` and comparing `P²` against `r2·Q²` when the signs differ.
    pub fn sign(&self) -> i8 {
        let [c0, c1, c2, c3] = &self.c;
        let sp = surd_sign(c0, c1, &self.r1).expect("nonnegative radicand");
        let sq = surd_sign(c2, c3, &self.r1).expect("nonnegative radicand");
        if sq == 0 || self.r2.is_zero() {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // P² − r2·Q², still in Q(√r1)
        let base = c0 * c0 + c1 * c1 * &self.r1 - &self.r2 * (c2 * c2 + c3 * c3 * &self.r1);
        let coeff = Rat::from_integer(2.into()) * (c0 * c1 - &self.r2 * c2 * c3);
        match surd_sign(&base, &coeff, &self.r1).expect("nonnegative radicand") {
            1 => sp,
            -1 => sq,
            _ => 0,
        }
    }

    /// `Some(s)` when the element lies in `Q(√(r1·r2))`, i.e. only the
    /// rational and `Δ₁Δ₂` coordinates are used.
    pub fn as_surd(&self) -> Option<SurdExpr> {
        if self.c[1].is_zero() && self.c[2].is_zero() {
            SurdExpr::new(self.c[0].clone(), self.c[3].clone(), &self.r1 * &self.r2).ok()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d1 = rat::to_f64(&self.r1).sqrt();
        let d2 = rat::to_f64(&self.r2).sqrt();
        rat::to_f64(&self.c[0]) + rat::to_f64(&self.c[1]) * d1 + rat::to_f64(&self.c[2]) * d2 + rat::to_f64(&self.c[3]) * d1 * d2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use crate::algebra::ratfunc::ratfunc;

    #[test]
    fn defining_relations() {
        let d1 = ExtElem::delta1();
        let sq = d1.mul(&d1);
        assert!(sq.equals(&ExtElem::from_ratfunc(ratfunc("i^2+n-1", "1"))));
        let p = d1.mul(&ExtElem::delta2());
        assert!(p.equals(&ExtElem::delta12()));
    }

    #[test]
    fn difference_of_squares() {
        let a = ExtElem::one().add(&ExtElem::delta1());
        let b = ExtElem::one().sub(&ExtElem::delta1());
        let prod = a.mul(&b);
        assert!(prod.equals(&ExtElem::from_ratfunc(ratfunc("2 - i^2 - n", "1"))));
    }

    #[test]
    fn numeric_sign_cases() {
        // √2 + √3 − √(2·3)·1 ≈ 0.70 > 0
        let x = ExtNum { c: [int(0), int(1), int(1), int(-1)], r1: int(2), r2: int(3) };
        assert_eq!(x.sign(), 1);
        // 5 − √2·√3·2 ≈ 0.10 > 0 ; 4 − 2√6 < 0
        let y = ExtNum { c: [int(5), int(0), int(0), int(-2)], r1: int(2), r2: int(3) };
        assert_eq!(y.sign(), 1);
        let z = ExtNum { c: [int(4), int(0), int(0), int(-2)], r1: int(2), r2: int(3) };
        assert_eq!(z.sign(), -1);
        // √2·√8 − 4 = 0
        let w = ExtNum { c: [int(-4), int(0), int(0), int(1)], r1: int(2), r2: int(8) };
        assert_eq!(w.sign(), 0);
    }
}
