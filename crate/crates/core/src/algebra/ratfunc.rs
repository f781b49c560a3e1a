//! Quotients of multivariate polynomials.
//!
//! A `RatFunc` is `content * num / den` with `num` and `den` primitive
//! integer polynomials (positive leading coefficients) and `content` a
//! rational scalar. There is no gcd-based normal form: equality is tested
//! by cross-multiplication. Addition reuses a denominator when one divides
//! the other, which keeps the sizes manageable for the identities we need.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::rat::{self, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RatFunc {
    content: Rat,
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    /// `num / den`. Fails if `den` is the zero polynomial.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function denominator".into()));
        }
        Ok(Self::build(Rat::one(), num, den))
    }

    fn build(content: Rat, num: MPoly, den: MPoly) -> Self {
        if num.is_zero() || content.is_zero() {
            return Self::zero();
        }
        let (cn, pn) = num.primitive_split();
        let (cd, pd) = den.primitive_split();
        let content = content * Rat::new(cn, cd);
        if pd.num_terms() == 1 && pd.total_degree() == 0 {
            return Self { content, num: pn, den: MPoly::one() };
        }
        if pn == pd {
            return Self { content, num: MPoly::one(), den: MPoly::one() };
        }
        Self { content, num: pn, den: pd }
    }

    pub fn zero() -> Self {
        Self { content: Rat::zero(), num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::build(c, MPoly::one(), MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> Self {
        Self::build(Rat::one(), p, MPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.content.is_zero()
    }

    pub fn content(&self) -> &Rat {
        &self.content
    }

    /// Numerator with the content folded in, as `(integer poly, positive integer)`:
    /// the value equals `numerator_poly / (denominator_scalar * den)`.
    pub fn numerator(&self) -> (MPoly, BigInt) {
        (self.num.scale(self.content.numer()), self.content.denom().clone())
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // common denominator: equal, one divides the other, or the product
        let (den, fa, fb) = if self.den == other.den {
            (self.den.clone(), MPoly::one(), MPoly::one())
        } else if let Some(q) = other.den.div_exact(&self.den) {
            (other.den.clone(), q, MPoly::one())
        } else if let Some(q) = self.den.div_exact(&other.den) {
            (self.den.clone(), MPoly::one(), q)
        } else {
            (&self.den * &other.den, other.den.clone(), self.den.clone())
        };
        let l = self.content.denom() * other.content.denom();
        let ca = (&self.content * Rat::from_integer(l.clone())).to_integer();
        let cb = (&other.content * Rat::from_integer(l.clone())).to_integer();
        let num = &(&self.num * &fa).scale(&ca) + &(&other.num * &fb).scale(&cb);
        Self::build(Rat::new(BigInt::one(), l), num, den)
    }

    pub fn neg(&self) -> Self {
        Self { content: -&self.content, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // cancel a cross factor when it is literally equal
        let (n1, d2) = if self.num == other.den { (MPoly::one(), MPoly::one()) } else { (self.num.clone(), other.den.clone()) };
        let (n2, d1) = if other.num == self.den { (MPoly::one(), MPoly::one()) } else { (other.num.clone(), self.den.clone()) };
        Self::build(&self.content * &other.content, &n1 * &n2, &d1 * &d2)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::build(&self.content * c, self.num.clone(), self.den.clone())
    }

    pub fn mul_poly(&self, p: &MPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of zero rational function".into()));
        }
        Ok(Self::build(self.content.recip(), self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::build(rat::pow(&self.content, e), self.num.pow(e), self.den.pow(e))
    }

    pub fn substitute(&self, subs: &[(&str, MPoly)]) -> Result<Self> {
        let den = self.den.substitute(subs);
        if den.is_zero() {
            return Err(Error::DivisionByZero("denominator vanishes after substitution".into()));
        }
        Ok(Self::build(self.content.clone(), self.num.substitute(subs), den))
    }

    pub fn shift(&self, var: &str, offset: i64) -> Self {
        Self::build(self.content.clone(), self.num.shift(var, offset), self.den.shift(var, offset))
    }

    pub fn eval(&self, point: &BTreeMap<String, Rat>) -> Result<Rat> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("denominator `{}` at point", self.den)));
        }
        Ok(&self.content * self.num.eval(point)? / d)
    }

    pub fn eval_at(&self, point: &[(&str, Rat)]) -> Result<Rat> {
        let map = point.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        self.eval(&map)
    }

    /// Cross-multiplication identity test.
    pub fn equals(&self, other: &Self) -> bool {
        let (pa, sa) = self.numerator();
        let (pb, sb) = other.numerator();
        let lhs = (&pa * &other.den).scale(&sb);
        let rhs = (&pb * &self.den).scale(&sa);
        lhs == rhs
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * ({}) / ({})", rat::to_string(&self.content), self.num, self.den)
    }
}

/// `p / q` from two polynomial literals; panics on malformed input.
pub fn ratfunc(num: &str, den: &str) -> RatFunc {
    use super::mpoly::poly;
    RatFunc::new(poly(num), poly(den)).expect("nonzero denominator literal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn arithmetic_and_equality() {
        let a = ratfunc("1", "x");
        let b = ratfunc("1", "x+1");
        let s = a.add(&b);
        assert_eq!(s, ratfunc("2x+1", "x^2+x"));
        assert_eq!(s.sub(&b), a);
        assert_eq!(a.mul(&ratfunc("x", "3")), RatFunc::from_rat(rat(1, 3)));
        assert!(ratfunc("x", "1").recip().unwrap() == a);
        assert!(RatFunc::new(poly("x"), MPoly::zero()).is_err());
    }

    #[test]
    fn content_is_tracked() {
        let a = ratfunc("2x+4", "6");
        assert_eq!(a.num(), &poly("x+2"));
        assert_eq!(a.den(), &MPoly::one());
        assert_eq!(a.content(), &rat(1, 3));
        assert_eq!(a.eval_at(&[("x", int(1))]).unwrap(), int(1));
    }

    #[test]
    fn shared_denominator_is_reused() {
        let d = poly("(x+1)(y+2)");
        let a = RatFunc::new(poly("x"), d.clone()).unwrap();
        let b = RatFunc::new(poly("1"), poly("x+1")).unwrap();
        let s = a.add(&b);
        assert_eq!(s.den(), &d);
    }

    #[test]
    fn eval_rejects_pole() {
        let a = ratfunc("1", "x-2");
        assert!(matches!(a.eval_at(&[("x", int(2))]), Err(Error::DivisionByZero(_))));
    }
}
