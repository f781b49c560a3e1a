//! Elements `base + coeff * sqrt(radicand)` of a real quadratic extension,
//! with exact sign determination.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{self, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdExpr {
    #[serde(with = "rat_serde")]
    pub base: Rat,
    #[serde(with = "rat_serde")]
    pub coeff: Rat,
    #[serde(with = "rat_serde")]
    pub radicand: Rat,
}

/// Exact sign of `base + coeff * sqrt(radicand)`.
pub fn surd_sign(base: &Rat, coeff: &Rat, radicand: &Rat) -> Result<i8> {
    let sr = rat::sign(radicand);
    if sr < 0 {
        return Err(Error::NegativeRadicand(rat::to_string(radicand)));
    }
    let sa = rat::sign(base);
    let sb = rat::sign(coeff);
    if sb == 0 || sr == 0 {
        return Ok(sa);
    }
    if sa == 0 || sa == sb {
        return Ok(sb);
    }
    // opposite signs: the larger magnitude wins
    let lhs = base * base;
    let rhs = coeff * coeff * radicand;
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    })
}

impl SurdExpr {
    pub fn new(base: Rat, coeff: Rat, radicand: Rat) -> Result<Self> {
        if rat::sign(&radicand) < 0 {
            return Err(Error::NegativeRadicand(rat::to_string(&radicand)));
        }
        Ok(Self {
            base,
            coeff,
            radicand,
        })
    }

    pub fn rational(x: Rat) -> Self {
        Self {
            base: x,
            coeff: Rat::zero(),
            radicand: Rat::zero(),
        }
    }

    pub fn sign(&self) -> i8 {
        surd_sign(&self.base, &self.coeff, &self.radicand).expect("radicand checked at construction")
    }

    fn common_radicand(&self, other: &Self) -> Result<Rat> {
        if self.coeff.is_zero() {
            return Ok(other.radicand.clone());
        }
        if other.coeff.is_zero() || self.radicand == other.radicand {
            return Ok(self.radicand.clone());
        }
        Err(Error::Domain(format!(
            "surds over different radicands {} and {}",
            rat::to_string(&self.radicand),
            rat::to_string(&other.radicand)
        )))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Self {
            base: &self.base + &other.base,
            coeff: &self.coeff + &other.coeff,
            radicand: r,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Self {
            base: &self.base * &other.base + &self.coeff * &other.coeff * &r,
            coeff: &self.base * &other.coeff + &self.coeff * &other.base,
            radicand: r,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            base: &self.base * c,
            coeff: &self.coeff * c,
            radicand: self.radicand.clone(),
        }
    }

    pub fn add_rat(&self, c: &Rat) -> Self {
        Self {
            base: &self.base + c,
            ..self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SurdExpr {
            radicand: self.radicand.clone(),
            ..SurdExpr::rational(Rat::one())
        };
        for _ in 0..e {
            acc = acc.mul(self).expect("same radicand");
        }
        acc
    }

    /// Exact sign of `self - x`.
    pub fn cmp_rat(&self, x: &Rat) -> std::cmp::Ordering {
        match self.add_rat(&-x).sign() {
            1 => std::cmp::Ordering::Greater,
            -1 => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat::to_f64(&self.base) + rat::to_f64(&self.coeff) * rat::to_f64(&self.radicand).sqrt()
    }
}

impl fmt::Display for SurdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            rat::to_string(&self.base),
            rat::to_string(&self.coeff),
            rat::to_string(&self.radicand)
        )
    }
}

/// Serde adapter writing rationals as `"num/den"` strings.
pub mod rat_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::algebra::rat::{self, Rat};

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat::to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn sign_examples() {
        assert_eq!(surd_sign(&int(3), &int(-2), &int(2)).unwrap(), 1);
        assert_eq!(surd_sign(&int(1), &int(-1), &int(2)).unwrap(), -1);
        assert_eq!(surd_sign(&int(0), &int(0), &int(5)).unwrap(), 0);
        assert_eq!(surd_sign(&int(-3), &int(1), &int(9)).unwrap(), 0);
        assert!(matches!(
            surd_sign(&int(1), &int(1), &int(-1)),
            Err(Error::NegativeRadicand(_))
        ));
        assert!(SurdExpr::new(int(0), int(1), rat(-1, 3)).is_err());
    }

    #[test]
    fn ring_ops() {
        let s = SurdExpr::new(int(1), int(1), int(2)).unwrap();
        let t = SurdExpr::new(int(1), int(-1), int(2)).unwrap();
        assert_eq!(s.mul(&t).unwrap(), SurdExpr { base: int(-1), coeff: int(0), radicand: int(2) });
        let u = SurdExpr::new(int(1), int(1), int(3)).unwrap();
        assert!(s.add(&u).is_err());
        assert_eq!(s.pow(2).base, int(3));
        assert_eq!(s.pow(2).coeff, int(2));
    }
}
