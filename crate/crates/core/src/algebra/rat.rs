//! Exact rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the
//! denominator positive and the fraction reduced (zero is `0/1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign as -1, 0 or +1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn bigint_sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Serializes as `num/den`, always with an explicit denominator.
pub fn to_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `n` or `n/d`.
pub fn parse(s: &str) -> Result<Rat> {
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: `{s}`"),
    };
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|_| bad("not an integer")),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

pub fn pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Approximate value, for display and tests only.
pub fn to_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero_and_reduction() {
        let z = rat(0, -7);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        let x = rat(6, -4);
        assert_eq!(to_string(&x), "-3/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("15/4").unwrap(), rat(15, 4));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse(" 10 / 4 ").unwrap(), rat(5, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
