//! Boros–Moll numbers `d_i(m)`, the coefficients of
//!
//! ```text
//! P_m(x) = 2^{-2m} Σ_{k=0}^{m} 2^k C(2m-2k, m-k) C(m+k, k) (x+1)^k.
//! ```
//!
//! Values are stored as the integer `4^m · d_i(m)`. Indices outside
//! `0 ≤ i ≤ m` give zero.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::mpoly::MPoly;
use crate::algebra::rat::{self, Rat};
use crate::algebra::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// `d_i(m) = scaled / 4^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BMValue {
    #[serde(serialize_with = "ser_bigint")]
    pub scaled: BigInt,
    pub m: u32,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn pow4(m: u32) -> BigInt {
    BigInt::one() << (2 * m as usize)
}

impl BMValue {
    pub fn zero(m: u32) -> Self {
        Self { scaled: BigInt::zero(), m }
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.scaled.clone(), pow4(self.m))
    }

    /// Inverse of [`BMValue::to_rat`]; `None` unless `4^m · x` is a
    /// nonnegative integer.
    pub fn from_rat(x: &Rat, m: u32) -> Option<Self> {
        let s = x * Rat::from_integer(pow4(m));
        if !s.is_integer() || s.is_negative() {
            return None;
        }
        Some(Self { scaled: s.to_integer(), m })
    }
}

fn in_range(i: i64, m: i64) -> bool {
    m >= 0 && (0..=m).contains(&i)
}

/// `4^m d_i(m) = Σ_{k=i}^{m} 2^k C(2m-2k, m-k) C(m+k, k) C(k, i)`.
pub fn bm_closed_form(i: i64, m: i64) -> BMValue {
    assert!(m >= 0, "m must be nonnegative");
    if !in_range(i, m) {
        return BMValue::zero(m as u32);
    }
    let (iu, mu) = (i as u64, m as u64);
    let mut acc = BigInt::zero();
    for k in iu..=mu {
        let term = (BigInt::one() << k as usize)
            * binomial(BigInt::from(2 * mu - 2 * k), BigInt::from(mu - k))
            * binomial(BigInt::from(mu + k), BigInt::from(k))
            * binomial(BigInt::from(k), BigInt::from(iu));
        acc += term;
    }
    BMValue { scaled: acc, m: m as u32 }
}

/// Pascal triangle of binomial coefficients `C(n, k)` for `n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

/// Cached triangle of `4^m d_i(m)` for `0 ≤ i ≤ m ≤ m_max`, filled from the
/// closed form. Read-only once built, so it can be shared across threads;
/// [`BMTable::extend_to`] only appends rows.
#[derive(Clone, Debug)]
pub struct BMTable {
    rows: Vec<Vec<BigInt>>,
    binom: Binomials,
}

impl BMTable {
    pub fn new(m_max: u32) -> Self {
        let mut t = Self { rows: Vec::new(), binom: Binomials::new(0) };
        t.extend_to(m_max);
        t
    }

    pub fn m_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn extend_to(&mut self, m_max: u32) {
        let m_max = m_max as usize;
        if self.binom.n_max() < 2 * m_max {
            self.binom = Binomials::new(2 * m_max);
        }
        for m in self.rows.len()..=m_max {
            let row = (0..=m).map(|i| self.closed_form_cached(i, m)).collect();
            self.rows.push(row);
        }
    }

    fn closed_form_cached(&self, i: usize, m: usize) -> BigInt {
        let b = &self.binom;
        (i..=m)
            .map(|k| (b.get(2 * m - 2 * k, m - k) * b.get(m + k, k) * b.get(k, i)) << k)
            .sum()
    }

    /// `4^m d_i(m)`; zero outside the triangle. Panics if `m > m_max`.
    pub fn scaled(&self, i: i64, m: i64) -> BigInt {
        assert!(m >= 0 && m as u32 <= self.m_max(), "m = {m} beyond table (m_max = {})", self.m_max());
        if !in_range(i, m) {
            return BigInt::zero();
        }
        self.rows[m as usize][i as usize].clone()
    }

    pub fn value(&self, i: i64, m: i64) -> BMValue {
        BMValue { scaled: self.scaled(i, m), m: m as u32 }
    }

    pub fn d(&self, i: i64, m: i64) -> Rat {
        self.value(i, m).to_rat()
    }

    /// Row `{d_i(m)}_{i=0..m}`.
    pub fn row(&self, m: i64) -> Vec<Rat> {
        (0..=m).map(|i| self.d(i, m)).collect()
    }

    /// `{d_i(m)}` for `m` in `m_lo..=m_hi`.
    pub fn column(&self, i: i64, m_lo: i64, m_hi: i64) -> Vec<Rat> {
        (m_lo..=m_hi).map(|m| self.d(i, m)).collect()
    }

    pub fn normalized(&self, i: i64, m: i64, k: u32) -> Rat {
        self.d(i, m) / Rat::from_integer(factorial((i + k as i64) as u64))
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

/// `a(m) = (8m² − 8m − 4i² + 3) / (2m(m − i))`.
pub fn rec_m_a(i: i64, m: i64) -> Rat {
    Rat::new((8 * m * m - 8 * m - 4 * i * i + 3).into(), (2 * m * (m - i)).into())
}

/// `b(m) = −(4m − 5)(4m − 3)(m − 1 + i) / (4m(m − 1)(m − i))`.
pub fn rec_m_b(i: i64, m: i64) -> Rat {
    let num = BigInt::from(4 * m - 5) * (4 * m - 3) * (m - 1 + i);
    let den = BigInt::from(4 * m) * (m - 1) * (m - i);
    -Rat::new(num, den)
}

/// `d_i(m)` from `d_i(m−1)` and `d_i(m−2)` by the three-term recurrence in
/// `m`. Valid for `m ≥ 2` and `0 ≤ i ≤ m − 1`.
pub fn bm_recurrence_m(i: i64, m: i64, table: &BMTable) -> Result<BMValue> {
    if m < 2 || i < 0 || i > m - 1 {
        return Err(Error::Domain(format!("recurrence in m needs m ≥ 2, 0 ≤ i ≤ m−1; got i={i}, m={m}")));
    }
    let v = rec_m_a(i, m) * table.d(i, m - 1) + rec_m_b(i, m) * table.d(i, m - 2);
    BMValue::from_rat(&v, m as u32)
        .ok_or_else(|| Error::Internal(format!("recurrence in m gave non-integral 4^m·d at i={i}, m={m}")))
}

/// `d_i(m+1) = (m+i)/(m+1)·d_{i−1}(m) + (4m+2i+3)/(2(m+1))·d_i(m)`, for
/// `0 ≤ i ≤ m + 1`.
pub fn bm_recurrence_i(i: i64, m: i64, table: &BMTable) -> Result<BMValue> {
    if m < 0 || i < 0 || i > m + 1 {
        return Err(Error::Domain(format!("recurrence in i needs 0 ≤ i ≤ m+1; got i={i}, m={m}")));
    }
    let c1 = Rat::new((m + i).into(), (m + 1).into());
    let c2 = Rat::new((4 * m + 2 * i + 3).into(), (2 * (m + 1)).into());
    let v = c1 * table.d(i - 1, m) + c2 * table.d(i, m);
    BMValue::from_rat(&v, (m + 1) as u32)
        .ok_or_else(|| Error::Internal(format!("recurrence in i gave non-integral value at i={i}, m={m}")))
}

/// `d_i(m) / (i + k)!`.
pub fn bm_normalized(i: i64, m: i64, k: u32) -> Rat {
    if !in_range(i, m) {
        return Rat::zero();
    }
    bm_closed_form(i, m).to_rat() / Rat::from_integer(factorial((i + k as i64) as u64))
}

/// `P_m(x) = Σ_i d_i(m) x^i`.
#[allow(non_snake_case)]
pub fn eval_P(m: i64, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for i in (0..=m).rev() {
        acc = acc * x + bm_closed_form(i, m).to_rat();
    }
    acc
}

/// `P_m(x)` from the defining sum over powers of `x + 1`.
pub fn eval_p_binomial_form(m: i64, x: &Rat) -> Rat {
    let mu = m as u64;
    let y = x + Rat::one();
    let mut acc = Rat::zero();
    for k in (0..=mu).rev() {
        let c = (BigInt::one() << k as usize)
            * binomial(BigInt::from(2 * mu - 2 * k), BigInt::from(mu - k))
            * binomial(BigInt::from(mu + k), BigInt::from(k));
        acc = acc * &y + Rat::from_integer(c);
    }
    acc / Rat::from_integer(pow4(m as u32))
}

/// Closed form along a diagonal:
///
/// ```text
/// d_i(i+j) = 2^{-i-2j} · (2i)! / ((i+j)! · i!) · W_j(i)
/// W_j(i)   = Σ_{t=0}^{j} 2^t C(2j−2t, j−t) / t! · Π_{s=1}^{j+t} (2i + s)
/// ```
///
/// `W_j = w_scale · w` with `w` a primitive integer polynomial in `i`.
#[derive(Clone, Debug)]
pub struct DiagonalForm {
    pub j: u32,
    pub w: MPoly,
    pub w_scale: Rat,
}

pub fn diagonal_closed_form(j: u32) -> DiagonalForm {
    let ju = j as u64;
    let jf = factorial(ju);
    let mut w = MPoly::zero();
    for t in 0..=ju {
        let c = (BigInt::one() << t as usize)
            * binomial(BigInt::from(2 * ju - 2 * t), BigInt::from(ju - t))
            * (&jf / factorial(t));
        let mut term = MPoly::constant(c);
        for s in 1..=(ju + t) {
            term = &term * &(&MPoly::var("i").scale(&BigInt::from(2)) + &MPoly::constant(s as i64));
        }
        w = &w + &term;
    }
    let (content, w) = w.primitive_split();
    DiagonalForm { j, w, w_scale: Rat::new(content, jf) }
}

impl DiagonalForm {
    /// `W_j(i)` as a rational function (a polynomial with rational content).
    pub fn w_ratfunc(&self) -> RatFunc {
        RatFunc::from_poly(self.w.clone()).scale(&self.w_scale)
    }

    pub fn prefactor(&self) -> Prefactor {
        Prefactor::diagonal(self.j as i64)
    }

    /// `d_i(i+j)` at a concrete `i ≥ 0`.
    pub fn eval(&self, i: i64) -> Rat {
        let w = self.w.eval_at(&[("i", rat::int(i))]).expect("univariate in i") * &self.w_scale;
        self.prefactor().eval(i) * w
    }
}

/// Symbolic product `2^{a·i + b} · Π (c·i + d)!^{±1}`; used to cancel the
/// factorial parts of ratios of diagonal closed forms exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Prefactor {
    pub pow2: (i64, i64),
    /// `(c, d, exponent)` meaning `(c·i + d)!^exponent`.
    pub factorials: Vec<(i64, i64, i64)>,
}

impl Prefactor {
    /// `2^{−i−2j} (2i)! / ((i+j)! i!)`.
    pub fn diagonal(j: i64) -> Self {
        Self { pow2: (-1, -2 * j), factorials: vec![(2, 0, 1), (1, j, -1), (1, 0, -1)] }
    }

    /// Substitute `i → i + delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        Self {
            pow2: (self.pow2.0, self.pow2.1 + self.pow2.0 * delta),
            factorials: self.factorials.iter().map(|&(c, d, e)| (c, d + c * delta, e)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut f = self.factorials.clone();
        f.extend_from_slice(&other.factorials);
        Self { pow2: (self.pow2.0 + other.pow2.0, self.pow2.1 + other.pow2.1), factorials: f }
    }

    pub fn powi(&self, e: i64) -> Self {
        Self {
            pow2: (self.pow2.0 * e, self.pow2.1 * e),
            factorials: self.factorials.iter().map(|&(c, d, x)| (c, d, x * e)).collect(),
        }
    }

    pub fn eval(&self, i: i64) -> Rat {
        let mut acc = rat::pow(&rat::int(2), 0);
        let e2 = self.pow2.0 * i + self.pow2.1;
        let two = Rat::from_integer(BigInt::from(2));
        acc *= if e2 >= 0 { rat::pow(&two, e2 as u32) } else { rat::pow(&two, (-e2) as u32).recip() };
        for &(c, d, e) in &self.factorials {
            let f = Rat::from_integer(factorial((c * i + d) as u64));
            acc *= if e >= 0 { rat::pow(&f, e as u32) } else { rat::pow(&f, (-e) as u32).recip() };
        }
        acc
    }

    /// Reduces to a rational function of `i`. Fails unless the exponent of
    /// two is constant and the factorials pair off slope by slope.
    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        if self.pow2.0 != 0 {
            return Err(Error::Internal(format!("power of two keeps an i-dependent exponent {}", self.pow2.0)));
        }
        let two = Rat::from_integer(BigInt::from(2));
        let mut acc = RatFunc::from_rat(if self.pow2.1 >= 0 {
            rat::pow(&two, self.pow2.1 as u32)
        } else {
            rat::pow(&two, (-self.pow2.1) as u32).recip()
        });
        let mut slopes: Vec<i64> = self.factorials.iter().map(|f| f.0).collect();
        slopes.sort_unstable();
        slopes.dedup();
        for c in slopes {
            let mut ups: Vec<i64> = Vec::new();
            let mut downs: Vec<i64> = Vec::new();
            for &(cc, d, e) in &self.factorials {
                if cc != c {
                    continue;
                }
                for _ in 0..e.abs() {
                    if e > 0 {
                        ups.push(d);
                    } else {
                        downs.push(d);
                    }
                }
            }
            if ups.len() != downs.len() {
                return Err(Error::Internal(format!("factorials of slope {c} do not cancel")));
            }
            ups.sort_unstable();
            downs.sort_unstable();
            for (a, b) in ups.into_iter().zip(downs) {
                // (c i + a)! / (c i + b)!
                let (lo, hi, invert) = if a >= b { (b, a, false) } else { (a, b, true) };
                let mut p = MPoly::one();
                for s in (lo + 1)..=hi {
                    p = &p * &(&MPoly::var("i").scale(&BigInt::from(c)) + &MPoly::constant(s));
                }
                let f = RatFunc::from_poly(p);
                acc = if invert { acc.div(&f)? } else { acc.mul(&f) };
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    // independent oracle: direct summation with rationals, no scaling
    fn oracle(i: i64, m: i64) -> Rat {
        if !in_range(i, m) {
            return Rat::zero();
        }
        let mut acc = Rat::zero();
        for k in i..=m {
            let b = |n: i64, r: i64| num_integer::binomial(BigInt::from(n), BigInt::from(r));
            let c = b(2 * m - 2 * k, m - k) * b(m + k, k) * b(k, i);
            acc += Rat::from_integer(c << k as usize);
        }
        acc / Rat::from_integer(BigInt::from(4).pow(m as u32))
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(bm_closed_form(0, 1).to_rat(), rat(3, 2));
        assert_eq!(bm_closed_form(1, 1).to_rat(), int(1));
        assert_eq!(bm_closed_form(0, 2).to_rat(), rat(21, 8));
        assert_eq!(bm_closed_form(1, 2).to_rat(), rat(15, 4));
        assert_eq!(bm_closed_form(2, 2).to_rat(), rat(3, 2));
        assert_eq!(bm_closed_form(3, 3).to_rat(), rat(5, 2));
        assert_eq!(bm_closed_form(4, 3).to_rat(), int(0));
        assert_eq!(bm_closed_form(-1, 3).to_rat(), int(0));
        for m in 0..12 {
            for i in -1..=m + 1 {
                assert_eq!(bm_closed_form(i, m).to_rat(), oracle(i, m), "i={i} m={m}");
            }
        }
    }

    #[test]
    fn table_matches_standalone() {
        let t = BMTable::new(25);
        for m in 0..=25 {
            for i in 0..=m {
                assert_eq!(t.value(i, m), bm_closed_form(i, m));
            }
        }
    }

    #[test]
    fn extension_preserves_rows() {
        let mut t = BMTable::new(5);
        let before: Vec<_> = (0..=5).map(|m| t.row(m)).collect();
        t.extend_to(12);
        for m in 0..=5 {
            assert_eq!(t.row(m), before[m as usize]);
        }
        assert_eq!(t.d(6, 12), bm_closed_form(6, 12).to_rat());
    }

    #[test]
    fn recurrence_examples() {
        let t = BMTable::new(10);
        assert_eq!(bm_recurrence_m(1, 2, &t).unwrap().to_rat(), rat(15, 4));
        assert_eq!(rec_m_a(1, 3), rat(47, 12));
        assert_eq!(rec_m_b(1, 3), rat(-63, 16));
        assert_eq!(bm_recurrence_m(1, 3, &t).unwrap().to_rat(), rat(43, 4));
        assert!(bm_recurrence_m(3, 3, &t).is_err());
        assert!(bm_recurrence_m(0, 1, &t).is_err());
        assert_eq!(bm_recurrence_i(0, 1, &t).unwrap().to_rat(), rat(21, 8));
        assert_eq!(bm_recurrence_i(1, 2, &t).unwrap().to_rat(), rat(43, 4));
        assert!(bm_recurrence_i(4, 2, &t).is_err());
        // i = 0 specialization: r₀(m) = (4m − 1)/(2m)
        for m in 1..10 {
            assert_eq!(t.d(0, m) / t.d(0, m - 1), Rat::new((4 * m - 1).into(), (2 * m).into()));
        }
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(bm_normalized(1, 2, 0), rat(15, 4));
        assert_eq!(bm_normalized(2, 2, 2), rat(1, 16));
        assert_eq!(bm_normalized(0, 1, 1), rat(3, 2));
        let t = BMTable::new(4);
        assert_eq!(t.normalized(2, 2, 2), rat(1, 16));
    }

    #[test]
    fn polynomial_evaluation() {
        assert_eq!(eval_P(2, &int(1)), rat(63, 8));
        assert_eq!(eval_P(1, &int(0)), rat(3, 2));
        let x = rat(3, 7);
        for m in 0..=20 {
            assert_eq!(eval_P(m, &x), eval_p_binomial_form(m, &x), "m={m}");
        }
    }

    #[test]
    fn diagonal_forms() {
        let d0 = diagonal_closed_form(0);
        assert_eq!(d0.w_ratfunc(), RatFunc::one());
        let d1 = diagonal_closed_form(1);
        assert_eq!(d1.w_ratfunc(), RatFunc::from_poly(crate::algebra::poly("2(2i+1)(2i+3)")));
        // d_i(i+1) = (2i+3)(2i+1)(2i)! / (2^{i+1} (i+1) (i!)^2)
        for i in 0..10i64 {
            let f = |n: i64| Rat::from_integer(factorial(n as u64));
            let expect = Rat::from_integer(((2 * i + 3) * (2 * i + 1)).into()) * f(2 * i)
                / (rat::pow(&int(2), (i + 1) as u32) * int(i + 1) * f(i) * f(i));
            assert_eq!(d1.eval(i), expect);
        }
        for j in 0..=4u32 {
            let d = diagonal_closed_form(j);
            for i in 0..=30 {
                assert_eq!(d.eval(i), oracle(i, i + j as i64), "j={j} i={i}");
            }
        }
    }

    #[test]
    fn prefactor_cancellation() {
        // d_{i+1}(i+2) / d_i(i+1) prefactors
        let p = Prefactor::diagonal(1).shifted(1).mul(&Prefactor::diagonal(1).powi(-1));
        let rf = p.to_ratfunc().unwrap();
        for i in 0..8 {
            assert_eq!(rf.eval_at(&[("i", int(i))]).unwrap(), p.eval(i));
        }
        assert!(Prefactor::diagonal(1).to_ratfunc().is_err());
    }
}
