//! Rational and quadratic-surd bounds on Boros–Moll ratios, with exact
//! checks against table data.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rat::{self, Rat};
use crate::algebra::surd::{rat_serde, surd_sign, SurdExpr};
use crate::boros_moll::BMTable;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Tally, Verdict};

fn q(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn need_interior(i: i64, m: i64) -> Result<()> {
    if m < 2 || i < 1 || i > m - 1 {
        Err(Error::Domain(format!("need m ≥ 2 and 1 ≤ i ≤ m−1; got i={i}, m={m}")))
    } else {
        Ok(())
    }
}

/// `u_i(m) = d_{i−1}(m) d_{i+1}(m) / d_i(m)²`.
pub fn u_ratio(t: &BMTable, i: i64, m: i64) -> Result<Rat> {
    if m < 1 || i < 1 || i > m {
        return Err(Error::Domain(format!("u_i(m) needs 1 ≤ i ≤ m; got i={i}, m={m}")));
    }
    let di = t.d(i, m);
    Ok(t.d(i - 1, m) * t.d(i + 1, m) / (&di * &di))
}

/// `(i + k) / (i + k + 1)`.
pub fn k_factor(i: i64, k: i64) -> Rat {
    q(i + k, i + k + 1)
}

/// `u_{i,k}(m) = (i+k)/(i+k+1) · u_i(m)`, the same ratio for `d_i(m)/(i+k)!`.
pub fn u_ratio_k(t: &BMTable, i: i64, m: i64, k: i64) -> Result<Rat> {
    Ok(k_factor(i, k) * u_ratio(t, i, m)?)
}

pub fn f_bound(i: i64, m: i64) -> Rat {
    q((m - i) * i, (m - i + 1) * (i + 1))
}

pub fn g_bound(i: i64, m: i64) -> Rat {
    let num = BigInt::from((m - i) * i) * (m + i * i + 1);
    let den = BigInt::from((m - i + 1) * (i + 1)) * (m + i * i);
    Rat::new(num, den)
}

/// `(f_i(m), g_i(m))`.
pub fn fg_bounds(i: i64, m: i64) -> Result<(Rat, Rat)> {
    need_interior(i, m)?;
    Ok((f_bound(i, m), g_bound(i, m)))
}

pub fn fg_bounds_k(i: i64, m: i64, k: i64) -> Result<(Rat, Rat)> {
    let (f, g) = fg_bounds(i, m)?;
    let c = k_factor(i, k);
    Ok((&c * f, c * g))
}

/// `E_i(m) = (f_{i+1} − 1) g_i − 1 + 1/g_i`, or the analogue built from
/// `f_{i+1,k}` and `g_{i,k}` when `k` is given.
#[allow(non_snake_case)]
pub fn E_lower(i: i64, m: i64, k: Option<i64>) -> Result<Rat> {
    need_interior(i, m)?;
    let (f1, g) = match k {
        None => (f_bound(i + 1, m), g_bound(i, m)),
        Some(k) => (k_factor(i + 1, k) * f_bound(i + 1, m), k_factor(i, k) * g_bound(i, m)),
    };
    Ok((f1 - Rat::one()) * &g - Rat::one() + g.recip())
}

/// `L(m, i)` with the two radicals merged into one rational radicand.
#[allow(non_snake_case)]
pub fn ratio_lower_L(m: i64, i: i64) -> Result<SurdExpr> {
    need_interior(i, m)?;
    let den = 2 * (m + 1) * (m - i + 1);
    let base = q(4 * m * m + 7 * m - 2 * i * i + 3, den);
    let coeff = q(i, den);
    let radicand = q(4 * i.pow(4) + 8 * i * i * m + 5 * i * i + m, m + i * i);
    SurdExpr::new(base, coeff, radicand)
}

/// `R(i, m) = (m − i + 1) m³ / ((m − i)(m + 1)(m² + 1))`.
#[allow(non_snake_case)]
pub fn transposed_lower_R(i: i64, m: i64) -> Result<Rat> {
    if i < 0 || m < i + 1 {
        return Err(Error::Domain(format!("R(i,m) needs i ≥ 0, m ≥ i+1; got i={i}, m={m}")));
    }
    let num = BigInt::from(m - i + 1) * BigInt::from(m).pow(3);
    let den = BigInt::from((m - i) * (m + 1)) * (m * m + 1);
    Ok(Rat::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Rat(#[serde(with = "rat_serde")] Rat),
    Surd(SurdExpr),
}

impl BoundValue {
    /// Exact sign of `x − self`.
    pub fn sign_below(&self, x: &Rat) -> i8 {
        match self {
            BoundValue::Rat(b) => rat::sign(&(x - b)),
            BoundValue::Surd(s) => surd_sign(&(x - &s.base), &-s.coeff.clone(), &s.radicand).expect("radicand checked at construction"),
        }
    }
}

/// One bound comparison: `lower < actual < upper`, either side optional.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEval {
    pub bound: String,
    pub i: i64,
    pub m: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<BoundValue>,
    #[serde(with = "rat_serde")]
    pub actual: Rat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<BoundValue>,
    pub verdict: Verdict,
}

impl BoundEval {
    fn build(bound: &str, i: i64, m: i64, k: Option<i64>, lower: Option<BoundValue>, actual: Rat, upper: Option<BoundValue>) -> Self {
        let mut signs = Vec::new();
        if let Some(l) = &lower {
            signs.push(l.sign_below(&actual));
        }
        if let Some(u) = &upper {
            signs.push(-u.sign_below(&actual));
        }
        let verdict = if signs.iter().any(|&s| s < 0) {
            Verdict::Violated
        } else if signs.iter().any(|&s| s == 0) {
            Verdict::HoldsWeakly
        } else {
            Verdict::HoldsStrictly
        };
        Self { bound: bound.to_string(), i, m, k, lower, actual, upper, verdict }
    }

    /// Keeps only the lower (`lower = true`) or upper side, under a new name.
    pub fn one_side(self, name: &str, lower: bool) -> Self {
        let (l, u) = if lower { (self.lower, None) } else { (None, self.upper) };
        Self::build(name, self.i, self.m, self.k, l, self.actual, u)
    }

    fn record(&self, t: &mut Tally, index: i64) {
        if let Some(BoundValue::Rat(l)) = &self.lower {
            t.record(index, self.actual.clone(), l.clone());
        } else if let Some(BoundValue::Surd(s)) = &self.lower {
            let sign = BoundValue::Surd(s.clone()).sign_below(&self.actual);
            t.record_sign(index, sign, self.actual.clone(), s.base.clone(), Some(format!("lower bound {s}")));
        }
        if let Some(BoundValue::Rat(u)) = &self.upper {
            t.record(index, u.clone(), self.actual.clone());
        }
    }
}

/// `f_i(m) < u_i(m) < g_i(m)` (or the `k`-scaled version).
pub fn sandwich_eval(t: &BMTable, i: i64, m: i64, k: Option<i64>) -> Result<BoundEval> {
    let (f, g, u, name) = match k {
        None => {
            let (f, g) = fg_bounds(i, m)?;
            (f, g, u_ratio(t, i, m)?, "sandwich")
        }
        Some(k) => {
            let (f, g) = fg_bounds_k(i, m, k)?;
            (f, g, u_ratio_k(t, i, m, k)?, "sandwich-k")
        }
    };
    Ok(BoundEval::build(name, i, m, k, Some(BoundValue::Rat(f)), u, Some(BoundValue::Rat(g))))
}

/// `d_i(m+1)/d_i(m) > L(m, i)`.
pub fn ratio_lower_eval(t: &BMTable, i: i64, m: i64) -> Result<BoundEval> {
    let l = ratio_lower_L(m, i)?;
    let actual = t.d(i, m + 1) / t.d(i, m);
    Ok(BoundEval::build("L", i, m, None, Some(BoundValue::Surd(l)), actual, None))
}

/// `d_i(m)² / (d_i(m−1) d_i(m+1)) > R(i, m)`.
pub fn transposed_lower_eval(t: &BMTable, i: i64, m: i64) -> Result<BoundEval> {
    let r = transposed_lower_R(i, m)?;
    let d = t.d(i, m);
    let actual = &d * &d / (t.d(i, m - 1) * t.d(i, m + 1));
    Ok(BoundEval::build("R", i, m, None, Some(BoundValue::Rat(r)), actual, None))
}

/// `E_i(m) > 0` (or `E_{i,k}(m) > 0`).
pub fn e_eval(i: i64, m: i64, k: Option<i64>) -> Result<BoundEval> {
    let e = E_lower(i, m, k)?;
    Ok(BoundEval::build("E", i, m, k, Some(BoundValue::Rat(Rat::zero())), e, None))
}

/// Which family of bounds a sweep covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFamily {
    /// `f < u < g` on rows.
    Sandwich,
    /// `f_{i,k} < u_{i,k} < g_{i,k}` on rows for the given `k`.
    SandwichK(i64),
    /// `d_i(m+1)/d_i(m) > L(m, i)`.
    RatioLower,
    /// `E_i(m) > 0`, optionally `k`-scaled.
    E(Option<i64>),
    /// `(u_{i+1} − 1) u_i − 1 + 1/u_i > E_i(m)`, optionally `k`-scaled.
    BriggsChain(Option<i64>),
}

impl BoundFamily {
    fn name(&self) -> &'static str {
        match self {
            BoundFamily::Sandwich => "sandwich",
            BoundFamily::SandwichK(_) => "sandwich-k",
            BoundFamily::RatioLower => "ratio-lower-L",
            BoundFamily::E(_) => "E-positive",
            BoundFamily::BriggsChain(_) => "briggs-chain",
        }
    }

    fn k(&self) -> Option<i64> {
        match self {
            BoundFamily::SandwichK(k) => Some(*k),
            BoundFamily::E(k) | BoundFamily::BriggsChain(k) => *k,
            _ => None,
        }
    }
}

/// `(u_{i+1} − 1) u_i − 1 + 1/u_i`, the Briggs expression in ratio form.
pub fn briggs_u_form(t: &BMTable, i: i64, m: i64, k: Option<i64>) -> Result<Rat> {
    let (ui, ui1) = match k {
        None => (u_ratio(t, i, m)?, u_ratio(t, i + 1, m)?),
        Some(k) => (u_ratio_k(t, i, m, k)?, u_ratio_k(t, i + 1, m, k)?),
    };
    Ok((ui1 - Rat::one()) * &ui - Rat::one() + ui.recip())
}

/// One report per row `m`, indexed by `i` over `1..=m−1`.
pub fn check_row_bounds(t: &BMTable, m: i64, family: BoundFamily) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for i in 1..m {
        match family {
            BoundFamily::Sandwich => sandwich_eval(t, i, m, None)?.record(&mut tally, i),
            BoundFamily::SandwichK(k) => sandwich_eval(t, i, m, Some(k))?.record(&mut tally, i),
            BoundFamily::RatioLower => ratio_lower_eval(t, i, m)?.record(&mut tally, i),
            BoundFamily::E(k) => e_eval(i, m, k)?.record(&mut tally, i),
            BoundFamily::BriggsChain(k) => {
                let lhs = briggs_u_form(t, i, m, k)?;
                let e = E_lower(i, m, k)?;
                tally.record_with(i, lhs, e.clone(), Some("u-form > E".into()));
                tally.record_with(i, e, Rat::zero(), Some("E > 0".into()));
            }
        }
    }
    let mut r = tally.finish(family.name(), "exact comparison").param("m", m);
    if let Some(k) = family.k() {
        r = r.param("k", k);
    }
    Ok(r)
}

/// Row sweep over `m_lo..=m_hi`, parallel over `m`, reports in `m` order.
pub fn check_sandwich(t: &BMTable, m_lo: i64, m_hi: i64, family: BoundFamily) -> Result<Vec<CheckReport>> {
    if m_hi + 1 > t.m_max() as i64 {
        return Err(Error::Domain(format!("table holds m ≤ {}, need {}", t.m_max(), m_hi + 1)));
    }
    (m_lo.max(2)..=m_hi).into_par_iter().map(|m| check_row_bounds(t, m, family)).collect()
}

/// Transposed lower bound for fixed `i` over `m` in `i+1..=m_hi`, plus the
/// closed-form floors `R(1,m) = m⁴/(m⁴−1)` and `R(i,m) > (m²+1)/m²` for `i ≥ 2`.
pub fn check_transposed_lower(t: &BMTable, i: i64, m_hi: i64) -> Result<CheckReport> {
    let mut tally = Tally::new();
    let mut floor = Tally::new();
    for m in i + 1..=m_hi {
        transposed_lower_eval(t, i, m)?.record(&mut tally, m);
        let r = transposed_lower_R(i, m)?;
        if i == 1 {
            let m4 = BigInt::from(m).pow(4);
            let expect = Rat::new(m4.clone(), m4 - 1);
            floor.record_sign(m, if r == expect { 1 } else { -1 }, r.clone(), expect, Some("R(1,m) closed form".into()));
        } else if i >= 2 {
            floor.record(m, r, q(m * m + 1, m * m));
        }
    }
    let mut report = tally.finish("transposed-lower-R", "exact comparison").param("i", i);
    if floor.checked() > 0 {
        let v = floor.verdict();
        if v != Verdict::HoldsStrictly {
            report.verdict = report.verdict.combine(Verdict::Violated);
            report = report.note(format!("R floor check {v}"));
        }
    }
    Ok(report)
}
