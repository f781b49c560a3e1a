//! The diagonal ratio certificate
//!
//! ```text
//! V₁  = d_i(i+2) d_{i+1}(i+2) / (d_i(i+1) d_{i+1}(i+3))
//! V₂³ = d_i(i+3) / d_{i+1}(i+4)
//! ```
//!
//! built symbolically in `i` from the diagonal closed forms, with the
//! factorial prefactors cancelled exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::mpoly::MPoly;
use crate::algebra::poly;
use crate::algebra::rat::Rat;
use crate::algebra::ratfunc::RatFunc;
use crate::boros_moll::{diagonal_closed_form, BMTable, Prefactor};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Tally, Verdict};

use super::data;

/// `Π d_{i+δ}(i+δ+j)^e` over `(j, δ, e)` as a rational function of `i`.
pub fn diagonal_product(parts: &[(u32, i64, i64)]) -> Result<RatFunc> {
    let mut pre = Prefactor::default();
    let mut w = RatFunc::one();
    for &(j, delta, e) in parts {
        let form = diagonal_closed_form(j);
        pre = pre.mul(&form.prefactor().shifted(delta).powi(e));
        let wj = form.w_ratfunc().shift("i", delta);
        let wj = if e >= 0 { wj.pow(e as u32) } else { wj.pow((-e) as u32).recip()? };
        w = w.mul(&wj);
    }
    Ok(pre.to_ratfunc()?.mul(&w))
}

pub fn v1() -> Result<RatFunc> {
    diagonal_product(&[(2, 0, 1), (1, 1, 1), (1, 0, -1), (2, 1, -1)])
}

pub fn v2_cubed() -> Result<RatFunc> {
    diagonal_product(&[(3, 0, 1), (3, 1, -1)])
}

/// Irreducible factors `(factor, multiplicity)` of the displayed
/// denominator of `V₁³ − V₂³`.
pub fn displayed_denominator_factors() -> Vec<(MPoly, u32)> {
    vec![
        (poly("i+2"), 6),
        (poly("2i+3"), 3),
        (poly("4i^2+26i+43"), 3),
        (poly("4i^2+30i+59"), 1),
        (poly("2i+9"), 1),
        (poly("2i+5"), 1),
    ]
}

pub fn displayed_denominator() -> MPoly {
    displayed_denominator_factors().iter().fold(MPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalRatioOutcome {
    /// Coefficients `s_0..s_18`, lowest degree first, as decimal strings.
    pub s: Vec<String>,
    pub all_positive: bool,
    pub denominator_matches: bool,
    pub matches_stored: bool,
    pub numeric_agreement: bool,
}

/// Scales `V₁³ − V₂³` by the displayed denominator, divides out `(i + 1)`,
/// and returns `(Σ s_k i^k, whether the result was a polynomial)`.
fn numerator_after_factor() -> Result<MPoly> {
    let diff = v1()?.pow(3).sub(&v2_cubed()?);
    let scaled = diff.mul_poly(&displayed_denominator());
    let (num, den_int) = scaled.numerator();
    let den = scaled.den().clone();
    let numer = num
        .div_exact(&den)
        .ok_or_else(|| Error::Internal("displayed denominator does not clear V1^3 - V2^3".into()))?;
    // remaining integer denominator from the rational content
    let (content, prim) = numer.primitive_split();
    if !(&content % &den_int).is_zero() {
        return Err(Error::Internal("V1^3 - V2^3 times the displayed denominator is not integral".into()));
    }
    let numer = prim.scale(&(content / den_int));
    numer
        .div_exact(&poly("i+1"))
        .ok_or_else(|| Error::Internal("numerator is not divisible by i+1".into()))
}

fn discriminant_negative(q: &MPoly) -> bool {
    match q.univariate_coeffs("i") {
        Ok(c) if c.len() == 3 => (&c[1] * &c[1] - BigInt::from(4) * &c[2] * &c[0]).is_negative(),
        _ => false,
    }
}

pub fn analyse() -> Result<DiagonalRatioOutcome> {
    let s_poly = numerator_after_factor()?;
    let s = s_poly.univariate_coeffs("i")?;
    let all_positive = s.len() == 19 && s.iter().all(|c| c.is_positive());
    let full = &s_poly * &poly("i+1");
    // the displayed denominator is exact iff no factor divides the numerator
    // (all factors are primitive and irreducible over Q)
    let denominator_matches = displayed_denominator_factors().iter().all(|(f, _)| {
        let irreducible = f.total_degree() == 1 || discriminant_negative(f);
        irreducible && full.div_exact(f).is_none()
    });
    let matches_stored = data::stored_sk().map(|st| st == s).unwrap_or(false);
    let numeric_agreement = numeric_check(20)?.verdict() == Verdict::HoldsStrictly;
    Ok(DiagonalRatioOutcome {
        s: s.iter().map(|c| c.to_string()).collect(),
        all_positive,
        denominator_matches,
        matches_stored,
        numeric_agreement,
    })
}

/// `V₁³ − V₂³` from table values against the symbolic form at `i = 0..=i_max`.
pub fn numeric_check(i_max: i64) -> Result<Tally> {
    let t = BMTable::new((i_max + 4) as u32);
    let sym = v1()?.pow(3).sub(&v2_cubed()?);
    let mut tally = Tally::new();
    for i in 0..=i_max {
        let v1 = t.d(i, i + 2) * t.d(i + 1, i + 2) / (t.d(i, i + 1) * t.d(i + 1, i + 3));
        let v2c = t.d(i, i + 3) / t.d(i + 1, i + 4);
        let direct: Rat = &v1 * &v1 * &v1 - v2c;
        let symbolic = sym.eval_at(&[("i", Rat::from_integer(i.into()))])?;
        let sign = if direct == symbolic { 1 } else { -1 };
        tally.record_sign(i, sign, direct, symbolic, Some("table vs symbolic".into()));
    }
    Ok(tally)
}

pub fn verify_diagonal_ratio() -> Result<CheckReport> {
    let o = analyse()?;
    let ok = o.all_positive && o.denominator_matches && o.numeric_agreement;
    let mut r = CheckReport::new(
        "diagonal-ratio",
        "symbolic factorial cancellation and exact division",
        if ok { Verdict::HoldsStrictly } else { Verdict::Violated },
    )
    .param("name", "V1-V2")
    .param("coefficients", o.s.len() as i64);
    r.checked = o.s.len() as u64;
    if !o.all_positive {
        r = r.note("not all 19 coefficients are positive");
    }
    if !o.denominator_matches {
        r = r.note("denominator differs from the displayed factorization");
    }
    if !o.numeric_agreement {
        r = r.note("symbolic form disagrees with table values");
    }
    if !o.matches_stored {
        r = r.note("computed coefficients differ from certs/sk.txt");
        r.verdict = Verdict::Violated;
    }
    Ok(r)
}

/// Text of `certs/sk.txt` for the computed coefficients.
pub fn sk_file_text(s: &[String]) -> String {
    let mut out = String::from("# s_k of the diagonal ratio numerator, k = 0..18 (computed)\n");
    for (k, v) in s.iter().enumerate() {
        out.push_str(&format!("{k} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use crate::algebra::ratfunc::ratfunc;

    #[test]
    fn v_closed_forms() {
        let v1 = v1().unwrap();
        let expect = ratfunc("(i+1)(i+3)(2i+5)(4i^2+18i+21)", "(i+2)^2(2i+3)(4i^2+26i+43)");
        assert_eq!(v1, expect);
        let v2 = v2_cubed().unwrap();
        let expect = ratfunc("(i+1)(i+4)(2i+7)(4i^2+22i+33)", "(i+2)(2i+5)(2i+9)(4i^2+30i+59)");
        assert_eq!(v2, expect);
    }

    #[test]
    fn coefficients() {
        let o = analyse().unwrap();
        assert_eq!(o.s.len(), 19);
        assert_eq!(o.s[0], "19511047773");
        assert_eq!(o.s[18], "4096");
        assert!(o.all_positive && o.denominator_matches && o.numeric_agreement && o.matches_stored);
        assert_eq!(verify_diagonal_ratio().unwrap().verdict, Verdict::HoldsStrictly);
    }

    #[test]
    fn denominator_contains_cubed_quadratic() {
        let d = displayed_denominator();
        assert!(d.div_exact(&poly("4i^2+26i+43").pow(3)).is_some());
        assert_eq!(d.eval_int(&[("i", 0)]).unwrap(), (64 * 27 * 43i64.pow(3) * 59 * 45).into());
        let _ = int(0);
    }
}
