//! Exact symbolic identity certificates.

use crate::algebra::ext::{delta1_sq, delta2_sq, ExtElem};
use crate::algebra::mpoly::MPoly;
use crate::algebra::poly;
use crate::algebra::rat::Rat;
use crate::algebra::ratfunc::{ratfunc, RatFunc};
use crate::criteria::{GFunction, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Verdict};

use super::data;

pub const IDENTITY_NAMES: &[&str] = &[
    "E-A",
    "Ek-B",
    "B0-decomposition",
    "cond-ii",
    "cond-iii",
    "G2-decomposition",
    "G1G2-decomposition",
    "delta0",
    "delta-product",
    "cond-i-lower",
];

fn leading_terms(p: &MPoly, n: usize) -> String {
    let text = p.to_text();
    let parts: Vec<&str> = text.split(' ').collect();
    let shown = parts.iter().take(2 * n - 1).copied().collect::<Vec<_>>().join(" ");
    if parts.len() > 2 * n - 1 {
        format!("{shown} ...")
    } else {
        shown
    }
}

fn poly_report(name: &str, method: &str, lhs: &MPoly, rhs: &MPoly) -> CheckReport {
    let diff = lhs - rhs;
    finish(name, method, diff.is_zero(), || leading_terms(&diff, 3))
}

fn ratfunc_report(name: &str, method: &str, lhs: &RatFunc, rhs: &RatFunc) -> CheckReport {
    let eq = lhs.equals(rhs);
    finish(name, method, eq, || {
        let d = lhs.sub(rhs);
        format!("difference numerator {}", leading_terms(&d.numerator().0, 3))
    })
}

fn ext_report(name: &str, method: &str, lhs: &ExtElem, rhs: &ExtElem) -> CheckReport {
    let eq = lhs.equals(rhs);
    finish(name, method, eq, || {
        let d = lhs.sub(rhs);
        let coords = [("1", &d.c00), ("D1", &d.c10), ("D2", &d.c01), ("D1D2", &d.c11)];
        coords
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{k}: {}", leading_terms(&c.numerator().0, 2)))
            .collect::<Vec<_>>()
            .join("; ")
    })
}

fn finish(name: &str, method: &str, equal: bool, witness: impl FnOnce() -> String) -> CheckReport {
    let verdict = if equal { Verdict::HoldsStrictly } else { Verdict::Violated };
    let mut r = CheckReport::new("identity", method, verdict).param("name", name);
    r.checked = 1;
    if !equal {
        r = r.note(format!("mismatch: {}", witness()));
    }
    r
}

fn rf(num: &str, den: &str) -> RatFunc {
    ratfunc(num, den)
}

fn one() -> RatFunc {
    RatFunc::one()
}

/// `f_{i+1}(m)` and `g_i(m)` as rational functions of `(i, m)`.
pub fn f_next_and_g() -> (RatFunc, RatFunc) {
    (rf("(m-i-1)(i+1)", "(m-i)(i+2)"), rf("(m-i)i(m+i^2+1)", "(m-i+1)(i+1)(m+i^2)"))
}

/// `(f − 1) g − 1 + 1/g`.
fn e_form(f: &RatFunc, g: &RatFunc) -> Result<RatFunc> {
    Ok(f.sub(&one()).mul(g).sub(&one()).add(&g.recip()?))
}

pub fn e_denominator() -> MPoly {
    poly("i(i+1)(i+2)(m-i)(m-i+1)(m+i^2)(m+i^2+1)")
}

fn e_a() -> Result<CheckReport> {
    let (f, g) = f_next_and_g();
    let lhs = e_form(&f, &g)?.mul_poly(&e_denominator());
    let rhs = RatFunc::from_poly(data::poly("A")?.clone());
    Ok(ratfunc_report("E-A", "rational-function cross-multiplication", &lhs, &rhs))
}

fn ek_b() -> Result<CheckReport> {
    let (f, g) = f_next_and_g();
    let fk = f.mul(&rf("i+1+k", "i+k+2"));
    let gk = g.mul(&rf("i+k", "i+k+1"));
    let den = &e_denominator() * &poly("(i+k)(i+k+1)(i+k+2)");
    let lhs = e_form(&fk, &gk)?.mul_poly(&den);
    let k = MPoly::var("k");
    let rhs = &(&(data::poly("B0")? + &(data::poly("B1")? * &k)) + &(data::poly("B2")? * &k.pow(2)))
        + &(data::poly("A")? * &k.pow(3));
    Ok(ratfunc_report("Ek-B", "rational-function cross-multiplication", &lhs, &RatFunc::from_poly(rhs)))
}

fn b0_decomposition() -> Result<CheckReport> {
    let rhs = &(&poly("m-i") * data::poly("C")?) + data::poly("D")?;
    Ok(poly_report("B0-decomposition", "polynomial expansion", data::poly("B0")?, &rhs))
}

struct SunZhaoParts {
    a: RatFunc,
    a_next: RatFunc,
    b: RatFunc,
    b_next: RatFunc,
    g: ExtElem,
}

fn sunzhao_parts() -> SunZhaoParts {
    let rec = RecurrenceSpec::boros_moll();
    SunZhaoParts {
        a_next: rec.a.shift("n", 1),
        b_next: rec.b.shift("n", 1),
        a: rec.a,
        b: rec.b,
        g: GFunction::boros_moll().ext,
    }
}

fn ext(c: RatFunc) -> ExtElem {
    ExtElem::from_ratfunc(c)
}

/// `4g³ − 3a(n)g² − a(n+1)b(n)`.
pub fn cond_ii_expr() -> ExtElem {
    let p = sunzhao_parts();
    let g2 = p.g.pow(2);
    let g3 = g2.mul(&p.g);
    g3.scale(&RatFunc::from_rat(Rat::from_integer(4.into())))
        .sub(&g2.scale(&p.a.scale(&Rat::from_integer(3.into()))))
        .sub(&ext(p.a_next.mul(&p.b)))
}

/// `h(g(n)) = g⁴ − a(n)g³ − a(n+1)b(n)g − b(n)b(n+1)`.
pub fn cond_iii_expr() -> ExtElem {
    let p = sunzhao_parts();
    let g3 = p.g.pow(3);
    let g4 = g3.mul(&p.g);
    g4.sub(&g3.scale(&p.a))
        .sub(&p.g.scale(&p.a_next.mul(&p.b)))
        .sub(&ext(p.b.mul(&p.b_next)))
}

fn cond_ii() -> Result<CheckReport> {
    let lhs = cond_ii_expr();
    let f1 = data::poly("F1")?;
    let f2 = data::poly("F2")?;
    let x = &(f1 * &poly("n-i-1")) + data::poly("F1hat")?;
    let y = &(f2 * &poly("(n-i-1)i")) + data::poly("F2hat")?;
    let r1 = delta1_sq().clone();
    let scale = RatFunc::new(MPoly::one(), &poly("8n^3(n-i)^3(n+1-i)(n^2-1)") * &r1.pow(2))?;
    // 1/Δ₁³ = Δ₁/(i²+n−1)²
    let rhs = ExtElem::delta1()
        .scale(&RatFunc::from_poly(x))
        .add(&ExtElem::delta2().scale(&RatFunc::from_poly(y)))
        .mul(&ExtElem::delta1())
        .scale(&scale);
    Ok(ext_report("cond-ii", "extension arithmetic over rational functions", &lhs, &rhs))
}

pub fn cond_iii_denominator() -> MPoly {
    &poly("16(n^2-1)(n+1-i)n^4(n-i)^4") * &delta1_sq().pow(2)
}

fn cond_iii() -> Result<CheckReport> {
    let lhs = cond_iii_expr().scale(&RatFunc::from_poly(cond_iii_denominator()));
    let rhs = ext(RatFunc::from_poly(data::poly("G1")?.clone()))
        .add(&ExtElem::delta12().scale(&RatFunc::from_poly(data::poly("G2")?.clone())));
    Ok(ext_report("cond-iii", "extension arithmetic over rational functions", &lhs, &rhs))
}

fn g2_decomposition() -> Result<CheckReport> {
    let rhs = &(&poly("i(n-i-1)") * data::poly("H1")?) + data::poly("H2")?;
    Ok(poly_report("G2-decomposition", "polynomial expansion", data::poly("G2")?, &rhs))
}

/// `G₁ + 2i(i²+n−1)G₂`.
pub fn g1_composite() -> Result<MPoly> {
    Ok(data::poly("G1")? + &(&(&poly("2i") * delta1_sq()) * data::poly("G2")?))
}

fn g1g2_decomposition() -> Result<CheckReport> {
    let rhs = &(&poly("n-i-2") * data::poly("K1")?) + data::poly("K2")?;
    Ok(poly_report("G1G2-decomposition", "polynomial expansion", &g1_composite()?, &rhs))
}

/// `δ₀(m)` built from `r₀(m) = (4m − 1)/(2m)`.
pub fn delta0_from_r0() -> Result<RatFunc> {
    let r0 = rf("4m-1", "2m");
    let r1 = r0.shift("m", 1);
    let r2 = r0.shift("m", 2);
    let left = r0.pow(2).mul(&one().sub(&r1.div(&r0)?));
    let right = r1.pow(2).mul(&one().sub(&r2.div(&r1)?));
    Ok(left.sub(&right))
}

pub fn delta0_closed() -> RatFunc {
    rf("-(8m^2+5m-2)", "4m^2(m+1)^2(m+2)")
}

fn delta0() -> Result<CheckReport> {
    Ok(ratfunc_report("delta0", "rational-function cross-multiplication", &delta0_from_r0()?, &delta0_closed()))
}

/// `(i²+n−1)(4i⁴+8i²n−3i²+n−1) − 4i²(i²+n−1)²` and its factored form.
pub fn delta_product_residual() -> (MPoly, MPoly) {
    let r1 = delta1_sq();
    let r2 = delta2_sq();
    let lhs = &(r1 * r2) - &(&poly("4i^2") * &r1.pow(2));
    let rhs = r1 * &poly("4i^2n+i^2+n-1");
    (lhs, rhs)
}

fn delta_product() -> Result<CheckReport> {
    let (l, r) = delta_product_residual();
    Ok(poly_report("delta-product", "polynomial expansion", &l, &r))
}

fn cond_i_lower() -> Result<CheckReport> {
    let p = sunzhao_parts();
    let lhs = p.g.sub(&ext(p.a.scale(&Rat::new(1.into(), 2.into()))));
    let num = ExtElem::delta1()
        .scale(&RatFunc::from_poly(poly("6n-3")))
        .add(&ExtElem::delta2().scale(&RatFunc::from_poly(poly("2i"))));
    // 1/Δ₁ = Δ₁/(i²+n−1)
    let den = &poly("4n(n-i)") * delta1_sq();
    let rhs = num.mul(&ExtElem::delta1()).scale(&RatFunc::new(MPoly::one(), den)?);
    Ok(ext_report("cond-i-lower", "extension arithmetic over rational functions", &lhs, &rhs))
}

pub fn verify_identity(name: &str) -> Result<CheckReport> {
    match name {
        "E-A" => e_a(),
        "Ek-B" => ek_b(),
        "B0-decomposition" => b0_decomposition(),
        "cond-ii" => cond_ii(),
        "cond-iii" => cond_iii(),
        "G2-decomposition" => g2_decomposition(),
        "G1G2-decomposition" => g1g2_decomposition(),
        "delta0" => delta0(),
        "delta-product" => delta_product(),
        "cond-i-lower" => cond_i_lower(),
        other => Err(Error::UnknownCertificate(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn all_identities_hold() {
        for name in IDENTITY_NAMES {
            let r = verify_identity(name).unwrap();
            assert_eq!(r.verdict, Verdict::HoldsStrictly, "{name}: {:?}", r.note);
        }
    }

    #[test]
    fn e_denominator_value() {
        let a = data::poly("A").unwrap();
        assert_eq!(a.eval_int(&[("i", 1), ("m", 3)]).unwrap(), 808.into());
        assert_eq!(e_denominator().eval_int(&[("i", 1), ("m", 3)]).unwrap(), 720.into());
        assert_eq!(poly("m^2(4m-i)").eval_int(&[("i", 1), ("m", 3)]).unwrap(), 99.into());
    }

    #[test]
    fn delta0_values() {
        let d = delta0_from_r0().unwrap();
        assert_eq!(d.eval_at(&[("m", int(1))]).unwrap(), rat(-11, 48));
    }

    #[test]
    fn broken_transcription_is_caught() {
        let rhs = &(&poly("m-i") * data::poly("C").unwrap()) + &poly("4i^2");
        let r = poly_report("B0-decomposition", "polynomial expansion", data::poly("B0").unwrap(), &rhs);
        assert_eq!(r.verdict, Verdict::Violated);
        assert!(r.note.unwrap().contains("mismatch"));
    }
}
