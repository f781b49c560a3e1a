//! Sufficient-condition checks for Briggs and ratio-log-convexity, and
//! their Boros–Moll instances.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::ext::{delta1_sq, delta2_sq, ExtElem, ExtNum};
use crate::algebra::rat::{self, int, Rat};
use crate::algebra::ratfunc::{ratfunc, RatFunc};
use crate::algebra::surd::SurdExpr;
use crate::boros_moll::BMTable;
use crate::certificates::{data, identities};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Tally, Verdict};
use crate::seq::{self, Seq};

/// `S_n = a(n) S_{n−1} + b(n) S_{n−2}` with coefficients rational in `n`
/// and the parameter `i`.
#[derive(Clone, Debug)]
pub struct RecurrenceSpec {
    pub a: RatFunc,
    pub b: RatFunc,
    /// Smallest `n` at which the recurrence may be applied, as an offset
    /// from `i`.
    pub n0_offset: i64,
}

impl RecurrenceSpec {
    pub fn boros_moll() -> Self {
        Self {
            a: ratfunc("8n^2-8n-4i^2+3", "2n(n-i)"),
            b: ratfunc("-(4n-5)(4n-3)(n-1+i)", "4n(n-1)(n-i)"),
            n0_offset: 2,
        }
    }

    fn at(f: &RatFunc, i: i64, n: i64) -> Result<Rat> {
        f.eval_at(&[("i", int(i)), ("n", int(n))])
    }

    pub fn a_at(&self, i: i64, n: i64) -> Result<Rat> {
        Self::at(&self.a, i, n)
    }

    pub fn b_at(&self, i: i64, n: i64) -> Result<Rat> {
        Self::at(&self.b, i, n)
    }

    /// `S_n` from `S_{n−1}` and `S_{n−2}`.
    pub fn next(&self, i: i64, n: i64, s1: &Rat, s2: &Rat) -> Result<Rat> {
        Ok(self.a_at(i, n)? * s1 + self.b_at(i, n)? * s2)
    }
}

/// A candidate lower function `g(n)` in the extension generated by `Δ₁, Δ₂`.
#[derive(Clone, Debug)]
pub struct GFunction {
    pub ext: ExtElem,
}

impl GFunction {
    /// `g(n) = (4n² − 2i² − n)/(2n(n−i)) + i Δ₁Δ₂ / (2n(n−i)(i²+n−1))`.
    pub fn boros_moll() -> Self {
        let c00 = ratfunc("4n^2-2i^2-n", "2n(n-i)");
        let c11 = ratfunc("i", "2n(n-i)(i^2+n-1)");
        Self { ext: ExtElem::new(c00, RatFunc::zero(), RatFunc::zero(), c11) }
    }

    pub fn at(&self, i: i64, n: i64) -> Result<ExtNum> {
        self.ext.specialize(i, n)
    }

    /// The value at `(i, n)` as a single surd over `√(Δ₁²Δ₂²)`.
    pub fn surd_at(&self, i: i64, n: i64) -> Result<SurdExpr> {
        self.at(i, n)?
            .as_surd()
            .ok_or_else(|| Error::Internal("g(n) has Δ₁ or Δ₂ components".into()))
    }
}

/// `g(n)` for the Boros–Moll instance as a surd value.
pub fn g_of_n(n: i64, i: i64) -> Result<SurdExpr> {
    if i < 1 || n < i + 2 {
        return Err(Error::Domain(format!("g(n) needs i ≥ 1, n ≥ i+2; got i={i}, n={n}")));
    }
    GFunction::boros_moll().surd_at(i, n)
}

fn sign_of(o: Ordering) -> i8 {
    match o {
        Ordering::Greater => 1,
        Ordering::Equal => 0,
        Ordering::Less => -1,
    }
}

// ---------------------------------------------------------------------------
// Log-concavity / 2-log-convexity plus ratio-log-convexity implies Briggs

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Thm41Mode {
    LogConcave,
    TwoLogConvex,
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm41Outcome {
    pub mode: Thm41Mode,
    pub hypotheses: Vec<CheckReport>,
    pub conclusion: CheckReport,
    /// The conclusion rechecked as `(c_{n+1} − 1) c_n² > c_n − 1`.
    pub cn_route: CheckReport,
    /// Every hypothesis held strictly, so the conclusion is asserted.
    pub asserted: bool,
    /// Hypotheses hold but the conclusion fails somewhere on the window.
    pub falsified: bool,
}

impl Thm41Outcome {
    pub fn report(&self) -> CheckReport {
        let verdict = if self.falsified {
            Verdict::Violated
        } else if self.asserted {
            self.conclusion.verdict.combine(self.cn_route.verdict)
        } else {
            Verdict::Inconclusive
        };
        let mode = match self.mode {
            Thm41Mode::LogConcave => "logconcave",
            Thm41Mode::TwoLogConvex => "twologconvex",
        };
        let mut r = CheckReport::new("thm41", "hypotheses and conclusion checked independently", verdict)
            .param("mode", mode);
        r.window = self.conclusion.window;
        r.checked = self.hypotheses.iter().map(|h| h.checked).sum::<u64>() + self.conclusion.checked;
        r.witnesses = self.conclusion.witnesses.clone();
        for h in &self.hypotheses {
            r = r.note(format!("{}: {}", h.property, h.verdict));
        }
        r = r.note(format!("briggs: {}; c_n route: {}", self.conclusion.verdict, self.cn_route.verdict));
        if !self.asserted {
            r = r.note("hypotheses not strict on the window; conclusion not asserted");
        }
        if self.falsified {
            r = r.note("hypotheses hold but Briggs fails: implementation error");
        }
        r
    }
}

/// `c_n = a_{n−1} a_{n+1} / a_n²` and the check of
/// `(c_{n+1} − 1) c_n² > c_n − 1` at each `n` in `ks`.
fn cn_route(s: &Seq, ks: &[i64]) -> CheckReport {
    let c = |n: i64| -> Option<Rat> {
        let (a0, a1, a2) = (s.get(n - 1)?, s.get(n)?, s.get(n + 1)?);
        Some(a0 * a2 / (&a1 * &a1))
    };
    let mut t = Tally::new();
    for &n in ks {
        match (c(n), c(n + 1)) {
            (Some(cn), Some(cn1)) => {
                t.record(n, (cn1 - Rat::one()) * &cn * &cn, cn - Rat::one());
            }
            _ => t.inconclusive(n, "c_n needs a_(n-1)..a_(n+2)"),
        }
    }
    t.finish("briggs-cn", "exact c_n comparison")
}

/// Strict `L(a) < 0` and `L²(a) < 0` on the window, i.e. `a_n² < a_{n−1}a_{n+1}`
/// and `b_n² < b_{n−1} b_{n+1}` for `b = L(a)`.
fn check_two_log_convex(s: &Seq) -> CheckReport {
    let b = seq::l_operator(s);
    let mut t = Tally::new();
    for n in s.first() + 1..s.last() {
        if let (Some(x0), Some(x1), Some(x2)) = (s.get(n - 1), s.get(n), s.get(n + 1)) {
            t.record_with(n, x0 * x2, &x1 * &x1, Some("L(a) < 0".into()));
        }
    }
    for n in s.first() + 2..s.last() - 1 {
        if let (Some(y0), Some(y1), Some(y2)) = (b.get(n - 1), b.get(n), b.get(n + 1)) {
            t.record_with(n, y0 * y2, &y1 * &y1, Some("L^2(a) < 0".into()));
        }
    }
    t.finish("2-log-convex", "exact L-operator iteration")
}

pub fn theorem41_check(s: &Seq, mode: Thm41Mode) -> Result<Thm41Outcome> {
    if s.len() < 5 {
        return Err(Error::WindowTooShort("theorem41_check (need 5 terms)".into()));
    }
    if !s.all_positive() {
        return Err(Error::Domain("theorem41_check needs a positive sequence".into()));
    }
    let open = Seq::open(s.first(), (s.first()..=s.last()).map(|n| s.get(n).expect("in window")).collect());
    let shape = match mode {
        Thm41Mode::LogConcave => seq::check_log_concave(&open),
        Thm41Mode::TwoLogConvex => check_two_log_convex(&open),
    };
    let hypotheses = vec![shape, seq::check_ratio_log_convex(&open)];
    let start = match mode {
        Thm41Mode::LogConcave => open.first() + 1,
        Thm41Mode::TwoLogConvex => open.first() + 2,
    };
    let ks: Vec<i64> = (start..=open.last() - 2).collect();
    let conclusion = seq::check_briggs_at(&open, &ks);
    let cn = cn_route(&open, &ks);
    let asserted = hypotheses.iter().all(|h| h.verdict == Verdict::HoldsStrictly);
    let falsified = asserted && (conclusion.verdict == Verdict::Violated || conclusion.verdict == Verdict::HoldsWeakly);
    Ok(Thm41Outcome { mode, hypotheses, conclusion, cn_route: cn, asserted, falsified })
}

// ---------------------------------------------------------------------------
// Ratio-log-convexity criterion

/// `4g³ − 3a(n)g² − a(n+1)b(n)` and `h(g(n))` for a general recurrence and
/// lower function, built symbolically once.
struct CriterionExprs {
    lower: ExtElem,
    cond_ii: ExtElem,
    cond_iii: ExtElem,
}

fn criterion_exprs(rec: &RecurrenceSpec, g: &GFunction) -> CriterionExprs {
    let a1 = rec.a.shift("n", 1);
    let b1 = rec.b.shift("n", 1);
    let g = &g.ext;
    let g2 = g.pow(2);
    let g3 = g2.mul(g);
    let a1b = a1.mul(&rec.b);
    let lower = g.sub(&ExtElem::from_ratfunc(rec.a.scale(&rat::rat(1, 2))));
    let cond_ii = g3
        .scale(&RatFunc::from_rat(int(4)))
        .sub(&g2.scale(&rec.a.scale(&int(3))))
        .sub(&ExtElem::from_ratfunc(a1b.clone()));
    let cond_iii = g3
        .mul(g)
        .sub(&g3.scale(&rec.a))
        .sub(&g.scale(&a1b))
        .sub(&ExtElem::from_ratfunc(rec.b.mul(&b1)));
    CriterionExprs { lower, cond_ii, cond_iii }
}

fn bm_exprs() -> &'static CriterionExprs {
    static E: OnceLock<CriterionExprs> = OnceLock::new();
    E.get_or_init(|| criterion_exprs(&RecurrenceSpec::boros_moll(), &GFunction::boros_moll()))
}

/// `G₁ + Δ₁Δ₂ G₂` at `(i, n)` from the certificate polynomials.
fn cond_iii_certificate_sign(i: i64, n: i64) -> Result<i8> {
    let pt = [("i", int(i)), ("n", int(n))];
    let g1 = data::poly("G1")?.eval_at(&pt)?;
    let g2 = data::poly("G2")?.eval_at(&pt)?;
    let x = ExtNum {
        c: [g1, Rat::zero(), Rat::zero(), g2],
        r1: delta1_sq().eval_at(&pt)?,
        r2: delta2_sq().eval_at(&pt)?,
    };
    Ok(x.sign())
}

/// One report per condition for the sequence `s` (indexed by `n`) over
/// `n ∈ n_lo..=n_hi`:
/// `a > 0, b < 0`; condition (i) lower and upper; (ii); (iii); the
/// certificate-path sign of (iii) when `certified` is set; strict
/// ratio-log-convexity of the data.
pub fn sunzhao_conditions(
    rec: &RecurrenceSpec,
    g: &GFunction,
    s: &Seq,
    i: i64,
    n_lo: i64,
    n_hi: i64,
) -> Result<Vec<CheckReport>> {
    let exprs = criterion_exprs(rec, g);
    sunzhao_with(rec, g, &exprs, s, i, n_lo, n_hi, false)
}

#[allow(clippy::too_many_arguments)]
fn sunzhao_with(
    rec: &RecurrenceSpec,
    g: &GFunction,
    exprs: &CriterionExprs,
    s: &Seq,
    i: i64,
    n_lo: i64,
    n_hi: i64,
    certified: bool,
) -> Result<Vec<CheckReport>> {
    if n_lo - 2 < s.first() || n_hi + 1 > s.last() {
        return Err(Error::WindowTooShort(format!(
            "criterion sweep over n = {n_lo}..{n_hi} needs S on {}..{}",
            n_lo - 2,
            n_hi + 1
        )));
    }
    let mut pre = Tally::new();
    let mut low = Tally::new();
    let mut up = Tally::new();
    let mut c2 = Tally::new();
    let mut c3 = Tally::new();
    let mut cross = Tally::new();
    let zero = Rat::zero();
    for n in n_lo..=n_hi + 1 {
        match (rec.a_at(i, n), rec.b_at(i, n)) {
            (Ok(a), Ok(b)) => {
                pre.record_with(n, a, zero.clone(), Some("a(n) > 0".into()));
                pre.record_with(n, zero.clone(), b, Some("b(n) < 0".into()));
            }
            _ => pre.inconclusive(n, "recurrence coefficient undefined"),
        }
    }
    for n in n_lo..=n_hi {
        let detail = |what: &str| Some(format!("{what} at i={i}, n={n}"));
        let gv = match g.at(i, n) {
            Ok(v) => v,
            Err(_) => {
                for t in [&mut low, &mut up, &mut c2, &mut c3] {
                    t.inconclusive(n, "g(n) undefined");
                }
                continue;
            }
        };
        let approx = || Rat::from_float(gv.to_f64()).unwrap_or_default();
        match exprs.lower.specialize(i, n) {
            Ok(x) => low.record_sign(n, x.sign(), approx(), zero.clone(), detail("g(n) - a(n)/2")),
            Err(_) => low.inconclusive(n, "g(n) - a(n)/2 undefined"),
        }
        let ratio = s.get(n).expect("window checked") / s.get(n - 1).expect("window checked");
        let upper_sign = match gv.as_surd() {
            Some(sg) => -sign_of(sg.cmp_rat(&ratio)),
            None => ExtNum::rational(ratio.clone(), gv.r1.clone(), gv.r2.clone()).sub(&gv).sign(),
        };
        up.record_sign(n, upper_sign, ratio, approx(), detail("S_n/S_(n-1) - g(n)"));
        match exprs.cond_ii.specialize(i, n) {
            Ok(x) => c2.record_sign(n, x.sign(), Rat::from_float(x.to_f64()).unwrap_or_default(), zero.clone(), detail("condition (ii)")),
            Err(_) => c2.inconclusive(n, "condition (ii) undefined"),
        }
        match exprs.cond_iii.specialize(i, n) {
            Ok(x) => {
                let sg = x.sign();
                c3.record_sign(n, sg, Rat::from_float(x.to_f64()).unwrap_or_default(), zero.clone(), detail("h(g(n))"));
                if certified {
                    // the certified denominator is positive for n ≥ i+2
                    let cs = cond_iii_certificate_sign(i, n)?;
                    cross.record_sign(n, if cs == sg { 1 } else { -1 }, int(sg as i64), int(cs as i64), detail("sign agreement"));
                }
            }
            Err(_) => c3.inconclusive(n, "h(g(n)) undefined"),
        }
    }
    let window: Vec<Rat> = (n_lo - 2..=n_hi + 1).map(|n| s.get(n).expect("window checked")).collect();
    let rlc = seq::check_ratio_log_convex(&Seq::open(n_lo - 2, window));
    let tag = |r: CheckReport| r.param("i", i).window(n_lo, n_hi);
    let mut out = vec![
        tag(pre.finish("criterion-precondition", "exact rational evaluation")),
        tag(low.finish("criterion-i-lower", "biquadratic sign")),
        tag(up.finish("criterion-i-upper", "quadratic surd comparison")).note("verified on window"),
        tag(c2.finish("criterion-ii", "biquadratic sign")),
        tag(c3.finish("criterion-iii", "biquadratic sign")),
    ];
    if certified {
        out.push(tag(cross.finish("criterion-iii-certificate-agreement", "sign of G1 + D1*D2*G2")));
    }
    let mut rlc = tag(rlc);
    rlc.window = Some([n_lo, n_hi]);
    out.push(rlc);
    Ok(out)
}

/// The Boros–Moll instance for fixed `i` over `n ∈ i+2..=n_hi`.
pub fn sunzhao_boros_moll(t: &BMTable, i: i64, n_hi: i64) -> Result<Vec<CheckReport>> {
    if i < 1 {
        return Err(Error::Domain("criterion instance needs i ≥ 1".into()));
    }
    if n_hi + 1 > t.m_max() as i64 {
        return Err(Error::Domain(format!("table holds m ≤ {}, need {}", t.m_max(), n_hi + 1)));
    }
    let s = Seq::open(i, t.column(i, i, n_hi + 1));
    sunzhao_with(&RecurrenceSpec::boros_moll(), &GFunction::boros_moll(), bm_exprs(), &s, i, i + 2, n_hi, true)
}

/// Parallel over `i`, reports in `i` order.
pub fn sunzhao_sweep(t: &BMTable, i_lo: i64, i_hi: i64, n_span: i64) -> Result<Vec<CheckReport>> {
    let _ = bm_exprs();
    let per_i: Vec<Result<Vec<CheckReport>>> =
        (i_lo..=i_hi).into_par_iter().map(|i| sunzhao_boros_moll(t, i, i + n_span)).collect();
    let mut out = Vec::new();
    for r in per_i {
        out.extend(r?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Δ₁Δ₂ > 2i(i² + n − 1)

pub fn delta_product_bound(i: i64, n: i64) -> Result<CheckReport> {
    if i < 1 || n < i + 2 {
        return Err(Error::Domain(format!("need i ≥ 1, n ≥ i+2; got i={i}, n={n}")));
    }
    let pt = [("i", int(i)), ("n", int(n))];
    let r1 = delta1_sq().eval_at(&pt)?;
    let r2 = delta2_sq().eval_at(&pt)?;
    let rhs = int(2 * i) * &r1;
    let mut t = Tally::new();
    t.record_with(n, &r1 * &r2, &rhs * &rhs, Some("squared: D1^2 D2^2 vs (2i(i^2+n-1))^2".into()));
    Ok(t.finish("delta-product", "exact squared comparison").param("i", i))
}

/// The symbolic residual identity together with the pointwise check on
/// `1 ≤ i ≤ i_max`, `i+2 ≤ n ≤ i+2+n_span`.
pub fn delta_product_sweep(i_max: i64, n_span: i64) -> Result<CheckReport> {
    let (l, r) = identities::delta_product_residual();
    let mut t = Tally::new();
    for i in 1..=i_max {
        for n in i + 2..=i + 2 + n_span {
            let pt = [("i", int(i)), ("n", int(n))];
            let r1 = delta1_sq().eval_at(&pt)?;
            let r2 = delta2_sq().eval_at(&pt)?;
            let rhs = int(2 * i) * &r1;
            t.record_with(i * 10_000 + n, &r1 * &r2, &rhs * &rhs, Some(format!("i={i}, n={n}")));
        }
    }
    let mut rep = t.finish("delta-product", "exact squared comparison").param("i_max", i_max);
    if l != r {
        rep.verdict = Verdict::Violated;
        rep = rep.note("symbolic residual identity fails");
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// i = 0: reversed transposed Briggs

/// `δ₀(m)` from the data ratios `r₀(m) = d₀(m)/d₀(m−1)`.
pub fn delta0_data(t: &BMTable, m: i64) -> Rat {
    let r = |k: i64| t.d(0, k) / t.d(0, k - 1);
    let (r0, r1, r2) = (r(m), r(m + 1), r(m + 2));
    &r0 * &r0 - &r0 * &r1 - (&r1 * &r1 - &r1 * &r2)
}

/// `δ₀(m)` symbolic, closed form, and data agree and are negative; the
/// reversed Briggs inequality holds on `d₀(m−1..m+2)`; and
/// `δ₀ · d₀(m−1)² d₀(m)²` equals the Briggs difference.
pub fn transposed_briggs_i0(t: &BMTable, m_lo: i64, m_hi: i64) -> Result<Vec<CheckReport>> {
    if m_lo < 1 {
        return Err(Error::Domain("m ≥ 1 required".into()));
    }
    if m_hi + 2 > t.m_max() as i64 {
        return Err(Error::Domain(format!("table holds m ≤ {}, need {}", t.m_max(), m_hi + 2)));
    }
    let sym = identities::delta0_from_r0()?;
    let closed = identities::delta0_closed();
    let mut neg = Tally::new();
    let mut agree = Tally::new();
    for m in m_lo..=m_hi {
        let pt = [("m", int(m))];
        let s = sym.eval_at(&pt)?;
        let c = closed.eval_at(&pt)?;
        let d = delta0_data(t, m);
        let a = t.column(0, m - 1, m + 2);
        let (l, r) = seq::briggs_sides(&a);
        let scaled = &d * &a[0] * &a[0] * &a[1] * &a[1];
        let ok = s == c && d == c && scaled == &l - &r;
        agree.record_sign(m, if ok { 1 } else { -1 }, d, c.clone(), Some("data vs closed form".into()));
        neg.record_with(m, Rat::zero(), c, Some("0 > delta0(m)".into()));
    }
    let s = Seq::open(m_lo - 1, t.column(0, m_lo - 1, m_hi + 2));
    let mut rev = seq::check_briggs_reversed(&s);
    rev.window = Some([m_lo, m_hi]);
    Ok(vec![
        neg.finish("delta0-negative", "closed form").param("i", 0),
        agree.finish("delta0-agreement", "symbolic, closed-form and data values").param("i", 0),
        rev.param("i", 0),
    ])
}

// ---------------------------------------------------------------------------
// n-th root log-convexity from a seed inequality

/// Seed inequality `S_{N+1}^{1/(N+1)} / S_N^{1/N} < S_{N+2}^{1/(N+2)} / S_{N+1}^{1/(N+1)}`
/// by cross-powering, plus ratio-log-convexity from `N` on the window.
pub fn cgw_nthroot(s: &Seq, big_n: i64, budget: u64) -> Result<Vec<CheckReport>> {
    if big_n < 1 || s.first() > big_n || s.last() < big_n + 2 {
        return Err(Error::WindowTooShort(format!("seed at N={big_n}")));
    }
    let mut t = Tally::new();
    let (a0, a1, a2) = (s.get(big_n).unwrap(), s.get(big_n + 1).unwrap(), s.get(big_n + 2).unwrap());
    let (e0, e1, e2) = seq::nthroot_exponents(big_n);
    let detail = Some(format!("S_N^{e0} S_(N+2)^{e2} vs S_(N+1)^{e1}"));
    match seq::nthroot_compare(&a0, &a1, &a2, big_n, budget) {
        Some(o) => t.record_sign(big_n, sign_of(o), a0, a1, detail),
        None => t.inconclusive(big_n, "bit budget exceeded"),
    }
    let seed = t.finish("cgw-seed", "exact cross-powering").param("N", big_n);
    let tail: Vec<Rat> = (big_n..=s.last()).map(|n| s.get(n).unwrap()).collect();
    let rlc = seq::check_ratio_log_convex(&Seq::open(big_n, tail));
    Ok(vec![seed, rlc])
}

/// `𝔯(i)³ = d_i(i+2)³ / (d_i(i+1)³ d_i(i+3))`.
pub fn r_frak_cubed(t: &BMTable, i: i64) -> Rat {
    let (a, b, c) = (t.d(i, i + 1), t.d(i, i + 2), t.d(i, i + 3));
    &b * &b * &b / (&a * &a * &a * c)
}

/// `𝔯(i) < 1` for `i ∈ i_lo..=i_hi`, `i ≥ 1`.
pub fn r_frak_below_one(t: &BMTable, i_lo: i64, i_hi: i64) -> CheckReport {
    let mut tally = Tally::new();
    for i in i_lo.max(1)..=i_hi {
        tally.record_with(i, Rat::one(), r_frak_cubed(t, i), Some("1 > r(i)^3".into()));
    }
    tally.finish("r-frak-below-one", "exact cube comparison")
}

/// `𝔯(i) > 𝔯(i+1)` for `i ∈ i_lo..=i_hi`.
pub fn r_frak_decreasing(t: &BMTable, i_lo: i64, i_hi: i64) -> CheckReport {
    let mut tally = Tally::new();
    for i in i_lo..=i_hi {
        tally.record_with(i, r_frak_cubed(t, i), r_frak_cubed(t, i + 1), Some("r(i)^3 > r(i+1)^3".into()));
    }
    tally.finish("r-frak-decreasing", "exact cube comparison")
}

/// `{d_i(i+n)}` on `n ∈ 1..=n_max+2` with the given offset.
pub fn nthroot_window(t: &BMTable, i: i64, n_max: i64) -> Seq {
    Seq::open(1, t.column(i, i + 1, i + n_max + 2))
}

/// Log-convexity (`i ≥ 1`) or log-concavity (`i = 0`) of `{d_i(i+n)^{1/n}}`.
pub fn nthroot_check(t: &BMTable, i: i64, n_max: i64, budget: u64) -> CheckReport {
    let s = nthroot_window(t, i, n_max);
    let r = if i == 0 {
        seq::check_nthroot_log_concave(&s, budget)
    } else {
        seq::check_nthroot_log_convex(&s, budget)
    };
    r.param("i", i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::bounds::ratio_lower_L;
    use num_traits::Signed;

    #[test]
    fn recurrence_example() {
        let rec = RecurrenceSpec::boros_moll();
        assert_eq!(rec.a_at(1, 3).unwrap(), rat(47, 12));
        assert_eq!(rec.b_at(1, 3).unwrap(), rat(-63, 16));
        let t = BMTable::new(6);
        assert_eq!(rec.next(1, 3, &t.d(1, 2), &t.d(1, 1)).unwrap(), rat(43, 4));
        for m in 3..=6 {
            for i in 1..m - 1 {
                assert_eq!(rec.next(i, m, &t.d(i, m - 1), &t.d(i, m - 2)).unwrap(), t.d(i, m));
            }
        }
    }

    #[test]
    fn g_matches_ratio_lower_bound() {
        for i in 1..8 {
            for n in i + 2..i + 12 {
                let g = g_of_n(n, i).unwrap();
                let l = ratio_lower_L(n - 1, i).unwrap();
                assert_eq!(g.base, l.base);
                assert_eq!(g.coeff.is_positive(), l.coeff.is_positive());
                assert_eq!(&g.coeff * &g.coeff * &g.radicand, &l.coeff * &l.coeff * &l.radicand);
            }
        }
    }

    #[test]
    fn lower_part_example() {
        let lower = &bm_exprs().lower;
        for (i, n) in [(1, 3), (2, 5), (4, 9)] {
            let x = lower.specialize(i, n).unwrap();
            assert_eq!(x.sign(), 1);
        }
    }

    #[test]
    fn theorem41_on_transposed_and_geometric() {
        let t = BMTable::new(82);
        let s = Seq::open(1, t.column(1, 1, 80));
        let o = theorem41_check(&s, Thm41Mode::LogConcave).unwrap();
        assert!(o.asserted && !o.falsified);
        assert_eq!(o.conclusion.verdict, Verdict::HoldsStrictly);
        assert_eq!(o.cn_route.verdict, Verdict::HoldsStrictly);
        assert_eq!(o.report().verdict, Verdict::HoldsStrictly);

        let geo = Seq::open(0, (0..10).map(|k| rat(3, 1).pow(k)).collect());
        let o = theorem41_check(&geo, Thm41Mode::LogConcave).unwrap();
        assert!(!o.asserted && !o.falsified);
        assert_eq!(o.hypotheses[0].verdict, Verdict::HoldsWeakly);
        assert_eq!(o.report().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn theorem41_two_log_convex_path() {
        let s = Seq::open(0, (0..9).map(|n: i64| Rat::from_integer(num_bigint::BigInt::from(2).pow((n * n * n) as u32))).collect());
        let o = theorem41_check(&s, Thm41Mode::TwoLogConvex).unwrap();
        assert!(o.asserted, "{:?}", o.hypotheses);
        assert_eq!(o.conclusion.verdict, Verdict::HoldsStrictly);
        assert_eq!(o.cn_route.verdict, Verdict::HoldsStrictly);
        assert!(theorem41_check(&Seq::from_ints(0, &[1, 2, 3]), Thm41Mode::LogConcave).is_err());
    }

    #[test]
    fn criterion_small_sweep() {
        let t = BMTable::new(40);
        for i in 1..=4 {
            for r in sunzhao_boros_moll(&t, i, i + 20).unwrap() {
                assert_eq!(r.verdict, Verdict::HoldsStrictly, "{r:?}");
            }
        }
        // generic entry point on the same data
        let s = Seq::open(2, t.column(2, 2, 30));
        let rs = sunzhao_conditions(&RecurrenceSpec::boros_moll(), &GFunction::boros_moll(), &s, 2, 4, 28).unwrap();
        assert!(rs.iter().all(|r| r.verdict == Verdict::HoldsStrictly));
    }

    #[test]
    fn delta_product_examples() {
        let r = delta_product_bound(1, 3).unwrap();
        assert_eq!(r.witnesses.len(), 0);
        assert_eq!(r.verdict, Verdict::HoldsStrictly);
        assert_eq!(delta_product_sweep(5, 10).unwrap().verdict, Verdict::HoldsStrictly);
    }

    #[test]
    fn i0_reversal() {
        let t = BMTable::new(40);
        assert_eq!(delta0_data(&t, 1), rat(-11, 48));
        for r in transposed_briggs_i0(&t, 1, 38).unwrap() {
            assert_eq!(r.verdict, Verdict::HoldsStrictly, "{r:?}");
        }
    }

    #[test]
    fn r_frak() {
        let t = BMTable::new(50);
        let r1 = r_frak_cubed(&t, 1);
        assert_eq!(r1, rat(43 * 43 * 43 * 32, 15 * 15 * 15 * 885));
        assert!(r1 < Rat::one());
        assert!(r_frak_cubed(&t, 0) > Rat::one());
        assert_eq!(r_frak_below_one(&t, 1, 40).verdict, Verdict::HoldsStrictly);
        assert_eq!(r_frak_decreasing(&t, 0, 40).verdict, Verdict::HoldsStrictly);
        let s = nthroot_window(&t, 1, 10);
        let rs = cgw_nthroot(&s, 1, seq::DEFAULT_BIT_BUDGET).unwrap();
        assert!(rs.iter().all(|r| r.verdict == Verdict::HoldsStrictly));
        let s0 = nthroot_window(&t, 0, 10);
        assert_eq!(cgw_nthroot(&s0, 1, seq::DEFAULT_BIT_BUDGET).unwrap()[0].verdict, Verdict::Violated);
        assert_eq!(nthroot_check(&t, 0, 10, seq::DEFAULT_BIT_BUDGET).verdict, Verdict::HoldsStrictly);
        assert_eq!(nthroot_check(&t, 3, 10, seq::DEFAULT_BIT_BUDGET).verdict, Verdict::HoldsStrictly);
    }
}
