//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Tolerances are pinned: every comparison is exact and the allowed number
//! of violations and inconclusive points is zero. The only numeric
//! tolerance is the runtime budget of the value-agreement sweep.

use std::time::{Duration, Instant};

use bm_core::algebra::rat::Rat;
use bm_core::boros_moll::{bm_recurrence_i, bm_recurrence_m, BMTable};
use bm_core::bounds::{check_sandwich, check_transposed_lower, BoundFamily};
use bm_core::certificates::{self, GridBox, METHOD_COEFFICIENTS, METHOD_GRID};
use bm_core::criteria;
use bm_core::report::{CheckReport, Verdict};
use bm_core::seq::{self, Seq};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const VALUE_SWEEP_BUDGET: Duration = Duration::from_secs(60);
const GRID_BOX: GridBox = GridBox { base: 60, dep: 60 };
const ELEM_SYM_SEED: u64 = 0x5eed_b0b0;
const ELEM_SYM_TRIALS: usize = 1000;

type Outcome = Result<String, String>;

fn strict(reports: &[CheckReport], what: &str) -> Outcome {
    let mut checked = 0;
    for r in reports {
        checked += r.checked;
        if r.verdict != Verdict::HoldsStrictly {
            return Err(format!(
                "{what}: {} {} params={:?} witnesses={:?} note={:?}",
                r.property, r.verdict, r.params, r.witnesses.first(), r.note
            ));
        }
    }
    Ok(format!("{checked} exact comparisons"))
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, j| acc * (n - j) / (j + 1))
}

/// `4^m d_i(m) = Σ_{j=i}^{m} 2^j C(2m−2j, m−j) C(m+j, m) C(j, i)`, with
/// binomials from the multiplicative formula.
fn oracle_scaled(i: i64, m: i64) -> BigInt {
    (i..=m)
        .map(|j| (BigInt::one() << j as usize) * binom(2 * m - 2 * j, m - j) * binom(m + j, m) * binom(j, i))
        .sum()
}

fn value_agreement() -> Outcome {
    let start = Instant::now();
    let t = BMTable::new(200);
    let bad: Vec<String> = (0..=200i64)
        .into_par_iter()
        .flat_map_iter(|m| {
            let t = &t;
            (0..=m).filter_map(move |i| {
                let v = t.scaled(i, m);
                if m >= 2 && i <= m - 1 && bm_recurrence_m(i, m, t).ok()?.scaled != v {
                    return Some(format!("recurrence in m differs at ({i},{m})"));
                }
                if m >= 1 && bm_recurrence_i(i, m - 1, t).ok()?.scaled != v {
                    return Some(format!("recurrence in i differs at ({i},{m})"));
                }
                None
            })
        })
        .collect();
    let el = start.elapsed();
    if !bad.is_empty() {
        return Err(bad[..bad.len().min(3)].join("; "));
    }
    if el > VALUE_SWEEP_BUDGET {
        return Err(format!("took {el:.1?}, budget {VALUE_SWEEP_BUDGET:?}"));
    }
    let off: Vec<(i64, i64)> = (0..=200i64)
        .into_par_iter()
        .flat_map_iter(|m| (0..=m).map(move |i| (i, m)))
        .filter(|&(i, m)| t.scaled(i, m) != oracle_scaled(i, m))
        .collect();
    if let Some((i, m)) = off.first() {
        return Err(format!("independent oracle differs at ({i},{m})"));
    }
    Ok(format!("20301 values, closed form = m-recurrence = i-recurrence in {el:.1?}; independent oracle agrees"))
}

fn row_briggs(t: &BMTable) -> Outcome {
    let reports: Vec<CheckReport> = (2..=200i64)
        .into_par_iter()
        .map(|m| {
            let s = Seq::complete(0, t.row(m));
            seq::check_briggs_at(&s, &(1..m).collect::<Vec<_>>())
        })
        .collect();
    strict(&reports, "row briggs")
}

fn normalized_briggs(t: &BMTable) -> Outcome {
    let reports: Vec<CheckReport> = (0..=10u32)
        .into_par_iter()
        .flat_map_iter(|k| {
            (2..=100i64).map(move |m| {
                let s = Seq::complete(0, (0..=m).map(|i| t.normalized(i, m, k)).collect());
                seq::check_briggs_at(&s, &(1..m).collect::<Vec<_>>())
            })
        })
        .collect();
    strict(&reports, "normalized briggs")
}

fn transposed_briggs(t: &BMTable) -> Outcome {
    let mut reports: Vec<CheckReport> = (1..=50i64)
        .into_par_iter()
        .map(|i| {
            let s = Seq::open(i, t.column(i, i, i + 152));
            seq::check_briggs_at(&s, &(i + 1..=i + 150).collect::<Vec<_>>())
        })
        .collect();
    reports.extend(criteria::transposed_briggs_i0(t, 1, 200).map_err(|e| e.to_string())?);
    strict(&reports, "transposed briggs").map(|s| format!("{s}; i=0 reversed and delta0 exact on m=1..200"))
}

fn bound_sandwiches(t: &BMTable) -> Outcome {
    let mut reports = check_sandwich(t, 2, 150, BoundFamily::Sandwich).map_err(|e| e.to_string())?;
    for k in 0..=10 {
        reports.extend(check_sandwich(t, 2, 100, BoundFamily::SandwichK(k)).map_err(|e| e.to_string())?);
    }
    reports.extend(check_sandwich(t, 2, 120, BoundFamily::RatioLower).map_err(|e| e.to_string())?);
    let r: Result<Vec<_>, _> = (0..=40i64).into_par_iter().map(|i| check_transposed_lower(t, i, i + 120)).collect();
    reports.extend(r.map_err(|e| e.to_string())?);
    strict(&reports, "bounds")
}

fn ratio_log_convexity(t: &BMTable) -> Outcome {
    let reports = criteria::sunzhao_sweep(t, 1, 40, 80).map_err(|e| e.to_string())?;
    let rlc = reports.iter().filter(|r| r.property == "ratio-log-convex").count();
    let cross = reports.iter().filter(|r| r.property == "criterion-iii-certificate-agreement").count();
    if rlc != 40 || cross != 40 {
        return Err(format!("expected 40 data and 40 agreement reports, got {rlc}, {cross}"));
    }
    strict(&reports, "criterion").map(|s| format!("{s}; conditions (i)-(iii), data, certificate signs agree"))
}

fn nthroot(t: &BMTable) -> Outcome {
    let lhs = BigInt::from(43).pow(3) * 32;
    let rhs = BigInt::from(15).pow(3) * 885;
    if !(lhs < rhs && lhs == BigInt::from(2_544_224) && rhs == BigInt::from(2_986_875)) {
        return Err("43^3*32 < 15^3*885 failed".into());
    }
    let r1 = criteria::r_frak_cubed(t, 1);
    if r1 != Rat::new(BigInt::from(43).pow(3) * 32, BigInt::from(15).pow(3) * 885) {
        return Err(format!("r(1)^3 = {r1} from data"));
    }
    let mut reports: Vec<CheckReport> = (1..=20i64)
        .into_par_iter()
        .map(|i| criteria::nthroot_check(t, i, 40, seq::DEFAULT_BIT_BUDGET))
        .collect();
    reports.push(criteria::r_frak_decreasing(t, 0, 40));
    reports.push(criteria::r_frak_below_one(t, 1, 40));
    reports.push(criteria::nthroot_check(t, 0, 40, seq::DEFAULT_BIT_BUDGET));
    if criteria::r_frak_cubed(t, 0) <= Rat::one() {
        return Err("r(0) should exceed 1".into());
    }
    strict(&reports, "nth root").map(|s| format!("{s}; i=0 log-concave"))
}

fn certificates_all() -> Outcome {
    let reports = certificates::run_all(GRID_BOX).map_err(|e| e.to_string())?;
    let method = |name: &str| -> String {
        reports
            .iter()
            .find(|r| matches!(r.params.get("name"), Some(bm_core::report::Param::Text(n)) if n == name))
            .map(|r| r.method.clone())
            .unwrap_or_default()
    };
    for n in ["A", "B1", "B2", "C", "D", "H1", "H2", "K1", "K2"] {
        let m = method(&format!("{n}-positive"));
        if m != METHOD_COEFFICIENTS {
            return Err(format!("{n}: method {m}"));
        }
    }
    for n in ["F1hat", "F2hat"] {
        let m = method(&format!("{n}-positive"));
        if m != "coefficient-inspection" && m != METHOD_COEFFICIENTS {
            return Err(format!("{n}: method {m}"));
        }
    }
    let mut fallback = Vec::new();
    for n in ["F1-positive", "F2-positive", "G1G2-composite-positive"] {
        let m = method(n);
        if m != METHOD_COEFFICIENTS && m != METHOD_GRID {
            return Err(format!("{n}: method {m}"));
        }
        fallback.push(format!("{n}={m}"));
    }
    let diag = certificates::diagonal::analyse().map_err(|e| e.to_string())?;
    if diag.s.len() != 19 || !diag.all_positive || !diag.denominator_matches {
        return Err(format!("diagonal ratio: {diag:?}"));
    }
    strict(&reports, "certificates").map(|s| format!("{} certificates, {s}; {}", reports.len(), fallback.join(", ")))
}

fn elem_sym_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(ELEM_SYM_SEED);
    let mut trials = 0;
    let mut checked = 0;
    for _ in 0..ELEM_SYM_TRIALS {
        let n = rng.gen_range(1..=8);
        let xs: Vec<Rat> = (0..n)
            .map(|_| Rat::new(BigInt::from(rng.gen_range(1..=1000)), BigInt::from(rng.gen_range(1..=100))))
            .collect();
        let e = seq::elem_sym(&xs);
        let det = seq::check_toeplitz3(&e);
        let briggs = seq::check_briggs(&e);
        for r in [&det, &briggs] {
            if r.checked > 0 && r.verdict != Verdict::HoldsStrictly {
                let xs: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                return Err(format!("counterexample to {} for X = {{{}}}", r.property, xs.join(", ")));
            }
            checked += r.checked;
        }
        trials += 1;
    }
    Ok(format!("{trials} multisets (seed {ELEM_SYM_SEED:#x}), {checked} exact comparisons, no counterexample"))
}

fn main() {
    let t = BMTable::new(202);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("value agreement 0<=i<=m<=200", Box::new(value_agreement)),
        ("row Briggs 2<=m<=200", Box::new(|| row_briggs(&t))),
        ("normalized Briggs k<=10, m<=100", Box::new(|| normalized_briggs(&t))),
        ("transposed Briggs i<=50 and i=0 reversal", Box::new(|| transposed_briggs(&t))),
        ("bound sandwiches", Box::new(|| bound_sandwiches(&t))),
        ("ratio-log-convexity i<=40 with criterion conditions", Box::new(|| ratio_log_convexity(&t))),
        ("n-th root log-convexity i<=20, n<=40", Box::new(|| nthroot(&t))),
        ("symbolic certificates", Box::new(certificates_all)),
        ("elementary symmetric oracle", Box::new(elem_sym_oracle)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{:.1?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
