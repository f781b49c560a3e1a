//! Subcommand arguments and their implementations.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use bm_core::algebra::rat::{self, Rat};
use bm_core::boros_moll::{bm_recurrence_i, bm_recurrence_m, BMTable};
use bm_core::bounds::{e_eval, ratio_lower_eval, sandwich_eval, transposed_lower_eval, BoundEval};
use bm_core::certificates::{self, diagonal, GridBox, DEFAULT_GRID_BOX};
use bm_core::criteria::{self, Thm41Mode};
use bm_core::report::{CheckReport, Param, Tally, Verdict};
use bm_core::seq::{self, Seq};
use clap::{Args, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::emit::{Record, ValueRow};
use crate::{CliError, Output, Settings, EXIT_COUNTEREXAMPLE};

type Res<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(CliError::Usage(msg.into()))
}

fn table(m_max: i64) -> Res<BMTable> {
    if !(0..=100_000).contains(&m_max) {
        return usage(format!("table size {m_max} out of range"));
    }
    Ok(BMTable::new(m_max as u32))
}

/// `--i` alone, or `--i-min ..= --i-max`.
#[derive(Debug, Clone, Args)]
pub struct IRange {
    /// A single index i.
    #[arg(long, conflicts_with_all = ["i_min", "i_max"])]
    i: Option<i64>,
    /// Lower end of an i range.
    #[arg(long, requires = "i_max")]
    i_min: Option<i64>,
    /// Upper end of an i range.
    #[arg(long)]
    i_max: Option<i64>,
}

impl IRange {
    fn resolve(&self, default_min: i64) -> Option<RangeInclusive<i64>> {
        match (self.i, self.i_max) {
            (Some(i), _) => Some(i..=i),
            (None, Some(hi)) => Some(self.i_min.unwrap_or(default_min)..=hi),
            (None, None) => None,
        }
    }

    fn required(&self, default_min: i64, min_allowed: i64) -> Res<RangeInclusive<i64>> {
        let r = self.resolve(default_min).ok_or_else(|| CliError::Usage("give --i or --i-max".into()))?;
        if *r.start() < min_allowed || r.is_empty() {
            return usage(format!("i range {}..={} invalid (need i ≥ {min_allowed})", r.start(), r.end()));
        }
        Ok(r)
    }
}

// ---------------------------------------------------------------------------
// compute

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ValueMethod {
    /// Closed-form sum.
    Closed,
    /// Three-term recurrence in m (initial values where it does not apply).
    RecM,
    /// Recurrence in i (initial values where it does not apply).
    RecI,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Largest m; emits the triangle, or the column of --i.
    #[arg(long)]
    m_max: Option<i64>,
    /// Fix i.
    #[arg(long)]
    i: Option<i64>,
    /// Fix m (a row, or one value with --i).
    #[arg(long, conflicts_with = "m_max")]
    m: Option<i64>,
    /// Divide by (i+k)!.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "closed")]
    method: ValueMethod,
}

pub fn compute(a: &ComputeArgs) -> Res<Output> {
    let pairs: Vec<(i64, i64)> = match (a.i, a.m, a.m_max) {
        (Some(i), Some(m), _) => vec![(i, m)],
        (None, Some(m), _) => (0..=m).map(|i| (i, m)).collect(),
        (Some(i), None, Some(mx)) => (i..=mx).map(|m| (i, m)).collect(),
        (None, None, Some(mx)) => (0..=mx).flat_map(|m| (0..=m).map(move |i| (i, m))).collect(),
        _ => return usage("give --m-max or --m"),
    };
    if pairs.iter().any(|&(i, m)| i < 0 || i > m) {
        return usage("need 0 ≤ i ≤ m");
    }
    let m_top = pairs.iter().map(|p| p.1).max().unwrap_or(0);
    let t = table(m_top)?;
    let rows: Res<Vec<Record>> = pairs
        .par_iter()
        .map(|&(i, m)| {
            let closed = t.d(i, m);
            let (value, method) = match a.method {
                ValueMethod::Closed => (closed.clone(), "closed-form"),
                ValueMethod::RecM if m >= 2 && i < m => (bm_recurrence_m(i, m, &t)?.to_rat(), "recurrence-m"),
                ValueMethod::RecI if m >= 1 && i < m => (bm_recurrence_i(i, m - 1, &t)?.to_rat(), "recurrence-i"),
                _ => (closed.clone(), "initial-value"),
            };
            let value = match a.k {
                Some(k) => value * t.normalized(i, m, k) / closed,
                None => value,
            };
            Ok(Record::Value(ValueRow { i, m, k: a.k, method, value }))
        })
        .collect();
    Ok(rows?.into())
}

// ---------------------------------------------------------------------------
// verify

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Briggs,
    BriggsReversed,
    #[value(alias = "klogconcave")]
    KLogConcave,
    LogConcave,
    LogConvex,
    #[value(alias = "ratiologconvex")]
    RatioLogConvex,
    #[value(alias = "ratiologconcave")]
    RatioLogConcave,
    Nthroot,
    #[value(alias = "turan3det")]
    Toeplitz,
    /// Closed form against both recurrences, row by row.
    Agreement,
    /// Exploratory oracle on random elementary symmetric sequences.
    ElemSym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `{d_i(m)}` over i for fixed m.
    Row,
    /// `{d_i(m)/(i+k)!}` over i for fixed m.
    Normalized,
    /// `{d_i(m)}` over m ≥ i for fixed i.
    Transposed,
    /// `{d_i(i+j)}` over i for fixed j.
    Diag,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Row => "row",
            Family::Normalized => "normalized",
            Family::Transposed => "transposed",
            Family::Diag => "diag",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    property: Property,
    #[arg(long, value_enum, default_value = "row")]
    family: Family,
    #[command(flatten)]
    range: IRange,
    /// Smallest row (row, normalized, agreement).
    #[arg(long)]
    m_min: Option<i64>,
    /// Largest m (rows, or the end of each transposed window).
    #[arg(long, default_value_t = 50)]
    m_max: i64,
    /// Normalization shift for the normalized family.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Iteration depth for k-log-concavity.
    #[arg(long, default_value_t = 1)]
    depth: u32,
    /// Diagonal offset for the diag family.
    #[arg(long, default_value_t = 1)]
    j: i64,
    /// Window length n for the n-th root check.
    #[arg(long, default_value_t = 40)]
    n_max: i64,
    /// Elementary-symmetric trials.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Elementary-symmetric RNG seed.
    #[arg(long, default_value_t = 0x5eed_b0b0)]
    seed: u64,
    /// Largest multiset size for the elementary-symmetric oracle.
    #[arg(long, default_value_t = 8)]
    max_size: usize,
}

struct Instance {
    params: Vec<(&'static str, Param)>,
    seq: Seq,
    interior: Option<Vec<i64>>,
}

fn instances(a: &VerifyArgs, t: &BMTable) -> Res<Vec<Instance>> {
    let fam = ("family", Param::from(a.family.name()));
    let rows = || -> Res<RangeInclusive<i64>> {
        let lo = a.m_min.unwrap_or(2);
        if lo < 0 || lo > a.m_max {
            return usage("need 0 ≤ --m-min ≤ --m-max");
        }
        Ok(lo..=a.m_max)
    };
    Ok(match a.family {
        Family::Row => rows()?
            .map(|m| Instance {
                params: vec![fam.clone(), ("m", m.into())],
                seq: Seq::complete(0, t.row(m)),
                interior: Some((1..m).collect()),
            })
            .collect(),
        Family::Normalized => rows()?
            .map(|m| Instance {
                params: vec![fam.clone(), ("m", m.into()), ("k", (a.k as i64).into())],
                seq: Seq::complete(0, (0..=m).map(|i| t.normalized(i, m, a.k)).collect()),
                interior: Some((1..m).collect()),
            })
            .collect(),
        Family::Transposed => {
            let r = a.range.required(0, 0)?;
            if a.m_max < r.end() + 4 {
                return usage("--m-max must exceed the largest i by at least 4");
            }
            r.map(|i| Instance {
                params: vec![fam.clone(), ("i", i.into())],
                seq: Seq::open(i, t.column(i, i, a.m_max)),
                interior: None,
            })
            .collect()
        }
        Family::Diag => {
            if a.j < 0 {
                return usage("--j must be nonnegative");
            }
            vec![Instance {
                params: vec![fam, ("j", a.j.into())],
                seq: Seq::open(0, (0..=a.m_max).map(|i| t.d(i, i + a.j)).collect()),
                interior: None,
            }]
        }
    })
}

fn apply(p: Property, inst: &Instance, depth: u32) -> CheckReport {
    let s = &inst.seq;
    let mut r = match p {
        Property::Briggs => match &inst.interior {
            Some(ks) => seq::check_briggs_at(s, ks),
            None => seq::check_briggs(s),
        },
        Property::BriggsReversed => seq::check_briggs_reversed(s),
        Property::KLogConcave => seq::check_k_log_concave(s, depth),
        Property::LogConcave => seq::check_log_concave(s),
        Property::LogConvex => seq::check_log_convex(s),
        Property::RatioLogConvex => seq::check_ratio_log_convex(s),
        Property::RatioLogConcave => seq::check_ratio_log_concave(s),
        Property::Toeplitz => seq::check_toeplitz3(s),
        Property::Nthroot | Property::Agreement | Property::ElemSym => unreachable!("handled separately"),
    };
    for (k, v) in &inst.params {
        r = r.param(k, v.clone());
    }
    r
}

pub fn verify(a: &VerifyArgs, s: &Settings) -> Res<Output> {
    if a.m_max < 0 {
        return usage("--m-max must be nonnegative");
    }
    match a.property {
        Property::ElemSym => return elem_sym(a),
        Property::Agreement => return agreement(a),
        Property::Nthroot => return nthroot(a, s),
        _ => {}
    }
    let extra = match a.family {
        Family::Diag => a.j.max(0),
        _ => 0,
    };
    let t = table(a.m_max + extra)?;
    let insts = instances(a, &t)?;
    let reports: Vec<Record> = insts.par_iter().map(|inst| Record::Report(apply(a.property, inst, a.depth))).collect();
    Ok(reports.into())
}

fn nthroot(a: &VerifyArgs, s: &Settings) -> Res<Output> {
    if a.family != Family::Transposed {
        return usage("--property nthroot needs --family transposed");
    }
    if a.n_max < 1 {
        return usage("--n-max must be positive");
    }
    let r = a.range.required(0, 0)?;
    let t = table(r.end() + a.n_max + 2)?;
    let out: Vec<Record> = r
        .into_par_iter()
        .map(|i| {
            let rep = seq::check_nthroot_log_convex(&criteria::nthroot_window(&t, i, a.n_max), s.bit_budget)
                .param("family", "transposed")
                .param("i", i);
            Record::Report(rep)
        })
        .collect();
    Ok(out.into())
}

fn agreement(a: &VerifyArgs) -> Res<Output> {
    let lo = a.m_min.unwrap_or(0);
    if lo < 0 || lo > a.m_max {
        return usage("need 0 ≤ --m-min ≤ --m-max");
    }
    let t = table(a.m_max)?;
    let rows: Res<Vec<Record>> = (lo..=a.m_max)
        .into_par_iter()
        .map(|m| {
            let mut tally = Tally::new();
            for i in 0..=m {
                let closed = t.value(i, m);
                let mut routes = Vec::new();
                if m >= 2 && i < m {
                    routes.push(("recurrence in m", bm_recurrence_m(i, m, &t)?));
                }
                if m >= 1 && i < m {
                    routes.push(("recurrence in i", bm_recurrence_i(i, m - 1, &t)?));
                }
                for (name, v) in routes {
                    let sign = if v == closed { 1 } else { -1 };
                    tally.record_sign(i, sign, closed.to_rat(), v.to_rat(), Some(format!("closed form vs {name}")));
                }
                if m < 1 || i == m {
                    tally.record_sign(i, 1, closed.to_rat(), closed.to_rat(), Some("initial value".into()));
                }
            }
            Ok(Record::Report(
                tally.finish("value-agreement", "closed form against both recurrences").param("m", m),
            ))
        })
        .collect();
    Ok(rows?.into())
}

fn elem_sym(a: &VerifyArgs) -> Res<Output> {
    if a.max_size < 1 {
        return usage("--max-size must be positive");
    }
    let mut rng = StdRng::seed_from_u64(a.seed);
    let sets: Vec<Vec<Rat>> = (0..a.trials)
        .map(|_| {
            let n = rng.gen_range(1..=a.max_size);
            (0..n).map(|_| rat::rat(rng.gen_range(1..=1000), rng.gen_range(1..=100))).collect()
        })
        .collect();
    let checked: Vec<[CheckReport; 2]> = sets
        .par_iter()
        .map(|xs| {
            let e = seq::elem_sym(xs);
            [seq::check_toeplitz3(&e), seq::check_briggs(&e)]
        })
        .collect();
    let mut found = false;
    let mut out = Vec::new();
    for (slot, property) in ["elem-sym-toeplitz-det3", "elem-sym-briggs"].into_iter().enumerate() {
        let mut r = CheckReport::new(property, "exact comparison on random multisets", Verdict::HoldsStrictly)
            .param("trials", a.trials as i64)
            .param("seed", format!("{:#x}", a.seed))
            .param("max-size", a.max_size as i64)
            .note("exploratory");
        for (xs, reps) in sets.iter().zip(&checked) {
            let c = &reps[slot];
            if c.checked == 0 {
                continue;
            }
            r.checked += c.checked;
            if c.verdict != Verdict::HoldsStrictly && r.verdict == Verdict::HoldsStrictly {
                found = true;
                r.verdict = if c.verdict == Verdict::Inconclusive { Verdict::Inconclusive } else { Verdict::Violated };
                r.witnesses = c.witnesses.clone();
                let xs: Vec<String> = xs.iter().map(rat::to_string).collect();
                r = r.note(format!("counterexample X = {{{}}}", xs.join(", ")));
            }
        }
        out.push(Record::Report(r));
    }
    Ok(Output { records: out, forced_exit: found.then_some(EXIT_COUNTEREXAMPLE) })
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Lower bound on the row ratio u_i(m).
    CgUpper,
    /// Upper bound on the row ratio u_i(m).
    ZhaoLower,
    /// Surd lower bound on d_i(m+1)/d_i(m).
    #[value(name = "L", alias = "l")]
    L,
    /// Lower bound on the transposed ratio.
    #[value(name = "R", alias = "r")]
    R,
    /// Both row-ratio bounds.
    Sandwich,
    /// Positivity of the Briggs lower estimate.
    #[value(name = "E", alias = "e")]
    E,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[command(flatten)]
    range: IRange,
    #[arg(long, default_value_t = 2)]
    m_min: i64,
    #[arg(long, default_value_t = 50)]
    m_max: i64,
    /// Use the (i+k)!-normalized bounds (sandwich, cg-upper, zhao-lower, E).
    #[arg(long)]
    k: Option<i64>,
}

pub fn bounds(a: &BoundsArgs) -> Res<Output> {
    if a.m_min < 1 || a.m_min > a.m_max {
        return usage("need 1 ≤ --m-min ≤ --m-max");
    }
    if a.k.is_some() && matches!(a.which, Which::L | Which::R) {
        return usage("--k applies to sandwich, cg-upper, zhao-lower and E");
    }
    let irange = a.range.resolve(if a.which == Which::R { 0 } else { 1 });
    let pairs: Vec<(i64, i64)> = (a.m_min..=a.m_max)
        .flat_map(|m| {
            let (lo, hi) = if a.which == Which::R { (0, m - 1) } else { (1, m - 1) };
            let r = irange.clone();
            (lo..=hi).filter(move |i| r.as_ref().map_or(true, |r| r.contains(i))).map(move |i| (i, m))
        })
        .collect();
    let t = table(a.m_max + 1)?;
    let evals: Res<Vec<Record>> = pairs
        .par_iter()
        .map(|&(i, m)| {
            let e: BoundEval = match a.which {
                Which::Sandwich => sandwich_eval(&t, i, m, a.k)?,
                Which::CgUpper => sandwich_eval(&t, i, m, a.k)?.one_side("cg-upper", true),
                Which::ZhaoLower => sandwich_eval(&t, i, m, a.k)?.one_side("zhao-lower", false),
                Which::L => ratio_lower_eval(&t, i, m)?,
                Which::R => transposed_lower_eval(&t, i, m)?,
                Which::E => e_eval(i, m, a.k)?,
            };
            Ok(Record::Bound(e))
        })
        .collect();
    Ok(evals?.into())
}

// ---------------------------------------------------------------------------
// criteria

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionKind {
    /// Log-concavity or 2-log-convexity plus ratio-log-convexity implies Briggs.
    Thm41,
    /// Pointwise conditions of the ratio-log-convexity criterion.
    Sunzhao,
    /// Lower bound on the product of the two radicals.
    Delta12,
    /// Reversed transposed Briggs at i = 0.
    I0,
    /// Seed inequality for n-th root log-convexity.
    Cgw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    #[value(alias = "logconcave")]
    LogConcave,
    #[value(alias = "twologconvex")]
    TwoLogConvex,
}

#[derive(Debug, Args)]
pub struct CriteriaArgs {
    #[arg(long, value_enum)]
    which: CriterionKind,
    #[command(flatten)]
    range: IRange,
    /// Largest n (absolute index; for cgw the window length).
    #[arg(long, default_value_t = 80)]
    n_max: i64,
    /// Hypothesis used by thm41.
    #[arg(long, value_enum, default_value = "log-concave")]
    mode: Mode,
}

/// Folds per-point reports into one report per `i`.
fn fold(property: &str, i: i64, parts: Vec<CheckReport>) -> CheckReport {
    let mut r = CheckReport::new(property, parts.first().map_or("", |p| p.method.as_str()), Verdict::HoldsStrictly).param("i", i);
    if parts.is_empty() {
        r.verdict = Verdict::Inconclusive;
        return r.note("no admissible n");
    }
    for p in parts {
        r.verdict = r.verdict.combine(p.verdict);
        r.checked += p.checked;
        if let Some([lo, hi]) = p.window {
            r.window = Some(r.window.map_or([lo, hi], |[a, b]| [a.min(lo), b.max(hi)]));
        }
        r.witnesses.extend(p.witnesses);
    }
    r.witnesses.truncate(8);
    r
}

pub fn criteria(a: &CriteriaArgs, s: &Settings) -> Res<Output> {
    if a.n_max < 1 {
        return usage("--n-max must be positive");
    }
    let reports: Vec<CheckReport> = match a.which {
        CriterionKind::Thm41 => {
            let r = a.range.required(0, 0)?;
            let t = table(a.n_max)?;
            let mode = match a.mode {
                Mode::LogConcave => Thm41Mode::LogConcave,
                Mode::TwoLogConvex => Thm41Mode::TwoLogConvex,
            };
            let out: Res<Vec<_>> = r
                .into_par_iter()
                .map(|i| {
                    let s = Seq::open(i, t.column(i, i, a.n_max));
                    Ok(criteria::theorem41_check(&s, mode)?.report().param("family", "transposed").param("i", i))
                })
                .collect();
            out?
        }
        CriterionKind::Sunzhao => {
            let r = a.range.required(1, 1)?;
            let t = table(a.n_max + 1)?;
            let out: Res<Vec<Vec<CheckReport>>> =
                r.into_par_iter().map(|i| Ok(criteria::sunzhao_boros_moll(&t, i, a.n_max)?)).collect();
            out?.into_iter().flatten().collect()
        }
        CriterionKind::Delta12 => {
            let r = a.range.required(1, 1)?;
            let out: Res<Vec<CheckReport>> = r
                .into_par_iter()
                .map(|i| {
                    let parts = (i + 2..=a.n_max).map(|n| criteria::delta_product_bound(i, n)).collect::<Result<Vec<_>, _>>()?;
                    Ok(fold("delta-product", i, parts))
                })
                .collect();
            out?
        }
        CriterionKind::I0 => {
            let t = table(a.n_max + 2)?;
            criteria::transposed_briggs_i0(&t, 1, a.n_max)?
        }
        CriterionKind::Cgw => {
            let r = a.range.required(0, 0)?;
            let (lo, hi) = (*r.start(), *r.end());
            let t = table(hi + a.n_max + 4)?;
            let per_i: Res<Vec<Vec<CheckReport>>> = r
                .into_par_iter()
                .map(|i| {
                    let w = criteria::nthroot_window(&t, i, a.n_max);
                    let reps = criteria::cgw_nthroot(&w, 1, s.bit_budget)?;
                    Ok(reps.into_iter().map(|r| r.param("i", i)).collect())
                })
                .collect();
            let mut out: Vec<CheckReport> = per_i?.into_iter().flatten().collect();
            if hi >= 1 {
                out.push(criteria::r_frak_below_one(&t, lo.max(1), hi));
            }
            out.push(criteria::r_frak_decreasing(&t, lo, hi));
            out
        }
    };
    Ok(reports.into_iter().map(Record::Report).collect::<Vec<_>>().into())
}

// ---------------------------------------------------------------------------
// certs and diag

fn parse_grid_box(s: &str) -> Result<GridBox, String> {
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("grid box `{s}`: {e}"));
    let g = match s.split_once(',') {
        Some((a, b)) => GridBox { base: parse(a)?, dep: parse(b)? },
        None => GridBox::square(parse(s)?),
    };
    if g.base < 1 || g.dep < 1 {
        return Err(format!("grid box `{s}` must be positive"));
    }
    Ok(g)
}

#[derive(Debug, Args)]
pub struct CertsArgs {
    /// Certificate to run (repeatable); all when omitted.
    #[arg(long)]
    name: Vec<String>,
    /// Grid extent I,N for the exact grid fallback.
    #[arg(long, value_parser = parse_grid_box)]
    grid_box: Option<GridBox>,
    /// List certificate names and exit.
    #[arg(long)]
    list: bool,
}

pub fn certs(a: &CertsArgs) -> Res<Output> {
    if a.list {
        let names = certificates::all_names()
            .into_iter()
            .map(|n| Record::Report(CheckReport::new("certificate", "catalog", Verdict::HoldsStrictly).param("name", n)))
            .collect::<Vec<_>>();
        return Ok(names.into());
    }
    let grid = a.grid_box.unwrap_or(DEFAULT_GRID_BOX);
    let reports = if a.name.is_empty() {
        certificates::run_all(grid)?
    } else {
        a.name.par_iter().map(|n| certificates::run_named(n, grid)).collect::<Result<Vec<_>, _>>()?
    };
    Ok(reports.into_iter().map(Record::Report).collect::<Vec<_>>().into())
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    /// Write the computed coefficients in the certs/sk.txt format.
    #[arg(long)]
    write_sk: Option<PathBuf>,
}

pub fn diag(a: &DiagArgs) -> Res<Output> {
    let o = diagonal::analyse()?;
    if let Some(p) = &a.write_sk {
        std::fs::write(p, diagonal::sk_file_text(&o.s))?;
    }
    let mut r = diagonal::verify_diagonal_ratio()?;
    r = r.note(format!("s_0..s_{} = {}", o.s.len().saturating_sub(1), o.s.join(" ")));
    Ok(vec![Record::Report(r)].into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_box_forms() {
        assert_eq!(parse_grid_box("30,40").unwrap(), GridBox { base: 30, dep: 40 });
        assert_eq!(parse_grid_box("7").unwrap(), GridBox::square(7));
        assert!(parse_grid_box("0,3").is_err());
        assert!(parse_grid_box("x").is_err());
    }

    #[test]
    fn fold_merges_windows() {
        let parts = vec![
            criteria::delta_product_bound(2, 4).unwrap(),
            criteria::delta_product_bound(2, 9).unwrap(),
        ];
        let r = fold("delta-product", 2, parts);
        assert_eq!(r.verdict, Verdict::HoldsStrictly);
        assert_eq!(r.window, Some([4, 9]));
        assert_eq!(r.checked, 2);
    }
}
