//! Positivity on shifted orthants.
//!
//! For a domain `i ≥ i₀`, `v ≥ i + c`, substitute `i = i₀ + u` and
//! `v = i₀ + c + u + w` with `u, w ≥ 0`. If every coefficient of the
//! expansion is nonnegative and the constant term is positive, the
//! polynomial is positive on the whole domain. Otherwise an exact grid
//! evaluation on a finite box is the fallback.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::mpoly::MPoly;
use crate::report::{CheckReport, Tally, Verdict};

/// `base ≥ base_min`, and optionally `dep ≥ base + dep_offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Domain {
    pub base: &'static str,
    pub base_min: i64,
    pub dep: Option<(&'static str, i64)>,
}

impl Domain {
    pub fn univariate(base: &'static str, base_min: i64) -> Self {
        Self { base, base_min, dep: None }
    }

    pub fn with_dep(base: &'static str, base_min: i64, dep: &'static str, offset: i64) -> Self {
        Self { base, base_min, dep: Some((dep, offset)) }
    }

    pub fn describe(&self) -> String {
        match self.dep {
            None => format!("{} >= {}", self.base, self.base_min),
            Some((d, c)) => format!("{} >= {}, {} >= {} + {}", self.base, self.base_min, d, self.base, c),
        }
    }

    /// Fresh variable for the dependent coordinate.
    fn slack(&self) -> &'static str {
        match self.dep {
            Some(("m", _)) => "s",
            _ => "t",
        }
    }

    /// The substitution `base ↦ base_min + u`, `dep ↦ base_min + c + u + w`.
    pub fn shift_map(&self) -> Vec<(&'static str, MPoly)> {
        let u = MPoly::var("u");
        let mut subs = vec![(self.base, &MPoly::constant(self.base_min) + &u)];
        if let Some((d, c)) = self.dep {
            let w = MPoly::var(self.slack());
            subs.push((d, &(&MPoly::constant(self.base_min + c) + &u) + &w));
        }
        subs
    }
}

/// Extent of the fallback grid: `base` values above `base_min` and `dep`
/// values above the dependent floor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridBox {
    pub base: i64,
    pub dep: i64,
}

impl GridBox {
    pub fn square(n: i64) -> Self {
        Self { base: n, dep: n }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftOutcome {
    pub shifted_terms: usize,
    pub negative_terms: usize,
    pub constant_term: String,
    pub min_coefficient: String,
}

/// Expands the shift and inspects the coefficients.
pub fn shift_certificate(p: &MPoly, domain: &Domain) -> (MPoly, ShiftOutcome) {
    let q = p.substitute(&domain.shift_map());
    let negative_terms = q.terms().filter(|(_, c)| c.is_negative()).count();
    let min = q.terms().map(|(_, c)| c.clone()).min().unwrap_or_else(BigInt::zero);
    let out = ShiftOutcome {
        shifted_terms: q.num_terms(),
        negative_terms,
        constant_term: q.constant_term().to_string(),
        min_coefficient: min.to_string(),
    };
    (q, out)
}

/// Exact evaluation on `base ∈ [base_min, base_min + grid.base]` and, when
/// present, `dep ∈ [base + c, base + c + grid.dep]`. Records `p > 0` at every
/// point; the index is `base * 10_000 + (dep − base − c)`.
pub fn grid_check(p: &MPoly, domain: &Domain, grid: GridBox) -> Tally {
    let mut t = Tally::new();
    for b in domain.base_min..=domain.base_min + grid.base {
        match domain.dep {
            None => {
                let v = p.eval_int(&[(domain.base, b)]).expect("domain covers all variables");
                t.record(b, v.into(), BigInt::zero().into());
            }
            Some((d, c)) => {
                for w in 0..=grid.dep {
                    let v = p.eval_int(&[(domain.base, b), (d, b + c + w)]).expect("domain covers all variables");
                    t.record_with(b * 10_000 + w, v.into(), BigInt::zero().into(), Some(format!("{}={b}, {d}={}", domain.base, b + c + w)));
                }
            }
        }
    }
    t
}

pub const METHOD_COEFFICIENTS: &str = "holds-by-coefficients";
pub const METHOD_GRID: &str = "grid-fallback";

/// Shift certificate first; grid check on the box when it does not settle
/// the sign. The report's `method` says which one decided.
pub fn verify_positivity(name: &str, p: &MPoly, domain: &Domain, grid: GridBox) -> CheckReport {
    let (_, sc) = shift_certificate(p, domain);
    let constant_positive = !sc.constant_term.starts_with('-') && sc.constant_term != "0";
    let base = |method: &str, v: Verdict| {
        CheckReport::new("positivity", method, v)
            .param("name", name)
            .param("domain", domain.describe())
            .param("shifted_terms", sc.shifted_terms as i64)
            .param("negative_terms", sc.negative_terms as i64)
    };
    if sc.negative_terms == 0 && constant_positive {
        let mut r = base(METHOD_COEFFICIENTS, Verdict::HoldsStrictly);
        r.checked = sc.shifted_terms as u64;
        return r;
    }
    let tally = grid_check(p, domain, grid);
    let grid_verdict = tally.verdict();
    let mut r = tally.finish("positivity", METHOD_GRID);
    r.params = base(METHOD_GRID, grid_verdict).params;
    r = r.param("grid_box", format!("{},{}", grid.base, grid.dep)).note(format!(
        "inconclusive-by-certificate ({} negative shifted coefficients, constant term {}); grid result applies to the box only",
        sc.negative_terms, sc.constant_term
    ));
    r
}

/// Every coefficient of a univariate polynomial is nonnegative and at least
/// one is positive, so it is positive for positive arguments.
pub fn coefficients_positive(p: &MPoly, var: &str) -> bool {
    match p.univariate_coeffs(var) {
        Ok(cs) => cs.iter().all(|c| !c.is_negative()) && cs.iter().any(|c| c.is_positive()),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly;

    #[test]
    fn shift_examples() {
        // m - i - 1 >= 0 on m >= i + 1, constant term zero
        let d = Domain::with_dep("i", 1, "m", 1);
        let (q, out) = shift_certificate(&poly("m-i-1"), &d);
        assert_eq!(q, poly("s"));
        assert_eq!(out.negative_terms, 0);
        assert_eq!(out.constant_term, "0");
        let r = verify_positivity("m-i", &poly("m-i"), &d, GridBox::square(5));
        assert_eq!(r.method, METHOD_COEFFICIENTS);
        assert_eq!(r.verdict, Verdict::HoldsStrictly);
    }

    #[test]
    fn fallback_finds_negative_values() {
        let d = Domain::with_dep("i", 1, "n", 2);
        let r = verify_positivity("bad", &poly("n - 2i - 3"), &d, GridBox::square(4));
        assert_eq!(r.method, METHOD_GRID);
        assert_eq!(r.verdict, Verdict::Violated);
        assert!(!r.witnesses.is_empty());
        // positive but not certified coefficientwise: (n - i - 3)^2 + 1
        let r = verify_positivity("sq", &poly("(n-i-3)^2+1"), &d, GridBox { base: 6, dep: 3 });
        assert_eq!(r.method, METHOD_GRID);
        assert_eq!(r.verdict, Verdict::HoldsStrictly);
        assert!(r.note.unwrap().contains("inconclusive-by-certificate"));
    }

    #[test]
    fn univariate_inspection() {
        assert!(coefficients_positive(&poly("4i^3(8i^6+68i^5+54)"), "i"));
        assert!(!coefficients_positive(&poly("i^2-i"), "i"));
        assert!(!coefficients_positive(&poly("i+n"), "i"));
    }
}
