//! Certificate catalog: symbolic identities, positivity on shifted
//! orthants, and the diagonal ratio.

pub mod data;
pub mod diagonal;
pub mod identities;
pub mod positivity;

use rayon::prelude::*;

use crate::algebra::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Verdict};

pub use diagonal::verify_diagonal_ratio;
pub use identities::{verify_identity, IDENTITY_NAMES};
pub use positivity::{verify_positivity, Domain, GridBox, METHOD_COEFFICIENTS, METHOD_GRID};

/// Default extent of the exact grid used when a shift certificate is
/// inconclusive.
pub const DEFAULT_GRID_BOX: GridBox = GridBox { base: 60, dep: 60 };

/// What a positivity entry asserts.
#[derive(Clone, Copy, Debug)]
enum PosKind {
    /// Shift certificate, grid fallback.
    Shift(fn() -> Domain),
    /// Univariate coefficient inspection in `i`.
    Inspect,
}

fn dom_im() -> Domain {
    Domain::with_dep("i", 1, "m", 1)
}

fn dom_in() -> Domain {
    Domain::with_dep("i", 1, "n", 2)
}

fn dom_i() -> Domain {
    Domain::univariate("i", 1)
}

/// `(report name, polynomial name, kind)`.
const POSITIVITY: &[(&str, &str, PosKind)] = &[
    ("A-positive", "A", PosKind::Shift(dom_im)),
    ("B0-positive", "B0", PosKind::Shift(dom_im)),
    ("B1-positive", "B1", PosKind::Shift(dom_im)),
    ("B2-positive", "B2", PosKind::Shift(dom_im)),
    ("C-positive", "C", PosKind::Shift(dom_im)),
    ("D-positive", "D", PosKind::Shift(dom_i)),
    ("F1-positive", "F1", PosKind::Shift(dom_in)),
    ("F2-positive", "F2", PosKind::Shift(dom_in)),
    ("F1hat-positive", "F1hat", PosKind::Inspect),
    ("F2hat-positive", "F2hat", PosKind::Inspect),
    ("G2-positive", "G2", PosKind::Shift(dom_in)),
    ("G1G2-composite-positive", "G1+G2", PosKind::Shift(dom_in)),
    ("H1-positive", "H1", PosKind::Shift(dom_in)),
    ("H2-positive", "H2", PosKind::Shift(dom_i)),
    ("K1-positive", "K1", PosKind::Shift(dom_in)),
    ("K2-positive", "K2", PosKind::Shift(dom_i)),
];

pub const DIAGONAL_NAME: &str = "diagonal-ratio";
pub const COND_II_NAME: &str = "cond-ii-positivity";
pub const TRANSCRIPTION_NAME: &str = "transcription";

fn lookup_poly(name: &str) -> Result<MPoly> {
    if name == "G1+G2" {
        identities::g1_composite()
    } else {
        Ok(data::poly(name)?.clone())
    }
}

fn inspect(report_name: &str, p: &MPoly) -> CheckReport {
    let ok = positivity::coefficients_positive(p, "i");
    let mut r = CheckReport::new(
        "positivity",
        "coefficient-inspection",
        if ok { Verdict::HoldsStrictly } else { Verdict::Violated },
    )
    .param("name", report_name)
    .param("domain", "i >= 1");
    r.checked = p.num_terms() as u64;
    if !ok {
        r = r.note("a coefficient in i is negative");
    }
    r
}

fn positivity_entry(report_name: &str, grid: GridBox) -> Option<Result<CheckReport>> {
    let (_, pname, kind) = POSITIVITY.iter().find(|e| e.0 == report_name)?;
    Some(lookup_poly(pname).map(|p| match kind {
        PosKind::Shift(dom) => verify_positivity(report_name, &p, &dom(), grid),
        PosKind::Inspect => inspect(report_name, &p),
    }))
}

/// `F̂₁, F̂₂` by inspection and `F₁, F₂` by shift certificate, folded into
/// one report whose method lists what decided each part.
pub fn verify_cond_ii_positivity(grid: GridBox) -> Result<CheckReport> {
    let parts = ["F1hat-positive", "F2hat-positive", "F1-positive", "F2-positive"]
        .iter()
        .map(|n| positivity_entry(n, grid).expect("catalog entry"))
        .collect::<Result<Vec<_>>>()?;
    let verdict = parts.iter().fold(Verdict::HoldsStrictly, |v, r| v.combine(r.verdict));
    let methods: Vec<String> = parts
        .iter()
        .map(|r| format!("{}: {}", param_text(r, "name"), r.method))
        .collect();
    let mut r = CheckReport::new("positivity", &methods.join(", "), verdict).param("name", COND_II_NAME);
    r.checked = parts.iter().map(|p| p.checked).sum();
    for p in &parts {
        if let Some(n) = &p.note {
            r = r.note(format!("{}: {n}", param_text(p, "name")));
        }
    }
    Ok(r)
}

fn param_text(r: &CheckReport, key: &str) -> String {
    match r.params.get(key) {
        Some(crate::report::Param::Text(s)) => s.clone(),
        Some(crate::report::Param::Int(v)) => v.to_string(),
        None => String::new(),
    }
}

/// Every display transcription expands to its canonical file.
pub fn verify_transcriptions() -> Result<CheckReport> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in data::names() {
        checked += 1;
        if data::poly(n)? != &data::display_poly(n)? {
            bad.push(n);
        }
    }
    let verdict = if bad.is_empty() { Verdict::HoldsStrictly } else { Verdict::Violated };
    let mut r = CheckReport::new("identity", "display form expanded against canonical file", verdict)
        .param("name", TRANSCRIPTION_NAME);
    r.checked = checked;
    if !bad.is_empty() {
        r = r.note(format!("mismatched: {}", bad.join(", ")));
    }
    Ok(r)
}

/// All certificate names in catalog order.
pub fn all_names() -> Vec<&'static str> {
    let mut v = vec![TRANSCRIPTION_NAME];
    v.extend(IDENTITY_NAMES.iter().copied());
    v.extend(POSITIVITY.iter().map(|e| e.0));
    v.push(COND_II_NAME);
    v.push(DIAGONAL_NAME);
    v
}

pub fn run_named(name: &str, grid: GridBox) -> Result<CheckReport> {
    if name == TRANSCRIPTION_NAME {
        return verify_transcriptions();
    }
    if IDENTITY_NAMES.contains(&name) {
        return verify_identity(name);
    }
    if let Some(r) = positivity_entry(name, grid) {
        return r;
    }
    match name {
        COND_II_NAME => verify_cond_ii_positivity(grid),
        DIAGONAL_NAME => verify_diagonal_ratio(),
        other => Err(Error::UnknownCertificate(other.to_string())),
    }
}

/// Every certificate, in parallel, reported in catalog order.
pub fn run_all(grid: GridBox) -> Result<Vec<CheckReport>> {
    all_names().par_iter().map(|n| run_named(n, grid)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positivity_catalog_is_coefficientwise() {
        for (name, _, _) in POSITIVITY {
            let r = run_named(name, GridBox::square(4)).unwrap();
            assert_eq!(r.verdict, Verdict::HoldsStrictly, "{name}: {r:?}");
            assert_ne!(r.method, METHOD_GRID, "{name}");
        }
    }

    #[test]
    fn cond_ii_positivity_folds_parts() {
        let r = verify_cond_ii_positivity(GridBox::square(4)).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsStrictly);
        assert!(r.method.contains("F1-positive: holds-by-coefficients"), "{}", r.method);
        assert!(r.method.contains("F2hat-positive: coefficient-inspection"));
    }

    #[test]
    fn unknown_names_error() {
        assert!(matches!(run_named("nope", GridBox::square(4)), Err(Error::UnknownCertificate(_))));
        assert_eq!(all_names().len(), 1 + IDENTITY_NAMES.len() + POSITIVITY.len() + 2);
    }
}
