//! Transcribed certificate polynomials.
//!
//! Each polynomial exists twice under `certs/`: `display/<name>.txt` in the
//! grouped form it was transcribed in, and `<name>.poly` in canonical
//! expanded text. The canonical file is what the certificates use; the
//! display file backs the transcription-integrity check.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::mpoly::MPoly;
use crate::error::{Error, Result};

macro_rules! cert_files {
    ($($name:literal),* $(,)?) => {
        static FILES: &[(&str, &str, &str)] = &[
            $(($name,
               include_str!(concat!("../../certs/", $name, ".poly")),
               include_str!(concat!("../../certs/display/", $name, ".txt"))),)*
        ];
    };
}

cert_files!(
    "A", "B0", "B1", "B2", "C", "D", "F1", "F1hat", "F2", "F2hat", "G1", "G2", "H1", "H2", "K1", "K2",
);

/// Coefficients `s_0..s_18` of the diagonal-ratio numerator, one per line
/// as `k s_k`.
pub const SK_TEXT: &str = include_str!("../../certs/sk.txt");

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|f| f.0)
}

fn entry(name: &str) -> Result<&'static (&'static str, &'static str, &'static str)> {
    FILES
        .iter()
        .find(|f| f.0 == name)
        .ok_or_else(|| Error::UnknownCertificate(name.to_string()))
}

pub fn canonical_text(name: &str) -> Result<&'static str> {
    Ok(entry(name)?.1.trim())
}

pub fn display_text(name: &str) -> Result<&'static str> {
    Ok(entry(name)?.2.trim())
}

/// Parsed canonical polynomial, cached for the life of the process.
pub fn poly(name: &str) -> Result<&'static MPoly> {
    static CACHE: OnceLock<BTreeMap<&'static str, MPoly>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        FILES
            .iter()
            .map(|(n, canon, _)| {
                let p: MPoly = canon.trim().parse().unwrap_or_else(|e| panic!("certs/{n}.poly: {e}"));
                (*n, p)
            })
            .collect()
    });
    cache.get(name).ok_or_else(|| Error::UnknownCertificate(name.to_string()))
}

/// Expansion of the display transcription.
pub fn display_poly(name: &str) -> Result<MPoly> {
    display_text(name)?.parse()
}

/// Stored `s_k`, indexed by `k`.
pub fn stored_sk() -> Result<Vec<num_bigint::BigInt>> {
    let mut out = Vec::new();
    for (ln, line) in SK_TEXT.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let k: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse { pos: ln, msg: "missing index".into() })?;
        let v: num_bigint::BigInt = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse { pos: ln, msg: "missing coefficient".into() })?;
        if k != out.len() {
            return Err(Error::Parse { pos: ln, msg: format!("expected index {}", out.len()) });
        }
        out.push(v);
    }
    Ok(out)
}
