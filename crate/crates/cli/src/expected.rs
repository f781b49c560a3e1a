//! Table of verdicts that differ from "holds" on purpose, and the mapping
//! from verdicts to exit status.

use std::collections::BTreeMap;
use std::path::Path;

use bm_core::report::{Param, Verdict};
use serde::Deserialize;

const DEFAULT_TABLE: &str = include_str!("../expected.json");

#[derive(Clone, Debug, Deserialize)]
pub struct Rule {
    pub property: String,
    #[serde(default)]
    pub params: BTreeMap<String, Param>,
    pub verdict: Verdict,
    #[serde(default)]
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct Expectations {
    rules: Vec<Rule>,
}

/// Outcome of one record against the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Inconclusive,
    Unexpected,
}

impl Expectations {
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_TABLE).expect("embedded expected-verdict table is valid")
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map(|rules| Self { rules }).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// First rule whose property matches and whose params are a subset of
    /// the record's params.
    pub fn lookup(&self, property: &str, params: &BTreeMap<String, Param>) -> Option<&Rule> {
        self.rules
            .iter()
            .find(|r| r.property == property && r.params.iter().all(|(k, v)| params.get(k) == Some(v)))
    }

    pub fn classify(&self, property: &str, params: &BTreeMap<String, Param>, verdict: Verdict) -> Status {
        match self.lookup(property, params) {
            Some(rule) if rule.verdict == verdict => Status::Ok,
            _ if verdict == Verdict::Inconclusive => Status::Inconclusive,
            Some(_) => Status::Unexpected,
            None if verdict == Verdict::Violated => Status::Unexpected,
            None => Status::Ok,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, Param)]) -> BTreeMap<String, Param> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn reversal_at_zero_is_expected() {
        let e = Expectations::builtin();
        let p = params(&[("family", "transposed".into()), ("i", 0.into())]);
        assert_eq!(e.classify("briggs", &p, Verdict::Violated), Status::Ok);
        assert_eq!(e.classify("briggs", &p, Verdict::HoldsStrictly), Status::Unexpected);
        let p1 = params(&[("family", "transposed".into()), ("i", 1.into())]);
        assert_eq!(e.classify("briggs", &p1, Verdict::Violated), Status::Unexpected);
        assert_eq!(e.classify("briggs", &p1, Verdict::HoldsStrictly), Status::Ok);
    }

    #[test]
    fn inconclusive_without_rule() {
        let e = Expectations::builtin();
        assert_eq!(e.classify("log-convex", &BTreeMap::new(), Verdict::Inconclusive), Status::Inconclusive);
        let p = params(&[("i", 0.into())]);
        assert_eq!(e.classify("thm41", &p, Verdict::Inconclusive), Status::Ok);
    }
}
