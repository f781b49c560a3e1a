use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::rat::Rat;
use crate::algebra::surd::rat_serde;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsStrictly,
    HoldsWeakly,
    Inconclusive,
    Violated,
}

impl Verdict {
    /// The weaker of two verdicts: violated dominates inconclusive, which
    /// dominates weak, which dominates strict.
    pub fn combine(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::HoldsStrictly | Verdict::HoldsWeakly)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsStrictly => "holds-strictly",
            Verdict::HoldsWeakly => "holds-weakly",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One compared point. The asserted relation is always `lhs > rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: i64,
    #[serde(with = "rat_serde")]
    pub lhs: Rat,
    #[serde(with = "rat_serde")]
    pub rhs: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Text(String),
}

impl From<i64> for Param {
    fn from(x: i64) -> Self {
        Param::Int(x)
    }
}

impl From<&str> for Param {
    fn from(x: &str) -> Self {
        Param::Text(x.to_string())
    }
}

impl From<String> for Param {
    fn from(x: String) -> Self {
        Param::Text(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: String,
    pub params: BTreeMap<String, Param>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<[i64; 2]>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checked: u64,
}

impl CheckReport {
    pub fn new(property: &str, method: &str, verdict: Verdict) -> Self {
        Self {
            property: property.to_string(),
            params: BTreeMap::new(),
            window: None,
            verdict,
            witnesses: Vec::new(),
            method: method.to_string(),
            note: None,
            checked: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn window(mut self, lo: i64, hi: i64) -> Self {
        self.window = Some([lo, hi]);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    pub fn holds_strictly(&self) -> bool {
        self.verdict == Verdict::HoldsStrictly
    }
}

/// Witnesses kept per outcome class.
pub const MAX_WITNESSES: usize = 8;

/// Accumulates exact comparisons `lhs > rhs` into a verdict.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    strict: bool,
    weak: bool,
    violated: bool,
    inconclusive: bool,
    checked: u64,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    lo: Option<i64>,
    hi: Option<i64>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    fn touch(&mut self, index: i64) {
        self.lo = Some(self.lo.map_or(index, |l| l.min(index)));
        self.hi = Some(self.hi.map_or(index, |h| h.max(index)));
        self.checked += 1;
    }

    fn keep(&mut self, w: Witness) {
        if self.witnesses.len() < 2 * MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Records the comparison at `index`; returns its ordering.
    pub fn record(&mut self, index: i64, lhs: Rat, rhs: Rat) -> std::cmp::Ordering {
        self.record_with(index, lhs, rhs, None)
    }

    pub fn record_with(&mut self, index: i64, lhs: Rat, rhs: Rat, detail: Option<String>) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        self.touch(index);
        let ord = lhs.cmp(&rhs);
        match ord {
            Greater => self.strict = true,
            Equal => {
                self.weak = true;
                self.keep(Witness { index, lhs, rhs, detail });
            }
            Less => {
                self.violated = true;
                self.keep(Witness { index, lhs, rhs, detail });
            }
        }
        ord
    }

    /// Records an already-decided sign (`+1` holds, `0` equality, `−1`
    /// violated) where the compared values are not themselves rational.
    pub fn record_sign(&mut self, index: i64, sign: i8, lhs: Rat, rhs: Rat, detail: Option<String>) {
        self.touch(index);
        match sign {
            1 => self.strict = true,
            0 => {
                self.weak = true;
                self.keep(Witness { index, lhs, rhs, detail });
            }
            _ => {
                self.violated = true;
                self.keep(Witness { index, lhs, rhs, detail });
            }
        }
    }

    pub fn inconclusive(&mut self, index: i64, note: impl Into<String>) {
        self.touch(index);
        self.inconclusive = true;
        if self.notes.len() < MAX_WITNESSES {
            self.notes.push(format!("index {index}: {}", note.into()));
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.strict |= other.strict;
        self.weak |= other.weak;
        self.violated |= other.violated;
        self.inconclusive |= other.inconclusive;
        self.checked += other.checked;
        for w in other.witnesses {
            self.keep(w);
        }
        self.notes.extend(other.notes);
        self.notes.truncate(MAX_WITNESSES);
        if let Some(l) = other.lo {
            self.lo = Some(self.lo.map_or(l, |x| x.min(l)));
        }
        if let Some(h) = other.hi {
            self.hi = Some(self.hi.map_or(h, |x| x.max(h)));
        }
    }

    pub fn checked(&self) -> u64 {
        self.checked
    }

    pub fn verdict(&self) -> Verdict {
        if self.violated {
            Verdict::Violated
        } else if self.inconclusive || self.checked == 0 {
            Verdict::Inconclusive
        } else if self.weak {
            Verdict::HoldsWeakly
        } else {
            Verdict::HoldsStrictly
        }
    }

    pub fn finish(self, property: &str, method: &str) -> CheckReport {
        let mut r = CheckReport::new(property, method, self.verdict());
        r.checked = self.checked;
        if let (Some(lo), Some(hi)) = (self.lo, self.hi) {
            r.window = Some([lo, hi]);
        }
        r.witnesses = self.witnesses;
        if self.checked == 0 {
            r = r.note("no admissible index in window");
        }
        if !self.notes.is_empty() {
            r = r.note(self.notes.join("; "));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn tally_verdicts() {
        let mut t = Tally::new();
        t.record(0, int(2), int(1));
        assert_eq!(t.verdict(), Verdict::HoldsStrictly);
        t.record(1, int(1), int(1));
        assert_eq!(t.verdict(), Verdict::HoldsWeakly);
        t.inconclusive(2, "budget");
        assert_eq!(t.verdict(), Verdict::Inconclusive);
        t.record(3, int(0), int(1));
        let r = t.finish("p", "exact");
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.window, Some([0, 3]));
        assert_eq!(r.witnesses.len(), 2);
        assert!(Tally::new().finish("p", "m").verdict == Verdict::Inconclusive);
    }

    #[test]
    fn report_serializes_rationals_as_strings() {
        let mut t = Tally::new();
        t.record(4, rat(-3, 6), int(2));
        let r = t.finish("briggs", "exact").param("m", 5).param("family", "row");
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"lhs\":\"-1/2\""), "{s}");
        assert!(s.contains("\"verdict\":\"violated\""));
        let back: CheckReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
