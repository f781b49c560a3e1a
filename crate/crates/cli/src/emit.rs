//! Output records and their JSON-lines, CSV and text renderings.

use std::collections::BTreeMap;
use std::io::Write;

use bm_core::algebra::rat::{self, Rat};
use bm_core::bounds::{BoundEval, BoundValue};
use bm_core::report::{CheckReport, Param, Verdict};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One exact value from `compute`.
#[derive(Clone, Debug, Serialize)]
pub struct ValueRow {
    pub i: i64,
    pub m: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub method: &'static str,
    #[serde(serialize_with = "ser_rat")]
    pub value: Rat,
}

fn ser_rat<S: serde::Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat::to_string(x))
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Record {
    Report(CheckReport),
    Bound(BoundEval),
    Value(ValueRow),
}

impl Record {
    /// `(property, params, verdict)` for records that carry a verdict.
    pub fn verdict_key(&self) -> Option<(String, BTreeMap<String, Param>, Verdict)> {
        match self {
            Record::Report(r) => Some((r.property.clone(), r.params.clone(), r.verdict)),
            Record::Bound(b) => {
                let mut p = BTreeMap::from([("i".to_string(), Param::Int(b.i)), ("m".to_string(), Param::Int(b.m))]);
                if let Some(k) = b.k {
                    p.insert("k".into(), Param::Int(k));
                }
                Some((b.bound.clone(), p, b.verdict))
            }
            Record::Value(_) => None,
        }
    }
}

pub fn params_text(p: &BTreeMap<String, Param>) -> String {
    p.iter()
        .map(|(k, v)| match v {
            Param::Int(x) => format!("{k}={x}"),
            Param::Text(s) => format!("{k}={s}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn bound_text(b: &Option<BoundValue>) -> String {
    match b {
        None => String::new(),
        Some(BoundValue::Rat(r)) => rat::to_string(r),
        Some(BoundValue::Surd(s)) => s.to_string(),
    }
}

fn witnesses_text(r: &CheckReport) -> String {
    r.witnesses
        .iter()
        .map(|w| format!("{}:{}>{}", w.index, rat::to_string(&w.lhs), rat::to_string(&w.rhs)))
        .collect::<Vec<_>>()
        .join("|")
}

const REPORT_HEADER: [&str; 8] = ["property", "params", "verdict", "method", "window", "checked", "witnesses", "note"];
const BOUND_HEADER: [&str; 8] = ["bound", "i", "m", "k", "lower", "actual", "upper", "verdict"];
const VALUE_HEADER: [&str; 5] = ["i", "m", "k", "method", "value"];

fn csv_fields(rec: &Record) -> Vec<String> {
    match rec {
        Record::Report(r) => vec![
            r.property.clone(),
            params_text(&r.params),
            r.verdict.to_string(),
            r.method.clone(),
            r.window.map(|[a, b]| format!("{a}..{b}")).unwrap_or_default(),
            r.checked.to_string(),
            witnesses_text(r),
            r.note.clone().unwrap_or_default(),
        ],
        Record::Bound(b) => vec![
            b.bound.clone(),
            b.i.to_string(),
            b.m.to_string(),
            b.k.map(|k| k.to_string()).unwrap_or_default(),
            bound_text(&b.lower),
            rat::to_string(&b.actual),
            bound_text(&b.upper),
            b.verdict.to_string(),
        ],
        Record::Value(v) => vec![
            v.i.to_string(),
            v.m.to_string(),
            v.k.map(|k| k.to_string()).unwrap_or_default(),
            v.method.to_string(),
            rat::to_string(&v.value),
        ],
    }
}

fn csv_header(rec: &Record) -> &'static [&'static str] {
    match rec {
        Record::Report(_) => &REPORT_HEADER,
        Record::Bound(_) => &BOUND_HEADER,
        Record::Value(_) => &VALUE_HEADER,
    }
}

fn text_line(rec: &Record) -> String {
    match rec {
        Record::Report(r) => {
            let mut s = format!("{:<15} {} [{}] checked={}", r.verdict.as_str(), r.property, params_text(&r.params), r.checked);
            if let Some(w) = r.witnesses.first() {
                s.push_str(&format!(" first-witness {}:{} vs {}", w.index, rat::to_string(&w.lhs), rat::to_string(&w.rhs)));
            }
            if let Some(n) = &r.note {
                s.push_str(&format!(" ({n})"));
            }
            s
        }
        Record::Bound(b) => format!(
            "{:<15} {} i={} m={} {} < {} < {}",
            b.verdict.as_str(),
            b.bound,
            b.i,
            b.m,
            bound_text(&b.lower),
            rat::to_string(&b.actual),
            bound_text(&b.upper)
        ),
        Record::Value(v) => match v.k {
            Some(k) => format!("d_{}({}) / ({}+{})! = {}", v.i, v.m, v.i, k, rat::to_string(&v.value)),
            None => format!("d_{}({}) = {}", v.i, v.m, rat::to_string(&v.value)),
        },
    }
}

pub fn write_records(out: &mut dyn Write, records: &[Record], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Text => {
            for r in records {
                writeln!(out, "{}", text_line(r))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if let Some(first) = records.first() {
                w.write_record(csv_header(first))?;
            }
            for r in records {
                w.write_record(csv_fields(r))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
