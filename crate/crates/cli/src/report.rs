//! JSON reports. Struct field order is the serialized order.

use std::collections::BTreeMap;

use circdepth::depth::{Check, DepthSummary};
use circdepth::{PointSet, Rational};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Tool {
    pub fn current() -> Self {
        Self {
            name: "circdepth",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Serialize)]
pub struct Input {
    pub sha256: String,
    pub points: usize,
    pub red: usize,
    pub blue: usize,
}

impl Input {
    pub fn new(bytes: &[u8], s: &PointSet) -> Self {
        let digest = Sha256::digest(bytes);
        Self {
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            points: s.len(),
            red: s.count_color(circdepth::Color::Red),
            blue: s.count_color(circdepth::Color::Blue),
        }
    }
}

/// `"num/den"`, also for integers.
pub fn rational(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

#[derive(Serialize)]
pub struct PointRecord {
    pub x: String,
    pub y: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

pub fn point_records(s: &PointSet) -> Vec<PointRecord> {
    s.points()
        .iter()
        .map(|p| PointRecord {
            x: rational(&p.point.x),
            y: rational(&p.point.y),
            color: p.color().tag().map(|t| t.to_string()),
        })
        .collect()
}

/// `k` is the smallest and `K` the largest weight on the pair's bisector.
#[derive(Serialize)]
pub struct PairRecord {
    pub pair: [usize; 2],
    pub k: usize,
    #[serde(rename = "K")]
    pub big_k: usize,
}

impl From<&DepthSummary> for PairRecord {
    fn from(d: &DepthSummary) -> Self {
        Self {
            pair: [d.pair.0, d.pair.1],
            k: d.min_weight,
            big_k: d.max_weight,
        }
    }
}

#[derive(Serialize)]
pub struct Extremal {
    pub maximin: PairRecord,
    pub minimax: PairRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bichromatic_maximin: Option<PairRecord>,
}

#[derive(Serialize)]
pub struct Tables {
    pub c: Vec<usize>,
    pub hist: Vec<usize>,
    pub directed_j: Vec<usize>,
    pub undirected_j: Vec<usize>,
    pub ksets: Vec<usize>,
    pub b: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hist_rb: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub tool: Tool,
    pub input: Input,
    pub points: Vec<PointRecord>,
    pub extremal: Extremal,
    pub tables: Tables,
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub anchor: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: circdepth::depth::Relation,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(check: &str, c: &Check) -> Self {
        Self {
            check: check.to_string(),
            instance: c.name.clone(),
            anchor: c.anchor.clone(),
            lhs: c.lhs,
            rhs: c.rhs,
            relation: c.relation,
            pass: c.pass,
        }
    }
}

#[derive(Serialize)]
pub struct Skipped {
    pub check: String,
    pub reason: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub tool: Tool,
    pub input: Input,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    pub skipped: Vec<Skipped>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}
