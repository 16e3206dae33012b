use std::fmt;

use circdepth::constructions::{
    halving_line_construction, random_colored, random_convex, random_general_position,
    recursive_seven_region, two_colored_convex, ConstructionOutput,
};
use circdepth::depth::{
    self, bichromatic_census, bichromatic_census_from, bichromatic_depths, CheckReport,
    DepthSummary,
};
use circdepth::pointfile::{self, PointFile};
use circdepth::{DepthError, PointSet};

use crate::report::{
    point_records, to_json, AnalyzeReport, CheckRecord, Extremal, Input, PairRecord, Skipped,
    Tables, Tool, VerifyReport, SCHEMA,
};
use crate::svg;

pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const GENERATOR: i32 = 2;
    pub const GENERAL_POSITION: i32 = 3;
    pub const CHECK: i32 = 4;
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn depth_failure(e: DepthError) -> Failure {
    Failure::new(exit::PARSE, e.to_string())
}

/// Parses and certifies a point file.
pub fn load(bytes: &[u8]) -> Result<PointFile, Failure> {
    let text = std::str::from_utf8(bytes).map_err(|e| Failure::new(exit::PARSE, e.to_string()))?;
    let mut file = pointfile::parse(text).map_err(|e| Failure::new(exit::PARSE, e.to_string()))?;
    match file.points.clone().certified() {
        Ok(s) => file.points = s,
        Err(v) => {
            let list: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            return Err(Failure::new(
                exit::GENERAL_POSITION,
                format!("general position violated: {}", list.join(", ")),
            ));
        }
    }
    Ok(file)
}

#[derive(Clone, Debug)]
pub enum Generator {
    Random { n: usize, blue: Option<usize>, seed: u64, range: u64 },
    Convex { n: usize, seed: u64 },
    TwoColoredConvex { n: usize },
    SevenRegion { group: usize, levels: usize },
    Halving { n: usize },
}

pub struct Generated {
    pub file: PointFile,
    /// Human-readable lines: designated pairs and claim outcomes.
    pub summary: Vec<String>,
}

fn from_output(out: ConstructionOutput) -> Generated {
    let claims: Vec<String> = out.claims.iter().map(|c| c.describe()).collect();
    let mut summary = vec![format!("{} points", out.points.len())];
    for &(a, b) in &out.designated_pairs {
        summary.push(format!("pair {a} {b}"));
    }
    summary.extend(claims.iter().map(|c| format!("claim {c}")));
    Generated {
        file: PointFile {
            points: out.points,
            pairs: out.designated_pairs,
            claims,
        },
        summary,
    }
}

fn plain(s: PointSet) -> Generated {
    Generated {
        summary: vec![format!("{} points", s.len())],
        file: PointFile::new(s),
    }
}

pub fn generate(g: &Generator) -> Result<Generated, Failure> {
    let fail = |e: circdepth::ConstructionError| Failure::new(exit::GENERATOR, e.to_string());
    Ok(match *g {
        Generator::Random { n, blue: None, seed, range } => {
            plain(random_general_position(n, seed, range).map_err(fail)?)
        }
        Generator::Random { n, blue: Some(m), seed, range } => {
            plain(random_colored(n, m, seed, range).map_err(fail)?)
        }
        Generator::Convex { n, seed } => plain(random_convex(n, seed).map_err(fail)?),
        Generator::TwoColoredConvex { n } => from_output(two_colored_convex(n).map_err(fail)?),
        Generator::SevenRegion { group, levels } => {
            from_output(recursive_seven_region(group, levels).map_err(fail)?)
        }
        Generator::Halving { n } => from_output(halving_line_construction(n).map_err(fail)?),
    })
}

fn min_depth(depths: &[DepthSummary]) -> &DepthSummary {
    let mut best = &depths[0];
    for d in depths {
        if d.min_weight > best.min_weight {
            best = d;
        }
    }
    best
}

fn max_depth(depths: &[DepthSummary]) -> &DepthSummary {
    let mut best = &depths[0];
    for d in depths {
        if d.max_weight < best.max_weight {
            best = d;
        }
    }
    best
}

fn has_both_colors(s: &PointSet) -> bool {
    s.count_color(circdepth::Color::Red) > 0 && s.count_color(circdepth::Color::Blue) > 0
}

/// Extremal pairs and every count table, as JSON.
pub fn analyze(bytes: &[u8]) -> Result<String, Failure> {
    let file = load(bytes)?;
    let s = &file.points;
    if s.len() < 3 {
        return Err(Failure::new(exit::PARSE, format!("analysis needs at least 3 points, got {}", s.len())));
    }
    let depths = depth::all_depths(s).map_err(depth_failure)?;
    let (bichromatic, hist_rb) = if has_both_colors(s) {
        let d = bichromatic_depths(s).map_err(depth_failure)?;
        let h = bichromatic_census(s).map_err(depth_failure)?;
        (Some(PairRecord::from(min_depth(&d))), Some(h.hist))
    } else {
        (None, None)
    };
    let edges = depth::j_edge_counts(s).map_err(depth_failure)?;
    let report = AnalyzeReport {
        schema: SCHEMA,
        tool: Tool::current(),
        input: Input::new(bytes, s),
        points: point_records(s),
        extremal: Extremal {
            maximin: min_depth(&depths).into(),
            minimax: max_depth(&depths).into(),
            bichromatic_maximin: bichromatic,
        },
        tables: Tables {
            c: depth::triple_counts(s).map_err(depth_failure)?.c,
            hist: depth::segment_weight_census(s).map_err(depth_failure)?.hist,
            directed_j: edges.directed_j,
            undirected_j: edges.undirected_j,
            ksets: depth::kset_counts(s).map_err(depth_failure)?.ksets,
            b: depth::repeated_weight_stats(s).map_err(depth_failure)?.b,
            hist_rb,
        },
    };
    Ok(to_json(&report))
}

/// Names accepted by `verify --checks`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckName {
    TripleSymmetry,
    Census,
    CensusBound,
    CensusEquality,
    Minimax,
    TripleBounds,
    UnboundedIdentity,
    LeqKset,
    Bichromatic,
    BichromaticBound,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::TripleSymmetry,
        CheckName::Census,
        CheckName::CensusBound,
        CheckName::CensusEquality,
        CheckName::Minimax,
        CheckName::TripleBounds,
        CheckName::UnboundedIdentity,
        CheckName::LeqKset,
        CheckName::Bichromatic,
        CheckName::BichromaticBound,
    ];

    /// What `all` runs. The census bounds are opt-in: they fail on most sets,
    /// and the exact segment-end counts that replace them are in the suite.
    pub fn default_suite() -> Vec<CheckName> {
        use CheckName::*;
        Self::ALL
            .into_iter()
            .filter(|c| !matches!(c, CensusBound | CensusEquality | BichromaticBound))
            .collect()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::TripleSymmetry => "triple-symmetry",
            CheckName::Census => "census",
            CheckName::CensusBound => "census-bound",
            CheckName::CensusEquality => "census-equality",
            CheckName::Minimax => "minimax",
            CheckName::TripleBounds => "triple-bounds",
            CheckName::UnboundedIdentity => "unbounded-identity",
            CheckName::LeqKset => "leq-kset",
            CheckName::Bichromatic => "bichromatic",
            CheckName::BichromaticBound => "bichromatic-bound",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<CheckName>> {
        if name == "all" {
            return Some(Self::default_suite());
        }
        Self::ALL.into_iter().find(|c| c.as_str() == name).map(|c| vec![c])
    }
}

fn run_check(name: CheckName, s: &PointSet) -> Result<Vec<CheckReport>, DepthError> {
    let n = s.len();
    Ok(match name {
        CheckName::TripleSymmetry => vec![depth::triple_symmetry_check(s)?],
        CheckName::Census => vec![depth::census_relation_check(s)?],
        CheckName::CensusBound => vec![depth::census_check(s)?],
        CheckName::CensusEquality => {
            vec![depth::census_equality_from(&depth::segment_weight_census(s)?, n)]
        }
        CheckName::Minimax => vec![depth::minimax_bound_check(s)?],
        CheckName::TripleBounds => vec![depth::triple_bounds_check(s)?],
        CheckName::UnboundedIdentity => {
            let ks = depth::kset_counts(s)?;
            let t = depth::triple_counts(s)?;
            (1..n)
                .map(|k| depth::unbounded_identity_from(&ks, &t, n, k))
                .collect::<Result<_, _>>()?
        }
        CheckName::LeqKset => {
            let ks = depth::kset_counts(s)?;
            (1..n)
                .filter(|k| 2 * k < n)
                .map(|k| depth::leq_kset_from(&ks, n, k))
                .collect::<Result<_, _>>()?
        }
        CheckName::Bichromatic => vec![depth::bichromatic_census_relation_check(s)?],
        CheckName::BichromaticBound => vec![bichromatic_census_from(&bichromatic_census(s)?, n)],
    })
}

pub struct Verified {
    pub json: String,
    pub pass: bool,
}

/// Runs the selected checks. Checks that do not apply to the set are listed
/// as skipped rather than failed.
pub fn verify(bytes: &[u8], checks: &[CheckName]) -> Result<Verified, Failure> {
    let file = load(bytes)?;
    let s = &file.points;
    let mut names = checks.to_vec();
    names.sort();
    names.dedup();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for name in names {
        match run_check(name, s) {
            Ok(reports) => {
                for r in &reports {
                    records.extend(r.checks.iter().map(|c| CheckRecord::new(name.as_str(), c)));
                }
            }
            Err(e @ (DepthError::TooFewPoints { .. } | DepthError::MissingColor(_))) => {
                skipped.push(Skipped {
                    check: name.as_str().to_string(),
                    reason: e.to_string(),
                })
            }
            Err(e) => return Err(depth_failure(e)),
        }
    }
    let pass = records.iter().all(|r| r.pass);
    let report = VerifyReport {
        schema: SCHEMA,
        tool: Tool::current(),
        input: Input::new(bytes, s),
        pass,
        checks: records,
        skipped,
    };
    Ok(Verified {
        json: to_json(&report),
        pass,
    })
}

#[derive(Clone, Copy, Debug)]
pub enum RenderWhat {
    Points,
    Profile(usize, usize),
    Construction,
}

pub fn render(bytes: &[u8], what: RenderWhat) -> Result<String, Failure> {
    let file = load(bytes)?;
    match what {
        RenderWhat::Points => Ok(svg::render_points(&file.points)),
        RenderWhat::Profile(p, q) => svg::render_profile(&file.points, p, q).map_err(depth_failure),
        RenderWhat::Construction => svg::render_construction(&file).map_err(depth_failure),
    }
}
