//! Text format for point sets.
//!
//! One point per line as `x y [color]`. Coordinates are integers, decimals
//! (`-0.25`) or fractions (`3/8`); the color is `R` or `B`. Lines starting
//! with `#` are comments. Two comment forms carry metadata and survive a
//! parse/format round trip:
//!
//! ```text
//! #! pair 0 1
//! #! claim every designated pair is a halving pair
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::geom::{Color, ColoredPoint, Point2, PointSet};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointFile {
    pub points: PointSet,
    pub pairs: Vec<(usize, usize)>,
    pub claims: Vec<String>,
}

impl PointFile {
    pub fn new(points: PointSet) -> Self {
        Self {
            points,
            pairs: Vec::new(),
            claims: Vec::new(),
        }
    }
}

/// Parses a decimal or fraction literal exactly.
pub fn parse_scalar(tok: &str) -> Option<Rational> {
    if let Some((n, d)) = tok.split_once('/') {
        let n = parse_int(n, true)?;
        let d = parse_int(d, false)?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (neg, body) = match tok.as_bytes().first()? {
        b'-' => (true, &tok[1..]),
        b'+' => (false, &tok[1..]),
        _ => (false, tok),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if body.contains('.') && (frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit())) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(&digits).ok()?;
    let den = num_traits::pow(BigInt::from(10u8), frac.len());
    let v = BigRational::new(num, den);
    Some(if neg { -v } else { v })
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let body = if signed {
        s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
    } else {
        s
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
}

pub fn format_scalar(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse(text: &str) -> Result<PointFile, ParseError> {
    let mut pts = Vec::new();
    let mut pairs = Vec::new();
    let mut claims = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let err = |message: String| ParseError { line, message };
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(meta) = t.strip_prefix("#!") {
            let meta = meta.trim();
            if let Some(rest) = meta.strip_prefix("pair") {
                let ix: Vec<&str> = rest.split_whitespace().collect();
                let parsed: Option<Vec<usize>> = ix.iter().map(|s| s.parse().ok()).collect();
                match parsed.as_deref() {
                    Some([a, b]) => pairs.push((*a, *b)),
                    _ => return Err(err(format!("malformed pair directive `{t}`"))),
                }
            } else if let Some(rest) = meta.strip_prefix("claim") {
                claims.push(rest.trim().to_string());
            }
            continue;
        }
        if t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() < 2 || toks.len() > 3 {
            return Err(err(format!("expected `x y [color]`, found `{t}`")));
        }
        let x = parse_scalar(toks[0]).ok_or_else(|| err(format!("bad coordinate `{}`", toks[0])))?;
        let y = parse_scalar(toks[1]).ok_or_else(|| err(format!("bad coordinate `{}`", toks[1])))?;
        let color = match toks.get(2) {
            None => Color::Uncolored,
            Some(&"R") => Color::Red,
            Some(&"B") => Color::Blue,
            Some(c) => return Err(err(format!("unknown color `{c}`"))),
        };
        pts.push(ColoredPoint::new(Point2::new(x, y), color));
    }
    let n = pts.len();
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(ParseError {
            line: 0,
            message: format!("pair ({a}, {b}) out of range for {n} points"),
        });
    }
    Ok(PointFile {
        points: PointSet::new(pts),
        pairs,
        claims,
    })
}

pub fn format(file: &PointFile) -> String {
    let mut out = String::new();
    for (a, b) in &file.pairs {
        let _ = writeln!(out, "#! pair {a} {b}");
    }
    for c in &file.claims {
        let _ = writeln!(out, "#! claim {c}");
    }
    for p in file.points.points() {
        let _ = write!(
            out,
            "{} {}",
            format_scalar(&p.point.x),
            format_scalar(&p.point.y)
        );
        if let Some(tag) = p.color().tag() {
            let _ = write!(out, " {tag}");
        }
        out.push('\n');
    }
    out
}
