//! Static SVG renderings. Model y points up, so it is negated on output.

use std::fmt::Write as _;

use circdepth::depth::weight_sequence;
use circdepth::geom::convex_hull;
use circdepth::pointfile::PointFile;
use circdepth::{Color, DepthError, Point, PointSet};

const RED: &str = "#c0392b";
const BLUE: &str = "#2060b0";
const INK: &str = "#222222";
const ACCENT: &str = "#e69f00";

fn f(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    // avoid "-0"
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r}")
}

struct Canvas {
    min: (f64, f64),
    max: (f64, f64),
    body: String,
}

impl Canvas {
    fn new(extent: &[(f64, f64)]) -> Self {
        let mut min = (f64::INFINITY, f64::INFINITY);
        let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in extent {
            min = (min.0.min(x), min.1.min(y));
            max = (max.0.max(x), max.1.max(y));
        }
        if extent.is_empty() {
            min = (0.0, 0.0);
            max = (1.0, 1.0);
        }
        Self {
            min,
            max,
            body: String::new(),
        }
    }

    fn span(&self) -> f64 {
        let s = (self.max.0 - self.min.0).max(self.max.1 - self.min.1);
        if s > 0.0 {
            s
        } else {
            1.0
        }
    }

    fn unit(&self) -> f64 {
        self.span() / 100.0
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}"/>"#,
            f(a.0),
            f(-a.1),
            f(b.0),
            f(-b.1),
            f(width)
        );
    }

    fn dot(&mut self, p: (f64, f64), fill: &str, r: f64) {
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
            f(p.0),
            f(-p.1),
            f(r)
        );
    }

    fn text(&mut self, p: (f64, f64), size: f64, s: &str) {
        let _ = writeln!(
            self.body,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif" fill="{INK}">{s}</text>"#,
            f(p.0),
            f(-p.1),
            f(size)
        );
    }

    fn finish(self) -> String {
        let w = self.max.0 - self.min.0;
        let h = self.max.1 - self.min.1;
        let mx = if w > 0.0 { 0.05 * w } else { 0.05 * self.span() };
        let my = if h > 0.0 { 0.05 * h } else { 0.05 * self.span() };
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
            f(self.min.0 - mx),
            f(-self.max.1 - my),
            f(w + 2.0 * mx),
            f(h + 2.0 * my)
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn coords(s: &PointSet) -> Vec<(f64, f64)> {
    s.points().iter().map(|p| p.point.to_f64()).collect()
}

fn fill(c: Color) -> &'static str {
    match c {
        Color::Red => RED,
        Color::Blue => BLUE,
        Color::Uncolored => INK,
    }
}

fn draw_points(c: &mut Canvas, s: &PointSet, pts: &[(f64, f64)]) {
    let r = c.unit();
    for (i, &p) in pts.iter().enumerate() {
        c.dot(p, fill(s.color(i)), r);
    }
}

pub fn render_points(s: &PointSet) -> String {
    let pts = coords(s);
    let mut c = Canvas::new(&pts);
    draw_points(&mut c, s, &pts);
    c.finish()
}

/// The bisector of `(p, q)` with each segment labeled by its weight.
pub fn render_profile(s: &PointSet, p: usize, q: usize) -> Result<String, DepthError> {
    let prof = weight_sequence(s, p, q)?;
    let fr = &prof.frame;
    let at = |t: &circdepth::Rational| {
        Point::new(
            fr.midpoint.x.clone() + t.clone() * fr.direction.x.clone(),
            fr.midpoint.y.clone() + t.clone() * fr.direction.y.clone(),
        )
        .to_f64()
    };
    let centers: Vec<(f64, f64)> = prof.events.iter().map(|e| at(&e.s)).collect();
    let pts = coords(s);
    let mut extent = pts.clone();
    extent.extend(&centers);
    let mid = fr.midpoint.to_f64();
    extent.push(mid);
    let mut c = Canvas::new(&extent);
    let u = c.unit();

    let d = fr.direction.to_f64();
    let len = (d.0 * d.0 + d.1 * d.1).sqrt();
    let d = (d.0 / len, d.1 / len);
    let reach = 0.25 * c.span();
    let first = *centers.first().unwrap_or(&mid);
    let last = *centers.last().unwrap_or(&mid);
    let start = (first.0 - reach * d.0, first.1 - reach * d.1);
    let end = (last.0 + reach * d.0, last.1 + reach * d.1);
    c.line(start, end, ACCENT, 0.3 * u);

    let mut stops = vec![start];
    stops.extend(&centers);
    stops.push(end);
    for (w, seg) in prof.weights.iter().zip(stops.windows(2)) {
        let m = ((seg[0].0 + seg[1].0) / 2.0, (seg[0].1 + seg[1].1) / 2.0);
        c.text((m.0 + u, m.1 + u), 3.0 * u, &w.to_string());
    }
    for &e in &centers {
        c.dot(e, ACCENT, 0.5 * u);
    }
    c.line(pts[p], pts[q], INK, 0.2 * u);
    draw_points(&mut c, s, &pts);
    let labels: Vec<String> = prof.weights.iter().map(|w| w.to_string()).collect();
    let corner = (c.min.0, c.max.1);
    c.text(corner, 4.0 * u, &labels.join(","));
    Ok(c.finish())
}

/// Hull outline, designated pairs highlighted, then the points.
pub fn render_construction(file: &PointFile) -> Result<String, DepthError> {
    let s = &file.points;
    for &(a, b) in &file.pairs {
        for i in [a, b] {
            if i >= s.len() {
                return Err(DepthError::BadIndex {
                    index: i,
                    len: s.len(),
                });
            }
        }
    }
    let pts = coords(s);
    let mut c = Canvas::new(&pts);
    let u = c.unit();
    if s.len() >= 3 {
        let hull = convex_hull(s);
        for k in 0..hull.len() {
            let (a, b) = (hull[k], hull[(k + 1) % hull.len()]);
            c.line(pts[a], pts[b], "#bbbbbb", 0.2 * u);
        }
    }
    for &(a, b) in &file.pairs {
        c.line(pts[a], pts[b], ACCENT, 0.5 * u);
    }
    draw_points(&mut c, s, &pts);
    Ok(c.finish())
}
