//! SVG pictures of a curve, its diagram labels and its smoothing.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::immersion::GenericImmersion;
use crate::smoothing::{SmoothedCurve, WeightMap};

const CANVAS: f64 = 480.0;
const PAD: f64 = 32.0;
const PALETTE: [&str; 6] = ["#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"];

/// Which annotation layers to draw.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Labels {
    pub indices: bool,
    pub weights: bool,
    pub alpha: bool,
    pub circles: bool,
}

impl Labels {
    pub fn all() -> Self {
        Labels { indices: true, weights: true, alpha: true, circles: true }
    }
}

impl FromStr for Labels {
    type Err = Error;

    /// Comma separated subset of `indices,weights,alpha,circles`.
    fn from_str(s: &str) -> Result<Self> {
        let mut l = Labels::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "indices" => l.indices = true,
                "weights" => l.weights = true,
                "alpha" => l.alpha = true,
                "circles" => l.circles = true,
                other => return Err(Error::UnsupportedParam(format!("unknown label layer {other:?}"))),
            }
        }
        Ok(l)
    }
}

/// `index2` as a decimal or a half-integer fraction.
pub fn half_label(index2: i64) -> String {
    if index2 % 2 == 0 { (index2 / 2).to_string() } else { format!("{index2}/2") }
}

fn signed(v: i64) -> String {
    if v > 0 { format!("+{v}") } else { v.to_string() }
}

struct Frame {
    min: Point2,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn new(points: impl Iterator<Item = Point2>) -> Self {
        let (mut lo, mut hi) = (Point2::new(f64::INFINITY, f64::INFINITY), Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
        Frame { min: lo, max_y: hi.y, scale: (CANVAS - 2.0 * PAD) / span }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        (PAD + (p.x - self.min.x) * self.scale, PAD + (self.max_y - p.y) * self.scale)
    }

    fn path(&self, pts: &[Point2], close: bool) -> String {
        let mut d = String::new();
        for (k, p) in pts.iter().enumerate() {
            let (x, y) = self.map(*p);
            let _ = write!(d, "{}{x:.3} {y:.3} ", if k == 0 { "M" } else { "L" });
        }
        if close {
            d.push('Z');
        }
        d.trim_end().to_string()
    }
}

fn text(out: &mut String, class: &str, (x, y): (f64, f64), body: &str) {
    let _ = writeln!(out, r#"  <text class="{class}" x="{x:.3}" y="{y:.3}">{body}</text>"#);
}

/// Render the curve with the requested annotation layers. Weights and alpha
/// labels need `weights` and `smoothed` respectively; missing inputs simply
/// drop those layers.
pub fn render_svg(
    imm: &GenericImmersion,
    smoothed: Option<&SmoothedCurve>,
    weights: Option<&WeightMap>,
    labels: Labels,
) -> String {
    let verts = &imm.curve.vertices;
    let frame = Frame::new(verts.iter().copied());
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    out.push_str(
        "  <style>\n    .curve { fill: none; stroke: #222; stroke-width: 1.5 }\n    \
         .arrow { fill: #222 }\n    .base { fill: #1f77b4 }\n    \
         .circle { fill: none; stroke-width: 1; stroke-dasharray: 4 2 }\n    \
         text { font: 11px sans-serif }\n  </style>\n",
    );
    let _ = writeln!(out, r#"  <path class="curve" d="{}"/>"#, frame.path(verts, true));

    for arc in &imm.arcs {
        let Some((j, _)) = arc
            .points
            .windows(2)
            .enumerate()
            .max_by(|a, b| a.1[0].dist(a.1[1]).total_cmp(&b.1[0].dist(b.1[1])))
        else {
            continue;
        };
        let (a, b) = (arc.points[j], arc.points[j + 1]);
        let mid = a.lerp(b, 0.5);
        let (mx, my) = frame.map(mid);
        let (bx, by) = frame.map(b);
        let dir = Point2::new(bx - mx, by - my).normalized();
        let side = dir.perp();
        let tip = (mx + 6.0 * dir.x, my + 6.0 * dir.y);
        let l = (mx - 4.0 * dir.x + 4.0 * side.x, my - 4.0 * dir.y + 4.0 * side.y);
        let r = (mx - 4.0 * dir.x - 4.0 * side.x, my - 4.0 * dir.y - 4.0 * side.y);
        let _ = writeln!(
            out,
            r#"  <path class="arrow" d="M{:.3} {:.3} L{:.3} {:.3} L{:.3} {:.3} Z"/>"#,
            tip.0, tip.1, l.0, l.1, r.0, r.1
        );
        if labels.indices {
            text(&mut out, "edge-index", (mx + 8.0 * side.x, my + 8.0 * side.y), &half_label(arc.index2));
        }
    }

    let (bx, by) = frame.map(verts[imm.curve.base_index]);
    let _ = writeln!(out, r#"  <circle class="base" cx="{bx:.3}" cy="{by:.3}" r="4"/>"#);

    if labels.indices {
        for face in imm.faces.iter().filter(|f| !f.unbounded) {
            text(&mut out, "region-index", frame.map(face.label_point), &face.index.to_string());
        }
    }

    for d in &imm.doubles {
        let (x, y) = frame.map(d.position);
        if labels.indices {
            text(&mut out, "double-index", (x + 6.0, y - 6.0), &format!("ind {}", half_label(d.index2)));
        }
        if labels.weights {
            if let Some(w) = weights {
                text(&mut out, "weight", (x + 6.0, y + 14.0), &signed(w.get(d.id)));
            }
        }
    }

    if let Some(sm) = smoothed {
        for c in &sm.circles {
            let color = PALETTE[c.id % PALETTE.len()];
            if labels.circles {
                let _ = writeln!(
                    out,
                    r#"  <path class="circle" stroke="{color}" d="{}"/>"#,
                    frame.path(&c.polygon, true)
                );
            }
            if labels.alpha {
                if let Some(a) = c.alpha {
                    let (x, y) = frame.map(c.sample);
                    let _ = writeln!(
                        out,
                        r#"  <text class="alpha" fill="{color}" x="{:.3}" y="{:.3}">α={}</text>"#,
                        x + 4.0,
                        y + 12.0,
                        signed(a)
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
