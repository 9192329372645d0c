//! Local modifications: fixture pairs and the jump table they must obey.
//!
//! Fixtures are built from a few local strands inside a small disk around the
//! origin, closed up outside the disk by radial spokes and circular rings at
//! distinct radii. The `before` and `after` curves share every vertex outside
//! the disk.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_curve, AnalyzeOptions};
use crate::error::{Error, Result};
use crate::geometry::{winding_number, Point2, Tolerances};
use crate::immersion::PolygonalCurve;
use crate::io::CurveFile;
use crate::laurent::{IntPoly, RealPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    DirectTangency,
    OppositeTangency,
    WeakTriple,
    StrongTriple,
}

impl MoveKind {
    pub const ALL: [MoveKind; 4] =
        [MoveKind::DirectTangency, MoveKind::OppositeTangency, MoveKind::WeakTriple, MoveKind::StrongTriple];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::DirectTangency => "direct-tangency",
            MoveKind::OppositeTangency => "opposite-tangency",
            MoveKind::WeakTriple => "weak-triple",
            MoveKind::StrongTriple => "strong-triple",
        }
    }

    pub fn is_tangency(self) -> bool {
        matches!(self, MoveKind::DirectTangency | MoveKind::OppositeTangency)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Positive,
}

/// `Reversed` pairs are the drawn pairs traversed backwards. They carry no
/// table expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    #[default]
    Drawn,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Disk {
    fn contains(&self, p: [f64; 2]) -> bool {
        Point2::from(p).dist(Point2::from(self.center)) <= self.radius
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModificationPair {
    pub kind: MoveKind,
    pub direction: Direction,
    pub ind_param: i64,
    #[serde(default)]
    pub orientation: Orientation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disk: Option<Disk>,
    pub before: CurveFile,
    pub after: CurveFile,
}

impl ModificationPair {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pair serializes")
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Jumps of `(P, I_q, St_q)` under a positive move at local index `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub p_q: IntPoly,
    pub i_q: RealPoly,
    pub st_q: IntPoly,
}

pub fn table_expectation(kind: MoveKind, i: i64) -> Expected {
    let e = 2 * i;
    let triple_i = RealPoly::from_terms([(e + 3, 0.5), (e + 1, -1.0), (e - 1, 0.5)]);
    let triple_st = IntPoly::from_terms([(e + 2, 1), (e, -1)]);
    match kind {
        MoveKind::DirectTangency => Expected {
            p_q: IntPoly::zero(),
            i_q: RealPoly::from_terms([(e + 1, -1.0), (e - 1, 1.0)]),
            st_q: IntPoly::zero(),
        },
        MoveKind::OppositeTangency => Expected {
            p_q: IntPoly::from_terms([(e + 2, 1), (e, -2), (e - 2, 1)]),
            i_q: RealPoly::zero(),
            st_q: IntPoly::zero(),
        },
        MoveKind::WeakTriple => Expected { p_q: IntPoly::zero(), i_q: triple_i, st_q: triple_st },
        MoveKind::StrongTriple => Expected {
            p_q: IntPoly::from_terms([(e + 4, -1), (e + 2, 3), (e, -3), (e - 2, 1)]),
            i_q: triple_i,
            st_q: triple_st,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoveReport {
    pub kind: MoveKind,
    pub orientation: Orientation,
    pub ind_param: i64,
    pub doubles_before: usize,
    pub doubles_after: usize,
    pub delta_p_q: IntPoly,
    pub delta_i_q: RealPoly,
    pub delta_st_q: IntPoly,
    pub expected: Option<Expected>,
    pub mismatches: Vec<String>,
    /// Failed cross-checks of either analysis, prefixed by `before:`/`after:`.
    pub cross_check_failures: Vec<String>,
    pub pass: bool,
}

impl MoveReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} ({:?}), i = {}, doubles {} -> {}\n",
            self.kind.name(),
            self.orientation,
            self.ind_param,
            self.doubles_before,
            self.doubles_after
        );
        let exp = self.expected.as_ref();
        let row = |name: &str, got: String, want: Option<String>| match want {
            Some(w) => format!("  d{name:<5} {got}   expected {w}\n"),
            None => format!("  d{name:<5} {got}\n"),
        };
        s.push_str(&row("P", self.delta_p_q.to_string(), exp.map(|e| e.p_q.to_string())));
        s.push_str(&row("I_q", self.delta_i_q.to_string(), exp.map(|e| e.i_q.to_string())));
        s.push_str(&row("St_q", self.delta_st_q.to_string(), exp.map(|e| e.st_q.to_string())));
        for m in &self.mismatches {
            s.push_str(&format!("  mismatch: {m}\n"));
        }
        for f in &self.cross_check_failures {
            s.push_str(&format!("  cross-check failed: {f}\n"));
        }
        s.push_str(if self.pass { "  PASS\n" } else { "  FAIL\n" });
        s
    }
}

/// Analyze both sides of a pair and compare the jumps with the table.
pub fn verify_modification(pair: &ModificationPair, tol: &Tolerances) -> Result<MoveReport> {
    let mut mismatches = Vec::new();
    let (bv, av) = (&pair.before.vertices, &pair.after.vertices);
    if bv.len() != av.len() || pair.before.base_index != pair.after.base_index {
        mismatches.push("before and after differ in vertex count or base vertex".to_string());
    } else if let Some(disk) = pair.disk {
        let outside = bv.iter().zip(av).filter(|(b, a)| b != a).any(|(b, a)| !disk.contains(*b) || !disk.contains(*a));
        if outside {
            mismatches.push("before and after differ outside the declared disk".to_string());
        }
    }

    let opts = AnalyzeOptions { tolerances: *tol, ..AnalyzeOptions::default() };
    let before = analyze_curve(&pair.before.to_curve()?, &opts)?.report;
    let after = analyze_curve(&pair.after.to_curve()?, &opts)?.report;

    let expected_count = if pair.kind.is_tangency() { before.n_doubles + 2 } else { before.n_doubles };
    if after.n_doubles != expected_count {
        mismatches.push(format!(
            "{} double points after, expected {expected_count}",
            after.n_doubles
        ));
    }

    let delta_p_q = &after.p_q - &before.p_q;
    let delta_i_q = (&after.i_q - &before.i_q).pruned(1e-9);
    let delta_st_q = &after.st_q - &before.st_q;

    let expected = (pair.orientation == Orientation::Drawn).then(|| table_expectation(pair.kind, pair.ind_param));
    if let Some(e) = &expected {
        if delta_p_q != e.p_q {
            mismatches.push(format!("dP = {delta_p_q}, expected {}", e.p_q));
        }
        if delta_i_q.max_abs_diff(&e.i_q) > 1e-6 {
            mismatches.push(format!("dI_q = {delta_i_q}, expected {}", e.i_q));
        }
        if delta_st_q != e.st_q {
            mismatches.push(format!("dSt_q = {delta_st_q}, expected {}", e.st_q));
        }
    }

    let mut cross_check_failures: Vec<String> =
        before.failed_checks().iter().map(|c| format!("before:{c}")).collect();
    cross_check_failures.extend(after.failed_checks().iter().map(|c| format!("after:{c}")));

    Ok(MoveReport {
        kind: pair.kind,
        orientation: pair.orientation,
        ind_param: pair.ind_param,
        doubles_before: before.n_doubles,
        doubles_after: after.n_doubles,
        delta_p_q,
        delta_i_q,
        delta_st_q,
        pass: mismatches.is_empty() && cross_check_failures.is_empty(),
        expected,
        mismatches,
        cross_check_failures,
    })
}

/// Sign of a vanishing triangle.
///
/// `lines[k]` is `(point, direction)` of the strand carrying side `k`, and
/// `visit_order` lists the sides in the order the curve traverses them. The
/// cyclic visiting order orients the triangle; `q` counts the sides whose
/// own direction agrees with that orientation, and the sign is `(-1)^q`.
pub fn triangle_sign(lines: &[(Point2, Point2); 3], visit_order: [usize; 3]) -> i32 {
    let vertex = |a: usize, b: usize| line_intersection(lines[a], lines[b]);
    let mut q = 0;
    for m in 0..3 {
        let prev = visit_order[(m + 2) % 3];
        let side = visit_order[m];
        let next = visit_order[(m + 1) % 3];
        let run = vertex(side, next) - vertex(prev, side);
        if run.dot(lines[side].1) > 0.0 {
            q += 1;
        }
    }
    if q % 2 == 0 { 1 } else { -1 }
}

/// True when the three sides of the triangle cut out by the lines are
/// oriented cyclically around it.
pub fn is_cyclic_triangle(lines: &[(Point2, Point2); 3]) -> bool {
    let sides: Vec<bool> = (0..3)
        .map(|k| {
            let (a, b) = ((k + 1) % 3, (k + 2) % 3);
            let on_k = line_intersection(lines[k], lines[a]);
            let opposite = line_intersection(lines[a], lines[b]);
            lines[k].1.cross(opposite - on_k) > 0.0
        })
        .collect();
    sides.iter().all(|&s| s == sides[0])
}

fn centroid(lines: &[(Point2, Point2); 3]) -> Point2 {
    let v = [(0, 1), (0, 2), (1, 2)].map(|(a, b)| line_intersection(lines[a], lines[b]));
    (v[0] + v[1] + v[2]) * (1.0 / 3.0)
}

fn line_intersection(l1: (Point2, Point2), l2: (Point2, Point2)) -> Point2 {
    let (p, u) = l1;
    let (r, v) = l2;
    let t = (r - p).cross(v) / u.cross(v);
    p + u * t
}

/// Closing connection from one strand end to the next strand start.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Connector {
    pub radius: f64,
    pub ccw: bool,
    pub turns: u32,
}

const RING_STEP: f64 = PI / 18.0;
const STRAND_SAMPLES: usize = 25;
const SPIRAL_PITCH: f64 = 0.3;

fn polar(r: f64, a: f64) -> Point2 {
    Point2::new(r * a.cos(), r * a.sin())
}

fn rotate(p: Point2, a: f64) -> Point2 {
    let (s, c) = a.sin_cos();
    Point2::new(c * p.x - s * p.y, s * p.x + c * p.y)
}

/// Ring arc from the spoke of `from` to the spoke of `to`, sampled so that no
/// interior vertex lies on any of the `spokes` angles. The radius grows by
/// `SPIRAL_PITCH` per revolution so that extra turns never overlap.
fn ring(from: Point2, to: Point2, c: Connector, spokes: &[f64]) -> Vec<Point2> {
    let a0 = from.y.atan2(from.x);
    let a1 = to.y.atan2(to.x);
    let mut sweep = (a1 - a0).rem_euclid(TAU);
    if c.ccw {
        sweep += TAU * c.turns as f64;
    } else {
        sweep = sweep - TAU - TAU * c.turns as f64;
    }
    let mut m = (sweep.abs() / RING_STEP).ceil().max(1.0) as usize;
    let on_spoke = |a: f64| spokes.iter().any(|&s| ((a - s + PI).rem_euclid(TAU) - PI).abs() < 1e-2);
    while (1..m).any(|j| on_spoke(a0 + sweep * j as f64 / m as f64)) {
        m += 1;
    }
    (0..=m)
        .map(|j| {
            let f = j as f64 / m as f64;
            polar(c.radius + SPIRAL_PITCH * (sweep * f).abs() / TAU, a0 + sweep * f)
        })
        .collect()
}

/// Closed curve visiting `strands` in `order`, joined by `connectors`; the
/// base is the vertex farthest from the origin.
fn close_strands(strands: &[Vec<Point2>], order: &[usize], connectors: &[Connector]) -> PolygonalCurve {
    let spokes: Vec<f64> = strands
        .iter()
        .flat_map(|s| [s[0], s[s.len() - 1]])
        .map(|p| p.y.atan2(p.x))
        .collect();
    let mut vertices = Vec::new();
    for (k, &s) in order.iter().enumerate() {
        vertices.extend_from_slice(&strands[s]);
        let next = &strands[order[(k + 1) % order.len()]];
        vertices.extend(ring(*strands[s].last().unwrap(), next[0], connectors[k], &spokes));
    }
    let base = (0..vertices.len())
        .max_by(|&a, &b| vertices[a].norm().total_cmp(&vertices[b].norm()))
        .expect("nonempty");
    PolygonalCurve::new(vertices, base).expect("closed fixture is a valid polygon")
}

fn strand_params(half_width: f64) -> impl Iterator<Item = f64> {
    (0..=STRAND_SAMPLES).map(move |j| -half_width + 2.0 * half_width * j as f64 / STRAND_SAMPLES as f64)
}

/// Two strands `y = +-(0.6 x^2 - c (1 - x^2)^2)` over `|x| <= 1`; they cross
/// twice for `c > 0` and are disjoint for `c < 0`.
fn tangency_strands(c: f64, direct: bool, rotation: f64) -> Vec<Vec<Point2>> {
    let upper: Vec<Point2> = strand_params(1.0)
        .map(|x| rotate(Point2::new(x, 0.6 * x * x - c * (1.0 - x * x).powi(2)), rotation))
        .collect();
    let mut lower: Vec<Point2> = strand_params(1.0)
        .map(|x| rotate(Point2::new(x, -(0.6 * x * x - c * (1.0 - x * x).powi(2))), rotation))
        .collect();
    if !direct {
        lower.reverse();
    }
    vec![upper, lower]
}

/// Nearly straight strands through the origin with direction angles
/// `angles`, offset along their normals by `offsets` near the center and
/// pinned at radius 1.2.
fn triple_strands(angles: [f64; 3], offsets: [f64; 3]) -> (Vec<Vec<Point2>>, [(Point2, Point2); 3]) {
    const R: f64 = 1.2;
    const FLAT: f64 = 0.6;
    let bump = |s: f64| {
        let a = s.abs();
        if a <= FLAT {
            1.0
        } else {
            let t = (R - a) / (R - FLAT);
            t * t * (3.0 - 2.0 * t)
        }
    };
    let mut strands = Vec::new();
    let mut lines = [(Point2::default(), Point2::default()); 3];
    for k in 0..3 {
        let u = polar(1.0, angles[k]);
        let n = u.perp();
        strands.push(strand_params(R).map(|s| u * s + n * (offsets[k] * bump(s))).collect());
        lines[k] = (n * offsets[k], u);
    }
    (strands, lines)
}

fn index_at_crossing(curve: &PolygonalCurve, x: Point2, u: Point2, v: Point2) -> Result<i64> {
    let eps = 0.02;
    let mut total = 0;
    for (a, b) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        total += winding_number(&curve.vertices, x + (u * a + v * b) * eps)?;
    }
    if total % 4 != 0 {
        return Err(Error::CrossCheckFailed(format!("regions around {x:?} sum to {total}")));
    }
    Ok(total / 4)
}

/// Recipe for one shipped pair.
#[derive(Debug, Clone)]
pub struct MoveRecipe {
    pub name: String,
    pub kind: MoveKind,
    pub rotation: f64,
    /// Triple moves: strand direction angles.
    pub angles: [f64; 3],
    pub order: Vec<usize>,
    pub connectors: Vec<Connector>,
}

impl MoveRecipe {
    pub fn build(&self) -> Result<ModificationPair> {
        match self.kind {
            MoveKind::DirectTangency | MoveKind::OppositeTangency => self.build_tangency(),
            MoveKind::WeakTriple | MoveKind::StrongTriple => self.build_triple(),
        }
    }

    fn build_tangency(&self) -> Result<ModificationPair> {
        let direct = self.kind == MoveKind::DirectTangency;
        let before = close_strands(&tangency_strands(-0.15, direct, self.rotation), &self.order, &self.connectors);
        let after = close_strands(&tangency_strands(0.15, direct, self.rotation), &self.order, &self.connectors);
        // Between the strands for direct moves, just outside the upper one otherwise.
        let probe = if direct { Point2::new(0.0, 0.0) } else { Point2::new(0.0, 0.45) };
        let ind = winding_number(&before.vertices, rotate(probe, self.rotation))?;
        Ok(self.pair(&before, &after, ind, 1.25))
    }

    fn build_triple(&self) -> Result<ModificationPair> {
        let angles = self.angles.map(|a| a + self.rotation);
        let (s_minus, l_minus) = triple_strands(angles, [0.0, 0.0, -0.12]);
        let (s_plus, l_plus) = triple_strands(angles, [0.0, 0.0, 0.12]);
        if is_cyclic_triangle(&l_plus) != (self.kind == MoveKind::StrongTriple) {
            return Err(Error::UnsupportedParam(format!("{}: angles give the other triple kind", self.name)));
        }
        let c_minus = close_strands(&s_minus, &self.order, &self.connectors);
        let c_plus = close_strands(&s_plus, &self.order, &self.connectors);
        let visit = [self.order[0], self.order[1], self.order[2]];
        let (before, l_before, after, l_after) = if triangle_sign(&l_plus, visit) > 0 {
            (c_minus, l_minus, c_plus, l_plus)
        } else {
            (c_plus, l_plus, c_minus, l_minus)
        };
        let mut levels = Vec::new();
        for (curve, lines) in [(&before, &l_before), (&after, &l_after)] {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                let x = line_intersection(lines[a], lines[b]);
                levels.push(index_at_crossing(curve, x, lines[a].1, lines[b].1)?);
            }
        }
        let ind = *levels.iter().min().expect("six crossings");
        // The tabulated orientation is the one whose newborn triangle sits at a
        // lower index than the vanishing one.
        let vanishing = winding_number(&before.vertices, centroid(&l_before))?;
        let newborn = winding_number(&after.vertices, centroid(&l_after))?;
        let mut pair = self.pair(&before, &after, ind, 1.25);
        if newborn > vanishing {
            pair.orientation = Orientation::Reversed;
        }
        Ok(pair)
    }

    fn pair(&self, before: &PolygonalCurve, after: &PolygonalCurve, ind: i64, radius: f64) -> ModificationPair {
        ModificationPair {
            kind: self.kind,
            direction: Direction::Positive,
            ind_param: ind,
            orientation: Orientation::Drawn,
            disk: Some(Disk { center: [0.0, 0.0], radius }),
            before: CurveFile::from(before),
            after: CurveFile::from(after),
        }
    }
}

impl ModificationPair {
    /// The same move with the curve traversed backwards. Indices change sign,
    /// so the lower level of a triple move becomes `-i - 1`.
    pub fn reversed(&self) -> Result<ModificationPair> {
        let rev = |c: &CurveFile| -> Result<CurveFile> { Ok(CurveFile::from(&c.to_curve()?.reversed())) };
        let ind_param = if self.kind.is_tangency() { -self.ind_param } else { -self.ind_param - 1 };
        let orientation = match self.orientation {
            Orientation::Drawn => Orientation::Reversed,
            Orientation::Reversed => Orientation::Drawn,
        };
        Ok(ModificationPair {
            ind_param,
            orientation,
            before: rev(&self.before)?,
            after: rev(&self.after)?,
            ..self.clone()
        })
    }
}

fn conn(radius: f64, ccw: bool, turns: u32) -> Connector {
    Connector { radius, ccw, turns }
}

/// The recipes behind the shipped fixture pairs.
pub fn builtin_recipes() -> Vec<MoveRecipe> {
    use MoveKind::*;
    let tangency = |name: &str, kind, connectors: Vec<Connector>| MoveRecipe {
        name: name.to_string(),
        kind,
        rotation: 0.1371,
        angles: [0.0; 3],
        order: vec![0, 1],
        connectors,
    };
    let triple = |name: &str, kind, angles: [f64; 3], order: [usize; 3], connectors: Vec<Connector>| MoveRecipe {
        name: name.to_string(),
        kind,
        rotation: 0.2113,
        angles: angles.map(f64::to_radians),
        order: order.to_vec(),
        connectors,
    };
    let t0 = || vec![conn(2.0, true, 0), conn(3.0, true, 0), conn(4.0, true, 0)];
    let t1 = || vec![conn(4.0, false, 0), conn(2.0, true, 0), conn(3.0, false, 0)];
    let t2 = || vec![conn(3.0, true, 1), conn(4.0, false, 0), conn(2.0, true, 0)];
    let t3 = || vec![conn(2.0, false, 1), conn(4.0, true, 0), conn(3.0, true, 0)];
    let weak = [3.0, 57.0, 118.0];
    let weak_flipped = [183.0, 57.0, 118.0];
    let strong = [3.0, 127.0, 236.0];
    let strong_turned = [183.0, 307.0, 56.0];
    vec![
        tangency("direct-i0", DirectTangency, vec![conn(3.0, true, 0), conn(2.0, false, 0)]),
        tangency("direct-i1", DirectTangency, vec![conn(2.0, true, 0), conn(3.0, true, 0)]),
        tangency("direct-im1", DirectTangency, vec![conn(2.0, false, 0), conn(3.0, false, 0)]),
        tangency("direct-i2", DirectTangency, vec![conn(2.0, true, 1), conn(3.0, true, 0)]),
        tangency("opposite-i0", OppositeTangency, vec![conn(2.0, false, 0), conn(3.0, false, 0)]),
        tangency("opposite-i1", OppositeTangency, vec![conn(3.0, true, 0), conn(2.0, false, 0)]),
        tangency("opposite-i2", OppositeTangency, vec![conn(2.0, true, 0), conn(3.0, true, 0)]),
        tangency("opposite-im1", OppositeTangency, vec![conn(2.0, false, 1), conn(3.0, false, 0)]),
        triple("weak-a", WeakTriple, weak, [0, 1, 2], t0()),
        triple("weak-b", WeakTriple, weak, [0, 1, 2], t1()),
        triple("weak-c", WeakTriple, weak, [0, 1, 2], t2()),
        triple("weak-d", WeakTriple, weak_flipped, [0, 1, 2], t3()),
        triple("weak-e", WeakTriple, weak, [0, 2, 1], t0()),
        triple("strong-a", StrongTriple, strong, [0, 1, 2], t0()),
        triple("strong-b", StrongTriple, strong, [0, 1, 2], t1()),
        triple("strong-c", StrongTriple, strong, [0, 1, 2], t2()),
        triple("strong-d", StrongTriple, strong_turned, [0, 1, 2], t3()),
        triple("strong-e", StrongTriple, strong, [0, 2, 1], t0()),
    ]
}

/// Every shipped pair, by file stem: the recipes plus a reversed copy of the
/// first recipe of each tangency kind.
pub fn builtin_pairs() -> Result<Vec<(String, ModificationPair)>> {
    let mut out = Vec::new();
    for r in builtin_recipes() {
        let pair = r.build()?;
        if r.name.ends_with("-i1") {
            out.push((format!("{}-reversed", r.name), pair.reversed()?));
        }
        out.push((r.name.clone(), pair));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sides of the triangle (0,0), (1,0), (0,1), each running counterclockwise.
    fn ccw_sides() -> [(Point2, Point2); 3] {
        [
            (Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)),
            (Point2::new(1.0, 0.0), Point2::new(-1.0, 1.0)),
            (Point2::new(0.0, 1.0), Point2::new(0.0, -1.0)),
        ]
    }

    #[test]
    fn triangle_signs() {
        let mut lines = ccw_sides();
        assert!(is_cyclic_triangle(&lines));
        assert_eq!(triangle_sign(&lines, [0, 1, 2]), -1);
        assert_eq!(triangle_sign(&lines, [0, 2, 1]), 1);
        lines[1].1 = -lines[1].1;
        assert!(!is_cyclic_triangle(&lines));
        assert_eq!(triangle_sign(&lines, [0, 1, 2]), 1);
        assert_eq!(triangle_sign(&lines, [0, 2, 1]), -1);
    }

    #[test]
    fn intersections() {
        let lines = ccw_sides();
        assert!(line_intersection(lines[0], lines[1]).dist(Point2::new(1.0, 0.0)) < 1e-15);
        assert!(centroid(&lines).dist(Point2::new(1.0 / 3.0, 1.0 / 3.0)) < 1e-15);
    }

    #[test]
    fn expectations_vanish_at_one() {
        for kind in MoveKind::ALL {
            for i in -2..3 {
                let e = table_expectation(kind, i);
                assert_eq!(e.st_q.value_at_one(), 0);
                assert_eq!(e.p_q.value_at_one(), 0);
                assert!(e.i_q.evaluate(1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn recipe_names_are_unique() {
        let mut names: Vec<String> = builtin_recipes().into_iter().map(|r| r.name).collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn reversing_twice_restores_the_pair() {
        let pair = builtin_recipes().into_iter().find(|r| r.name == "weak-b").unwrap().build().unwrap();
        let back = pair.reversed().unwrap().reversed().unwrap();
        assert_eq!((back.ind_param, back.orientation), (pair.ind_param, pair.orientation));
        assert_eq!(back.before, pair.before);
    }

    #[test]
    fn disk_membership() {
        let d = Disk { center: [1.0, 1.0], radius: 0.5 };
        assert!(d.contains([1.2, 1.2]));
        assert!(!d.contains([1.6, 1.0]));
    }

    #[test]
    fn kind_names_parse_back() {
        for kind in MoveKind::ALL {
            let text = serde_json::to_string(&kind).unwrap();
            assert_eq!(text, format!("\"{}\"", kind.name()));
            assert_eq!(serde_json::from_str::<MoveKind>(&text).unwrap(), kind);
        }
    }
}
