//! Combinatorial diagram of a generic polygonal immersion.
//!
//! A [`PolygonalCurve`] is cut at every passage through a double point into
//! [`Arc`]s. Passages are ordered by their traversal parameter measured from
//! the base vertex, so arc `k` always ends at passage `k` and arc `k + 1`
//! leaves it; arc `0` is the one that runs through the base vertex.
//!
//! Indices are stored doubled (`index2`) so that edge indices, which are
//! half-integers, stay exact.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Location, Result};
use crate::geometry::{
    intersect_segments, signed_angle, transversal_angle, vertex_turning_angles, winding_number, Point2, Segment,
    Tolerances,
};

/// Closed polygon standing in for an immersion `S^1 -> R^2`, with a base vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonalCurve {
    pub vertices: Vec<Point2>,
    pub base_index: usize,
}

impl PolygonalCurve {
    pub fn new(vertices: Vec<Point2>, base_index: usize) -> Result<Self> {
        let curve = PolygonalCurve { vertices, base_index };
        curve.validate()?;
        Ok(curve)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(Error::InvalidCurve(format!("need at least 3 vertices, got {n}")));
        }
        if self.base_index >= n {
            return Err(Error::InvalidCurve(format!(
                "base_index {} out of range for {n} vertices",
                self.base_index
            )));
        }
        if let Some(i) = self.vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidCurve(format!("vertex {i} is not finite")));
        }
        for i in 0..n {
            if self.vertices[i] == self.vertices[(i + 1) % n] {
                return Err(Error::InvalidCurve(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Segment `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    pub fn segment(&self, i: usize) -> Segment {
        let n = self.vertices.len();
        Segment::new(self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn with_base(&self, base_index: usize) -> Result<Self> {
        PolygonalCurve::new(self.vertices.clone(), base_index)
    }

    /// Same image traversed backwards, keeping the base vertex.
    pub fn reversed(&self) -> Self {
        let n = self.vertices.len();
        let vertices: Vec<Point2> = (0..n).map(|k| self.vertices[(n - k) % n]).collect();
        let base_index = (n - self.base_index) % n;
        PolygonalCurve { vertices, base_index }
    }

    /// Ordinal of vertex `v` along the traversal starting at the base vertex.
    fn ordinal(&self, v: usize) -> usize {
        let n = self.vertices.len();
        (v + n - self.base_index) % n
    }
}

/// One pass of the curve through a double point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Passage {
    pub double: usize,
    /// 0 for the first visit from the base point, 1 for the second.
    pub visit: u8,
    pub segment: usize,
    /// Affine parameter along `segment`.
    pub param: f64,
    /// Traversal parameter: segment ordinal from the base vertex plus `param`.
    pub key: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoublePoint {
    pub id: usize,
    pub position: Point2,
    /// Traversal parameters of the first and second visit, `t1 < t2`.
    pub t1: f64,
    pub t2: f64,
    /// Positions of the two visits in the sorted passage list.
    pub passage1: usize,
    pub passage2: usize,
    pub seg1: usize,
    pub seg2: usize,
    pub in1: usize,
    pub out1: usize,
    pub in2: usize,
    pub out2: usize,
    /// Unit tangent at the first and second visit.
    pub dir1: Point2,
    pub dir2: Point2,
    /// Angle between `dir1` and `-dir2`, in `(0, pi)`.
    pub theta: f64,
    /// Twice the index of the double point (always even).
    pub index2: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub id: usize,
    /// Polyline from the entry passage to the exit passage. For a curve
    /// without double points this is the whole loop, closed by repeating the
    /// base vertex at the end.
    pub points: Vec<Point2>,
    /// Segment carrying each piece `points[j] -> points[j + 1]`.
    pub piece_segments: Vec<usize>,
    /// Polyline vertices strictly inside the arc, in traversal order.
    pub vertices: Vec<usize>,
    pub start_passage: Option<usize>,
    pub end_passage: Option<usize>,
    /// Twice the edge index (always odd).
    pub index2: i64,
    /// Total turning of the tangent along the arc.
    pub turning: f64,
    /// Whether the arc borders the unbounded region.
    pub exterior: bool,
}

/// A region of the complement of the curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub index: i64,
    pub signed_area: f64,
    pub unbounded: bool,
    /// A point strictly inside the face.
    pub label_point: Point2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenericImmersion {
    pub curve: PolygonalCurve,
    pub tolerances: Tolerances,
    pub vertex_turning: Vec<f64>,
    pub passages: Vec<Passage>,
    pub arcs: Vec<Arc>,
    /// Ordered by first-visit parameter.
    pub doubles: Vec<DoublePoint>,
    pub faces: Vec<Face>,
    pub base_on_exterior: bool,
}

struct RawCrossing {
    seg: [usize; 2],
    param: [f64; 2],
    point: Point2,
}

fn bbox_disjoint(a: &Segment, b: &Segment) -> bool {
    a.a.x.max(a.b.x) < b.a.x.min(b.b.x)
        || b.a.x.max(b.b.x) < a.a.x.min(a.b.x)
        || a.a.y.max(a.b.y) < b.a.y.min(b.b.y)
        || b.a.y.max(b.b.y) < a.a.y.min(a.b.y)
}

/// Transverse crossings of non-adjacent segments. With `sink` set, violations
/// are collected there and scanning continues; otherwise the first one is
/// returned.
fn find_crossings(
    curve: &PolygonalCurve,
    tol: &Tolerances,
    mut sink: Option<&mut Vec<Error>>,
) -> Result<Vec<RawCrossing>> {
    let mut report = |e: Error| -> Result<()> {
        match sink.as_deref_mut() {
            Some(list) => {
                list.push(e);
                Ok(())
            }
            None => Err(e),
        }
    };
    let n = curve.len();
    let segments: Vec<Segment> = (0..n).map(|i| curve.segment(i)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a, b) = (&segments[i], &segments[j]);
            if bbox_disjoint(a, b) {
                continue;
            }
            let loc = || Location::Segments(vec![i, j]);
            match intersect_segments(a, b, tol) {
                Err(e) => report(e.at(loc()))?,
                Ok(None) => {}
                Ok(Some(c)) => {
                    if let Err(e) = transversal_angle(a.dir().normalized(), b.dir().normalized(), tol) {
                        report(e.at(loc()))?;
                        continue;
                    }
                    out.push(RawCrossing { seg: [i, j], param: [c.ta, c.tb], point: c.point });
                }
            }
        }
    }

    // Two crossings on one segment at (numerically) the same spot means three
    // strands meet.
    let mut per_segment: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for (ci, c) in out.iter().enumerate() {
        for s in 0..2 {
            per_segment[c.seg[s]].push((c.param[s], ci));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for (s, list) in per_segment.iter_mut().enumerate() {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        for w in list.windows(2) {
            if w[1].0 - w[0].0 < tol.eps_intersect {
                let other = |ci: usize| {
                    let c = &out[ci];
                    if c.seg[0] == s { c.seg[1] } else { c.seg[0] }
                };
                let mut segs = vec![s, other(w[0].1), other(w[1].1)];
                segs.sort_unstable();
                if seen.insert(segs.clone()) {
                    report(Error::TripleCoincidence(Location::Segments(segs)))?;
                }
            }
        }
    }
    Ok(out)
}

/// Every genericity violation of the curve rather than only the first:
/// cusps, degenerate or tangential segment pairs and triple points.
pub fn genericity_violations(curve: &PolygonalCurve, tol: &Tolerances) -> Vec<Error> {
    if let Err(e) = tol.validate().and_then(|_| curve.validate()) {
        return vec![e];
    }
    let v = &curve.vertices;
    let n = v.len();
    let mut out: Vec<Error> = (0..n)
        .filter(|&i| signed_angle(v[i] - v[(i + n - 1) % n], v[(i + 1) % n] - v[i]).abs() > PI - tol.eps_angle)
        .map(|i| Error::CuspVertex(Location::Vertex(i)))
        .collect();
    let _ = find_crossings(curve, tol, Some(&mut out));
    out
}

/// Distance from `p` to the nearest segment other than `skip`.
fn clearance(curve: &PolygonalCurve, p: Point2, skip: usize) -> f64 {
    (0..curve.len())
        .filter(|&s| s != skip)
        .map(|s| curve.segment(s).distance_to(p))
        .fold(f64::INFINITY, f64::min)
}

/// Left and right probe points beside the midpoint of a piece lying on `segment`.
pub(crate) fn side_probes(curve: &PolygonalCurve, a: Point2, b: Point2, segment: usize) -> (Point2, Point2) {
    let mid = a.lerp(b, 0.5);
    let delta = 0.25 * clearance(curve, mid, segment);
    let normal = (b - a).normalized().perp();
    (mid + normal * delta, mid - normal * delta)
}

fn longest_piece(arc: &Arc) -> usize {
    (0..arc.piece_segments.len())
        .max_by(|&i, &j| {
            let li = arc.points[i].dist(arc.points[i + 1]);
            let lj = arc.points[j].dist(arc.points[j + 1]);
            li.partial_cmp(&lj).unwrap_or(Ordering::Equal)
        })
        .unwrap_or(0)
}

fn build_arcs(curve: &PolygonalCurve, passages: &[Passage], doubles_pos: &[Point2], turning: &[f64]) -> Vec<Arc> {
    let n = curve.len();
    let base = curve.base_index;
    let vertex_at = |ord: usize| (base + ord) % n;

    if passages.is_empty() {
        let vertices: Vec<usize> = (0..n).map(vertex_at).collect();
        let mut points: Vec<Point2> = vertices.iter().map(|&v| curve.vertices[v]).collect();
        points.push(curve.vertices[base]);
        return vec![Arc {
            id: 0,
            points,
            piece_segments: vertices.clone(),
            turning: turning.iter().sum(),
            vertices,
            start_passage: None,
            end_passage: None,
            index2: 0,
            exterior: false,
        }];
    }

    let count = passages.len();
    (0..count)
        .map(|k| {
            let start = &passages[(k + count - 1) % count];
            let end = &passages[k];
            // Vertex ordinals strictly between the two passages, wrapping past
            // the base vertex for arc 0.
            let first_ord = curve.ordinal(start.segment) + 1;
            let last_ord = curve.ordinal(end.segment);
            let mut ords: Vec<usize> = Vec::new();
            if k == 0 {
                ords.extend(first_ord..n);
                ords.extend(0..=last_ord);
            } else if last_ord >= first_ord {
                ords.extend(first_ord..=last_ord);
            }
            let vertices: Vec<usize> = ords.iter().map(|&o| vertex_at(o)).collect();

            let mut points = vec![doubles_pos[start.double]];
            let mut piece_segments = vec![start.segment];
            for &v in &vertices {
                points.push(curve.vertices[v]);
                piece_segments.push(v);
            }
            points.push(doubles_pos[end.double]);

            Arc {
                id: k,
                turning: vertices.iter().map(|&v| turning[v]).sum(),
                points,
                piece_segments,
                vertices,
                start_passage: Some((k + count - 1) % count),
                end_passage: Some(k),
                index2: 0,
                exterior: false,
            }
        })
        .collect()
}

/// Faces of the planar graph formed by the arcs. Each face is traced with the
/// face on the left of its half-edges.
fn trace_faces(curve: &PolygonalCurve, arcs: &[Arc]) -> Result<(Vec<Face>, Vec<bool>)> {
    // Node identity by position is safe: double points are isolated from each
    // other and from vertices by the genericity checks.
    let mut nodes: Vec<Point2> = Vec::new();
    let mut lookup: HashMap<(u64, u64), usize> = HashMap::new();
    let mut node_of = |p: Point2, nodes: &mut Vec<Point2>| -> usize {
        *lookup.entry((p.x.to_bits(), p.y.to_bits())).or_insert_with(|| {
            nodes.push(p);
            nodes.len() - 1
        })
    };
    // (origin, dest, arc, piece)
    let mut edges: Vec<(usize, usize, usize, usize)> = Vec::new();
    for arc in arcs {
        let ids: Vec<usize> = arc.points.iter().map(|&p| node_of(p, &mut nodes)).collect();
        for j in 0..arc.piece_segments.len() {
            edges.push((ids[j], ids[j + 1], arc.id, j));
        }
    }

    let half_origin = |h: usize| if h % 2 == 0 { edges[h / 2].0 } else { edges[h / 2].1 };
    let half_dest = |h: usize| if h % 2 == 0 { edges[h / 2].1 } else { edges[h / 2].0 };

    let mut outgoing: Vec<Vec<(f64, usize)>> = vec![Vec::new(); nodes.len()];
    for h in 0..2 * edges.len() {
        let d = nodes[half_dest(h)] - nodes[half_origin(h)];
        outgoing[half_origin(h)].push((d.y.atan2(d.x), h));
    }
    for list in outgoing.iter_mut() {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    let next = |h: usize| -> usize {
        let v = half_dest(h);
        let twin = h ^ 1;
        let list = &outgoing[v];
        let pos = list.iter().position(|&(_, g)| g == twin).expect("twin is outgoing at dest");
        list[(pos + list.len() - 1) % list.len()].1
    };

    let mut face_of = vec![usize::MAX; 2 * edges.len()];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * edges.len() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = start;
        while face_of[h] == usize::MAX {
            face_of[h] = cycles.len();
            cycle.push(h);
            h = next(h);
        }
        cycles.push(cycle);
    }

    let areas: Vec<f64> = cycles
        .iter()
        .map(|c| 0.5 * c.iter().map(|&h| nodes[half_origin(h)].cross(nodes[half_dest(h)])).sum::<f64>())
        .collect();
    let outer = (0..cycles.len())
        .min_by(|&a, &b| areas[a].total_cmp(&areas[b]))
        .expect("at least one face");

    let mut faces = Vec::with_capacity(cycles.len());
    for (fid, cycle) in cycles.iter().enumerate() {
        let &h = cycle
            .iter()
            .max_by(|&&a, &&b| {
                let la = nodes[half_origin(a)].dist(nodes[half_dest(a)]);
                let lb = nodes[half_origin(b)].dist(nodes[half_dest(b)]);
                la.total_cmp(&lb)
            })
            .expect("non-empty cycle");
        let (_, _, arc, piece) = edges[h / 2];
        let (a, b) = (nodes[half_origin(h)], nodes[half_dest(h)]);
        let (left, _) = side_probes(curve, a, b, arcs[arc].piece_segments[piece]);
        let index = winding_number(&curve.vertices, left).map_err(|e| e.at(Location::Arc(arc)))?;
        faces.push(Face { id: fid, index, signed_area: areas[fid], unbounded: fid == outer, label_point: left });
    }

    let mut exterior = vec![false; arcs.len()];
    for (h, &f) in face_of.iter().enumerate() {
        if f == outer {
            exterior[edges[h / 2].2] = true;
        }
    }
    Ok((faces, exterior))
}

/// Build the diagram of a polygonal curve, rejecting anything non-generic.
pub fn build_immersion(curve: &PolygonalCurve, tol: &Tolerances) -> Result<GenericImmersion> {
    tol.validate()?;
    curve.validate()?;
    let n = curve.len();
    let turning = vertex_turning_angles(&curve.vertices, tol)?;
    let crossings = find_crossings(curve, tol, None)?;

    // Order crossings by first visit from the base point.
    let key = |seg: usize, t: f64| curve.ordinal(seg) as f64 + t;
    let mut visits: Vec<(usize, [usize; 2])> = (0..crossings.len())
        .map(|ci| {
            let c = &crossings[ci];
            let (k0, k1) = (key(c.seg[0], c.param[0]), key(c.seg[1], c.param[1]));
            (ci, if k0 < k1 { [0, 1] } else { [1, 0] })
        })
        .collect();
    let first_key = |v: &(usize, [usize; 2])| {
        let c = &crossings[v.0];
        key(c.seg[v.1[0]], c.param[v.1[0]])
    };
    visits.sort_by(|a, b| first_key(a).total_cmp(&first_key(b)));

    let mut passages: Vec<Passage> = Vec::with_capacity(2 * visits.len());
    for (d, (ci, order)) in visits.iter().enumerate() {
        let c = &crossings[*ci];
        for (visit, &side) in order.iter().enumerate() {
            passages.push(Passage {
                double: d,
                visit: visit as u8,
                segment: c.seg[side],
                param: c.param[side],
                key: key(c.seg[side], c.param[side]),
            });
        }
    }
    passages.sort_by(|a, b| a.key.total_cmp(&b.key));
    let positions: Vec<Point2> = visits.iter().map(|(ci, _)| crossings[*ci].point).collect();

    let mut arcs = build_arcs(curve, &passages, &positions, &turning);

    for arc in arcs.iter_mut() {
        let j = longest_piece(arc);
        let (left, right) = side_probes(curve, arc.points[j], arc.points[j + 1], arc.piece_segments[j]);
        let loc = || Location::Arc(arc.id);
        let wl = winding_number(&curve.vertices, left).map_err(|e| e.at(loc()))?;
        let wr = winding_number(&curve.vertices, right).map_err(|e| e.at(loc()))?;
        if wl - wr != 1 {
            return Err(Error::ProbeInconsistent(loc()));
        }
        arc.index2 = wl + wr;
    }

    let count = passages.len();
    let mut slot = vec![[0usize; 2]; visits.len()];
    for (k, p) in passages.iter().enumerate() {
        slot[p.double][p.visit as usize] = k;
    }
    let mut doubles = Vec::with_capacity(visits.len());
    for (d, [k1, k2]) in slot.iter().copied().enumerate() {
        let (p1, p2) = (&passages[k1], &passages[k2]);
        let loc = || Location::Segments(vec![p1.segment, p2.segment]);
        let dir1 = curve.segment(p1.segment).dir().normalized();
        let dir2 = curve.segment(p2.segment).dir().normalized();
        let theta = transversal_angle(dir1, dir2, tol).map_err(|e| e.at(loc()))?;
        let (in1, out1, in2, out2) = (k1, (k1 + 1) % count, k2, (k2 + 1) % count);
        let (a, b, c, e) = (arcs[in1].index2, arcs[out1].index2, arcs[in2].index2, arcs[out2].index2);
        if (a - b).abs() != 2 || (c - e).abs() != 2 || a + b != c + e {
            return Err(Error::ProbeInconsistent(loc()));
        }
        doubles.push(DoublePoint {
            id: d,
            position: positions[d],
            t1: p1.key,
            t2: p2.key,
            passage1: k1,
            passage2: k2,
            seg1: p1.segment,
            seg2: p2.segment,
            in1,
            out1,
            in2,
            out2,
            dir1,
            dir2,
            theta,
            index2: (a + b) / 2,
        });
    }

    let (faces, exterior) = trace_faces(curve, &arcs)?;
    for (arc, ext) in arcs.iter_mut().zip(exterior) {
        arc.exterior = ext;
    }
    let base_on_exterior = arcs[0].exterior && arcs[0].index2.abs() == 1;
    debug_assert_eq!(curve.len(), n);

    Ok(GenericImmersion {
        curve: curve.clone(),
        tolerances: *tol,
        vertex_turning: turning,
        passages,
        arcs,
        doubles,
        faces,
        base_on_exterior,
    })
}

/// Whitney index of the closed curve.
pub fn rotation_number(imm: &GenericImmersion) -> Result<i64> {
    let total: f64 = imm.vertex_turning.iter().sum();
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() >= 0.25 {
        return Err(Error::CuspVertex(Location::Unknown));
    }
    Ok(rounded as i64)
}

/// Move the base vertex onto the first exterior arc (in traversal order) that
/// has a polyline vertex in its interior.
pub fn rebase_to_exterior(imm: &GenericImmersion) -> Result<GenericImmersion> {
    if imm.base_on_exterior {
        return Ok(imm.clone());
    }
    let arc = imm
        .arcs
        .iter()
        .find(|a| a.exterior && a.index2.abs() == 1 && !a.vertices.is_empty())
        .ok_or(Error::NoExteriorVertex)?;
    let vertex = arc.vertices[arc.vertices.len() / 2];
    let rebuilt = build_immersion(&imm.curve.with_base(vertex)?, &imm.tolerances)?;
    if !rebuilt.base_on_exterior {
        return Err(Error::NoExteriorVertex);
    }
    Ok(rebuilt)
}

impl GenericImmersion {
    pub fn n_doubles(&self) -> usize {
        self.doubles.len()
    }

    pub fn require_exterior_base(&self) -> Result<()> {
        if self.base_on_exterior {
            Ok(())
        } else {
            Err(Error::BaseNotExterior)
        }
    }

    /// Arc containing the regular point at parameter `t` of `segment`.
    pub fn arc_at(&self, segment: usize, t: f64) -> Result<usize> {
        if segment >= self.curve.len() || !(0.0..1.0).contains(&t) {
            return Err(Error::UnknownPoint(format!("segment {segment}, t = {t}")));
        }
        if self.passages.is_empty() {
            return Ok(0);
        }
        let key = self.curve.ordinal(segment) as f64 + t;
        let eps = self.tolerances.eps_intersect;
        if self.passages.iter().any(|p| (p.key - key).abs() < eps) {
            return Err(Error::UnknownPoint(format!("segment {segment}, t = {t} is a double point")));
        }
        let k = self.passages.partition_point(|p| p.key < key);
        Ok(k % self.passages.len())
    }

    pub fn base_arc(&self) -> &Arc {
        &self.arcs[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(n: usize, ccw: bool) -> PolygonalCurve {
        let s = if ccw { 1.0 } else { -1.0 };
        let v = (0..n)
            .map(|k| {
                let t = TAU * (k as f64 + 0.25) / n as f64;
                Point2::new(t.cos(), s * t.sin())
            })
            .collect();
        PolygonalCurve::new(v, 0).unwrap()
    }

    #[test]
    fn curve_validation() {
        let p = |x, y| Point2::new(x, y);
        assert!(PolygonalCurve::new(vec![p(0., 0.), p(1., 0.)], 0).is_err());
        assert!(PolygonalCurve::new(vec![p(0., 0.), p(1., 0.), p(1., 0.)], 0).is_err());
        assert!(PolygonalCurve::new(vec![p(0., 0.), p(1., 0.), p(0., 1.)], 3).is_err());
        assert!(PolygonalCurve::new(vec![p(0., 0.), p(f64::NAN, 0.), p(0., 1.)], 0).is_err());
    }

    #[test]
    fn simple_polygon() {
        let imm = build_immersion(&polygon(16, true), &Tolerances::default()).unwrap();
        assert!(imm.doubles.is_empty());
        assert_eq!(imm.arcs.len(), 1);
        assert_eq!(imm.arcs[0].index2, 1);
        assert!(imm.base_on_exterior);
        assert_eq!(rotation_number(&imm).unwrap(), 1);
        assert_eq!(imm.faces.len(), 2);
        let cw = build_immersion(&polygon(16, false), &Tolerances::default()).unwrap();
        assert_eq!(cw.arcs[0].index2, -1);
        assert_eq!(rotation_number(&cw).unwrap(), -1);
    }

    #[test]
    fn reversal_keeps_base_vertex() {
        let c = polygon(7, true).with_base(3).unwrap();
        let r = c.reversed();
        assert_eq!(r.vertices[r.base_index], c.vertices[c.base_index]);
        assert_eq!(r.reversed(), c);
    }

    #[test]
    fn arc_lookup() {
        let p = |x, y| Point2::new(x, y);
        // Bow tie: one crossing between segments 0 and 2.
        let c = PolygonalCurve::new(vec![p(0., 0.), p(2., 2.), p(2., 0.), p(0., 2.)], 0).unwrap();
        let imm = build_immersion(&c, &Tolerances::default()).unwrap();
        assert_eq!(imm.n_doubles(), 1);
        assert_eq!(imm.arc_at(0, 0.25).unwrap(), 0);
        assert_eq!(imm.arc_at(1, 0.5).unwrap(), 1);
        assert_eq!(imm.arc_at(3, 0.5).unwrap(), 0);
        assert!(imm.arc_at(0, 0.5).is_err());
        assert!(imm.arc_at(9, 0.5).is_err());
    }
}
