//! Ascending-diagram weights, orientation-preserving smoothing and the
//! nesting forest of the smoothed circles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Location, Result};
use crate::geometry::{signed_area, winding_number, Point2};
use crate::immersion::GenericImmersion;

/// Global orientation of the weight convention. The weight of a double point
/// is `-WEIGHT_ORIENTATION * sign(det(v1, v2))` for first/second incoming
/// tangents `v1`, `v2`; the test suite pins this against the triple-point
/// behaviour of the quantized strangeness.
pub const WEIGHT_ORIENTATION: i64 = 1;

/// Weight `w(d) = ±1` of every double point, indexed by double id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMap(pub Vec<i64>);

impl WeightMap {
    pub fn get(&self, double: usize) -> i64 {
        self.0[double]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Local writhe of each crossing in the ascending diagram (first passage from
/// the base point goes under).
pub fn compute_weights(imm: &GenericImmersion) -> Result<WeightMap> {
    imm.require_exterior_base()?;
    Ok(WeightMap(
        imm.doubles
            .iter()
            .map(|d| {
                let det = d.dir1.cross(d.dir2);
                -WEIGHT_ORIENTATION * if det > 0.0 { 1 } else { -1 }
            })
            .collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexSign {
    /// Inherited through the incoming edge of index `ind(d) + 1/2`.
    Plus,
    /// Inherited through the incoming edge of index `ind(d) - 1/2`.
    Minus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothedVertex {
    pub double: usize,
    pub sign: VertexSign,
    pub weight: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothedCircle {
    pub id: usize,
    /// Arc ids in traversal order around the circle.
    pub arcs: Vec<usize>,
    /// Smoothed vertices, one at the end of each arc in `arcs`.
    pub vertices: Vec<SmoothedVertex>,
    pub rot: i64,
    pub index2: i64,
    /// `rot * sum of inherited weights`; absent when no weights were supplied.
    pub alpha: Option<i64>,
    /// Closed polygon with the smoothed corners cut off.
    pub polygon: Vec<Point2>,
    /// Point of the circle far from the smoothing corners.
    pub sample: Point2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothedCurve {
    pub circles: Vec<SmoothedCircle>,
    pub circle_of_arc: Vec<usize>,
    /// Circle holding `d~+` and `d~-` for each double point.
    pub plus_circle: Vec<usize>,
    pub minus_circle: Vec<usize>,
}

impl SmoothedCurve {
    /// The canonical map back to the double point of a smoothed vertex.
    pub fn double_of(&self, circle: usize, vertex: usize) -> usize {
        self.circles[circle].vertices[vertex].double
    }

    pub fn vertex_count(&self) -> usize {
        self.circles.iter().map(|c| c.vertices.len()).sum()
    }

    fn alpha_of(&self, circle: usize) -> Result<i64> {
        self.circles[circle]
            .alpha
            .ok_or_else(|| Error::UnknownPoint("smoothing carries no weights".into()))
    }
}

/// Radius of the corner cut at each double point: a quarter of its clearance
/// from everything it is not incident to.
fn corner_radii(imm: &GenericImmersion) -> Vec<f64> {
    let curve = &imm.curve;
    imm.doubles
        .iter()
        .map(|d| {
            let p = d.position;
            let mut r = f64::INFINITY;
            for other in &imm.doubles {
                if other.id != d.id {
                    r = r.min(p.dist(other.position));
                }
            }
            for s in [d.seg1, d.seg2] {
                let seg = curve.segment(s);
                r = r.min(p.dist(seg.a)).min(p.dist(seg.b));
            }
            for s in 0..curve.len() {
                if s != d.seg1 && s != d.seg2 {
                    r = r.min(curve.segment(s).distance_to(p));
                }
            }
            0.25 * r
        })
        .collect()
}

/// Smooth every double point along the orientation.
pub fn smooth(imm: &GenericImmersion, weights: Option<&WeightMap>) -> Result<SmoothedCurve> {
    if let Some(w) = weights {
        if w.len() != imm.n_doubles() {
            return Err(Error::CrossCheckFailed("weight map does not match the immersion".into()));
        }
    }
    let arcs = &imm.arcs;
    let passages = &imm.passages;
    let count = passages.len();

    if count == 0 {
        let polygon = imm.curve.vertices.clone();
        let rot = if signed_area(&polygon) > 0.0 { 1 } else { -1 };
        let arc = &arcs[0];
        let sample = arc.points[0].lerp(arc.points[1], 0.5);
        return Ok(SmoothedCurve {
            circles: vec![SmoothedCircle {
                id: 0,
                arcs: vec![0],
                vertices: Vec::new(),
                rot,
                index2: arc.index2,
                alpha: weights.map(|_| 0),
                polygon,
                sample,
            }],
            circle_of_arc: vec![0],
            plus_circle: Vec::new(),
            minus_circle: Vec::new(),
        });
    }

    // Arc k ends at passage k; the smoothing sends it to the arc leaving the
    // other visit of the same double point.
    let next_arc: Vec<usize> = (0..count)
        .map(|k| {
            let d = &imm.doubles[passages[k].double];
            if passages[k].visit == 0 { d.out2 } else { d.out1 }
        })
        .collect();

    let radii = corner_radii(imm);
    let mut circle_of_arc = vec![usize::MAX; count];
    let mut plus_circle = vec![usize::MAX; imm.n_doubles()];
    let mut minus_circle = vec![usize::MAX; imm.n_doubles()];
    let mut circles = Vec::new();

    for start in 0..count {
        if circle_of_arc[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut cycle = Vec::new();
        let mut a = start;
        while circle_of_arc[a] == usize::MAX {
            circle_of_arc[a] = id;
            cycle.push(a);
            a = next_arc[a];
        }

        let index2 = arcs[cycle[0]].index2;
        if cycle.iter().any(|&a| arcs[a].index2 != index2) {
            return Err(Error::ProbeInconsistent(Location::Circle(id)));
        }

        let mut vertices = Vec::with_capacity(cycle.len());
        let mut polygon = Vec::new();
        let mut sample = (0.0, Point2::default());
        for &a in &cycle {
            let arc = &arcs[a];
            let pts = &arc.points;
            let last = pts.len() - 1;
            let start_double = passages[arc.start_passage.expect("arc has ends")].double;
            let end_double = passages[arc.end_passage.expect("arc has ends")].double;

            polygon.push(pts[0] + (pts[1] - pts[0]).normalized() * radii[start_double]);
            polygon.extend_from_slice(&pts[1..last]);
            polygon.push(pts[last] - (pts[last] - pts[last - 1]).normalized() * radii[end_double]);

            for j in 0..last {
                let len = pts[j].dist(pts[j + 1]);
                if len > sample.0 {
                    sample = (len, pts[j].lerp(pts[j + 1], 0.5));
                }
            }

            let d = &imm.doubles[end_double];
            let sign = if arc.index2 == d.index2 + 1 { VertexSign::Plus } else { VertexSign::Minus };
            match sign {
                VertexSign::Plus => plus_circle[end_double] = id,
                VertexSign::Minus => minus_circle[end_double] = id,
            }
            vertices.push(SmoothedVertex { double: end_double, sign, weight: weights.map(|w| w.get(end_double)) });
        }

        let rot = if signed_area(&polygon) > 0.0 { 1 } else { -1 };
        let alpha = weights.map(|_| rot * vertices.iter().filter_map(|v| v.weight).sum::<i64>());
        circles.push(SmoothedCircle { id, arcs: cycle, vertices, rot, index2, alpha, polygon, sample: sample.1 });
    }

    Ok(SmoothedCurve { circles, circle_of_arc, plus_circle, minus_circle })
}

/// A point on the curve: a regular point (by arc, or by segment parameter) or
/// a double point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveLocation {
    Arc(usize),
    Segment { segment: usize, t: f64 },
    Double(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaAt {
    Regular(i64),
    /// `alpha2` is `alpha_+ + alpha_-`, twice the average value at the double point.
    Double { plus: i64, minus: i64, alpha2: i64 },
}

pub fn alpha_at(imm: &GenericImmersion, smoothed: &SmoothedCurve, at: CurveLocation) -> Result<AlphaAt> {
    let regular = |arc: usize| -> Result<AlphaAt> {
        let circle = *smoothed
            .circle_of_arc
            .get(arc)
            .ok_or_else(|| Error::UnknownPoint(format!("arc {arc}")))?;
        Ok(AlphaAt::Regular(smoothed.alpha_of(circle)?))
    };
    match at {
        CurveLocation::Arc(a) => regular(a),
        CurveLocation::Segment { segment, t } => regular(imm.arc_at(segment, t)?),
        CurveLocation::Double(d) => {
            if d >= imm.n_doubles() {
                return Err(Error::UnknownPoint(format!("double point {d}")));
            }
            let plus = smoothed.alpha_of(smoothed.plus_circle[d])?;
            let minus = smoothed.alpha_of(smoothed.minus_circle[d])?;
            Ok(AlphaAt::Double { plus, minus, alpha2: plus + minus })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    /// Twice the index (always even).
    pub index2: i64,
    pub chi: i64,
    /// Circle bounding the region from outside; `None` for the unbounded region.
    pub boundary: Option<usize>,
    /// Circles bounding the holes of the region.
    pub children: Vec<usize>,
}

impl Region {
    pub fn index(&self) -> i64 {
        self.index2 / 2
    }
}

/// Regions of the complement of the smoothed curve. Region 0 is unbounded;
/// region `c + 1` is the one just inside circle `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionForest {
    pub regions: Vec<Region>,
    pub parent: Vec<Option<usize>>,
}

impl RegionForest {
    pub fn root(&self) -> &Region {
        &self.regions[0]
    }

    pub fn region_inside(&self, circle: usize) -> &Region {
        &self.regions[circle + 1]
    }
}

pub fn build_region_forest(smoothed: &SmoothedCurve) -> Result<RegionForest> {
    let circles = &smoothed.circles;
    let k = circles.len();

    // contains[b][a]: circle a lies inside circle b.
    let mut contains = vec![vec![false; k]; k];
    for (b, outer) in circles.iter().enumerate() {
        for (a, inner) in circles.iter().enumerate() {
            if a == b {
                continue;
            }
            let w = winding_number(&outer.polygon, inner.sample).map_err(|_| {
                Error::ContainmentAmbiguous(Location::Circle(a))
            })?;
            if w != 0 && w != outer.rot {
                return Err(Error::ContainmentAmbiguous(Location::Circle(a)));
            }
            contains[b][a] = w != 0;
        }
    }
    let depth: Vec<usize> = (0..k).map(|a| (0..k).filter(|&b| contains[b][a]).count()).collect();
    let parent: Vec<Option<usize>> = (0..k)
        .map(|a| (0..k).filter(|&b| contains[b][a]).max_by_key(|&b| depth[b]))
        .collect();

    let mut regions = vec![Region { index2: 0, chi: 0, boundary: None, children: Vec::new() }];
    for c in circles {
        regions.push(Region { index2: c.index2 + c.rot, chi: 0, boundary: Some(c.id), children: Vec::new() });
    }
    for (a, p) in parent.iter().enumerate() {
        let host = p.map_or(0, |b| b + 1);
        regions[host].children.push(a);
    }
    for r in regions.iter_mut() {
        r.chi = 1 - r.children.len() as i64;
    }
    // The index just outside each circle must match the region containing it.
    for (a, c) in circles.iter().enumerate() {
        let host = parent[a].map_or(0, |b| b + 1);
        if c.index2 - c.rot != regions[host].index2 {
            return Err(Error::ContainmentAmbiguous(Location::Circle(a)));
        }
    }
    Ok(RegionForest { regions, parent })
}
