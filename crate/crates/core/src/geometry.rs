//! Planar primitives: segment crossings, winding numbers, turning angles and
//! transversal angles.
//!
//! Everything runs in `f64` with explicit [`Tolerances`]. Inputs that fall
//! inside a tolerance band are rejected rather than repaired; deciding that a
//! curve is generic is the caller's job.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Location, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 2D cross product (the determinant `det(self, o)`).
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn normalized(self) -> Point2 {
        let n = self.norm();
        Point2::new(self.x / n, self.y / n)
    }

    /// Rotation by +90 degrees.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(p: [f64; 2]) -> Self {
        Point2::new(p[0], p[1])
    }
}

/// Numerical thresholds that decide when an input is considered degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Minimum distance of a crossing parameter from either segment end.
    pub eps_intersect: f64,
    /// Minimum transversal angle, radians.
    pub eps_angle: f64,
    /// Coefficient comparison tolerance for real polynomials.
    pub eps_coeff: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eps_intersect: 1e-9, eps_angle: 1e-6, eps_coeff: 1e-9 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let all_positive = [self.eps_intersect, self.eps_angle, self.eps_coeff]
            .iter()
            .all(|e| e.is_finite() && *e > 0.0);
        if !all_positive {
            return Err(Error::InvalidTolerances("all tolerances must be finite and > 0".into()));
        }
        if self.eps_angle >= PI / 4.0 {
            return Err(Error::InvalidTolerances("eps_angle must be below pi/4".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }

    pub fn dir(&self) -> Point2 {
        self.b - self.a
    }

    pub fn at(&self, t: f64) -> Point2 {
        self.a.lerp(self.b, t)
    }

    pub fn length(&self) -> f64 {
        self.dir().norm()
    }

    pub fn distance_to(&self, p: Point2) -> f64 {
        let d = self.dir();
        let len2 = d.dot(d);
        let t = if len2 > 0.0 { ((p - self.a).dot(d) / len2).clamp(0.0, 1.0) } else { 0.0 };
        self.at(t).dist(p)
    }
}

/// A transversal interior crossing of two segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub point: Point2,
    pub ta: f64,
    pub tb: f64,
}

/// Intersect two segments.
///
/// Returns `Ok(None)` for disjoint segments and the crossing for a proper
/// interior intersection. Collinear overlaps, shared endpoints and crossings
/// closer than `eps_intersect` (in segment parameter units) to an endpoint are
/// `DegenerateIntersection`.
pub fn intersect_segments(a: &Segment, b: &Segment, tol: &Tolerances) -> Result<Option<Crossing>> {
    let da = a.dir();
    let db = b.dir();
    let denom = da.cross(db);
    let offset = b.a - a.a;
    let scale = da.norm() * db.norm();

    if denom.abs() <= f64::EPSILON * scale {
        // Parallel. Only a collinear overlap or touch matters.
        let line_dist = offset.cross(da).abs() / da.norm();
        if line_dist > tol.eps_intersect * da.norm() {
            return Ok(None);
        }
        let len2 = da.dot(da);
        let s0 = offset.dot(da) / len2;
        let s1 = (b.b - a.a).dot(da) / len2;
        let (lo, hi) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
        if hi < -tol.eps_intersect || lo > 1.0 + tol.eps_intersect {
            return Ok(None);
        }
        return Err(Error::DegenerateIntersection(Location::Unknown));
    }

    let ta = offset.cross(db) / denom;
    let tb = offset.cross(da) / denom;
    let eps = tol.eps_intersect;
    let outside = |t: f64| t < -eps || t > 1.0 + eps;
    if outside(ta) || outside(tb) {
        return Ok(None);
    }
    let near_end = |t: f64| t < eps || t > 1.0 - eps;
    if near_end(ta) || near_end(tb) {
        return Err(Error::DegenerateIntersection(Location::Unknown));
    }
    Ok(Some(Crossing { point: a.at(ta), ta, tb }))
}

/// Signed angle in `(-pi, pi]` rotating `u` onto `v`.
pub fn signed_angle(u: Point2, v: Point2) -> f64 {
    u.cross(v).atan2(u.dot(v))
}

/// Degree of the map `t -> (C(t) - p) / |C(t) - p|` for a closed polyline.
pub fn winding_number(closed: &[Point2], p: Point2) -> Result<i64> {
    let n = closed.len();
    let steps: Vec<f64> = (0..n).map(|i| signed_angle(closed[i] - p, closed[(i + 1) % n] - p)).collect();
    if steps.iter().any(|a| a.abs() > PI - 1e-12) {
        return Err(Error::PointTooClose { residual: 0.5 });
    }
    let total: f64 = steps.iter().sum();
    let turns = total / TAU;
    let rounded = turns.round();
    let residual = (turns - rounded).abs();
    if residual >= 0.25 || !turns.is_finite() {
        return Err(Error::PointTooClose { residual });
    }
    Ok(rounded as i64)
}

/// Exterior angle at every vertex of a closed polyline, each in `(-pi, pi)`.
pub fn vertex_turning_angles(closed: &[Point2], tol: &Tolerances) -> Result<Vec<f64>> {
    let n = closed.len();
    (0..n)
        .map(|i| {
            let prev = closed[(i + n - 1) % n];
            let here = closed[i];
            let next = closed[(i + 1) % n];
            let ang = signed_angle(here - prev, next - here);
            if ang.abs() > PI - tol.eps_angle {
                Err(Error::CuspVertex(Location::Vertex(i)))
            } else {
                Ok(ang)
            }
        })
        .collect()
}

/// Total turning of the tangent direction of a closed polyline, in radians.
pub fn total_turning(closed: &[Point2], tol: &Tolerances) -> Result<f64> {
    if closed.len() < 3 {
        return Err(Error::InvalidCurve("a closed polyline needs at least 3 vertices".into()));
    }
    Ok(vertex_turning_angles(closed, tol)?.iter().sum())
}

/// Non-oriented angle between `u` and `-v`, i.e. the crossing angle of two
/// strands entering a double point with velocities `u` and `v`.
pub fn transversal_angle(u: Point2, v: Point2, tol: &Tolerances) -> Result<f64> {
    let w = -v;
    let theta = u.cross(w).abs().atan2(u.dot(w));
    if theta < tol.eps_angle || theta > PI - tol.eps_angle {
        return Err(Error::TangentialPair { location: Location::Unknown, angle: theta.min(PI - theta) });
    }
    Ok(theta)
}

/// Shoelace signed area of a closed polyline (positive when counterclockwise).
pub fn signed_area(closed: &[Point2]) -> f64 {
    let n = closed.len();
    0.5 * (0..n).map(|i| closed[i].cross(closed[(i + 1) % n])).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: (f64, f64), b: (f64, f64)) -> Segment {
        Segment::new(Point2::new(a.0, a.1), Point2::new(b.0, b.1))
    }

    fn square(ccw: bool) -> Vec<Point2> {
        let mut v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        if !ccw {
            v.reverse();
        }
        v
    }

    fn regular(n: usize, ccw: bool) -> Vec<Point2> {
        let s = if ccw { 1.0 } else { -1.0 };
        (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                Point2::new(t.cos(), s * t.sin())
            })
            .collect()
    }

    #[test]
    fn symmetric_crossing() {
        let tol = Tolerances::default();
        let c = intersect_segments(&seg((0., 0.), (1., 0.)), &seg((0.5, -1.), (0.5, 1.)), &tol)
            .unwrap()
            .unwrap();
        assert!((c.point.x - 0.5).abs() < 1e-15 && c.point.y.abs() < 1e-15);
        assert!((c.ta - 0.5).abs() < 1e-15 && (c.tb - 0.5).abs() < 1e-15);
    }

    #[test]
    fn disjoint_and_degenerate_segments() {
        let tol = Tolerances::default();
        let a = seg((0., 0.), (1., 0.));
        assert!(intersect_segments(&a, &seg((2., 0.), (3., 0.)), &tol).unwrap().is_none());
        assert!(intersect_segments(&a, &seg((0., 1.), (1., 2.)), &tol).unwrap().is_none());
        let shared = intersect_segments(&a, &seg((0., 0.), (0., 1.)), &tol);
        assert!(matches!(shared, Err(Error::DegenerateIntersection(_))));
        let overlap = intersect_segments(&a, &seg((0.5, 0.), (2., 0.)), &tol);
        assert!(matches!(overlap, Err(Error::DegenerateIntersection(_))));
        let t_touch = intersect_segments(&a, &seg((0.5, 0.), (0.5, 1.)), &tol);
        assert!(matches!(t_touch, Err(Error::DegenerateIntersection(_))));
    }

    #[test]
    fn winding_of_squares() {
        let inside = Point2::new(0.5, 0.5);
        assert_eq!(winding_number(&square(true), inside).unwrap(), 1);
        assert_eq!(winding_number(&square(true), Point2::new(5., 5.)).unwrap(), 0);
        assert_eq!(winding_number(&square(false), inside).unwrap(), -1);
    }

    #[test]
    fn winding_on_the_curve_is_rejected() {
        let r = winding_number(&square(true), Point2::new(0.5, 0.0));
        assert!(matches!(r, Err(Error::PointTooClose { .. })));
    }

    #[test]
    fn turning_of_regular_polygons() {
        let tol = Tolerances::default();
        assert!((total_turning(&regular(16, true), &tol).unwrap() - TAU).abs() < 1e-12);
        assert!((total_turning(&regular(16, false), &tol).unwrap() + TAU).abs() < 1e-12);
    }

    #[test]
    fn fold_back_is_a_cusp() {
        let tol = Tolerances::default();
        let v = [Point2::new(0., 0.), Point2::new(1., 0.), Point2::new(0.5, 0.), Point2::new(0.5, 1.)];
        assert!(matches!(total_turning(&v, &tol), Err(Error::CuspVertex(Location::Vertex(1)))));
    }

    #[test]
    fn transversal_angles() {
        let tol = Tolerances::default();
        let a = transversal_angle(Point2::new(1., 0.), Point2::new(0., 1.), &tol).unwrap();
        assert!((a - PI / 2.0).abs() < 1e-15);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let b = transversal_angle(Point2::new(1., 0.), Point2::new(-r, r), &tol).unwrap();
        assert!((b - PI / 4.0).abs() < 1e-15);
        let par = transversal_angle(Point2::new(1., 0.), Point2::new(1., 0.), &tol);
        assert!(matches!(par, Err(Error::TangentialPair { .. })));
        let anti = transversal_angle(Point2::new(1., 0.), Point2::new(-1., 0.), &tol);
        assert!(matches!(anti, Err(Error::TangentialPair { .. })));
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerances::default().validate().is_ok());
        let bad = Tolerances { eps_angle: 1.0, ..Tolerances::default() };
        assert!(bad.validate().is_err());
        let neg = Tolerances { eps_coeff: 0.0, ..Tolerances::default() };
        assert!(neg.validate().is_err());
    }
}
