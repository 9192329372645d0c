#![allow(dead_code)]

use curve_invariants::selftest::{random_corpus, standard_fixtures};
use curve_invariants::{analyze_curve, Analysis, AnalyzeOptions, Point2, PolygonalCurve};

pub fn curve(name: &str) -> PolygonalCurve {
    standard_fixtures().into_iter().find(|(n, _)| n == name).expect("standard fixture").1.to_curve().unwrap()
}

/// Standard fixtures followed by `random` random curves.
pub fn corpus(random: usize, seed: u64) -> Vec<(String, PolygonalCurve)> {
    let mut all = standard_fixtures();
    all.extend(random_corpus(random, seed).unwrap());
    all.into_iter().map(|(n, f)| (n, f.to_curve().unwrap())).collect()
}

pub fn analyze(c: &PolygonalCurve) -> Analysis {
    analyze_curve(c, &AnalyzeOptions { rebase: true, ..AnalyzeOptions::default() }).unwrap()
}

/// Winding number by signed crossings of the rightward horizontal ray.
pub fn ray_winding(vertices: &[Point2], p: Point2) -> i64 {
    let n = vertices.len();
    let mut w = 0;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        let upward = a.y <= p.y && b.y > p.y;
        let downward = a.y > p.y && b.y <= p.y;
        if !(upward || downward) {
            continue;
        }
        let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
        if x > p.x {
            w += if upward { 1 } else { -1 };
        }
    }
    w
}
