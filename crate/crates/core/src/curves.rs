//! Standard curve families and random generic curves.

use std::f64::consts::TAU;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{analyze_immersion, DEFAULT_TAYLOR_DEPTH};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Tolerances};
use crate::immersion::{build_immersion, PolygonalCurve};
use crate::io::CurveFile;

/// Largest double-point count the random generator accepts.
pub const MAX_RANDOM_DOUBLES: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Circle,
    FigureEight,
    Flower,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circle" => Ok(Family::Circle),
            "figure-eight" | "figure8" | "f8" => Ok(Family::FigureEight),
            "flower" => Ok(Family::Flower),
            other => Err(Error::UnsupportedParam(format!("unknown family {other:?}"))),
        }
    }
}

fn sample(resolution: usize, f: impl Fn(f64) -> Point2) -> Vec<Point2> {
    // The quarter-step phase keeps vertices off the symmetry axes, where the
    // lemniscate and the flowers cross themselves.
    (0..resolution).map(|k| f(TAU * (k as f64 + 0.25) / resolution as f64)).collect()
}

/// Polygonal circle, figure-eight, or flower with `param` inner loops.
///
/// Every family starts at its rightmost point, which lies on the outer
/// boundary, so the base vertex is exterior.
pub fn make_standard_curve(family: Family, param: usize, resolution: usize) -> Result<CurveFile> {
    if resolution < 16 {
        return Err(Error::UnsupportedParam(format!("resolution {resolution} < 16")));
    }
    let vertices = match family {
        Family::Circle => (0..resolution)
            .map(|k| {
                let t = TAU * k as f64 / resolution as f64;
                Point2::new(t.cos(), t.sin())
            })
            .collect(),
        Family::FigureEight => sample(resolution, |t| Point2::new(t.cos(), 0.5 * (2.0 * t).sin())),
        Family::Flower => {
            if resolution < 8 * (param + 1) {
                return Err(Error::UnsupportedParam(format!(
                    "flower({param}) needs resolution >= {}",
                    8 * (param + 1)
                )));
            }
            let m = (param + 1) as f64;
            let c = 1.5 / m;
            sample(resolution, |t| {
                Point2::new(t.cos() + c * (m * t).cos(), t.sin() + c * (m * t).sin())
            })
        }
    };
    let curve = PolygonalCurve::new(vertices, 0)?;
    Ok(CurveFile::from(&curve))
}

fn rightmost(vertices: &[Point2]) -> usize {
    (0..vertices.len()).max_by(|&a, &b| vertices[a].x.total_cmp(&vertices[b].x)).unwrap_or(0)
}

/// Random trigonometric loop with exactly `target_doubles` transverse double
/// points, deterministic per seed. Candidates must pass a stricter genericity
/// screen than the defaults so that small perturbations stay generic.
pub fn random_generic_curve(seed: u64, target_doubles: usize, max_attempts: usize) -> Result<CurveFile> {
    if target_doubles > MAX_RANDOM_DOUBLES {
        return Err(Error::UnsupportedParam(format!(
            "target of {target_doubles} double points exceeds the limit of {MAX_RANDOM_DOUBLES}"
        )));
    }
    let strict = Tolerances { eps_intersect: 1e-4, eps_angle: 2e-2, eps_coeff: 1e-9 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // The amplitude adapts to steer the crossing count toward the target.
    let mut amplitude: f64 = 0.2 + 0.06 * target_doubles as f64;
    for _ in 0..max_attempts {
        let harmonics = rng.random_range(2..=3 + target_doubles / 3);
        let mut coeffs: Vec<(f64, f64, f64)> = Vec::new(); // (frequency, re, im)
        let lead = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        coeffs.push((lead, 1.0, 0.0));
        for k in 1..=harmonics {
            for sign in [1.0, -1.0] {
                let freq = sign * k as f64;
                if freq == lead {
                    continue;
                }
                let scale = amplitude / (k as f64).powf(1.2);
                coeffs.push((freq, rng.random_range(-scale..scale), rng.random_range(-scale..scale)));
            }
        }
        let resolution = 96 + 48 * harmonics;
        let vertices: Vec<Point2> = (0..resolution)
            .map(|j| {
                let t = TAU * j as f64 / resolution as f64;
                coeffs.iter().fold(Point2::default(), |acc, &(f, re, im)| {
                    let (s, c) = (f * t).sin_cos();
                    acc + Point2::new(re * c - im * s, re * s + im * c)
                })
            })
            .collect();
        let base = rightmost(&vertices);
        let Ok(curve) = PolygonalCurve::new(vertices, base) else { continue };
        let Ok(imm) = build_immersion(&curve, &strict) else { continue };
        if imm.n_doubles() < target_doubles {
            amplitude = (amplitude * 1.1).min(3.0);
            continue;
        }
        if imm.n_doubles() > target_doubles {
            amplitude *= 0.9;
            continue;
        }
        if !imm.base_on_exterior {
            continue;
        }
        // The screen passed; the curve must also analyze cleanly at the defaults.
        let Ok(imm) = build_immersion(&curve, &Tolerances::default()) else { continue };
        match analyze_immersion(imm, false, DEFAULT_TAYLOR_DEPTH) {
            Ok(a) if a.report.n_doubles == target_doubles => return Ok(CurveFile::from(&curve)),
            _ => continue,
        }
    }
    Err(Error::GenerationExhausted { target: target_doubles, attempts: max_attempts })
}

fn file(points: &[[f64; 2]]) -> CurveFile {
    CurveFile { vertices: points.to_vec(), base_index: 0 }
}

/// Deliberately non-generic curves: a near-tangential crossing, three strands
/// through one point, and a vertex resting on another segment.
pub fn degenerate_fixtures() -> Vec<(&'static str, CurveFile)> {
    let h = 0.5 * 3f64.sqrt();
    vec![
        (
            "degenerate_tangency",
            file(&[
                [-2.0, -1e-7],
                [2.0, 1e-7],
                [2.5, 1.0],
                [-3.5, 1.0],
                [-3.0, 1.5e-7],
                [3.0, -1.5e-7],
                [3.5, -1.0],
                [-2.5, -1.0],
            ]),
        ),
        (
            "triple_point",
            file(&[
                [-1.0, 0.0],
                [1.0, 0.0],
                [1.3, -1.4],
                [-0.5, -h],
                [0.5, h],
                [1.8, 0.4],
                [1.8, -0.6],
                [0.5, -h],
                [-0.5, h],
                [-1.4, 0.9],
            ]),
        ),
        ("endpoint_touch", file(&[[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [1.0, 0.0], [0.0, 2.0]])),
    ]
}
