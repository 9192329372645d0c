//! Property suite over the standard fixtures, random curves and move pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{analyze_curve, AnalyzeOptions, InvariantReport};
use crate::curves::{make_standard_curve, random_generic_curve, Family};
use crate::error::Result;
use crate::geometry::{Point2, Tolerances};
use crate::immersion::PolygonalCurve;
use crate::io::CurveFile;
use crate::laurent::IntPoly;
use crate::moves::{builtin_pairs, verify_modification};

/// Random curves get between 0 and this many double points.
pub const SELFTEST_MAX_DOUBLES: usize = 12;
const RANDOM_ATTEMPTS: usize = 2000;
const PERTURBATION: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelftestOptions {
    pub curves: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions { curves: 20, seed: 7, tolerances: Tolerances::default() }
    }
}

/// `circle16`, `f8` and `k2`.
pub fn standard_fixtures() -> Vec<(String, CurveFile)> {
    [("circle16", Family::Circle, 0, 16), ("f8", Family::FigureEight, 0, 64), ("k2", Family::Flower, 1, 64)]
        .into_iter()
        .map(|(name, family, param, res)| {
            (name.to_string(), make_standard_curve(family, param, res).expect("standard family parameters are valid"))
        })
        .collect()
}

/// Corpus of `count` random curves, deterministic per seed.
pub fn random_corpus(count: usize, seed: u64) -> Result<Vec<(String, CurveFile)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let target = rng.random_range(0..=SELFTEST_MAX_DOUBLES);
            let curve_seed: u64 = rng.random();
            let file = random_generic_curve(curve_seed, target, RANDOM_ATTEMPTS)?;
            Ok((format!("random-{k:02}-n{target}"), file))
        })
        .collect()
}

/// The integer part of a report: everything that must be exactly stable.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerSignature {
    pub rot: i64,
    pub n_doubles: usize,
    pub st_q: IntPoly,
    pub p_q: IntPoly,
    pub j_minus: i64,
    pub j_plus: i64,
    pub st: i64,
    pub tabachnikov: Vec<i64>,
}

impl From<&InvariantReport> for IntegerSignature {
    fn from(r: &InvariantReport) -> Self {
        IntegerSignature {
            rot: r.rot,
            n_doubles: r.n_doubles,
            st_q: r.st_q.clone(),
            p_q: r.p_q.clone(),
            j_minus: r.j_minus,
            j_plus: r.j_plus,
            st: r.st,
            tabachnikov: r.tabachnikov.clone(),
        }
    }
}

/// Every vertex moved by at most `radius`, deterministic per seed.
pub fn perturb(curve: &PolygonalCurve, radius: f64, seed: u64) -> Result<PolygonalCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = curve
        .vertices
        .iter()
        .map(|&p| {
            let angle = rng.random_range(0.0..std::f64::consts::TAU);
            let r = radius * rng.random_range(0.0..=1.0);
            p + Point2::new(angle.cos(), angle.sin()) * r
        })
        .collect();
    PolygonalCurve::new(vertices, curve.base_index)
}

/// Another vertex on the base arc, if the arc has one.
pub fn shifted_base(curve: &PolygonalCurve, tol: &Tolerances) -> Result<Option<PolygonalCurve>> {
    let opts = AnalyzeOptions { tolerances: *tol, ..AnalyzeOptions::default() };
    let (imm, _) = crate::analysis::prepare_immersion(curve, &opts)?;
    let other = imm.base_arc().vertices.iter().copied().find(|&v| v != curve.base_index);
    other.map(|v| curve.with_base(v)).transpose()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveOutcome {
    pub name: String,
    pub n_doubles: Option<usize>,
    pub checks: BTreeMap<String, bool>,
    pub error: Option<String>,
}

impl CurveOutcome {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.values().all(|&ok| ok)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoveOutcome {
    pub name: String,
    pub pass: bool,
    /// Failed because a cross-check of either side failed, not because of the table.
    pub cross_check_failed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestSummary {
    pub curves: Vec<CurveOutcome>,
    pub moves: Vec<MoveOutcome>,
}

impl SelftestSummary {
    pub fn all_pass(&self) -> bool {
        self.curves.iter().all(CurveOutcome::pass) && self.moves.iter().all(|m| m.pass)
    }

    /// One row per curve, one column per check; `.` passes, `X` fails.
    pub fn to_text(&self) -> String {
        let columns: Vec<&String> = {
            let mut c: Vec<&String> = self.curves.iter().flat_map(|o| o.checks.keys()).collect();
            c.sort();
            c.dedup();
            c
        };
        let mut s = String::from("columns:\n");
        for (k, c) in columns.iter().enumerate() {
            let _ = writeln!(s, "  {:>2} {c}", k + 1);
        }
        let width = self.curves.iter().map(|o| o.name.len()).max().unwrap_or(4).max(4);
        for o in &self.curves {
            let cells: String = columns
                .iter()
                .map(|c| match o.checks.get(*c) {
                    Some(true) => '.',
                    Some(false) => 'X',
                    None => ' ',
                })
                .collect();
            let n = o.n_doubles.map_or("-".to_string(), |n| n.to_string());
            let _ = write!(s, "{:<width$} n={n:<3} {cells} {}", o.name, if o.pass() { "pass" } else { "FAIL" });
            if let Some(e) = &o.error {
                let _ = write!(s, " ({e})");
            }
            s.push('\n');
        }
        for m in &self.moves {
            let _ = writeln!(s, "move {:<24} {}{}", m.name, if m.pass { "pass" } else { "FAIL" }, m.detail);
        }
        let failed = self.curves.iter().filter(|o| !o.pass()).count() + self.moves.iter().filter(|m| !m.pass).count();
        let total = self.curves.len() + self.moves.len();
        let _ = writeln!(s, "{} of {total} items passed", total - failed);
        s
    }
}

/// Analysis cross-checks plus stability under perturbation, base shift and
/// repetition.
pub fn check_curve(name: &str, file: &CurveFile, tol: &Tolerances, seed: u64) -> CurveOutcome {
    let mut outcome = CurveOutcome { name: name.to_string(), n_doubles: None, checks: BTreeMap::new(), error: None };
    let run = |outcome: &mut CurveOutcome| -> Result<()> {
        let curve = file.to_curve()?;
        let opts = AnalyzeOptions { rebase: true, tolerances: *tol, ..AnalyzeOptions::default() };
        let report = analyze_curve(&curve, &opts)?.report;
        outcome.n_doubles = Some(report.n_doubles);
        outcome.checks.extend(report.cross_checks.clone());
        let sig = IntegerSignature::from(&report);

        let again = analyze_curve(&curve, &opts)?.report;
        outcome.checks.insert("deterministic".into(), again == report);

        let moved = analyze_curve(&perturb(&curve, PERTURBATION, seed)?, &opts);
        outcome.checks.insert("stable_under_perturbation".into(), moved.is_ok_and(|a| IntegerSignature::from(&a.report) == sig));

        let shifted = match shifted_base(&curve, tol)? {
            Some(c) => analyze_curve(&c, &opts).is_ok_and(|a| IntegerSignature::from(&a.report) == sig),
            None => true,
        };
        outcome.checks.insert("stable_under_base_shift".into(), shifted);
        Ok(())
    };
    if let Err(e) = run(&mut outcome) {
        outcome.error = Some(format!("{}: {e}", e.kind()));
    }
    outcome
}

pub fn run_selftest(opts: &SelftestOptions) -> Result<SelftestSummary> {
    let mut corpus = standard_fixtures();
    corpus.extend(random_corpus(opts.curves, opts.seed)?);
    let curves = corpus
        .iter()
        .enumerate()
        .map(|(k, (name, file))| check_curve(name, file, &opts.tolerances, opts.seed ^ (k as u64) << 32))
        .collect();
    let moves = builtin_pairs()?
        .into_iter()
        .map(|(name, pair)| match verify_modification(&pair, &opts.tolerances) {
            Ok(r) => MoveOutcome {
                name,
                pass: r.pass,
                cross_check_failed: !r.cross_check_failures.is_empty(),
                detail: r.mismatches.iter().chain(&r.cross_check_failures).map(|m| format!("; {m}")).collect(),
            },
            Err(e) => MoveOutcome { name, pass: false, cross_check_failed: false, detail: format!("; {}: {e}", e.kind()) },
        })
        .collect();
    Ok(SelftestSummary { curves, moves })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbation_stays_within_radius() {
        let c = standard_fixtures()[2].1.to_curve().unwrap();
        let p = perturb(&c, 1e-3, 5).unwrap();
        assert!(c.vertices.iter().zip(&p.vertices).all(|(a, b)| a.dist(*b) <= 1e-3));
        assert_ne!(p.vertices, c.vertices);
        assert_eq!(perturb(&c, 1e-3, 5).unwrap().vertices, p.vertices);
    }

    #[test]
    fn base_shift_stays_on_the_base_arc() {
        let c = standard_fixtures()[1].1.to_curve().unwrap();
        let shifted = shifted_base(&c, &Tolerances::default()).unwrap().unwrap();
        assert_ne!(shifted.base_index, c.base_index);
        assert_eq!(shifted.vertices, c.vertices);
    }

    #[test]
    fn corpus_is_seeded() {
        let a = random_corpus(3, 9).unwrap();
        assert_eq!(a, random_corpus(3, 9).unwrap());
        assert!(a.iter().all(|(name, _)| name.starts_with("random-")));
    }

    #[test]
    fn matrix_marks_failures() {
        let mut checks = BTreeMap::new();
        checks.insert("a".to_string(), true);
        checks.insert("b".to_string(), false);
        let s = SelftestSummary {
            curves: vec![CurveOutcome { name: "x".into(), n_doubles: Some(2), checks, error: None }],
            moves: vec![MoveOutcome { name: "m".into(), pass: true, cross_check_failed: false, detail: String::new() }],
        };
        assert!(!s.all_pass());
        let text = s.to_text();
        assert!(text.contains(".X FAIL"), "{text}");
        assert!(text.ends_with("1 of 2 items passed\n"));
    }
}
