//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use curve_invariants::invariants::viro_moment;
use curve_invariants::moves::{table_expectation, verify_modification, ModificationPair, MoveKind, Orientation};
use curve_invariants::selftest::{perturb, random_corpus, shifted_base, standard_fixtures, IntegerSignature};
use curve_invariants::{analyze_curve, Analysis, AnalyzeOptions, IntPoly, PolygonalCurve, Tolerances};

const RANDOM_CURVES: usize = 20;
const SEED: u64 = 7;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn analyze(c: &PolygonalCurve) -> Result<Analysis, String> {
    analyze_curve(c, &AnalyzeOptions { rebase: true, ..AnalyzeOptions::default() }).map_err(|e| e.to_string())
}

struct Corpus {
    curves: Vec<(String, PolygonalCurve)>,
    analyses: Vec<Analysis>,
    seconds: f64,
}

fn corpus() -> Corpus {
    let start = Instant::now();
    let mut files = standard_fixtures();
    files.extend(random_corpus(RANDOM_CURVES, SEED).expect("random corpus"));
    let curves: Vec<(String, PolygonalCurve)> =
        files.into_iter().map(|(n, f)| (n, f.to_curve().expect("valid curve"))).collect();
    let analyses = curves.iter().map(|(n, c)| analyze(c).unwrap_or_else(|e| panic!("{n}: {e}"))).collect();
    Corpus { curves, analyses, seconds: start.elapsed().as_secs_f64() }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn criterion_1(c: &Corpus) -> Outcome {
    let max_doubles = c.analyses.iter().map(|a| a.report.n_doubles).max().unwrap_or(0);
    ensure(max_doubles <= 12, || format!("a corpus curve has {max_doubles} double points"))?;
    for ((name, _), a) in c.curves.iter().zip(&c.analyses) {
        let geom = a.report.st_q_geom.as_ref().ok_or_else(|| format!("{name}: curvature route failed"))?;
        let diff = geom.max_abs_diff(&a.report.st_q.to_real());
        ensure(diff <= 1e-9, || format!("{name}: routes differ by {diff:.3e}"))?;
    }
    ensure(c.seconds < 10.0, || format!("took {:.2} s", c.seconds))?;
    Ok(format!("{} curves, {:.2} s", c.curves.len(), c.seconds))
}

/// r! times the h^r coefficient of p(e^h), for integral exponents.
fn taylor_scaled(p: &IntPoly, r: u32) -> i64 {
    p.terms().map(|(e2, c)| c * (e2 / 2).pow(r)).sum()
}

fn criterion_2(c: &Corpus) -> Outcome {
    for ((name, _), a) in c.curves.iter().zip(&c.analyses) {
        let r = &a.report;
        let weights: i64 = a.immersion.doubles.iter().map(|d| a.weights.get(d.id)).sum();
        let moment: i64 = a.immersion.doubles.iter().map(|d| a.weights.get(d.id) * d.index2 / 2).sum();
        ensure(r.st_q.value_at_one() == weights, || format!("{name}: St_q(1) != sum of weights"))?;
        ensure((r.rot - weights).abs() == 1, || format!("{name}: |rot - St_q(1)| = {}", (r.rot - weights).abs()))?;
        match r.st_q.derivative_at_one_exact() {
            Ok(v) if v == moment => {}
            other => return Err(format!("{name}: St_q'(1) = {other:?}, sum w ind = {moment}")),
        }
        for k in 0..=6u32 {
            let want = taylor_scaled(&r.st_q, k);
            ensure(r.tabachnikov[k as usize] == want, || format!("{name}: order {k} gives {} vs {want}", r.tabachnikov[k as usize]))?;
        }
    }
    Ok(format!("{} curves, orders 0..6", c.curves.len()))
}

fn criterion_3(c: &Corpus) -> Outcome {
    for ((name, _), a) in c.curves.iter().zip(&c.analyses) {
        ensure(viro_moment(&a.forest, 0) == 1, || format!("{name}: moment 0 != 1"))?;
        ensure(viro_moment(&a.forest, 1) == a.report.rot, || format!("{name}: moment 1 != rot"))?;
    }
    let j = |name: &str| c.curves.iter().position(|(n, _)| n == name).map(|k| c.analyses[k].report.j_minus);
    let got = (j("circle16"), j("f8"), j("k2"));
    ensure(got == (Some(0), Some(-1), Some(-3)), || format!("J- of circle, figure-eight, flower(1) = {got:?}"))?;
    Ok("moments on all curves; J- = 0, -1, -3".into())
}

fn criterion_4(c: &Corpus) -> Outcome {
    let mut off_integer = Vec::new();
    for ((name, _), a) in c.curves.iter().zip(&c.analyses) {
        let r = &a.report;
        let at_one = r.i_q.evaluate(1.0);
        ensure((at_one - r.rot as f64).abs() <= 1e-9, || format!("{name}: I_q(1) = {at_one}"))?;
        let j_plus = (1.0 - 2.0 * r.i_q.derivative_at_one()).round() as i64;
        ensure(j_plus == r.j_minus + r.n_doubles as i64, || format!("{name}: J+ from I_q is {j_plus}"))?;
        if r.i_q.terms().any(|(_, v)| (v - v.round()).abs() > 1e-6) {
            off_integer.push(name.clone());
        }
    }
    ensure(off_integer.is_empty(), || {
        format!(
            "I_q(1) and J+ agree on all curves, but {} of {} have non-integral I_q coefficients (e.g. {})",
            off_integer.len(),
            c.curves.len(),
            off_integer[..off_integer.len().min(3)].join(", ")
        )
    })?;
    Ok(format!("{} curves", c.curves.len()))
}

fn criterion_5() -> Outcome {
    let mut dir: Vec<PathBuf> = std::fs::read_dir(fixtures().join("moves"))
        .map_err(|e| format!("fixtures/moves: {e}"))?
        .map(|e| e.map(|e| e.path()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    dir.sort();
    let mut kinds = std::collections::BTreeSet::new();
    for path in &dir {
        let name = path.file_stem().unwrap().to_string_lossy();
        let pair = ModificationPair::load(path).map_err(|e| format!("{name}: {e}"))?;
        let r = verify_modification(&pair, &Tolerances::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.pass, || format!("{name}: {}", r.mismatches.join("; ")))?;
        if pair.orientation == Orientation::Drawn {
            let e = table_expectation(pair.kind, pair.ind_param);
            ensure(r.delta_p_q == e.p_q && r.delta_st_q == e.st_q, || format!("{name}: integer jumps differ"))?;
            ensure(r.delta_i_q.max_abs_diff(&e.i_q) <= 1e-6, || format!("{name}: dI_q differs"))?;
            let st_zero = r.delta_st_q.is_zero();
            ensure(st_zero == pair.kind.is_tangency(), || format!("{name}: dSt_q = {}", r.delta_st_q))?;
            kinds.insert(pair.kind.name());
        }
    }
    ensure(kinds.len() == MoveKind::ALL.len(), || format!("only {kinds:?} covered"))?;
    Ok(format!("{} pairs, all four kinds", dir.len()))
}

fn criterion_6(c: &Corpus) -> Outcome {
    let tol = Tolerances::default();
    let random = c.curves.iter().zip(&c.analyses).filter(|((n, _), _)| n.starts_with("random"));
    let mut shifted = 0;
    for (k, ((name, curve), a)) in random.enumerate() {
        let sig = IntegerSignature::from(&a.report);
        let moved = perturb(curve, 1e-7, 1000 + k as u64).map_err(|e| e.to_string())?;
        let after = analyze(&moved).map_err(|e| format!("{name} perturbed: {e}"))?;
        ensure(IntegerSignature::from(&after.report) == sig, || format!("{name}: perturbation changed invariants"))?;
        if let Some(rebased) = shifted_base(curve, &tol).map_err(|e| e.to_string())? {
            let after = analyze(&rebased).map_err(|e| format!("{name} shifted: {e}"))?;
            ensure(IntegerSignature::from(&after.report) == sig, || format!("{name}: base shift changed invariants"))?;
            shifted += 1;
        }
    }
    Ok(format!("{RANDOM_CURVES} curves perturbed, {shifted} base shifts"))
}

fn criterion_7() -> Outcome {
    let cases = [
        ("degenerate_tangency", "TangentialPair"),
        ("triple_point", "TripleCoincidence"),
        ("endpoint_touch", "DegenerateIntersection"),
    ];
    for (file, kind) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_curvinv"))
            .arg("analyze")
            .arg(fixtures().join(format!("{file}.json")))
            .output()
            .map_err(|e| e.to_string())?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(out.status.code() == Some(2), || format!("{file}: exit {:?}", out.status.code()))?;
        ensure(stderr.contains(&format!("[{kind}]")), || format!("{file}: no {kind} in {stderr:?}"))?;
        ensure(stderr.contains("segments"), || format!("{file}: no segment indices in {stderr:?}"))?;
    }
    Ok("three fixtures, exit code 2".into())
}

fn main() -> ExitCode {
    let c = corpus();
    let results: [(&str, Outcome); 7] = [
        ("route equivalence", criterion_1(&c)),
        ("Taylor identities", criterion_2(&c)),
        ("region moment identities", criterion_3(&c)),
        ("I_q identities", criterion_4(&c)),
        ("modification table", criterion_5()),
        ("stability", criterion_6(&c)),
        ("degenerate inputs", criterion_7()),
    ];
    let mut failed = 0;
    for (k, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", k + 1);
            }
        }
    }
    println!("{} of 7 criteria passed", 7 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
