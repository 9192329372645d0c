//! End-to-end pipeline: diagram, weights, smoothing, regions, invariants and
//! the identities that tie them together.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{total_turning, Tolerances};
use crate::immersion::{build_immersion, rebase_to_exterior, rotation_number, GenericImmersion, PolygonalCurve};
use crate::invariants::{
    j_minus, j_plus, j_plus_from_lanzat_polyak, lanzat_polyak, st_q_combinatorial, st_q_geometric, strangeness,
    tabachnikov, viro_moment, viro_polynomial,
};
use crate::laurent::{taylor_exp, IntPoly, RealPoly};
use crate::smoothing::{build_region_forest, compute_weights, smooth, RegionForest, SmoothedCurve, WeightMap};

pub const DEFAULT_TAYLOR_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub rebase: bool,
    pub taylor_depth: usize,
    pub tolerances: Tolerances,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { rebase: false, taylor_depth: DEFAULT_TAYLOR_DEPTH, tolerances: Tolerances::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Rotation number of the closed curve.
    pub rot: i64,
    pub n_doubles: usize,
    pub st_q: IntPoly,
    /// `None` when the curvature route failed (see `cross_checks`).
    pub st_q_geom: Option<RealPoly>,
    pub p_q: IntPoly,
    pub i_q: RealPoly,
    pub j_minus: i64,
    pub j_plus: i64,
    pub st: i64,
    pub tabachnikov: Vec<i64>,
    pub cross_checks: BTreeMap<String, bool>,
    /// Exponents (doubled) of `I_q` whose coefficient is not an integer.
    pub i_q_integrality_violations: Vec<i64>,
}

impl InvariantReport {
    pub fn all_checks_pass(&self) -> bool {
        self.cross_checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.cross_checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }
}

/// Everything computed for one curve.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub immersion: GenericImmersion,
    pub weights: WeightMap,
    pub smoothed: SmoothedCurve,
    pub forest: RegionForest,
    pub report: InvariantReport,
    pub rebased: bool,
}

/// Diagram with an exterior base point, rebasing only when asked to.
pub fn prepare_immersion(curve: &PolygonalCurve, opts: &AnalyzeOptions) -> Result<(GenericImmersion, bool)> {
    let imm = build_immersion(curve, &opts.tolerances)?;
    if imm.base_on_exterior {
        return Ok((imm, false));
    }
    if !opts.rebase {
        return Err(Error::BaseNotExterior);
    }
    Ok((rebase_to_exterior(&imm)?, true))
}

pub fn analyze_curve(curve: &PolygonalCurve, opts: &AnalyzeOptions) -> Result<Analysis> {
    let (imm, rebased) = prepare_immersion(curve, opts)?;
    analyze_immersion(imm, rebased, opts.taylor_depth)
}

pub fn analyze_immersion(imm: GenericImmersion, rebased: bool, taylor_depth: usize) -> Result<Analysis> {
    let eps = imm.tolerances.eps_coeff;
    let rot = rotation_number(&imm)?;
    let n = imm.n_doubles();
    let weights = compute_weights(&imm)?;
    let smoothed = smooth(&imm, Some(&weights))?;
    let forest = build_region_forest(&smoothed)?;

    let st_q = st_q_combinatorial(&imm, &weights)?;
    let st_q_geom = st_q_geometric(&imm, &smoothed).ok();
    let p_q = viro_polynomial(&forest);
    let i_q = lanzat_polyak(&imm);
    let jm = j_minus(&forest);
    let jp = j_plus(jm, n);
    let st = strangeness(&imm, &weights)?;
    let tab: Vec<i64> = (0..=taylor_depth as u32).map(|k| tabachnikov(&imm, &weights, k)).collect::<Result<_>>()?;

    let mut checks = BTreeMap::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };

    check(
        "st_q_routes_agree",
        st_q_geom.as_ref().is_some_and(|g| g.max_abs_diff(&st_q.to_real()) < eps),
    );
    let st1 = st_q.value_at_one();
    check("st_q_at_one_is_weight_sum", st1 == weights.sum() && st1 == tab[0]);
    check("whitney_relation", (rot - st1).abs() == 1);
    check("st_derivative_is_strangeness", st_q.derivative_at_one_exact().ok() == Some(st) && tab.get(1) == Some(&st));
    let taylor_ok = |poly: &IntPoly, expected: &dyn Fn(u32) -> i64| -> bool {
        taylor_exp(poly, taylor_depth).is_ok_and(|coeffs| {
            let mut fact: i128 = 1;
            coeffs.iter().enumerate().all(|(r, c)| {
                if r > 0 {
                    fact *= r as i128;
                }
                let scaled = c * fact;
                scaled.is_integer() && *scaled.numer() == expected(r as u32) as i128
            })
        })
    };
    check("taylor_matches_tabachnikov", taylor_ok(&st_q, &|r| tab[r as usize]));

    check(
        "alpha_identity",
        smoothed.circles.iter().all(|c| {
            c.alpha == Some(c.rot * c.vertices.iter().map(|v| weights.get(v.double)).sum::<i64>())
        }),
    );
    check("vertex_conservation", smoothed.vertex_count() == 2 * n);
    let arc_sum: f64 = imm.arcs.iter().map(|a| a.turning).sum();
    let turning: f64 = imm.vertex_turning.iter().sum();
    check("arc_turning_sum", (arc_sum - turning).abs() < 1e-9);
    check(
        "circle_turning_is_rot",
        smoothed.circles.iter().all(|c| {
            total_turning(&c.polygon, &imm.tolerances).is_ok_and(|t| (t - TAU * c.rot as f64).abs() < 1e-6)
        }),
    );
    check("forest_chi_sum", forest.regions.iter().map(|r| r.chi).sum::<i64>() == 1);

    check("viro_moment0_is_one", viro_moment(&forest, 0) == 1);
    check("viro_moment1_is_rot", viro_moment(&forest, 1) == rot);
    check("viro_taylor_matches_moments", taylor_ok(&p_q, &|r| viro_moment(&forest, r)));

    check("lanzat_polyak_at_one_is_rot", (i_q.evaluate(1.0) - rot as f64).abs() < 1e-9);
    let jp_lp = j_plus_from_lanzat_polyak(&i_q);
    check("j_plus_routes_agree", (jp_lp - jp as f64).abs() < 1e-6 && jp_lp.round() as i64 == jp);
    check("i_q_half_integral", i_q.off_grid(0.5, 1e-6).is_empty());

    let report = InvariantReport {
        rot,
        n_doubles: n,
        st_q,
        st_q_geom,
        p_q,
        i_q_integrality_violations: i_q.off_grid(1.0, 1e-6),
        i_q,
        j_minus: jm,
        j_plus: jp,
        st,
        tabachnikov: tab,
        cross_checks: checks,
    };
    Ok(Analysis { immersion: imm, weights, smoothed, forest, report, rebased })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo { name: env!("CARGO_PKG_NAME").to_string(), version: env!("CARGO_PKG_VERSION").to_string() }
    }
}

/// Structured report document written by the `analyze` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub tolerances: Tolerances,
    pub base_index: usize,
    pub rebased: bool,
    #[serde(flatten)]
    pub invariants: InvariantReport,
}

impl Report {
    pub fn from_analysis(a: &Analysis) -> Self {
        Report {
            tool: ToolInfo::default(),
            tolerances: a.immersion.tolerances,
            base_index: a.immersion.curve.base_index,
            rebased: a.rebased,
            invariants: a.report.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let r = &self.invariants;
        let mut s = String::new();
        s.push_str(&format!("base vertex      {}{}\n", self.base_index, if self.rebased { " (rebased)" } else { "" }));
        s.push_str(&format!("double points    {}\n", r.n_doubles));
        s.push_str(&format!("rotation number  {}\n", r.rot));
        s.push_str(&format!("St_q             {}\n", r.st_q));
        match &r.st_q_geom {
            Some(g) => s.push_str(&format!("St_q (curvature) {}\n", g)),
            None => s.push_str("St_q (curvature) failed\n"),
        }
        s.push_str(&format!("P_C(q)           {}\n", r.p_q));
        s.push_str(&format!("I_q              {}\n", r.i_q));
        s.push_str(&format!("J-               {}\n", r.j_minus));
        s.push_str(&format!("J+               {}\n", r.j_plus));
        s.push_str(&format!("St               {}\n", r.st));
        let tab: Vec<String> = r.tabachnikov.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("St^0..St^{}       [{}]\n", r.tabachnikov.len().saturating_sub(1), tab.join(", ")));
        if !r.i_q_integrality_violations.is_empty() {
            let ex: Vec<String> = r.i_q_integrality_violations.iter().map(|e| format!("{e}/2")).collect();
            s.push_str(&format!("I_q non-integer coefficients at exponents {}\n", ex.join(", ")));
        }
        s.push_str("checks:\n");
        for (name, ok) in &r.cross_checks {
            s.push_str(&format!("  [{}] {}\n", if *ok { "pass" } else { "FAIL" }, name));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{make_standard_curve, Family};

    fn k2() -> PolygonalCurve {
        make_standard_curve(Family::Flower, 1, 64).unwrap().to_curve().unwrap()
    }

    fn interior_base(c: &PolygonalCurve) -> PolygonalCurve {
        (0..c.len())
            .map(|v| c.with_base(v).unwrap())
            .find(|b| !build_immersion(b, &Tolerances::default()).unwrap().base_on_exterior)
            .unwrap()
    }

    #[test]
    fn rebasing_is_opt_in() {
        let inner = interior_base(&k2());
        assert!(matches!(analyze_curve(&inner, &AnalyzeOptions::default()), Err(Error::BaseNotExterior)));
        let a = analyze_curve(&inner, &AnalyzeOptions { rebase: true, ..AnalyzeOptions::default() }).unwrap();
        assert!(a.rebased && a.immersion.base_on_exterior);
        assert_eq!(a.report.st_q, analyze_curve(&k2(), &AnalyzeOptions::default()).unwrap().report.st_q);
    }

    #[test]
    fn taylor_depth_sets_the_order_count() {
        let opts = AnalyzeOptions { taylor_depth: 3, ..AnalyzeOptions::default() };
        assert_eq!(analyze_curve(&k2(), &opts).unwrap().report.tabachnikov.len(), 4);
    }

    #[test]
    fn report_document() {
        let a = analyze_curve(&k2(), &AnalyzeOptions::default()).unwrap();
        let r = Report::from_analysis(&a);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["tool"]["name"], "curve-invariants");
        assert_eq!(v["st_q"]["kind"], "int");
        assert!(r.to_text().contains("St               1\n"));
    }
}
