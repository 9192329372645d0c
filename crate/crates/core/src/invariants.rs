//! Arnold-type invariants and their quantizations.
//!
//! Two independent routes are provided for the quantized strangeness: the
//! weighted count over double points ([`st_q_combinatorial`]) and the
//! curvature integral with the `alpha` density ([`st_q_geometric`]).

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::immersion::GenericImmersion;
use crate::laurent::{IntPoly, RealPoly};
use crate::smoothing::{RegionForest, SmoothedCurve, WeightMap};

/// `sum_d w(d) q^{ind(d)}`.
pub fn st_q_combinatorial(imm: &GenericImmersion, weights: &WeightMap) -> Result<IntPoly> {
    imm.require_exterior_base()?;
    Ok(IntPoly::from_terms(imm.doubles.iter().map(|d| (d.index2, weights.get(d.id)))))
}

/// The curvature integral before division by `q^{1/2} + q^{-1/2}`.
pub fn st_q_geometric_numerator(imm: &GenericImmersion, smoothed: &SmoothedCurve) -> Result<RealPoly> {
    imm.require_exterior_base()?;
    let alpha = |circle: usize| -> Result<f64> {
        smoothed.circles[circle]
            .alpha
            .map(|a| a as f64)
            .ok_or_else(|| Error::CrossCheckFailed("smoothing carries no weights".into()))
    };
    let mut num = RealPoly::zero();
    for arc in &imm.arcs {
        let a = alpha(smoothed.circle_of_arc[arc.id])?;
        num.add_term(arc.index2, arc.turning * a / TAU);
    }
    for d in &imm.doubles {
        let corner = (PI - d.theta) / TAU;
        let plus = alpha(smoothed.plus_circle[d.id])?;
        let minus = alpha(smoothed.minus_circle[d.id])?;
        num.add_term(d.index2 + 1, corner * plus);
        num.add_term(d.index2 - 1, -corner * minus);
    }
    Ok(num)
}

/// Quantized strangeness from the curvature integral.
pub fn st_q_geometric(imm: &GenericImmersion, smoothed: &SmoothedCurve) -> Result<RealPoly> {
    let eps = imm.tolerances.eps_coeff;
    Ok(st_q_geometric_numerator(imm, smoothed)?.divide_by_half_sum(eps)?.pruned(eps))
}

/// `sum over regions of chi(sigma) q^{ind(sigma)}`.
pub fn viro_polynomial(forest: &RegionForest) -> IntPoly {
    IntPoly::from_terms(forest.regions.iter().map(|r| (r.index2, r.chi)))
}

/// `sum over regions of chi(sigma) ind(sigma)^r`, with `0^0 = 1`.
pub fn viro_moment(forest: &RegionForest, r: u32) -> i64 {
    forest.regions.iter().map(|reg| reg.chi * reg.index().pow(r)).sum()
}

pub fn j_minus(forest: &RegionForest) -> i64 {
    1 - viro_moment(forest, 2)
}

/// Curvature integral weighted by `q^{ind}` minus the crossing-angle correction.
pub fn lanzat_polyak(imm: &GenericImmersion) -> RealPoly {
    let mut p = RealPoly::zero();
    for arc in &imm.arcs {
        p.add_term(arc.index2, arc.turning / TAU);
    }
    for d in &imm.doubles {
        let c = d.theta / TAU;
        p.add_term(d.index2 + 1, -c);
        p.add_term(d.index2 - 1, c);
    }
    p.pruned(imm.tolerances.eps_coeff)
}

/// `J+ = J- + n`.
pub fn j_plus(j_minus: i64, n_doubles: usize) -> i64 {
    j_minus + n_doubles as i64
}

/// `J+` read off the derivative of `I_q` at `q = 1`.
pub fn j_plus_from_lanzat_polyak(i_q: &RealPoly) -> f64 {
    1.0 - 2.0 * i_q.derivative_at_one()
}

/// `J+` by the counting route, cross-checked against the `I_q` route.
pub fn j_plus_checked(j_minus: i64, n_doubles: usize, i_q: &RealPoly) -> Result<i64> {
    let counted = j_plus(j_minus, n_doubles);
    let from_iq = j_plus_from_lanzat_polyak(i_q);
    if (from_iq - counted as f64).abs() >= 0.5 {
        return Err(Error::CrossCheckFailed(format!("J+ = {counted} by counting, {from_iq:.6} from I_q")));
    }
    Ok(counted)
}

/// `St = sum_d w(d) ind(d)`.
pub fn strangeness(imm: &GenericImmersion, weights: &WeightMap) -> Result<i64> {
    tabachnikov(imm, weights, 1)
}

/// `St^k = sum_d w(d) ind(d)^k`, with `0^0 = 1`.
pub fn tabachnikov(imm: &GenericImmersion, weights: &WeightMap, k: u32) -> Result<i64> {
    imm.require_exterior_base()?;
    Ok(imm.doubles.iter().map(|d| weights.get(d.id) * (d.index2 / 2).pow(k)).sum())
}
