//! Laurent polynomials in `q^{1/2}`.
//!
//! Exponents are stored doubled (`exponent2`), so `q^{3/2}` has key `3`.
//! Coefficients are either exact integers (`i64`) or reals (`f64`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Coefficient:
    Copy + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    const KIND: &'static str;
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(self) -> f64;
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

impl Coefficient for i64 {
    const KIND: &'static str = "int";
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Coefficient for f64 {
    const KIND: &'static str = "real";
    fn zero() -> Self {
        0.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(self) -> f64 {
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfLaurent<C: Coefficient> {
    terms: BTreeMap<i64, C>,
}

pub type IntPoly = HalfLaurent<i64>;
pub type RealPoly = HalfLaurent<f64>;

impl<C: Coefficient> Default for HalfLaurent<C> {
    fn default() -> Self {
        HalfLaurent { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> HalfLaurent<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * q^{exponent2 / 2}`.
    pub fn monomial(exponent2: i64, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent2, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent2: i64, c: C) {
        let slot = self.terms.entry(exponent2).or_insert_with(C::zero);
        *slot = *slot + c;
        if slot.is_zero() {
            self.terms.remove(&exponent2);
        }
    }

    pub fn coeff(&self, exponent2: i64) -> C {
        self.terms.get(&exponent2).copied().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, C)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every exponent is an integer.
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn scale(&self, s: C) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * s)))
    }

    /// Multiply by `q^{shift2 / 2}`.
    pub fn shift(&self, shift2: i64) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&e, &c)| (e + shift2, c)).collect() }
    }

    pub fn evaluate(&self, q: f64) -> f64 {
        self.terms().map(|(e, c)| c.to_f64() * q.powf(e as f64 / 2.0)).sum()
    }

    /// `d/dq` at `q = 1`.
    pub fn derivative_at_one(&self) -> f64 {
        self.terms().map(|(e, c)| c.to_f64() * e as f64 / 2.0).sum()
    }

    pub fn to_real(&self) -> RealPoly {
        RealPoly::from_terms(self.terms().map(|(e, c)| (e, c.to_f64())))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::monomial(0, C::from_i64(1)), |acc, _| &acc * self)
    }
}

impl IntPoly {
    /// Exact value of `d/dq` at `q = 1` when all exponents are integral.
    pub fn derivative_at_one_exact(&self) -> Result<i64> {
        self.terms()
            .map(|(e, c)| {
                if e % 2 != 0 {
                    Err(Error::HalfExponent { exponent2: e })
                } else {
                    Ok(c * (e / 2))
                }
            })
            .sum()
    }

    pub fn value_at_one(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }
}

impl RealPoly {
    /// Drop coefficients with magnitude below `eps`.
    pub fn pruned(&self, eps: f64) -> RealPoly {
        HalfLaurent { terms: self.terms.iter().filter(|(_, c)| c.abs() >= eps).map(|(&e, &c)| (e, c)).collect() }
    }

    /// Largest coefficientwise difference to another polynomial.
    pub fn max_abs_diff(&self, other: &RealPoly) -> f64 {
        let keys: std::collections::BTreeSet<i64> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.iter().map(|&e| (self.coeff(e) - other.coeff(e)).abs()).fold(0.0, f64::max)
    }

    /// Exponents whose coefficient is farther than `eps` from `grid * Z`.
    pub fn off_grid(&self, grid: f64, eps: f64) -> Vec<i64> {
        self.terms()
            .filter(|&(_, c)| {
                let k = c / grid;
                (k - k.round()).abs() * grid > eps
            })
            .map(|(e, _)| e)
            .collect()
    }

    /// Round every coefficient to the nearest integer.
    pub fn rounded(&self) -> IntPoly {
        IntPoly::from_terms(self.terms().map(|(e, c)| (e, c.round() as i64)))
    }

    /// Divide by `q^{1/2} + q^{-1/2}`.
    ///
    /// With `s = q^{1/2}` this is `s * p(s) / (s^2 + 1)`, done by long
    /// division from the top degree. The remainder's largest coefficient must
    /// stay below `eps`.
    pub fn divide_by_half_sum(&self, eps: f64) -> Result<RealPoly> {
        let mut work: BTreeMap<i64, f64> = self.terms.iter().map(|(&e, &c)| (e + 1, c)).collect();
        let Some(&lo) = work.keys().next() else {
            return Ok(RealPoly::zero());
        };
        let mut quotient = BTreeMap::new();
        while let Some((&e, &c)) = work.iter().next_back() {
            if e < lo + 2 {
                break;
            }
            work.remove(&e);
            *quotient.entry(e - 2).or_insert(0.0) += c;
            *work.entry(e - 2).or_insert(0.0) -= c;
        }
        let residue = work.values().fold(0.0f64, |m, c| m.max(c.abs()));
        if residue >= eps {
            return Err(Error::NonzeroRemainder(residue));
        }
        Ok(RealPoly::from_terms(quotient))
    }
}

/// Coefficients of `h^r`, `r = 0..=r_max`, of `p(e^h)`.
pub fn taylor_exp(p: &IntPoly, r_max: usize) -> Result<Vec<Ratio<i128>>> {
    if let Some((e, _)) = p.terms().find(|(e, _)| e % 2 != 0) {
        return Err(Error::HalfExponent { exponent2: e });
    }
    let mut factorial: i128 = 1;
    let mut out = Vec::with_capacity(r_max + 1);
    for r in 0..=r_max {
        if r > 0 {
            factorial *= r as i128;
        }
        let moment: i128 = p.terms().map(|(e, c)| c as i128 * ((e / 2) as i128).pow(r as u32)).sum();
        out.push(Ratio::new(moment, factorial));
    }
    Ok(out)
}

impl<C: Coefficient> Add for &HalfLaurent<C> {
    type Output = HalfLaurent<C>;
    fn add(self, o: &HalfLaurent<C>) -> HalfLaurent<C> {
        let mut p = self.clone();
        for (e, c) in o.terms() {
            p.add_term(e, c);
        }
        p
    }
}

impl<C: Coefficient> Sub for &HalfLaurent<C> {
    type Output = HalfLaurent<C>;
    fn sub(self, o: &HalfLaurent<C>) -> HalfLaurent<C> {
        let mut p = self.clone();
        for (e, c) in o.terms() {
            p.add_term(e, -c);
        }
        p
    }
}

impl<C: Coefficient> Mul for &HalfLaurent<C> {
    type Output = HalfLaurent<C>;
    fn mul(self, o: &HalfLaurent<C>) -> HalfLaurent<C> {
        let mut p = HalfLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

impl<C: Coefficient> Neg for &HalfLaurent<C> {
    type Output = HalfLaurent<C>;
    fn neg(self) -> HalfLaurent<C> {
        self.scale(C::from_i64(-1))
    }
}

fn fmt_exponent(e: i64) -> String {
    if e % 2 == 0 {
        format!("{}", e / 2)
    } else {
        format!("{}/2", e)
    }
}

impl<C: Coefficient> fmt::Display for HalfLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            // Text output only; nine decimals hide floating-point noise.
            let v = if C::KIND == "real" { (c.to_f64() * 1e9).round() / 1e9 } else { c.to_f64() };
            let (sign, mag) = if v < 0.0 { ("-", -v) } else { ("+", v) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag_str = if mag.fract() == 0.0 { format!("{}", mag as i64) } else { format!("{mag}") };
            match *e {
                0 => write!(f, "{mag_str}")?,
                _ => {
                    if mag != 1.0 {
                        write!(f, "{mag_str}*")?;
                    }
                    if *e == 2 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", fmt_exponent(*e))?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Wire form: `{"kind": "int"|"real", "terms": {"<exponent2>": coeff}}`.
#[derive(Serialize, Deserialize)]
struct PolyDoc<C> {
    kind: String,
    terms: BTreeMap<String, C>,
}

impl<C: Coefficient + Serialize> Serialize for HalfLaurent<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyDoc { kind: C::KIND.to_string(), terms: self.terms().map(|(e, c)| (e.to_string(), c)).collect() }
            .serialize(s)
    }
}

impl<'de, C: Coefficient + Deserialize<'de>> Deserialize<'de> for HalfLaurent<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = PolyDoc::<C>::deserialize(d)?;
        if doc.kind != C::KIND {
            return Err(serde::de::Error::custom(format!("expected kind {}, found {}", C::KIND, doc.kind)));
        }
        let mut p = Self::zero();
        for (k, c) in doc.terms {
            let e: i64 = k.parse().map_err(|_| serde::de::Error::custom(format!("bad exponent key {k:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}
