//! Arnold-type invariants of generic immersed plane curves.
//!
//! A closed polygon with a base vertex is turned into a Gauss-type diagram
//! ([`immersion`]), weighted and smoothed into circles ([`smoothing`]), and
//! summarized by the polynomials and integers in [`invariants`].

pub mod analysis;
pub mod curves;
pub mod error;
pub mod geometry;
pub mod immersion;
pub mod invariants;
pub mod io;
pub mod laurent;
pub mod moves;
pub mod selftest;
pub mod smoothing;
pub mod svg;

pub use analysis::{analyze_curve, analyze_immersion, AnalyzeOptions, Analysis, InvariantReport, Report};
pub use error::{Error, Location, Result};
pub use geometry::{Point2, Tolerances};
pub use immersion::{build_immersion, rebase_to_exterior, rotation_number, GenericImmersion, PolygonalCurve};
pub use io::CurveFile;
pub use laurent::{IntPoly, RealPoly};
