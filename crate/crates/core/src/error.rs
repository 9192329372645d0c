use std::fmt;

/// Where in the input polyline a genericity violation was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Unknown,
    Vertex(usize),
    Segments(Vec<usize>),
    Arc(usize),
    Circle(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Unknown => write!(f, "unknown location"),
            Location::Vertex(v) => write!(f, "vertex {v}"),
            Location::Segments(s) => {
                let list: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "segments {}", list.join(", "))
            }
            Location::Arc(a) => write!(f, "arc {a}"),
            Location::Circle(c) => write!(f, "circle {c}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),

    #[error("degenerate intersection at {0}")]
    DegenerateIntersection(Location),
    #[error("point too close to the curve (angle residual {residual:.3} turns)")]
    PointTooClose { residual: f64 },
    #[error("cusp (turning angle near ±π) at {0}")]
    CuspVertex(Location),
    #[error("tangential pair at {location} (transversal angle {angle:.3e} rad)")]
    TangentialPair { location: Location, angle: f64 },
    #[error("three strands meet at one point: {0}")]
    TripleCoincidence(Location),
    #[error("edge-index probes inconsistent at {0}")]
    ProbeInconsistent(Location),
    #[error("circle containment ambiguous at {0}")]
    ContainmentAmbiguous(Location),

    #[error("base point does not lie on an exterior edge")]
    BaseNotExterior,
    #[error("no polyline vertex lies inside an exterior arc")]
    NoExteriorVertex,
    #[error("unknown curve point: {0}")]
    UnknownPoint(String),

    #[error("division by q^1/2 + q^-1/2 left a remainder of magnitude {0:.3e}")]
    NonzeroRemainder(f64),
    #[error("polynomial has a half-integral exponent {exponent2}/2")]
    HalfExponent { exponent2: i64 },
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("unsupported curve parameter: {0}")]
    UnsupportedParam(String),
    #[error("no generic curve with {target} double points after {attempts} attempts")]
    GenerationExhausted { target: usize, attempts: usize },
    #[error("expectation mismatch: {0}")]
    ExpectationMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that mean the input curve is not a generic immersion
    /// under the active tolerances.
    pub fn is_genericity_violation(&self) -> bool {
        matches!(
            self,
            Error::DegenerateIntersection(_)
                | Error::PointTooClose { .. }
                | Error::CuspVertex(_)
                | Error::TangentialPair { .. }
                | Error::TripleCoincidence(_)
                | Error::ProbeInconsistent(_)
                | Error::ContainmentAmbiguous(_)
        )
    }

    /// Short machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::InvalidTolerances(_) => "InvalidTolerances",
            Error::DegenerateIntersection(_) => "DegenerateIntersection",
            Error::PointTooClose { .. } => "PointTooClose",
            Error::CuspVertex(_) => "CuspVertex",
            Error::TangentialPair { .. } => "TangentialPair",
            Error::TripleCoincidence(_) => "TripleCoincidence",
            Error::ProbeInconsistent(_) => "ProbeInconsistent",
            Error::ContainmentAmbiguous(_) => "ContainmentAmbiguous",
            Error::BaseNotExterior => "BaseNotExterior",
            Error::NoExteriorVertex => "NoExteriorVertex",
            Error::UnknownPoint(_) => "UnknownPoint",
            Error::NonzeroRemainder(_) => "NonzeroRemainder",
            Error::HalfExponent { .. } => "HalfExponent",
            Error::CrossCheckFailed(_) => "CrossCheckFailed",
            Error::UnsupportedParam(_) => "UnsupportedParam",
            Error::GenerationExhausted { .. } => "GenerationExhausted",
            Error::ExpectationMismatch(_) => "ExpectationMismatch",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "Io",
        }
    }

    /// Attach a location to a genericity error raised by a location-free kernel call.
    pub(crate) fn at(self, loc: Location) -> Self {
        match self {
            Error::DegenerateIntersection(_) => Error::DegenerateIntersection(loc),
            Error::CuspVertex(_) => Error::CuspVertex(loc),
            Error::TangentialPair { angle, .. } => Error::TangentialPair { location: loc, angle },
            Error::TripleCoincidence(_) => Error::TripleCoincidence(loc),
            Error::ProbeInconsistent(_) => Error::ProbeInconsistent(loc),
            Error::ContainmentAmbiguous(_) => Error::ContainmentAmbiguous(loc),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
