//! JSON curve documents.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::immersion::PolygonalCurve;

/// `{"vertices": [[x, y], ...], "base_index": 0}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFile {
    pub vertices: Vec<[f64; 2]>,
    #[serde(default)]
    pub base_index: usize,
}

impl CurveFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn to_curve(&self) -> Result<PolygonalCurve> {
        PolygonalCurve::new(self.vertices.iter().map(|&p| Point2::from(p)).collect(), self.base_index)
    }
}

impl From<&PolygonalCurve> for CurveFile {
    fn from(c: &PolygonalCurve) -> Self {
        CurveFile { vertices: c.vertices.iter().map(|p| [p.x, p.y]).collect(), base_index: c.base_index }
    }
}
