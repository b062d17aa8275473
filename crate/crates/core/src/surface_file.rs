//! JSON surface description and preset lookup.
//!
//! ```json
//! {"name": "quintic", "ns_rank": 1, "gram": [[5]], "canonical": [1],
//!  "polarization": [1], "c2_top": 55}
//! ```

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{NSLattice, NSVector};
use crate::surface::SurfaceGeometry;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub name: String,
    pub ns_rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub polarization: Vec<i64>,
    pub c2_top: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
}

impl SurfaceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SurfaceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.check_shape()?;
        Ok(file)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.ns_rank;
        if self.gram.len() != n {
            return Err(Error::Parse(format!("gram has {} rows but ns_rank is {n}", self.gram.len())));
        }
        if let Some(i) = self.gram.iter().position(|row| row.len() != n) {
            return Err(Error::Parse(format!("gram row {i} has {} entries but ns_rank is {n}", self.gram[i].len())));
        }
        for (field, v) in [("canonical", &self.canonical), ("polarization", &self.polarization)] {
            if v.len() != n {
                return Err(Error::Parse(format!("{field} has {} entries but ns_rank is {n}", v.len())));
            }
        }
        Ok(())
    }

    /// Validates every lattice and surface invariant.
    pub fn to_geometry(&self) -> Result<SurfaceGeometry> {
        self.check_shape()?;
        let gram = self.gram.iter().map(|row| row.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let lattice = NSLattice::new(gram, self.basis_labels.clone())?;
        SurfaceGeometry::new(
            self.name.clone(),
            lattice,
            NSVector::from_i64s(&self.canonical),
            NSVector::from_i64s(&self.polarization),
            self.c2_top,
        )
    }

    /// Inverse of [`SurfaceFile::to_geometry`]; fails only if a coordinate overflows `i64`.
    pub fn from_geometry(x: &SurfaceGeometry) -> Result<Self> {
        let small = |v: &BigInt| v.to_i64().ok_or_else(|| Error::Input(format!("{v} does not fit in 64 bits")));
        let vec = |v: &NSVector| v.coords().iter().map(small).collect::<Result<Vec<_>>>();
        Ok(SurfaceFile {
            name: x.name().to_string(),
            ns_rank: x.rank(),
            gram: x.lattice().gram().iter().map(|row| row.iter().map(small).collect()).collect::<Result<_>>()?,
            canonical: vec(x.canonical())?,
            polarization: vec(x.polarization())?,
            c2_top: small(x.c2_top())?,
            basis_labels: x.lattice().labels().map(<[String]>::to_vec),
        })
    }
}

pub fn is_preset_name(spec: &str) -> bool {
    matches!(spec, "p2" | "p1xp1") || spec.starts_with("hypersurface:")
}

/// Resolves a preset name (`p2`, `p1xp1`, `hypersurface:d`) or reads a JSON file.
pub fn load_surface(spec: &str) -> Result<SurfaceGeometry> {
    if is_preset_name(spec) {
        return SurfaceGeometry::preset(spec);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    SurfaceFile::from_json(&text)?.to_geometry()
}
