//! JSON interchange formats. Documents carry a format version and
//! round-trip losslessly; all arrays are emitted in canonical order.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use gq_core::geometry::{verify_gq, GeneralizedQuadrangle, IncidenceStructure};
use gq_core::permgroup::{PermGroup, Permutation};

pub const FORMAT_VERSION: u32 = 1;

/// A point-line geometry with optional verified order. Lines are stored
/// extensionally as sorted point-index arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryDocument {
    pub format_version: u32,
    pub metadata: GeometryMetadata,
    pub points: usize,
    pub lines: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<(u32, u32)>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct GeometryMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

impl GeometryDocument {
    pub fn from_quadrangle(
        gq: &GeneralizedQuadrangle,
        construction: Option<String>,
        q: Option<u64>,
    ) -> GeometryDocument {
        GeometryDocument {
            format_version: FORMAT_VERSION,
            metadata: GeometryMetadata { construction, q },
            points: gq.num_points(),
            lines: gq.lines().to_vec(),
            order: Some(gq.order()),
        }
    }

    pub fn to_incidence_structure(&self) -> anyhow::Result<IncidenceStructure> {
        if self.format_version != FORMAT_VERSION {
            bail!("unsupported format version {}", self.format_version);
        }
        Ok(IncidenceStructure::new(self.points, self.lines.clone())?)
    }

    /// Parse and re-verify; the stored order, if any, must agree.
    pub fn verify(&self) -> anyhow::Result<GeneralizedQuadrangle> {
        let gq = verify_gq(self.to_incidence_structure()?)?;
        if let Some(order) = self.order {
            if order != gq.order() {
                bail!("stored order {:?} contradicts verified order {:?}", order, gq.order());
            }
        }
        Ok(gq)
    }
}

/// A permutation group given by 0-indexed image arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDocument {
    pub format_version: u32,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    /// Decimal string; verified against the rebuilt chain on load.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

impl GroupDocument {
    pub fn from_group(group: &PermGroup) -> GroupDocument {
        GroupDocument {
            format_version: FORMAT_VERSION,
            degree: group.degree(),
            generators: group.generators().iter().map(|g| g.images().to_vec()).collect(),
            order: Some(group.order().to_string()),
        }
    }

    pub fn to_group(&self, seed: u64) -> anyhow::Result<PermGroup> {
        if self.format_version != FORMAT_VERSION {
            bail!("unsupported format version {}", self.format_version);
        }
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|img| {
                if img.len() != self.degree {
                    bail!("generator of length {} in a degree-{} group", img.len(), self.degree);
                }
                Ok(Permutation::from_images(img.clone())?)
            })
            .collect::<anyhow::Result<_>>()?;
        let group = if gens.is_empty() {
            PermGroup::trivial(self.degree)
        } else {
            PermGroup::from_generators_seeded(gens, seed)?
        };
        if let Some(claim) = &self.order {
            let actual = group.order().to_string();
            if claim != &actual {
                bail!("claimed order {claim} contradicts computed order {actual}");
            }
        }
        Ok(group)
    }
}

/// Machine-readable form of a sieve table report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SieveReportDocument {
    pub format_version: u32,
    pub table: String,
    pub rows: Vec<SieveRowDocument>,
    pub discrepancies: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SieveRowDocument {
    pub label: String,
    pub status: String,
    pub checks: Vec<SieveCheckDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SieveCheckDocument {
    pub name: String,
    pub recomputed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    pub matched: bool,
}

impl SieveReportDocument {
    pub fn from_report(report: &gq_core::sieve::SieveReport) -> SieveReportDocument {
        SieveReportDocument {
            format_version: FORMAT_VERSION,
            table: report.table.clone(),
            discrepancies: report.discrepancy_count,
            rows: report
                .rows
                .iter()
                .map(|r| SieveRowDocument {
                    label: r.label.clone(),
                    status: match r.status {
                        gq_core::sieve::RowStatus::Match => "match".to_string(),
                        gq_core::sieve::RowStatus::Discrepancy => "DISCREPANCY".to_string(),
                    },
                    note: r.note.clone(),
                    checks: r
                        .checks
                        .iter()
                        .map(|c| SieveCheckDocument {
                            name: c.name.clone(),
                            recomputed: c.recomputed.clone(),
                            printed: c.printed.clone(),
                            matched: c.matched,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
