//! The classical generalized quadrangles from their defining form spaces:
//! points are the totally singular 1-spaces, lines the totally singular
//! 2-spaces.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{enumerate_totally_singular, FiniteField, FormKind, FormSpace, DEFAULT_ENUM_CAP};
use crate::geometry::{verify_gq, GeneralizedQuadrangle, IncidenceStructure};
use crate::{Error, Result};

/// The classical families, with their orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    /// W(3,q): symplectic 4-space, order (q, q).
    W3,
    /// Q(4,q): parabolic 5-space, order (q, q).
    Q4,
    /// Q-(5,q): elliptic 6-space, order (q, q^2).
    QMinus5,
    /// H(3,q^2): hermitian 4-space over GF(q^2), order (q^2, q).
    H3,
    /// H(4,q^2): hermitian 5-space over GF(q^2), order (q^2, q^3).
    H4,
    /// The dual of H(4,q^2), order (q^3, q^2).
    H4Dual,
}

impl ClassicalFamily {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::W3 => "W3",
            ClassicalFamily::Q4 => "Q4",
            ClassicalFamily::QMinus5 => "Qminus5",
            ClassicalFamily::H3 => "H3",
            ClassicalFamily::H4 => "H4",
            ClassicalFamily::H4Dual => "H4dual",
        }
    }

    pub fn parse(s: &str) -> Option<ClassicalFamily> {
        match s.to_ascii_lowercase().as_str() {
            "w3" => Some(ClassicalFamily::W3),
            "q4" => Some(ClassicalFamily::Q4),
            "qminus5" | "q-5" | "qm5" => Some(ClassicalFamily::QMinus5),
            "h3" => Some(ClassicalFamily::H3),
            "h4" => Some(ClassicalFamily::H4),
            "h4dual" => Some(ClassicalFamily::H4Dual),
            _ => None,
        }
    }

    /// Expected order (s, t) at parameter q.
    pub fn expected_order(self, q: u64) -> (u64, u64) {
        match self {
            ClassicalFamily::W3 | ClassicalFamily::Q4 => (q, q),
            ClassicalFamily::QMinus5 => (q, q * q),
            ClassicalFamily::H3 => (q * q, q),
            ClassicalFamily::H4 => (q * q, q * q * q),
            ClassicalFamily::H4Dual => (q * q * q, q * q),
        }
    }

    /// Default parameter cap.
    pub fn default_cap(self) -> u64 {
        match self {
            ClassicalFamily::H4 | ClassicalFamily::H4Dual => 4,
            _ => 8,
        }
    }

    fn form_space(self, q: u64) -> Result<FormSpace> {
        match self {
            ClassicalFamily::W3 => FormSpace::symplectic(FiniteField::of_order(q)?, 4),
            ClassicalFamily::Q4 => {
                FormSpace::quadratic(FiniteField::of_order(q)?, 5, FormKind::QuadraticParabolic)
            }
            ClassicalFamily::QMinus5 => {
                FormSpace::quadratic(FiniteField::of_order(q)?, 6, FormKind::QuadraticMinus)
            }
            ClassicalFamily::H3 => FormSpace::hermitian(square_field(q)?, 4),
            ClassicalFamily::H4 | ClassicalFamily::H4Dual => {
                FormSpace::hermitian(square_field(q)?, 5)
            }
        }
    }
}

fn square_field(q: u64) -> Result<Arc<FiniteField>> {
    let sq = q.checked_mul(q).ok_or(Error::NotAPrimePower(q))?;
    FiniteField::of_order(sq)
}

/// What the construction knows beyond the abstract incidence structure:
/// the point vectors and the ambient form space, kept so matrix groups can
/// act on the geometry later.
pub struct ConstructionData {
    pub family: ClassicalFamily,
    pub q: u64,
    pub space: FormSpace,
    /// Canonical vector of each point, in point-index order.
    pub point_vectors: Vec<Vec<u64>>,
    /// Index lookup for canonical point vectors.
    pub point_index: HashMap<Vec<u64>, u32>,
    /// Point set of each line, in line-index order (pre-dualization).
    pub line_sets: Vec<Vec<u32>>,
    /// Whether the emitted quadrangle is the dual of the enumerated one.
    pub dualized: bool,
}

/// Build a classical quadrangle. The output has passed `verify_gq` and its
/// order has been checked against the family table; an internal mismatch is
/// a construction defect, not a user error.
pub fn classical_gq(
    family: ClassicalFamily,
    q: u64,
    cap: Option<u64>,
) -> Result<(GeneralizedQuadrangle, ConstructionData)> {
    let max = cap.unwrap_or_else(|| family.default_cap());
    if q < 2 || q > max {
        return Err(Error::ResourceCap { what: family.name(), q, max });
    }
    let space = family.form_space(q)?;
    let field = space.field().clone();
    let points = enumerate_totally_singular(&space, 1, DEFAULT_ENUM_CAP)?;
    let point_vectors: Vec<Vec<u64>> = points.iter().map(|s| s.basis()[0].clone()).collect();
    let point_index: HashMap<Vec<u64>, u32> = point_vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect();
    let planes = enumerate_totally_singular(&space, 2, DEFAULT_ENUM_CAP)?;
    let line_sets: Vec<Vec<u32>> = planes
        .iter()
        .map(|sub| {
            sub.projective_points(&field)
                .into_iter()
                .map(|v| point_index[&v])
                .collect()
        })
        .collect();

    let inc = IncidenceStructure::new(point_vectors.len(), line_sets.clone())?;
    let gq = verify_gq(inc).map_err(|e| {
        Error::ConstructionDefect(format!("{} at q={q} failed verification: {e}", family.name()))
    })?;
    let gq = if family == ClassicalFamily::H4Dual { gq.dual()? } else { gq };

    let (es, et) = family.expected_order(q);
    if (gq.s() as u64, gq.t() as u64) != (es, et) {
        return Err(Error::ConstructionDefect(format!(
            "{} at q={q} has order {:?}, expected ({es},{et})",
            family.name(),
            gq.order()
        )));
    }
    let data = ConstructionData {
        family,
        q,
        space,
        point_vectors,
        point_index,
        line_sets,
        dualized: family == ClassicalFamily::H4Dual,
    };
    Ok((gq, data))
}
