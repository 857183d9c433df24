//! Constructions of generalized quadrangles: the classical families from
//! forms, the hyperoval quadrangle, and coset geometries from groups.

mod classical;
mod coset;
mod hyperoval;
mod t2star;

pub use classical::{classical_gq, ClassicalFamily, ConstructionData};
pub use coset::{coset_geometry, CosetGeometry};
pub use hyperoval::{regular_hyperoval, Hyperoval};
pub use t2star::{t2_star, T2StarData};
