//! Point-line incidence structures and generalized quadrangles.

mod graph;
mod incidence;
mod pointsets;
mod quadrangle;

pub use graph::IncidenceGraph;
pub use incidence::IncidenceStructure;
pub use pointsets::{find_ovoid, is_ovoid, is_regular_pair, perp, perp_pair, perp_perp};
pub use quadrangle::{verify_gq, GeneralizedQuadrangle};
