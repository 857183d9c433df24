//! Flags, antiflags, arcs, and transitivity tests for collineation groups
//! acting on incidence graphs, plus explicit collineation generators for
//! the shipped constructions.

mod arcs;
mod collineation;
mod induced;
mod transitivity;

pub use arcs::{s_arcs_from, unique_3arc, Arc};
pub use collineation::{antiflags, flags, CollineationGroup};
pub use induced::{induced_collineations, t2star_collineations, t2star_translations};
pub use transitivity::{
    is_antiflag_transitive, is_flag_transitive, is_locally_s_arc_transitive, local_action,
};
