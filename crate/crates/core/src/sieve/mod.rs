//! The arithmetic feasibility sieve: exact simple-group orders, the order
//! equation (s+1)(st+1) = N and its discriminant, parameter bounds, and the
//! replication of the catalogued elimination tables.

mod feasibility;
mod orders;
mod solver;
pub mod tables;

pub use feasibility::{
    parameter_feasible, pbounds_check, pbounds_with_s, q_part, ratio_check, stabilizer_bounds,
    FeasibilityVerdict, PBoundsVerdict, StabilizerVerdict,
};
pub use orders::{simple_group_order, GroupOrderSpec};
pub use solver::{discriminant_td, is_perfect_square, isqrt, solve_order_equation, OrderSolution};
pub use tables::{replicate_table, RowStatus, SieveReport, TableId};
