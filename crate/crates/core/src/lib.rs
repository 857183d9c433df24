//! Finite generalized quadrangles at desk scale.
//!
//! The crate builds the classical generalized quadrangles from their defining
//! forms, the `T2*(O)` quadrangle from a hyperoval, and coset geometries from
//! permutation groups; verifies the quadrangle axioms exhaustively; tests
//! flag-, antiflag-, and local arc-transitivity of collineation groups; and
//! runs the arithmetic feasibility sieve (order equations, discriminants,
//! parameter bounds) that rules candidate parameter sets in or out.
//!
//! Everything is exact: field arithmetic is table-driven GF(p^f), subspace
//! counts use arbitrary-precision integers, and square testing is integer
//! square root. No floating point anywhere in the computational path.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod permgroup;
pub mod sieve;
pub mod symmetry;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
