//! Exact arithmetic: GF(p^f), row reduction, classical forms, and the
//! totally-singular subspace counting and enumeration machinery.

mod counting;
mod enumerate;
mod field;
mod forms;
pub mod linalg;

pub use counting::{count_totally_singular, gaussian_binomial};
pub(crate) use field::split_prime_power;
pub use enumerate::{enumerate_totally_singular, DEFAULT_ENUM_CAP};
pub use field::{FieldElement, FiniteField};
pub use forms::{FormKind, FormSpace, Subspace};
