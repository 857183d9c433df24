//! Library surface of the command-line crate: the JSON interchange formats.

pub mod formats;
