//! Command-line front end and JSON formats for certified upper bounds on
//! Euclidean s-distance sets with algebraic squared distances.
//!
//! The arithmetic lives in [`distbound_core`]; this crate adds input parsing
//! with JSON-path diagnostics, report serialization, text rendering, a
//! parallel certificate search and the `distbound` command.

pub mod cli;
pub mod input;
pub mod output;
pub mod search;
pub mod text;

pub use cli::{run, Outcome};
