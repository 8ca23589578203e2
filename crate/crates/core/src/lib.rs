//! Combinatorial models of orbispaces: finite cell complexes, complexes of
//! groups over them, finite group actions on simplicial complexes, guided
//! loop groups of global quotients and covering spaces.
//!
//! Everything is desk-scale and exact: groups are multiplication tables,
//! spaces are finite posets, and every claim about a fundamental group is
//! certified through finite sets, word-level identities or integer normal
//! forms.

pub mod cog;
pub mod complexes;
pub mod config;
pub mod covering;
pub mod error;
pub mod examples;
pub mod gaction;
pub mod groups;
pub mod homotopy;
pub mod io;
pub mod par;
pub mod report;

pub use error::{Error, Result};
pub use report::{Report, Violation};
