//! Finite groups as multiplication tables, homomorphisms, subgroups.

mod finite;
mod hom;
pub mod library;
mod subgroup;

pub use finite::{validate_table, FiniteGroup};
pub use hom::{conjugation, injective_homs, GroupHom};
pub use subgroup::{
    all_subgroups, centralizer, conjugacy_representative, subgroups_up_to_conjugacy, Subgroup,
};

/// Subset enumeration uses 128-bit masks; no configured bound may exceed it.
pub const HARD_ORDER_LIMIT: usize = 128;
