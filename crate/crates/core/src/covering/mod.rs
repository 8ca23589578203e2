//! Coset enumeration, covers from finite-index subgroups, deck groups and
//! path lifting.

mod cosets;
mod cover;
mod deck;
mod lift;

pub use cosets::{enumerate_cosets, CosetTable};
pub use cover::{cover_from_subgroup, index_two_subgroups, sheet_name, CoverData};
pub use deck::{canonical_cover_deck, deck_group, deck_sheets, normalizer_quotient_order, CanonicalDeck, DeckGroup};
pub use lift::{lift_edge_path, lift_in_cover, parse_quotient_path, Lift};
