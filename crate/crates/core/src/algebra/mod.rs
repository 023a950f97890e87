//! Finite magmas and groups given by Cayley tables, with the subgroup,
//! coset and factorization machinery the solution theory needs.

mod factorization;
mod group;
mod magma;
mod maps;
mod subgroup;

/// An element of a carrier `{0..n}`.
pub type Element = usize;

pub use factorization::{exact_factorizations, Factorization};
pub use group::{permutation_sign, permutations, Group};
pub use magma::Magma;
pub use maps::{
    commuting_idempotent_pairs, idempotent_endomorphisms, SelfMap, PAIR_SCAN_MAX, SELF_MAP_SCAN_MAX,
};
pub use subgroup::{
    closure, normal_subgroups, representative_systems, subgroups, subgroups_by_generation,
    subgroups_by_subset_scan, RepresentativeSystems, Subgroup, SUBSET_SCAN_MAX,
};

pub(crate) use magma::flatten_grid;
pub(crate) use maps::decode_base;
