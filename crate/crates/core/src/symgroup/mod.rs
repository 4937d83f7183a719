//! Exact computations in the symmetric group algebra `C[S_n]`.
//!
//! This module is the brute-force ground truth for the quiver: arrow counts
//! and hom dimensions of the injection category can be read off either from
//! actual idempotents acting on the bimodule of injections
//! ([`direct_hom_dimension`]) or from characters ([`induction_multiplicity`]),
//! and both are compared with the combinatorial rule ([`pieri_coefficient`]).

mod algebra;
mod characters;
mod idempotents;
mod induction;
mod perm;
mod tableaux;
mod verify;

pub use algebra::GroupAlgebraElement;
pub use characters::{centralizer_order, character_value, class_size, factorial, specht_dimension};
pub use idempotents::{
    central_idempotent, direct_hom_dimension, idempotent_hom_dimension, injection_bimodule, is_central,
    is_idempotent, young_symmetrizer, InjectionBasisElement,
};
pub use induction::{branching_count, induction_multiplicity, pieri_coefficient};
pub use perm::{all_permutations, Permutation};
pub use tableaux::{canonical_tableau, standard_tableaux, Tableau};
pub use verify::{verify_idempotents, verify_morita, verify_pieri};

/// Cycle types index conjugacy classes of `S_n`.
pub type CycleType = crate::partitions::Partition;
