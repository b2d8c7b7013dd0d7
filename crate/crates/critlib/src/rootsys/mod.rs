//! Finite crystallographic root systems (types A-G) and the chip-firing
//! verifiers built on their Cartan matrices.
//!
//! Node numbering follows Bourbaki throughout; node indices in this API are
//! 0-based (the CLI converts to the 1-based labels used on diagrams).
//! Roots are carried in two coordinate systems at once: simple-root
//! coordinates and fundamental-weight coordinates, linked by
//! weight = Cᵗ·simple. All arithmetic is integral; root lengths enter only
//! through the symmetrizing diagonal of the Cartan matrix.

mod data;
mod verify;

pub use data::{
    cartan_matrix, extended_dual_game_matrix, highest_roots, minuscule_dominant_weights,
    numbers_fire, positive_roots, root_system, DynkinType, Root, RootPoset, RootSysError,
    RootSystemData,
};
pub use verify::{
    burning_configurations_cartan, maximal_chain_count, minuscule_toppling_and_looping,
    stabilization_chain_from_rho, verify_minuscule_theorem, ChainFromRho, LoopingRun, MinusculeTheoremReport,
};
