//! Character-table arithmetic, McKay-Cartan matrices, critical groups of
//! representations, the representation rng, and the abelianization map.
//!
//! Tables for the fixed nonabelian groups ship as JSON data files and are
//! revalidated on load (exact row orthogonality, degree sums, class sizes);
//! abelian and binary dihedral tables are generated from closed forms.

mod abelianization;
mod cayley;
mod catalog;
mod quiver;
mod rng;
mod table;

pub use abelianization::{
    abelianization_map, det_character, dual_group_invariants, is_in_sl,
    linear_basis_vectors_superstable, linear_character_indices, verify_products_annihilated,
    AbelianizationReport, ProductsReport,
};
pub use catalog::{bundled_groups, catalog_table, CatalogEntry};
pub use cayley::{cayley_digraph_check, CayleyReport};
pub use quiver::{
    mckay_cartan, structure_constants, tensor_multiplicities, McKayData, StructureConstants,
};
pub use rng::{RngElement, RngStructure};
pub use table::{abelian_character_table, dicyclic_character_table, CharacterTable, ClassInfo};

use thiserror::Error;

use crate::chipfire::ChipError;
use crate::intlinalg::LinAlgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McKayError {
    #[error("corrupt character table: {0}")]
    CorruptTable(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("tensor multiplicity at ({0}, {1}) is not a nonnegative integer")]
    NotIntegral(usize, usize),
    #[error("virtual character is not a true character (negative coefficient at {0})")]
    NegativeCoefficient(usize),
    #[error("representation is not faithful (kernel classes {0:?})")]
    NotFaithful(Vec<usize>),
    #[error("representation does not land in the special linear group")]
    NotInSL,
    #[error("coset has nonzero degree {0}")]
    NotDegreeZero(String),
    #[error("no linear character matches the computed determinant of row {0}")]
    NoMatchingLinearCharacter(usize),
    #[error("critical-group presentations disagree: {0}")]
    PresentationsDisagree(String),
    #[error("abelianization kernel check failed: {0}")]
    KernelCheckFailed(String),
    #[error("invalid generators: {0}")]
    GeneratorsInvalid(String),
    #[error(transparent)]
    Chip(#[from] ChipError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
