//! Exact-arithmetic chip-firing on avalanche-finite integer matrices.
//!
//! The crate is organized around four layers:
//!
//! - [`intlinalg`]: arbitrary-precision integer/rational linear algebra
//!   (Smith normal form, determinants, inverses, nullspaces, arborescence
//!   counts) backing every cokernel computation,
//! - [`chipfire`]: the chip-firing engine itself (avalanche-finiteness
//!   certificates, stabilization, recurrent/superstable configurations,
//!   burning configurations),
//! - [`rootsys`]: finite crystallographic root-system data (types A-G) and
//!   the verifiers tying minuscule weights to superstable configurations,
//! - [`mckay`]: exact character-table arithmetic over cyclotomic fields,
//!   McKay-Cartan matrices, critical groups of representations, and the
//!   abelianization map.
//!
//! Everything is exact: no floating point anywhere. All values are built on
//! `num_bigint::BigInt` and `num_rational::BigRational`.

// indexed loops mirror the matrix formulas and stay
#![allow(clippy::needless_range_loop)]

pub mod chipfire;
pub mod cyclotomic;
pub mod intlinalg;
pub mod mckay;
pub mod rootsys;
pub mod suite;

pub use intlinalg::{AbelianGroupInvariants, IntMatrix, RationalMatrix, SmithDecomposition};
