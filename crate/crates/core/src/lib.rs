//! Exact invariants of one-point totally ramified p-group covers of the
//! projective line.
//!
//! A cover is described by its ramification datum: the characteristic `p`,
//! the exponents `h_0 > h_1 > ... > h_{n-1}` of the group orders at the
//! ramification jumps, and the lower jumps `b_1 < ... < b_n`. From that datum
//! this crate derives the Weierstrass semigroup at the ramified point and the
//! tower of semigroups of the intermediate fields, the genus, conductor and
//! different, the upper jumps, Hasse–Arf congruences, bases of holomorphic
//! polydifferentials and a few classification screens.
//!
//! All arithmetic is exact. Formula values are arbitrary-precision integers or
//! rationals; semigroup elements are `u64` and stored through their Apéry set.
//!
//! ```
//! use hkg_core::{catalog, HkgCover};
//!
//! let cover = HkgCover::new(catalog::hermitian_type(5, 1).unwrap()).unwrap();
//! assert_eq!(cover.genus(), &10.into());
//! assert_eq!(cover.weierstrass_semigroup().minimal_generators(), vec![5, 6]);
//! ```

pub mod catalog;
pub mod error;
pub mod hkg;
pub mod oracle;
pub mod polydiff;
pub mod report;
pub mod semigroup;

mod arith;
mod serde_num;

pub use error::{CatalogError, HkgError, OracleError, ReportError, SemigroupError};
pub use hkg::{
    CaseReport, FiltrationRun, HasseArfReport, HkgCover, JumpKind, JumpSequence, JumpWitnesses,
    RamificationData, StructuralCase, TowerLevel, ValidationOptions, ValidationReport,
};
pub use polydiff::{CanonicalDegree, Indecomposability, PolyBasis};
pub use semigroup::{NumericalSemigroup, TelescopicChain};
