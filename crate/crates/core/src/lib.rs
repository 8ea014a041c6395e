//! rcg-core: a permutation-group engine specialized for the arithmetic of
//! real conjugacy class sizes.
//!
//! The crate provides:
//!
//! - [`perm`] / [`group`]: permutation arithmetic and groups by generators,
//!   with order, membership, and bounded element streams via deterministic
//!   stabilizer chains;
//! - [`classes`]: conjugacy classes, centralizers, realness with explicit
//!   reversing witnesses, generalized centralizers, and p-part utilities;
//! - [`structure`]: centers, derived series, solvability, p-cores, O^{p'},
//!   Sylow subgroups, the normal-subgroup lattice, and quotient groups as
//!   faithful coset actions;
//! - [`realprops`]: properties T and WT, good elements, the class-size
//!   2-part scanners, and the Zsigmondy primitive-prime-divisor utility;
//! - [`zoo`]: deterministic constructors for the verification corpus and a
//!   JSON generator-file format;
//! - [`verify`]: the suite runner producing deterministic group reports.

pub mod arith;
pub mod caps;
pub mod classes;
pub mod error;
pub mod group;
pub mod perm;
pub mod realprops;
pub mod structure;
pub mod verify;
pub mod zoo;

pub use classes::{class_of, conjugacy_classes, ConjClass};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub use structure::{QuotientGroup, SubgroupHandle};
