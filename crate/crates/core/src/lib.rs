//! Commuting conjugacy classes of finite groups.
//!
//! Given `G` and a normal subgroup `H` with `G/H` cyclic, this crate
//! enumerates the conjugacy classes, computes which pairs of classes
//! contain commuting representatives, and builds explicit commuting
//! matchings between classes lying in different cosets of `H`. Dedicated
//! modules cover `Sym(n)` over `Alt(n)` through partition combinatorics,
//! `GL₂(q)` over `SL₂(q)` through class types, and Frobenius groups.
//!
//! ```
//! use commuting_classes::catalog::{GroupSpec, SubgroupSpec};
//! use commuting_classes::{theorem1_matching, with_quotient, DEFAULT_CAP};
//!
//! let q = GroupSpec::Sym(4).build(&SubgroupSpec::Alt, DEFAULT_CAP).unwrap();
//! let pairs = with_quotient!(&q, q => theorem1_matching(q, 0).unwrap().pairs.len());
//! assert_eq!(pairs, 2);
//! ```
//!
//! Data-parallel loops use rayon when the default `parallel` feature is on
//! and plain iterators otherwise; results are identical either way.

mod par;

pub mod bitmatrix;
pub mod catalog;
pub mod element;
pub mod error;
pub mod frobenius;
pub mod gl;
pub mod group;
pub mod hall;
pub mod partitions;
pub mod perm;
pub mod quotient;
pub mod relation;
pub mod verify;

pub use bitmatrix::BitMatrix;
pub use element::GroupElement;
pub use error::{Error, Result};
pub use group::{ClassTable, ConjugacyClass, FiniteGroup, DEFAULT_CAP};
pub use hall::{
    conjecture_explorer, hall_audit, max_matching, power_map_class_bijection, theorem1_matching,
    theorem2_partition, verify_class_matching, ClassMatching, CommutingTuple, HallAuditReport,
};
pub use par::is_parallel;
pub use partitions::{common_coarsening, coarsenings, partitions, Partition};
pub use perm::Permutation;
pub use quotient::{cyclic_quotient, QuotientData};
pub use relation::{central_classes, is_split, split_flags, to_dot};
