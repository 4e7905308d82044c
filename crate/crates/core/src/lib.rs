//! Computational finite group theory over validated Cayley tables.
//!
//! Groups are finite carriers `0..n` with a checked multiplication table;
//! subsets are indicator bit-vectors. On top of that sit subgroups and
//! cosets, conjugation and quotients, group actions with the mod-p
//! fixed-point count, cyclic subgroups, and constructive Cauchy and Sylow
//! procedures whose every intermediate claim is re-verified by exhaustive
//! scans.

pub mod action;
pub mod arith;
pub mod carrier;
pub mod cayley;
pub mod conjnormal;
pub mod cyclic;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod subgroup;
pub mod sylow;
pub mod verdict;

pub use carrier::{Carrier, ElemSet};
pub use error::{Error, Result};
pub use group::{Group, GroupSpec};
pub use sylow::{CauchyWitness, SylowCertificate};
pub use verdict::{Quantity, Verdict, Witness};
