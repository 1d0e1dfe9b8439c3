//! Finite groups given by Cayley tables: subgroup lattices, characteristic
//! series, embedding properties of subgroups (𝓗, 𝓗C, c-normal, weakly 𝓗,
//! quasinormal, subnormal), group classes, a corpus of small groups, and a
//! harness that checks structural statements over that corpus.
//!
//! `no_std` with `alloc`; file IO and the command line live in `hc-lab`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bits;
pub mod classes;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod group;
pub mod harness;
pub mod iso;
pub mod lattice;
pub mod morphism;
pub mod series;
pub mod subgroup;

pub use bits::BitSet;
pub use embedding::{EmbeddingVerdict, HcRule, Obstruction};
pub use error::{Error, Result};
pub use group::{Caps, Group};
pub use lattice::SubgroupLattice;
pub use morphism::Morphism;
pub use subgroup::Subgroup;
