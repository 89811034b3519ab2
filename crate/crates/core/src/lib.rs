//! Cordial and antimagic labelings of paths, cycles and trees over finite
//! Abelian groups.
//!
//! The crate is `no_std` (it needs `alloc`). Groups are direct products of
//! cyclic groups ([`GroupSpec`]), graphs are small simple graphs
//! ([`SimpleGraph`]), and every labeling notion has a verifier in
//! [`labeling`], explicit constructions in [`constructions`] and an
//! exhaustive backtracking oracle in [`search`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod constructions;
mod error;
pub mod group;
pub mod labeling;
pub mod search;

pub use error::{Error, Result};
pub use group::{canonicalize_spec, groups_of_order, AntDecomposition, GroupElement, GroupSpec};
pub use labeling::{
    EdgeLabeling, GraphKind, SimpleGraph, Verdict, VertexLabeling, Violation,
};
pub use search::{Budget, SearchOutcome, SearchStatus};
