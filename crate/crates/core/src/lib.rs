//! Weighted quiver mutation, cluster modular groups of T_{n,w} quivers, and
//! exact counts for affine and doubly extended cluster complexes.

pub mod cli;
pub mod counting;
pub mod error;
pub mod explorer;
pub mod families;
pub mod framing;
pub mod mcg;
pub mod quiver;

pub use error::{Error, Result};
