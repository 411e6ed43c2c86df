pub mod canon;
pub mod chain;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod cosetgraph;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod perm;
pub mod quotient;

pub use error::{Error, Result};
pub use group::{GiantKind, PermGroup};
pub use perm::{Parity, Permutation};
