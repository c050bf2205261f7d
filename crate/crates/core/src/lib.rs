//! Exact computations with real Lie bialgebras of dimension 2 and 3.

pub mod autact;
pub mod bialg;
pub mod classify;
pub mod cli;
pub mod cohom;
pub mod error;
pub mod exactnum;
pub mod format;
pub mod liealg;

pub use error::{Error, Result};
