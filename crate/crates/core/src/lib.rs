//! Exact toric and tropical intersection theory.

pub mod classrecovery;
pub mod error;
pub mod exactlinalg;
pub mod io;
pub mod matroid;
pub mod polyhedra;
pub mod toric;
pub mod tropical;

pub use error::{Error, Result};
