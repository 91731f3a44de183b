//! Hilbert functions of Kähler differential modules of zero-dimensional
//! projective schemes, computed with exact arithmetic.

pub mod cli;
pub mod coeff;
pub mod error;
pub mod formulas;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod kaehler;
mod linalg;
pub mod poly;
pub mod schemes;
pub mod verify;

pub use error::{Error, Result};
