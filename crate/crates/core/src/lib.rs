//! Exact computation of the sector theory of code conformal nets built from
//! tensor powers of the Ising model, and certification of holomorphic
//! framed extensions with structure codes `(C, D)`.

mod count;

pub mod catalog;
pub mod error;
pub mod extension;
pub mod gf2;
pub mod induction;
pub mod ising;
pub mod pointed;
pub mod scalar;
pub mod sector;

pub use error::{Error, Result};
pub use gf2::{BinaryCode, BitWord};
pub use scalar::DyadicRootTwo;
