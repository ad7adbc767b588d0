//! Exact characters of Iwahori-Hecke algebras of types A, B, D and I2(m).

pub mod bounds;
pub mod combi;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod induce;
pub mod qpoly;
pub mod symfun;
pub mod verify;

pub use bounds::Bounds;
pub use coxeter::{CoxFamily, Generator, GroupElement, SignedComposition, Subgroup};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use induce::{BaseChar, CharValueTable};
pub use qpoly::LaurentHalf;
pub use symfun::{Partition, SymFunc};
