//! Gabriel-Roiter measures for modules over tame quivers of type `Ã_n`,
//! Dynkin `A` and string algebras given by monomial relations.
//!
//! Modules are built as explicit representations with exact rational
//! matrices; every rank decision is exact.

pub mod artame;
pub mod error;
pub mod grengine;
pub mod grorder;
pub mod homlin;
pub mod linalg;
pub mod qkit;
pub mod strmod;

pub use error::{Error, Result};
pub use grorder::GrMeasure;
pub use qkit::{BandWord, CycleOrientation, DimVector, Letter, Quiver, StringWord};
