//! Exact linear algebra and Lie-algebra machinery for deciding whether a Lie
//! algebra is determined by its commutator map, together with finite
//! Lie-ring enumeration.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `ualie` crate.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod constructions;
pub mod finite;
pub mod lie;
pub mod linalg;
pub mod rng;
pub mod scalar;

pub use lie::{SeriesKind, StructureConstantAlgebra};
pub use linalg::{Matrix, Subspace};
pub use scalar::{Field, FieldSpec, Scalar};
