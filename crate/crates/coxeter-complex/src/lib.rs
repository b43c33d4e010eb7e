//! Exact-arithmetic models of the spherical Coxeter complexes of types
//! `A_n`, `D_n`, `E6`, `E7`, and `E8`.
//!
//! Points of the sphere are [`vector::Ray`]s: primitive integer vectors up
//! to positive scale. Every geometric question — descent into the
//! fundamental chamber, orbit enumeration, cosines of distances and angles,
//! classification of the geodesic segment between two points, bigon tables
//! of distances from a fixed vertex — is answered in exact integer or
//! rational arithmetic; floating point appears only in the randomized
//! convexity experiments, and there only to estimate an intrinsic radius.

pub mod bigon;
pub mod cos;
pub mod diagram;
pub mod error;
pub mod gap;
pub mod geometry;
pub mod lab;
pub mod realization;
pub mod segment;
pub mod tables;
pub mod vector;

pub use cos::Cos;
pub use diagram::{Diagram, Family, TypeSet};
pub use error::{Error, Result};
pub use realization::Realization;
pub use vector::Ray;
