//! Root systems, even Weyl groups, E-orbit functions and their finite and
//! torus-sampled transforms.
//!
//! Algebra (weights, group elements, orbits, grids) is exact over
//! [`Rational`]. Function values are computed in any float type implementing
//! [`Real`]; the aliases at the bottom of this file fix the common choices.

pub mod efunctions;
pub mod error;
pub mod orbits;
pub mod rootsystem;
pub mod scalar;
pub mod symfunc;
pub mod transforms;
pub mod weylgroup;

pub use error::{Error, Result};
pub use rootsystem::{Basis, DiagramSpec, RootSystem, Series};
pub use scalar::{Coord, Rational, Real, Weight};
pub use weylgroup::{ChamberConfig, GroupElement, WeylGroup};

/// Double-precision complex value.
pub type Complex64 = num_complex::Complex<f64>;
/// Single-precision complex value.
pub type Complex32 = num_complex::Complex<f32>;
/// A point in ω-coordinates at double precision.
pub type Point64 = Vec<f64>;
