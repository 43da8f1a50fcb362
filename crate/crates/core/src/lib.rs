//! Combinatorial model of tilting sheaves on the weighted projective line of type (2,2,n).
//!
//! Indecomposable sheaves correspond to skew-curves on a cylinder with n marked points on each
//! boundary and an involution with two fixed points. Tilting sheaves correspond to
//! pseudo-triangulations and mutations to flips.

pub mod compat;
pub mod curves;
pub mod error;
pub mod flip;
pub mod graph;
pub mod lattice;
pub mod skewcurves;
pub mod triang;
pub mod wire;

pub use curves::{Cross, CurveClass};
pub use error::{Error, Result};
pub use lattice::LElement;
pub use skewcurves::{LambdaOrbit, LineForm, Point2, SheafName, Sign, SkewCurve};
pub use triang::PseudoTri;
