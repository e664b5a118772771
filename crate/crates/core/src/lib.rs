//! Exact computations for homology 3-spheres presented by two-knot Kirby
//! diagrams and by ±1-surgery on twisted Whitehead doubles.
//!
//! Everything is done in arbitrary-precision integer (or rational)
//! arithmetic; nothing here touches floating point.

pub mod intform;
pub mod kirbyrep;
pub mod knotinv;
pub mod linkdiag;
pub mod matrix;
pub mod results;

mod sign;

pub use sign::Sign;
