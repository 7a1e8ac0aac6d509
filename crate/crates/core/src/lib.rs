//! Exact lattice-cone generating functions and their renormalisation.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: rationals, vectors, inner-product families and integer lattices.
//! * [`cones`]: simplicial lattice cones, faces, transverse cones, Minkowski
//!   products and smooth subdivisions.
//! * [`germs`]: truncated meromorphic germs with linear poles, their
//!   canonical holomorphic/polar splitting and numeric evaluation.
//! * [`locality`]: locality relations, convolution over connected locality
//!   coalgebras, antipodes and Birkhoff factorisation.
//! * [`hopf`]: the cone bialgebra together with the exponential sum `S`, the
//!   exponential integral `I` and the interpolation factor `mu`.
//! * [`io`] and [`oracle`]: JSON file formats and the brute-force numeric
//!   lattice sum used for cross-validation.

pub mod cones;
pub mod error;
pub mod germs;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod locality;
pub mod oracle;

pub use error::{Error, Result};
pub use linalg::{InnerProductForm, IntLattice, RatVector, Rational};
pub use cones::{ConeElement, LatticeCone};
pub use germs::{LinearForm, MeromorphicGerm};
