//! Simplicial lattice cones and their combinatorics.

mod cone;
mod subdivision;
mod triangulate;

pub use cone::{are_orthogonal, LatticeCone};
pub use subdivision::{
    parallelepiped_points, smooth_subdivision, smooth_subdivision_with, Parallelepiped, PivotOrder,
    SubdivisionStrategy,
};
pub use triangulate::triangulate;

use crate::locality::FormalSum;

/// A formal rational combination of lattice cones, graded by dimension.
pub type ConeElement = FormalSum<LatticeCone>;
