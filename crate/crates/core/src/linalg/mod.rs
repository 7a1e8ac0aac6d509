//! Exact rational linear algebra over the filtered space `Q^inf`.
//!
//! Vectors of different lengths are compared and combined after padding the
//! shorter one with zeros, so `(1, 0)` and `(1, 0, 0)` denote the same point.

mod inner;
mod lattice;
mod matrix;
mod rational;
mod vector;

pub use inner::InnerProductForm;
pub use lattice::{hermite_normal_form, IntLattice};
pub use matrix::{determinant, independent_subset, nullspace, rank, rref, solve_in_span};
pub use rational::{
    bigint_vec, format_rational, int, parse_rational, primitive_integer_vector, rat, Rational,
};
pub use vector::RatVector;

use std::cmp::Ordering;

use num_traits::Zero;

/// Lexicographic comparison treating missing trailing entries as zero.
pub fn cmp_padded<T: Ord + Zero>(a: &[T], b: &[T]) -> Ordering {
    let zero = T::zero();
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}
