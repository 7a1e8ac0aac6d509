use std::collections::BTreeSet;

use crate::cones::{smooth_subdivision_with, LatticeCone, SubdivisionStrategy};
use crate::germs::{geometric_germ_rational, inverse_form_germ, MeromorphicGerm, EXACT};
use crate::linalg::{InnerProductForm, RatVector};

/// `Σ_{n ∈ C° ∩ Λ} e^{<n,z>}` for a cone smooth with respect to its lattice.
fn smooth_open_sum(c: &LatticeCone, order: i64) -> MeromorphicGerm {
    let rays = c.lattice_rays();
    let n = rays.len() as i64;
    let factor_order = order.saturating_add((n - 1).max(0));
    rays.iter().fold(MeromorphicGerm::one(c.ambient_dim()), |acc, u| {
        acc.mul(&geometric_germ_rational(u, factor_order))
    })
    .truncate(order)
}

/// `∫_C e^{<x,z>} dx` (Lebesgue measure normalised by the lattice) for a
/// smooth cone: `Π -1/<u_i,z>`.
fn smooth_integral(c: &LatticeCone) -> MeromorphicGerm {
    c.lattice_rays()
        .iter()
        .fold(MeromorphicGerm::one(c.ambient_dim()), |acc, u| acc.mul(&inverse_form_germ(u)))
}

/// The exponential sum over interior lattice points, through degree `order`.
pub fn exp_sum(c: &LatticeCone, order: i64) -> MeromorphicGerm {
    exp_sum_with(c, order, SubdivisionStrategy::default())
}

/// [`exp_sum`] through a chosen smooth subdivision. The interior of `C` is
/// partitioned into the relative interiors of those cones of the subdivided
/// fan whose barycentre lies in `C°`.
pub fn exp_sum_with(c: &LatticeCone, order: i64, strategy: SubdivisionStrategy) -> MeromorphicGerm {
    if c.is_zero() {
        return MeromorphicGerm::one(c.ambient_dim());
    }
    if c.is_smooth() {
        return smooth_open_sum(c, order);
    }
    let mut fan = BTreeSet::new();
    for piece in smooth_subdivision_with(c, strategy) {
        fan.extend(piece.faces().into_iter().filter(|f| !f.is_zero()));
    }
    let mut total = MeromorphicGerm::zero(c.ambient_dim(), order);
    for f in fan {
        let centre = f.generator_vectors().iter().fold(RatVector::zeros(0), |acc, g| &acc + g);
        if c.contains_in_relative_interior(&centre) {
            total = total.add(&smooth_open_sum(&f, order));
        }
    }
    total
}

/// The exponential integral, exact.
pub fn exp_integral(c: &LatticeCone) -> MeromorphicGerm {
    exp_integral_with(c, SubdivisionStrategy::default())
}

pub fn exp_integral_with(c: &LatticeCone, strategy: SubdivisionStrategy) -> MeromorphicGerm {
    if c.is_zero() {
        return MeromorphicGerm::one(c.ambient_dim());
    }
    if c.is_smooth() {
        return smooth_integral(c);
    }
    smooth_subdivision_with(c, strategy)
        .iter()
        .fold(MeromorphicGerm::zero(c.ambient_dim(), EXACT), |acc, p| acc.add(&smooth_integral(p)))
}

/// `μ = π₊ S`, through degree `order`.
pub fn renormalized_mu(c: &LatticeCone, q: &InnerProductForm, order: i64) -> MeromorphicGerm {
    exp_sum(c, order).project_plus(q)
}
