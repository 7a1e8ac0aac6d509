use super::characters::{exp_integral, exp_sum, renormalized_mu};
use super::coalgebra::ConeBialgebra;
use super::target::GermAlgebra;
use crate::cones::LatticeCone;
use crate::error::Result;
use crate::germs::MeromorphicGerm;
use crate::linalg::InnerProductForm;
use crate::locality::{Birkhoff, BirkhoffViaProjection, Character, Convolution, FnCharacter};

type GermFn = fn(&LatticeCone, i64) -> MeromorphicGerm;

/// A memoized cone character with values computed through a fixed degree.
pub type ConeCharacter<F> = FnCharacter<ConeBialgebra, GermAlgebra, F>;

pub fn sum_character(order: i64) -> ConeCharacter<impl Fn(&LatticeCone) -> Result<MeromorphicGerm>> {
    let f: GermFn = exp_sum;
    FnCharacter::new(move |c: &LatticeCone| Ok(f(c, order)))
}

pub fn integral_character() -> ConeCharacter<impl Fn(&LatticeCone) -> Result<MeromorphicGerm>> {
    FnCharacter::new(|c: &LatticeCone| Ok(exp_integral(c)))
}

pub fn mu_character(
    q: &InnerProductForm,
    order: i64,
) -> ConeCharacter<impl Fn(&LatticeCone) -> Result<MeromorphicGerm>> {
    let q = q.clone();
    FnCharacter::new(move |c: &LatticeCone| Ok(renormalized_mu(c, &q, order)))
}

#[derive(Clone, Debug)]
pub struct EulerMaclaurinReport {
    pub matches: bool,
    pub order: i64,
    pub sum: MeromorphicGerm,
    pub convolution: MeromorphicGerm,
    /// `S(C) - (μ ⋆ I)(C)` restricted to the compared window.
    pub discrepancy: MeromorphicGerm,
}

/// Compares `S(C)` with `(μ ⋆ I)(C)` through degree `order`. The factors of
/// the convolution are computed at order `order + dim C` so that products
/// with the poles of `I` stay valid through `order`.
pub fn euler_maclaurin_verify(c: &LatticeCone, q: &InnerProductForm, order: i64) -> Result<EulerMaclaurinReport> {
    let coalgebra = ConeBialgebra::new(q.clone());
    let target = GermAlgebra::new(q.clone()).enforcing();
    let inner = order + c.dim() as i64;
    let mu = mu_character(q, inner);
    let integral = integral_character();
    let conv = Convolution::new(&coalgebra, &target, &mu, &integral).value(c)?.truncate(order);
    let sum = exp_sum(c, order);
    let discrepancy = sum.sub(&conv).truncate(order);
    Ok(EulerMaclaurinReport {
        matches: discrepancy.is_zero() && conv.valid_up_to() >= order,
        order,
        sum,
        convolution: conv,
        discrepancy,
    })
}

/// `(φ₁^{⋆-1}(C), φ₂(C))` for `φ = S` through degree `order`, either by the
/// general recursion or through the projection.
pub fn birkhoff_of_sum(
    c: &LatticeCone,
    q: &InnerProductForm,
    order: i64,
    via_projection: bool,
) -> Result<(MeromorphicGerm, MeromorphicGerm)> {
    let coalgebra = ConeBialgebra::new(q.clone());
    let target = GermAlgebra::new(q.clone()).enforcing();
    let s = sum_character(order + c.dim() as i64);
    let (a, b) = if via_projection {
        let f = BirkhoffViaProjection::new(&coalgebra, &target, &s)?;
        (f.phi1_inverse(c)?, f.phi2(c)?)
    } else {
        let f = Birkhoff::new(&coalgebra, &target, &s);
        let inv = f.first_inverse().value(c)?;
        (inv, f.phi2(c)?)
    };
    Ok((a.truncate(order), b.truncate(order)))
}
