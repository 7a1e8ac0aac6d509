use crate::germs::{are_independent_germs, MeromorphicGerm};
use crate::linalg::{InnerProductForm, Rational};
use crate::locality::TargetAlgebra;

/// Germs with pointwise product, `Q`-orthogonality as locality relation and
/// `π₁ = π₊`, `π₂ = π₋`.
#[derive(Clone, Debug, Default)]
pub struct GermAlgebra {
    q: InnerProductForm,
    enforce_independence: bool,
}

impl GermAlgebra {
    pub fn new(q: InnerProductForm) -> Self {
        GermAlgebra { q, enforce_independence: false }
    }

    /// Checks every product formed by the locality algorithms for
    /// independence of its factors.
    pub fn enforcing(mut self) -> Self {
        self.enforce_independence = true;
        self
    }

    pub fn inner_product(&self) -> &InnerProductForm {
        &self.q
    }
}

impl TargetAlgebra for GermAlgebra {
    type Value = MeromorphicGerm;

    fn one(&self) -> MeromorphicGerm {
        MeromorphicGerm::one(0)
    }

    fn zero(&self) -> MeromorphicGerm {
        MeromorphicGerm::zero(0, crate::germs::EXACT)
    }

    fn add(&self, a: &MeromorphicGerm, b: &MeromorphicGerm) -> MeromorphicGerm {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &MeromorphicGerm) -> MeromorphicGerm {
        a.scale(c)
    }

    fn mul(&self, a: &MeromorphicGerm, b: &MeromorphicGerm) -> MeromorphicGerm {
        a.mul(b)
    }

    fn equal(&self, a: &MeromorphicGerm, b: &MeromorphicGerm) -> bool {
        a.agrees_with(b)
    }

    fn independent(&self, a: &MeromorphicGerm, b: &MeromorphicGerm) -> bool {
        are_independent_germs(a, b, &self.q)
    }

    fn restricted_product(&self) -> bool {
        self.enforce_independence
    }

    fn project_first(&self, a: &MeromorphicGerm) -> MeromorphicGerm {
        a.project_plus(&self.q)
    }

    fn project_second(&self, a: &MeromorphicGerm) -> MeromorphicGerm {
        a.project_minus(&self.q)
    }

    fn second_is_ideal(&self) -> bool {
        true
    }

    fn in_first(&self, a: &MeromorphicGerm) -> bool {
        a.decompose(&self.q).polar.is_zero()
    }

    fn in_second(&self, a: &MeromorphicGerm) -> bool {
        a.decompose(&self.q).holomorphic.is_zero()
    }
}
