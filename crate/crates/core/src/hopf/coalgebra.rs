use num_traits::One;

use crate::cones::{ConeElement, LatticeCone};
use crate::error::{Error, Result};
use crate::linalg::{InnerProductForm, Rational};
use crate::locality::{antipode, CoproductTerm, FormalSum, LocalityBialgebra, LocalityCoalgebra};

/// Lattice cones with the transverse-cone coproduct
/// `Δ(C) = Σ_F t(C, F) ⊗ F`, graded by dimension, local for
/// `Q`-orthogonal pairs, with the Minkowski product on orthogonal pairs.
#[derive(Clone, Debug, Default)]
pub struct ConeBialgebra {
    q: InnerProductForm,
}

impl ConeBialgebra {
    pub fn new(q: InnerProductForm) -> Self {
        ConeBialgebra { q }
    }

    pub fn inner_product(&self) -> &InnerProductForm {
        &self.q
    }
}

impl LocalityCoalgebra for ConeBialgebra {
    type Basis = LatticeCone;

    fn unit(&self) -> LatticeCone {
        LatticeCone::zero(0)
    }

    fn degree(&self, b: &LatticeCone) -> usize {
        b.dim()
    }

    fn coproduct(&self, c: &LatticeCone) -> Vec<CoproductTerm<LatticeCone>> {
        (0..1u64 << c.dim())
            .map(|mask| (Rational::one(), c.transverse_cone_by_mask(&self.q, mask), c.face(mask)))
            .collect()
    }

    fn is_local(&self, a: &LatticeCone, b: &LatticeCone) -> bool {
        a.is_orthogonal_to(&self.q, b)
    }
}

impl LocalityBialgebra for ConeBialgebra {
    fn product(&self, a: &LatticeCone, b: &LatticeCone) -> Result<FormalSum<LatticeCone>> {
        if !self.is_local(a, b) {
            return Err(Error::Locality(format!("product of non-orthogonal cones {a} and {b}")));
        }
        Ok(FormalSum::basis(a.minkowski_product(b)?))
    }
}

pub fn cone_coproduct(q: &InnerProductForm, c: &LatticeCone) -> Vec<(LatticeCone, LatticeCone)> {
    ConeBialgebra::new(q.clone()).coproduct(c).into_iter().map(|(_, l, r)| (l, r)).collect()
}

pub fn reduced_coproduct(q: &InnerProductForm, c: &LatticeCone) -> Vec<(LatticeCone, LatticeCone)> {
    ConeBialgebra::new(q.clone()).reduced_coproduct(c).into_iter().map(|(_, l, r)| (l, r)).collect()
}

pub fn cone_counit(c: &LatticeCone) -> Rational {
    ConeBialgebra::default().counit(c)
}

pub fn cone_antipode(q: &InnerProductForm, c: &LatticeCone) -> Result<ConeElement> {
    antipode(&ConeBialgebra::new(q.clone()), c)
}
