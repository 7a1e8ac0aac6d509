use std::fmt::Debug;

use num_traits::{One, Zero};

use super::FormalSum;
use crate::error::Result;
use crate::linalg::Rational;

/// One term `c * (left ⊗ right)` of a coproduct.
pub type CoproductTerm<B> = (Rational, B, B);

/// A connected graded coalgebra on a basis, with a symmetric locality
/// relation that every coproduct pair satisfies.
pub trait LocalityCoalgebra {
    type Basis: Clone + Ord + Debug;

    /// The coaugmentation `J`, the unique basis element of degree zero.
    fn unit(&self) -> Self::Basis;

    fn degree(&self, b: &Self::Basis) -> usize;

    fn coproduct(&self, b: &Self::Basis) -> Vec<CoproductTerm<Self::Basis>>;

    fn counit(&self, b: &Self::Basis) -> Rational {
        if *b == self.unit() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn is_local(&self, a: &Self::Basis, b: &Self::Basis) -> bool;

    /// `Δ(b) - J ⊗ b - b ⊗ J` for `b ≠ J`; zero for `J`.
    fn reduced_coproduct(&self, b: &Self::Basis) -> Vec<CoproductTerm<Self::Basis>> {
        let j = self.unit();
        if *b == j {
            return Vec::new();
        }
        let mut sum: FormalSum<(Self::Basis, Self::Basis)> =
            self.coproduct(b).into_iter().map(|(c, l, r)| (c, (l, r))).collect();
        sum.add_term(-Rational::one(), (j.clone(), b.clone()));
        sum.add_term(-Rational::one(), (b.clone(), j));
        sum.iter().map(|((l, r), c)| (c.clone(), l.clone(), r.clone())).collect()
    }
}

/// A locality coalgebra with a product defined on local pairs.
pub trait LocalityBialgebra: LocalityCoalgebra {
    /// Product of a local pair; an error for pairs outside the relation.
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Result<FormalSum<Self::Basis>>;
}

/// The target of characters: a commutative algebra with a locality
/// relation and complementary projections `π₁ + π₂ = Id`.
pub trait TargetAlgebra {
    type Value: Clone + Debug;

    fn one(&self) -> Self::Value;
    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, c: &Rational, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn equal(&self, a: &Self::Value, b: &Self::Value) -> bool;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.scale(&-Rational::one(), b))
    }

    /// The locality relation on values.
    fn independent(&self, a: &Self::Value, b: &Self::Value) -> bool;

    /// Whether products are only admissible on independent pairs. When set,
    /// every product formed by the algorithms is checked.
    fn restricted_product(&self) -> bool {
        false
    }

    fn project_first(&self, a: &Self::Value) -> Self::Value;

    fn project_second(&self, a: &Self::Value) -> Self::Value {
        self.sub(a, &self.project_first(a))
    }

    /// Whether the image of `π₂` is a locality ideal.
    fn second_is_ideal(&self) -> bool {
        false
    }

    fn in_first(&self, a: &Self::Value) -> bool {
        self.equal(&self.project_first(a), a)
    }

    fn in_second(&self, a: &Self::Value) -> bool {
        self.equal(&self.project_first(a), &self.zero())
    }
}
