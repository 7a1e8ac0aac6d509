use std::cell::RefCell;
use std::collections::BTreeMap;

use super::character::{local_mul, Character, ConvolutionInverse};
use super::structure::{LocalityCoalgebra, TargetAlgebra};
use crate::error::{Error, Result};

/// Birkhoff factorisation `φ = φ₁^{⋆-1} ⋆ φ₂` by the recursion
/// `φ₁(c) = -π₁(φ(c) + Σ φ₁(c′) φ(c″))`, `φ₂(c) = π₂(…)` over the reduced
/// coproduct.
pub struct Birkhoff<'a, C: LocalityCoalgebra, A: TargetAlgebra, P> {
    coalgebra: &'a C,
    target: &'a A,
    phi: P,
    memo: RefCell<BTreeMap<C::Basis, (A::Value, A::Value)>>,
}

impl<'a, C, A, P> Birkhoff<'a, C, A, P>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
{
    pub fn new(coalgebra: &'a C, target: &'a A, phi: P) -> Self {
        Birkhoff { coalgebra, target, phi, memo: RefCell::new(BTreeMap::new()) }
    }

    fn pair(&self, b: &C::Basis) -> Result<(A::Value, A::Value)> {
        if let Some(v) = self.memo.borrow().get(b) {
            return Ok(v.clone());
        }
        let t = self.target;
        let v = if *b == self.coalgebra.unit() {
            (t.one(), t.one())
        } else {
            let mut bar = self.phi.value(b)?;
            for (c, l, r) in self.coalgebra.reduced_coproduct(b) {
                let prod = local_mul(t, &self.phi1(&l)?, &self.phi.value(&r)?, || {
                    format!("factorisation at {b:?} on pair ({l:?}, {r:?})")
                })?;
                bar = t.add(&bar, &t.scale(&c, &prod));
            }
            (t.scale(&-crate::linalg::int(1), &t.project_first(&bar)), t.project_second(&bar))
        };
        self.memo.borrow_mut().insert(b.clone(), v.clone());
        Ok(v)
    }

    pub fn phi1(&self, b: &C::Basis) -> Result<A::Value> {
        Ok(self.pair(b)?.0)
    }

    pub fn phi2(&self, b: &C::Basis) -> Result<A::Value> {
        Ok(self.pair(b)?.1)
    }

    pub fn first(&self) -> BirkhoffPart<'_, 'a, C, A, P> {
        BirkhoffPart { owner: self, second: false }
    }

    pub fn second(&self) -> BirkhoffPart<'_, 'a, C, A, P> {
        BirkhoffPart { owner: self, second: true }
    }

    /// `φ₁^{⋆-1}`, computed as a convolution inverse.
    pub fn first_inverse(&self) -> ConvolutionInverse<'a, C, A, BirkhoffPart<'_, 'a, C, A, P>> {
        ConvolutionInverse::new(self.coalgebra, self.target, self.first())
    }
}

/// One factor of a [`Birkhoff`] factorisation viewed as a character.
pub struct BirkhoffPart<'b, 'a, C: LocalityCoalgebra, A: TargetAlgebra, P> {
    owner: &'b Birkhoff<'a, C, A, P>,
    second: bool,
}

impl<C, A, P> Character<C, A> for BirkhoffPart<'_, '_, C, A, P>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        if self.second {
            self.owner.phi2(b)
        } else {
            self.owner.phi1(b)
        }
    }
}

/// Factorisation through the projection when `π₂` has ideal image:
/// `φ₁^{⋆-1} = π₁ φ` and `φ₂(c) = π₂φ(c) - Σ π₁φ(c′) φ₂(c″)`.
pub struct BirkhoffViaProjection<'a, C: LocalityCoalgebra, A: TargetAlgebra, P> {
    coalgebra: &'a C,
    target: &'a A,
    phi: P,
    memo: RefCell<BTreeMap<C::Basis, A::Value>>,
}

impl<'a, C, A, P> BirkhoffViaProjection<'a, C, A, P>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
{
    pub fn new(coalgebra: &'a C, target: &'a A, phi: P) -> Result<Self> {
        if !target.second_is_ideal() {
            return Err(Error::NotAnIdeal);
        }
        Ok(BirkhoffViaProjection { coalgebra, target, phi, memo: RefCell::new(BTreeMap::new()) })
    }

    pub fn phi1_inverse(&self, b: &C::Basis) -> Result<A::Value> {
        if *b == self.coalgebra.unit() {
            return Ok(self.target.one());
        }
        Ok(self.target.project_first(&self.phi.value(b)?))
    }

    pub fn phi2(&self, b: &C::Basis) -> Result<A::Value> {
        if let Some(v) = self.memo.borrow().get(b) {
            return Ok(v.clone());
        }
        let t = self.target;
        let v = if *b == self.coalgebra.unit() {
            t.one()
        } else {
            let mut acc = t.project_second(&self.phi.value(b)?);
            for (c, l, r) in self.coalgebra.reduced_coproduct(b) {
                let prod = local_mul(t, &self.phi1_inverse(&l)?, &self.phi2(&r)?, || {
                    format!("projection factorisation at {b:?} on pair ({l:?}, {r:?})")
                })?;
                acc = t.sub(&acc, &t.scale(&c, &prod));
            }
            acc
        };
        self.memo.borrow_mut().insert(b.clone(), v.clone());
        Ok(v)
    }

    pub fn first_inverse(&self) -> ProjectionPart<'_, 'a, C, A, P> {
        ProjectionPart { owner: self, second: false }
    }

    pub fn second(&self) -> ProjectionPart<'_, 'a, C, A, P> {
        ProjectionPart { owner: self, second: true }
    }
}

/// One factor of a [`BirkhoffViaProjection`] viewed as a character.
pub struct ProjectionPart<'b, 'a, C: LocalityCoalgebra, A: TargetAlgebra, P> {
    owner: &'b BirkhoffViaProjection<'a, C, A, P>,
    second: bool,
}

impl<C, A, P> Character<C, A> for ProjectionPart<'_, '_, C, A, P>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        if self.second {
            self.owner.phi2(b)
        } else {
            self.owner.phi1_inverse(b)
        }
    }
}
