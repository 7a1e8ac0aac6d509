use std::cell::RefCell;
use std::collections::BTreeMap;

use super::structure::{LocalityCoalgebra, TargetAlgebra};
use super::FormalSum;
use crate::error::{Error, Result};

/// A linear map from a coalgebra to a target algebra, given on the basis.
pub trait Character<C: LocalityCoalgebra, A: TargetAlgebra> {
    fn value(&self, b: &C::Basis) -> Result<A::Value>;
}

impl<C, A, T> Character<C, A> for &T
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    T: Character<C, A> + ?Sized,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        (**self).value(b)
    }
}

/// Extends a character linearly to formal combinations.
pub fn evaluate_linear<C, A>(
    target: &A,
    phi: &impl Character<C, A>,
    x: &FormalSum<C::Basis>,
) -> Result<A::Value>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
{
    let mut acc = target.zero();
    for (b, c) in x.iter() {
        acc = target.add(&acc, &target.scale(c, &phi.value(b)?));
    }
    Ok(acc)
}

/// Memoizing character defined by a closure.
pub struct FnCharacter<C: LocalityCoalgebra, A: TargetAlgebra, F> {
    f: F,
    memo: RefCell<BTreeMap<C::Basis, A::Value>>,
}

impl<C, A, F> FnCharacter<C, A, F>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    F: Fn(&C::Basis) -> Result<A::Value>,
{
    pub fn new(f: F) -> Self {
        FnCharacter { f, memo: RefCell::new(BTreeMap::new()) }
    }
}

impl<C, A, F> Character<C, A> for FnCharacter<C, A, F>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    F: Fn(&C::Basis) -> Result<A::Value>,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        if let Some(v) = self.memo.borrow().get(b) {
            return Ok(v.clone());
        }
        let v = (self.f)(b)?;
        self.memo.borrow_mut().insert(b.clone(), v.clone());
        Ok(v)
    }
}

/// The convolution unit `u ∘ ε`.
pub struct CounitCharacter<'a, C, A> {
    coalgebra: &'a C,
    target: &'a A,
}

impl<'a, C, A> CounitCharacter<'a, C, A> {
    pub fn new(coalgebra: &'a C, target: &'a A) -> Self {
        CounitCharacter { coalgebra, target }
    }
}

impl<C: LocalityCoalgebra, A: TargetAlgebra> Character<C, A> for CounitCharacter<'_, C, A> {
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        Ok(self.target.scale(&self.coalgebra.counit(b), &self.target.one()))
    }
}

/// Product of two target values formed inside a locality algorithm.
pub(crate) fn local_mul<A: TargetAlgebra>(
    target: &A,
    a: &A::Value,
    b: &A::Value,
    context: impl FnOnce() -> String,
) -> Result<A::Value> {
    if target.restricted_product() && !target.independent(a, b) {
        return Err(Error::Locality(format!(
            "non-independent product in {}: {a:?} and {b:?}",
            context()
        )));
    }
    Ok(target.mul(a, b))
}

/// `(φ ⋆ ψ)(c) = Σ φ(c′) ψ(c″)` over the coproduct of `c`.
pub struct Convolution<'a, C: LocalityCoalgebra, A: TargetAlgebra, P, Q> {
    coalgebra: &'a C,
    target: &'a A,
    phi: P,
    psi: Q,
    memo: RefCell<BTreeMap<C::Basis, A::Value>>,
}

impl<'a, C: LocalityCoalgebra, A: TargetAlgebra, P, Q> Convolution<'a, C, A, P, Q> {
    pub fn new(coalgebra: &'a C, target: &'a A, phi: P, psi: Q) -> Self {
        Convolution { coalgebra, target, phi, psi, memo: RefCell::new(BTreeMap::new()) }
    }
}

impl<C, A, P, Q> Character<C, A> for Convolution<'_, C, A, P, Q>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
    Q: Character<C, A>,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        if let Some(v) = self.memo.borrow().get(b) {
            return Ok(v.clone());
        }
        let t = self.target;
        let mut acc = t.zero();
        for (c, l, r) in self.coalgebra.coproduct(b) {
            let prod = local_mul(t, &self.phi.value(&l)?, &self.psi.value(&r)?, || {
                format!("convolution at {b:?} on pair ({l:?}, {r:?})")
            })?;
            acc = t.add(&acc, &t.scale(&c, &prod));
        }
        self.memo.borrow_mut().insert(b.clone(), acc.clone());
        Ok(acc)
    }
}

/// The convolution inverse, by
/// `φ⁻¹(c) = -φ(c) - Σ φ(c′) φ⁻¹(c″)` over the reduced coproduct.
pub struct ConvolutionInverse<'a, C: LocalityCoalgebra, A: TargetAlgebra, P> {
    coalgebra: &'a C,
    target: &'a A,
    phi: P,
    memo: RefCell<BTreeMap<C::Basis, A::Value>>,
}

impl<'a, C: LocalityCoalgebra, A: TargetAlgebra, P> ConvolutionInverse<'a, C, A, P> {
    pub fn new(coalgebra: &'a C, target: &'a A, phi: P) -> Self {
        ConvolutionInverse { coalgebra, target, phi, memo: RefCell::new(BTreeMap::new()) }
    }
}

impl<C, A, P> Character<C, A> for ConvolutionInverse<'_, C, A, P>
where
    C: LocalityCoalgebra,
    A: TargetAlgebra,
    P: Character<C, A>,
{
    fn value(&self, b: &C::Basis) -> Result<A::Value> {
        if let Some(v) = self.memo.borrow().get(b) {
            return Ok(v.clone());
        }
        let t = self.target;
        let v = if *b == self.coalgebra.unit() {
            t.one()
        } else {
            let mut acc = t.scale(&-crate::linalg::int(1), &self.phi.value(b)?);
            for (c, l, r) in self.coalgebra.reduced_coproduct(b) {
                let prod = local_mul(t, &self.phi.value(&l)?, &self.value(&r)?, || {
                    format!("inverse at {b:?} on pair ({l:?}, {r:?})")
                })?;
                acc = t.sub(&acc, &t.scale(&c, &prod));
            }
            acc
        };
        self.memo.borrow_mut().insert(b.clone(), v.clone());
        Ok(v)
    }
}
