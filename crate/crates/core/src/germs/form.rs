use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, RatVector, Rational};

/// The linear form `z -> <u, z>` for a primitive integer vector `u` whose
/// first nonzero coordinate is positive. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<BigInt>);

impl LinearForm {
    /// Splits a nonzero rational vector as `v = c * L` with `L` canonical.
    pub fn normalize(v: &RatVector) -> Option<(LinearForm, Rational)> {
        let (mut prim, mut c) = primitive_integer_vector(v.coords())?;
        if prim.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            prim.iter_mut().for_each(|x| *x = -x.clone());
            c = -c;
        }
        while prim.last().is_some_and(Zero::is_zero) {
            prim.pop();
        }
        Some((LinearForm(prim), c))
    }

    /// Accepts only vectors that are already primitive integer vectors.
    /// The sign is normalised; the returned sign is `+1` or `-1`.
    pub fn from_primitive(u: &[BigInt]) -> Result<(LinearForm, Rational)> {
        let v = RatVector::from_bigints(u);
        let (form, c) = LinearForm::normalize(&v)
            .ok_or_else(|| Error::BadGerm("zero linear form".into()))?;
        if !c.abs().is_one() {
            return Err(Error::BadGerm(format!("linear form {v} is not primitive")));
        }
        Ok((form, c))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn vector(&self) -> RatVector {
        RatVector::from_bigints(&self.0)
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.vector())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Is this form a coordinate function `z_i`? Returns `i`.
    pub fn coordinate_index(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect();
        (nz.len() == 1 && self.0[nz[0]].is_one()).then(|| nz[0])
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = format!("z{}", i + 1);
            let mag = c.abs();
            let body = if mag.is_one() { var } else { format!("{mag} {var}") };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
