use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;

/// A rational vector in `Q^k`, identified with its zero-padding in any
/// `Q^k'` with `k' > k`.
#[derive(Clone, Debug, Default)]
pub struct RatVector {
    coords: Vec<Rational>,
}

impl RatVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector { coords: vec![Rational::zero(); dim] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVector::new(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        RatVector::new(v.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    pub fn unit(i: usize, dim: usize) -> Self {
        let mut v = Self::zeros(dim.max(i + 1));
        v.coords[i] = Rational::from_integer(1.into());
        v
    }

    /// Ambient dimension as stored (may include trailing zeros).
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Coordinate `i`, zero beyond the stored length.
    pub fn get(&self, i: usize) -> Rational {
        self.coords.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn padded(&self, dim: usize) -> RatVector {
        let mut coords = self.coords.clone();
        if coords.len() < dim {
            coords.resize(dim, Rational::zero());
        }
        RatVector { coords }
    }

    /// Drops trailing zero coordinates.
    pub fn trimmed(&self) -> &[Rational] {
        let end = self
            .coords
            .iter()
            .rposition(|x| !x.is_zero())
            .map_or(0, |p| p + 1);
        &self.coords[..end]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector::new(self.coords.iter().map(|x| x * c).collect())
    }

    /// Standard pairing `sum u_i v_i`.
    pub fn dot(&self, other: &RatVector) -> Rational {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl PartialEq for RatVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for RatVector {}

impl Hash for RatVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl<'a> Add<&'a RatVector> for &'a RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        let n = self.dim().max(rhs.dim());
        RatVector::new((0..n).map(|i| self.get(i) + rhs.get(i)).collect())
    }
}

impl<'a> Sub<&'a RatVector> for &'a RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        let n = self.dim().max(rhs.dim());
        RatVector::new((0..n).map(|i| self.get(i) - rhs.get(i)).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector::new(self.coords.iter().map(|x| -x).collect())
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(v: Vec<Rational>) -> Self {
        RatVector::new(v)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
