use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::{RatVector, Rational};

/// Exponent vector with trailing zeros trimmed, so that a monomial is the
/// same key in every ambient dimension.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
}

pub fn mono_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Sparse multivariate polynomial over `Q` in `z_1, z_2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(exps: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// The variable `z_{i+1}`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// The linear polynomial `sum v_i z_i`.
    pub fn linear(v: &RatVector) -> Self {
        let mut p = Self::zero();
        for (i, c) in v.coords().iter().enumerate() {
            let mut e = vec![0; i + 1];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, exps: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(exps)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of variables actually occurring.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| mono_degree(m)).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| mono_degree(m)).min()
    }

    pub fn coeff(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_truncated(other, None)
    }

    /// Product keeping only monomials of total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: Option<u32>) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = mono_degree(ma);
            for (mb, cb) in &other.terms {
                if let Some(d) = max_degree {
                    if da + mono_degree(mb) > d {
                        continue;
                    }
                }
                *acc.entry(mono_mul(ma, mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { terms: acc }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        (0..n).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Keeps the monomials whose total degree satisfies `keep`.
    pub fn filter_degree(&self, keep: impl Fn(u32) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(mono_degree(m)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces `z_{i+1}` by `subs[i]` (Horner scheme, one variable at a
    /// time).
    pub fn substitute(&self, subs: &[Polynomial]) -> Polynomial {
        self.horner(0, subs)
    }

    fn horner(&self, var: usize, subs: &[Polynomial]) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        if var >= self.nvars() {
            return self.clone();
        }
        let mut by_pow: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            by_pow.entry(e).or_default().add_term(trim(rest), c.clone());
        }
        let top = *by_pow.keys().next_back().expect("nonzero polynomial");
        let mut acc = Polynomial::zero();
        for e in (0..=top).rev() {
            if !acc.is_zero() {
                acc = acc.mul(&subs[var]);
            }
            if let Some(p) = by_pow.get(&e) {
                acc.add_assign(&p.horner(var + 1, subs));
            }
        }
        acc
    }

    /// Spanning vectors for the smallest space `W` of linear forms such that
    /// the polynomial is a polynomial in forms from `W`: the linear parts of
    /// all partial derivatives.
    pub fn essential_forms(&self) -> Vec<RatVector> {
        let mut by_alpha: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        let n = self.nvars();
        for (m, c) in &self.terms {
            let fact: Rational = m
                .iter()
                .map(|&e| (1..=e).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into())))
                .fold(Rational::one(), |a, b| a * b);
            for r in 0..m.len() {
                if m[r] == 0 {
                    continue;
                }
                let mut alpha = m.clone();
                alpha[r] -= 1;
                let v = by_alpha.entry(trim(alpha)).or_insert_with(|| vec![Rational::zero(); n]);
                v[r] += c * &fact;
            }
        }
        by_alpha.into_values().map(RatVector::new).collect()
    }

    /// Exact quotient by the linear form `<l, z>`, if it divides.
    pub fn div_linear(&self, l: &RatVector) -> Option<Polynomial> {
        let (q, r) = self.div_rem_linear(l);
        r.is_zero().then_some(q)
    }

    /// Division with remainder by `<l, z>` (`l` nonzero): `self = l q + r`
    /// where `r` does not involve the last variable occurring in `l`.
    pub fn div_rem_linear(&self, l: &RatVector) -> (Polynomial, Polynomial) {
        let r = (0..l.dim()).rev().find(|&i| !l.get(i).is_zero()).expect("nonzero form");
        let a = l.get(r);
        let mut rest = l.clone().into_coords();
        rest[r] = Rational::zero();
        let rest = Polynomial::linear(&RatVector::new(rest));
        // group by the power of z_r
        let mut by_pow: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(r).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if r < m2.len() {
                m2[r] = 0;
            }
            by_pow.entry(e).or_default().add_term(trim(m2), c.clone());
        }
        let Some(&top) = by_pow.keys().next_back() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        let mut quotient = Polynomial::zero();
        let mut carry = Polynomial::zero();
        for k in (0..=top).rev() {
            let ck = by_pow.remove(&k).unwrap_or_default();
            // ck - rest * q_k, with q_k the coefficient of z_r^k in the quotient
            let rem = ck.sub(&rest.mul(&carry));
            if k == 0 {
                return (quotient, rem);
            }
            let qk = rem.scale(&(Rational::one() / &a));
            let mut shift = vec![0u32; r + 1];
            shift[r] = k - 1;
            quotient.add_assign(&qk.mul(&Polynomial::monomial(shift, Rational::one())));
            carry = qk;
        }
        unreachable!()
    }

    pub fn eval_rational(&self, z: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m.iter().enumerate().fold(c.clone(), |acc, (i, &e)| {
                let x = z.get(i).cloned().unwrap_or_else(Rational::zero);
                acc * num_traits::pow(x, e as usize)
            });
            acc + v
        })
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (m, c)| {
            let v = m.iter().enumerate().fold(Complex64::new(to_f64(c), 0.0), |acc, (i, &e)| {
                acc * z.get(i).copied().unwrap_or_default().powu(e)
            });
            acc + v
        })
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
