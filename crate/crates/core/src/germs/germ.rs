use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::decompose::independent_terms;
use super::form::LinearForm;
use super::poly::{mono_degree, Polynomial};
use crate::linalg::{rank, RatVector, Rational};

/// Validity marker for germs known exactly in every degree.
pub const EXACT: i64 = i64::MAX;

/// A product `L_1^{s_1} ... L_n^{s_n}` of canonical linear forms, sorted by
/// form, each with a positive power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Denominator(Vec<(LinearForm, u32)>);

impl Denominator {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (LinearForm, u32)>) -> Self {
        let mut map: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for (l, p) in factors {
            if p > 0 {
                *map.entry(l).or_insert(0) += p;
            }
        }
        Denominator(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(LinearForm, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pole_order(&self) -> i64 {
        self.0.iter().map(|(_, p)| *p as i64).sum()
    }

    pub fn forms(&self) -> Vec<RatVector> {
        self.0.iter().map(|(l, _)| l.vector()).collect()
    }

    pub fn merge(&self, other: &Denominator) -> Denominator {
        Denominator::from_factors(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn has_independent_forms(&self) -> bool {
        self.0.len() <= 1 || rank(&self.forms()) == self.0.len()
    }

    pub fn max_len(&self) -> usize {
        self.0.iter().map(|(l, _)| l.len()).max().unwrap_or(0)
    }
}

/// A truncated meromorphic germ at zero with linear poles:
/// `sum_t numerator_t(z) / denominator_t(z)`.
///
/// The homogeneous degree of `c z^m / prod L_i^{s_i}` is `|m| - sum s_i`.
/// Every homogeneous component of degree `<= valid_up_to` is exact; higher
/// components are unknown and never stored.
///
/// `PartialEq` is structural. Use [`MeromorphicGerm::agrees_with`] to compare
/// germs as functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeromorphicGerm {
    ambient_dim: usize,
    valid_up_to: i64,
    terms: BTreeMap<Denominator, Polynomial>,
}

impl MeromorphicGerm {
    pub fn zero(ambient_dim: usize, valid_up_to: i64) -> Self {
        MeromorphicGerm { ambient_dim, valid_up_to, terms: BTreeMap::new() }
    }

    /// The exact constant one.
    pub fn one(ambient_dim: usize) -> Self {
        Self::constant(Rational::one(), ambient_dim)
    }

    pub fn constant(c: Rational, ambient_dim: usize) -> Self {
        Self::from_polynomial(Polynomial::constant(c), ambient_dim, EXACT)
    }

    pub fn from_polynomial(p: Polynomial, ambient_dim: usize, valid_up_to: i64) -> Self {
        let mut g = Self::zero(ambient_dim.max(p.nvars()), valid_up_to);
        g.insert(Denominator::one(), p);
        g
    }

    /// `numerator / prod <v_i, z>^{s_i}` for arbitrary nonzero rational
    /// vectors `v_i`; forms are canonicalised and the scalars absorbed.
    pub fn from_term(
        numerator: Polynomial,
        factors: &[(RatVector, u32)],
        ambient_dim: usize,
        valid_up_to: i64,
    ) -> Self {
        let mut scale = Rational::one();
        let mut canon = Vec::new();
        let mut dim = ambient_dim.max(numerator.nvars());
        for (v, p) in factors {
            let (l, c) = LinearForm::normalize(v).expect("denominator form must be nonzero");
            dim = dim.max(v.trimmed().len());
            scale /= num_traits::pow(c, *p as usize);
            canon.push((l, *p));
        }
        let mut g = Self::zero(dim, valid_up_to);
        g.insert(Denominator::from_factors(canon), numerator.scale(&scale));
        g
    }

    /// Builds from raw terms, e.g. parsed from a file. Terms are kept as
    /// given except that dependent denominators are split.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Denominator, Polynomial)>,
        ambient_dim: usize,
        valid_up_to: i64,
    ) -> Self {
        let mut g = Self::zero(ambient_dim, valid_up_to);
        for (d, p) in terms {
            g.ambient_dim = g.ambient_dim.max(d.max_len()).max(p.nvars());
            g.insert_unreduced(d, p);
        }
        g
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn valid_up_to(&self) -> i64 {
        self.valid_up_to
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Denominator, &Polynomial)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// No stored terms. A germ can vanish as a function while having terms;
    /// see [`MeromorphicGerm::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All stored terms have trivial denominators.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Denominator::is_one)
    }

    pub fn holomorphic_polynomial(&self) -> Polynomial {
        self.terms.get(&Denominator::one()).cloned().unwrap_or_default()
    }

    /// Inserts a term after truncation. Dependent denominators are split
    /// by partial fractions first.
    pub(crate) fn insert(&mut self, den: Denominator, num: Polynomial) {
        if num.is_zero() {
            return;
        }
        let mut reduced = Vec::new();
        reduce_term(den, num, &mut reduced);
        for (den, num) in reduced {
            self.insert_unreduced(den, num);
        }
    }

    pub(crate) fn insert_unreduced(&mut self, den: Denominator, num: Polynomial) {
        if den.has_independent_forms() {
            self.insert_independent(den, num);
        } else {
            for (d, p) in independent_terms(&num, &den) {
                self.insert_independent(d, p);
            }
        }
    }

    fn insert_independent(&mut self, den: Denominator, num: Polynomial) {
        let num = truncate_numerator(&num, den.pole_order(), self.valid_up_to);
        if num.is_zero() {
            return;
        }
        self.ambient_dim = self.ambient_dim.max(den.max_len()).max(num.nvars());
        match self.terms.entry(den) {
            Entry::Vacant(e) => {
                e.insert(num);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&num);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Lowest homogeneous degree among stored terms.
    pub fn lowest_degree(&self) -> Option<i64> {
        self.terms
            .iter()
            .filter_map(|(d, p)| p.min_degree().map(|m| m as i64 - d.pole_order()))
            .min()
    }

    /// Lower bound for the degree of any component, including the unknown
    /// tail above `valid_up_to`.
    pub fn degree_floor(&self) -> i64 {
        let tail = shift(self.valid_up_to, 1);
        self.lowest_degree().map_or(tail, |l| l.min(tail))
    }

    pub fn truncate(&self, d: i64) -> MeromorphicGerm {
        let mut g = Self::zero(self.ambient_dim, self.valid_up_to.min(d));
        for (den, p) in &self.terms {
            g.insert_independent(den.clone(), p.clone());
        }
        g
    }

    pub fn add(&self, other: &MeromorphicGerm) -> MeromorphicGerm {
        let mut g = Self::zero(
            self.ambient_dim.max(other.ambient_dim),
            self.valid_up_to.min(other.valid_up_to),
        );
        for (d, p) in self.terms.iter().chain(other.terms.iter()) {
            g.insert_independent(d.clone(), p.clone());
        }
        g
    }

    pub fn scale(&self, c: &Rational) -> MeromorphicGerm {
        let mut g = Self::zero(self.ambient_dim, self.valid_up_to);
        if c.is_zero() {
            return g;
        }
        for (d, p) in &self.terms {
            g.terms.insert(d.clone(), p.scale(c));
        }
        g
    }

    pub fn neg(&self) -> MeromorphicGerm {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &MeromorphicGerm) -> MeromorphicGerm {
        self.add(&other.neg())
    }

    /// Pointwise product. Validity is
    /// `min(v_f + low(g), v_g + low(f))` where `low` includes the unknown tail.
    pub fn mul(&self, other: &MeromorphicGerm) -> MeromorphicGerm {
        let valid = shift(self.valid_up_to, other.degree_floor()).min(shift(other.valid_up_to, self.degree_floor()));
        let mut g = Self::zero(self.ambient_dim.max(other.ambient_dim), valid);
        for (da, pa) in &self.terms {
            for (db, pb) in &other.terms {
                let den = da.merge(db);
                let cap = numerator_cap(den.pole_order(), valid);
                if cap.is_some_and(|c| c < 0) {
                    continue;
                }
                let num = pa.mul_truncated(pb, cap.map(|c| c as u32));
                g.insert(den, num);
            }
        }
        g
    }

    /// The homogeneous component of degree `d` (empty if `d > valid_up_to`).
    pub fn homogeneous_component(&self, d: i64) -> MeromorphicGerm {
        let mut g = Self::zero(self.ambient_dim, EXACT);
        if d > self.valid_up_to {
            return g;
        }
        for (den, p) in &self.terms {
            let target = d + den.pole_order();
            if target < 0 {
                continue;
            }
            let part = p.filter_degree(|m| m as i64 == target);
            g.insert_independent(den.clone(), part);
        }
        g
    }

    /// Exact test that the germ vanishes as a function: all terms are put
    /// over a common denominator and the combined numerator is checked.
    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let mut maxpow: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for den in self.terms.keys() {
            for (l, p) in den.factors() {
                let e = maxpow.entry(l.clone()).or_insert(0);
                *e = (*e).max(*p);
            }
        }
        let mut powers: BTreeMap<LinearForm, Vec<Polynomial>> = BTreeMap::new();
        let mut total = Polynomial::zero();
        for (den, p) in &self.terms {
            let mut mult = p.clone();
            for (l, &mp) in &maxpow {
                let have = den
                    .factors()
                    .iter()
                    .find(|(m, _)| m == l)
                    .map_or(0, |(_, s)| *s);
                let need = (mp - have) as usize;
                if need == 0 {
                    continue;
                }
                let cache = powers.entry(l.clone()).or_insert_with(|| vec![Polynomial::one()]);
                while cache.len() <= need {
                    let next = cache.last().unwrap().mul(&l.polynomial());
                    cache.push(next);
                }
                mult = mult.mul(&cache[need]);
            }
            total.add_assign(&mult);
        }
        total.is_zero()
    }

    /// Equality as functions through the common validity window.
    pub fn agrees_with(&self, other: &MeromorphicGerm) -> bool {
        self.agrees_through(other, EXACT)
    }

    /// Equality as functions in every degree `<= min(d, valid windows)`.
    pub fn agrees_through(&self, other: &MeromorphicGerm, d: i64) -> bool {
        let w = d.min(self.valid_up_to).min(other.valid_up_to);
        self.truncate(w).sub(&other.truncate(w)).truncate(w).is_zero()
    }

    /// Vectors spanning every linear form appearing in the stored
    /// representation (denominators and numerator dependencies). Contains
    /// the canonical support.
    pub fn raw_forms(&self) -> Vec<RatVector> {
        let mut out = Vec::new();
        for (den, p) in &self.terms {
            out.extend(den.forms());
            out.extend(p.essential_forms());
        }
        out
    }
}

/// Lowers pole orders where possible: for each factor `L`, the numerator
/// is divided by `L` with remainder and the quotient moves to a term with
/// one fewer power of `L`.
fn reduce_term(den: Denominator, num: Polynomial, out: &mut Vec<(Denominator, Polynomial)>) {
    let mut num = num;
    let factors = den.factors().to_vec();
    for (i, (l, s)) in factors.iter().enumerate() {
        if num.is_zero() {
            return;
        }
        if *s == 0 || num.max_degree() == Some(0) {
            continue;
        }
        let (q, r) = num.div_rem_linear(&l.vector());
        if !q.is_zero() {
            let lower = factors.iter().enumerate().map(|(j, (m, t))| (m.clone(), if j == i { t - 1 } else { *t }));
            reduce_term(Denominator::from_factors(lower), q, out);
        }
        num = r;
    }
    if !num.is_zero() {
        out.push((den, num));
    }
}

fn numerator_cap(pole_order: i64, valid: i64) -> Option<i64> {
    (valid != EXACT).then(|| shift(valid, pole_order))
}

fn truncate_numerator(p: &Polynomial, pole_order: i64, valid: i64) -> Polynomial {
    match numerator_cap(pole_order, valid) {
        None => p.clone(),
        Some(c) if c < 0 => Polynomial::zero(),
        Some(c) => {
            if p.max_degree().is_some_and(|m| m as i64 <= c) {
                p.clone()
            } else {
                p.filter_degree(|m| m as i64 <= c)
            }
        }
    }
}

/// Total degree of a monomial, exposed for printers.
pub(crate) fn monomial_degree(m: &[u32]) -> i64 {
    mono_degree(m) as i64
}

/// `v + d` for a validity bound, keeping `EXACT` exact.
fn shift(v: i64, d: i64) -> i64 {
    if v == EXACT {
        EXACT
    } else {
        v.saturating_add(d).min(EXACT - 1)
    }
}
