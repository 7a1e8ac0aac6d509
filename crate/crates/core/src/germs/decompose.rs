use std::collections::BTreeMap;

use num_traits::Zero;

use super::germ::{Denominator, MeromorphicGerm};
use super::poly::Polynomial;
use crate::linalg::{rank, rref, solve_in_span, InnerProductForm, RatVector};

/// Rewrites `num / den` as a sum of terms whose denominator forms are
/// linearly independent.
///
/// For the first form `L_m` dependent on its predecessors,
/// `L_m = sum a_i L_i`, multiply by `1 = sum a_i L_i / L_m`. Each step lowers
/// the power vector lexicographically, so the loop terminates.
pub(crate) fn independent_terms(num: &Polynomial, den: &Denominator) -> Vec<(Denominator, Polynomial)> {
    let mut out = Vec::new();
    let mut work = vec![(den.clone(), num.clone())];
    while let Some((d, p)) = work.pop() {
        let forms = d.forms();
        let dependent = (1..forms.len()).find(|&m| rank(&forms[..=m]) <= m);
        let Some(m) = dependent else {
            out.push((d, p));
            continue;
        };
        let coeffs = solve_in_span(&forms[..m], &forms[m]).expect("dependent form lies in span");
        let factors = d.factors();
        for (i, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let next = factors.iter().enumerate().map(|(j, (l, s))| {
                let s = if j == i {
                    s - 1
                } else if j == m {
                    s + 1
                } else {
                    *s
                };
                (l.clone(), s)
            });
            work.push((Denominator::from_factors(next), p.scale(a)));
        }
    }
    out
}

/// Result of splitting a germ into holomorphic and polar parts.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub holomorphic: MeromorphicGerm,
    pub polar: MeromorphicGerm,
}

impl MeromorphicGerm {
    /// Splits `f = h + p` with `h` holomorphic and `p` a sum of terms
    /// `P(M_1..M_r) / (L_1^{s_1} ... L_n^{s_n})` whose numerator forms `M_j`
    /// are `q`-orthogonal to all denominator forms `L_i`.
    pub fn decompose(&self, q: &InnerProductForm) -> Decomposition {
        let k = self.ambient_dim();
        let v = self.valid_up_to();
        let mut hol = Polynomial::zero();
        let mut polar: BTreeMap<Denominator, Polynomial> = BTreeMap::new();
        for (d, p) in self.terms() {
            split_term(p, d, q, k, &mut hol, &mut polar);
        }
        Decomposition {
            holomorphic: MeromorphicGerm::from_polynomial(hol, k, v),
            polar: MeromorphicGerm::from_terms(polar, k, v),
        }
    }

    /// Holomorphic projection.
    pub fn project_plus(&self, q: &InnerProductForm) -> MeromorphicGerm {
        self.decompose(q).holomorphic
    }

    /// Polar projection.
    pub fn project_minus(&self, q: &InnerProductForm) -> MeromorphicGerm {
        self.decompose(q).polar
    }

    /// Spanning vectors of the space of forms the germ depends on, read off
    /// the canonical decomposition, in reduced echelon form.
    pub fn support_span(&self, q: &InnerProductForm) -> Vec<RatVector> {
        if self.is_zero() {
            return Vec::new();
        }
        let dec = self.decompose(q);
        let mut vs = dec.holomorphic.raw_forms();
        vs.extend(dec.polar.raw_forms());
        rref(&vs).0
    }
}

/// Whether `f` and `g` depend on `q`-orthogonal sets of variables.
pub fn are_independent_germs(f: &MeromorphicGerm, g: &MeromorphicGerm, q: &InnerProductForm) -> bool {
    let orth = |a: &[RatVector], b: &[RatVector]| {
        a.iter().all(|u| b.iter().all(|w| q.inner_product(u, w).is_zero()))
    };
    let (rf, rg) = (rref(&f.raw_forms()).0, rref(&g.raw_forms()).0);
    if orth(&rf, &rg) {
        return true;
    }
    orth(&f.support_span(q), &g.support_span(q))
}

fn split_term(
    num: &Polynomial,
    den: &Denominator,
    q: &InnerProductForm,
    ambient: usize,
    hol: &mut Polynomial,
    polar: &mut BTreeMap<Denominator, Polynomial>,
) {
    if den.is_one() {
        hol.add_assign(num);
        return;
    }
    let factors = den.factors().to_vec();
    let n = factors.len();
    let forms = den.forms();
    let k = ambient.max(num.nvars()).max(den.max_len());
    let mut basis = forms.clone();
    basis.extend(q.orthogonal_complement(&forms, k));
    let basis: Vec<RatVector> = basis.iter().map(|b| b.padded(k)).collect();

    // z_r in terms of adapted coordinates y_s = <b_s, z>
    let to_y: Vec<Polynomial> = (0..k)
        .map(|r| {
            let c = solve_in_span(&basis, &RatVector::unit(r, k)).expect("adapted basis spans");
            Polynomial::linear(&RatVector::new(c))
        })
        .collect();
    let back: Vec<Polynomial> = basis.iter().map(Polynomial::linear).collect();
    let py = num.substitute(&to_y);

    // Numerators are collected in y-coordinates and converted back once per
    // target denominator.
    let mut hol_y = Polynomial::zero();
    let mut groups: BTreeMap<(bool, Denominator), Polynomial> = BTreeMap::new();
    for (m, c) in py.terms() {
        let a = |i: usize| m.get(i).copied().unwrap_or(0);
        let mut exps = vec![0u32; k];
        let mut rest = Vec::new();
        let mut leftover = false;
        for (i, (l, s)) in factors.iter().enumerate() {
            let ai = a(i);
            if ai < *s {
                rest.push((l.clone(), s - ai));
            } else {
                leftover |= ai > *s;
                exps[i] = ai - s;
            }
        }
        for (j, e) in exps.iter_mut().enumerate().skip(n) {
            *e = a(j);
        }
        if rest.is_empty() {
            hol_y.add_term(exps, c.clone());
        } else {
            groups
                .entry((leftover, Denominator::from_factors(rest)))
                .or_default()
                .add_term(exps, c.clone());
        }
    }
    hol.add_assign(&hol_y.substitute(&back));
    let mut pending: BTreeMap<Denominator, Polynomial> = BTreeMap::new();
    for ((leftover, d), py) in groups {
        let pz = py.substitute(&back);
        let target = if leftover { &mut pending } else { &mut *polar };
        target.entry(d).or_default().add_assign(&pz);
    }
    for (d, p) in pending {
        if !p.is_zero() {
            split_term(&p, &d, q, ambient, hol, polar);
        }
    }
    polar.retain(|_, p| !p.is_zero());
}

