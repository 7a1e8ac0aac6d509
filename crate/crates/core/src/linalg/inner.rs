use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::matrix::{determinant, nullspace, rref, solve_in_span};
use super::rational::Rational;
use super::vector::RatVector;
use crate::error::{Error, Result};

/// A compatible family of positive-definite rational forms `Q_k` on `Q^k`.
///
/// A custom family is stored as its largest Gram matrix; smaller members are
/// its leading blocks. Beyond the stored size the form is extended by the
/// standard dot product on the extra coordinates (an orthogonal direct sum),
/// which keeps the restriction property on the whole filtration.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum InnerProductForm {
    #[default]
    Standard,
    Gram(Vec<Vec<Rational>>),
}

impl InnerProductForm {
    /// Validates a single Gram matrix: square, symmetric, leading principal
    /// minors positive.
    pub fn from_gram(gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::BadGram(format!("gram matrix of size {n} is not square")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::BadGram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        for k in 1..=n {
            let block: Vec<RatVector> = gram[..k]
                .iter()
                .map(|row| RatVector::new(row[..k].to_vec()))
                .collect();
            if !determinant(&block).is_positive() {
                return Err(Error::BadGram(format!(
                    "not positive definite: leading minor of order {k} is not positive"
                )));
            }
        }
        Ok(InnerProductForm::Gram(gram))
    }

    /// Validates a family `{k: Q_k}` for mutual compatibility
    /// (`Q_{k'}` restricts to `Q_k` on the leading block) and keeps the largest.
    pub fn from_family(family: BTreeMap<usize, Vec<Vec<Rational>>>) -> Result<Self> {
        let Some((&kmax, largest)) = family.iter().next_back() else {
            return Err(Error::BadGram("empty gram family".into()));
        };
        for (&k, g) in &family {
            if g.len() != k {
                return Err(Error::BadGram(format!("gram for dimension {k} has {} rows", g.len())));
            }
            for i in 0..k {
                if g[i].len() != k {
                    return Err(Error::BadGram(format!("gram for dimension {k}: row {i} has wrong length")));
                }
                for j in 0..k {
                    if g[i][j] != largest[i][j] {
                        return Err(Error::BadGram(format!(
                            "gram for dimension {k} is not the restriction of dimension {kmax} at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Self::from_gram(largest.clone())
    }

    fn entry(&self, i: usize, j: usize) -> Rational {
        match self {
            InnerProductForm::Gram(g) if i < g.len() && j < g.len() => g[i][j].clone(),
            _ if i == j => Rational::one(),
            _ => Rational::zero(),
        }
    }

    /// `u^T Q_k v` with `k` the larger of the two dimensions.
    pub fn inner_product(&self, u: &RatVector, v: &RatVector) -> Rational {
        match self {
            InnerProductForm::Standard => u.dot(v),
            InnerProductForm::Gram(_) => {
                let mut acc = Rational::zero();
                for (i, a) in u.coords().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in v.coords().iter().enumerate() {
                        if !b.is_zero() {
                            acc += a * b * self.entry(i, j);
                        }
                    }
                }
                acc
            }
        }
    }

    /// `Q v`, the covector pairing with `v` under the form, in dimension `dim`.
    pub fn lower(&self, v: &RatVector, dim: usize) -> RatVector {
        match self {
            InnerProductForm::Standard => v.padded(dim),
            InnerProductForm::Gram(_) => {
                let n = dim.max(v.dim());
                RatVector::new(
                    (0..n)
                        .map(|i| {
                            v.coords()
                                .iter()
                                .enumerate()
                                .filter(|(_, b)| !b.is_zero())
                                .fold(Rational::zero(), |acc, (j, b)| acc + b * self.entry(i, j))
                        })
                        .collect(),
                )
            }
        }
    }

    /// Basis of `{w in Q^dim : Q(w, v) = 0 for all v in vs}`.
    pub fn orthogonal_complement(&self, vs: &[RatVector], dim: usize) -> Vec<RatVector> {
        let rows: Vec<RatVector> = vs.iter().map(|v| self.lower(v, dim)).collect();
        nullspace(&rows, dim)
    }

    /// Q-orthogonal projection of `v` onto the orthogonal complement of
    /// `span(vs)`.
    pub fn project_orthogonal(&self, v: &RatVector, vs: &[RatVector]) -> RatVector {
        let (basis, _) = rref(vs);
        if basis.is_empty() {
            return v.clone();
        }
        // Solve the normal equations G c = (Q(b_i, v)).
        let gram: Vec<RatVector> = basis
            .iter()
            .map(|bi| RatVector::new(basis.iter().map(|bj| self.inner_product(bi, bj)).collect()))
            .collect();
        let rhs = RatVector::new(basis.iter().map(|b| self.inner_product(b, v)).collect());
        let columns: Vec<RatVector> = (0..basis.len())
            .map(|j| RatVector::new(gram.iter().map(|row| row.get(j)).collect()))
            .collect();
        let c = solve_in_span(&columns, &rhs).expect("gram matrix of a basis is invertible");
        let mut w = v.clone();
        for (ci, b) in c.iter().zip(&basis) {
            w = &w - &b.scale(ci);
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_ints(x)
    }

    fn gram(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inner_product_examples() {
        let q = InnerProductForm::Standard;
        assert_eq!(q.inner_product(&v(&[1, 2]), &v(&[2, -1])), int(0));
        assert_eq!(q.inner_product(&v(&[1, 0]), &v(&[1, 0, 0])), int(1));
        let g = InnerProductForm::from_gram(gram(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(g.inner_product(&v(&[1, 0]), &v(&[0, 1])), int(1));
        // Extension past the stored block is orthogonal.
        assert_eq!(g.inner_product(&v(&[1, 0, 0]), &v(&[0, 0, 1])), int(0));
        assert_eq!(g.inner_product(&v(&[0, 0, 3]), &v(&[0, 0, 1])), int(3));
    }

    #[test]
    fn rejects_bad_gram() {
        assert!(InnerProductForm::from_gram(gram(&[&[1, 2], &[2, 1]])).is_err());
        assert!(InnerProductForm::from_gram(gram(&[&[1, 1], &[0, 1]])).is_err());
        let mut fam = BTreeMap::new();
        fam.insert(1, gram(&[&[3]]));
        fam.insert(2, gram(&[&[2, 1], &[1, 2]]));
        assert!(InnerProductForm::from_family(fam).is_err());
        let mut fam = BTreeMap::new();
        fam.insert(1, gram(&[&[2]]));
        fam.insert(2, gram(&[&[2, 1], &[1, 2]]));
        assert!(InnerProductForm::from_family(fam).is_ok());
    }

    #[test]
    fn complement_examples() {
        let q = InnerProductForm::Standard;
        assert_eq!(q.orthogonal_complement(&[v(&[1, 1])], 2), vec![v(&[1, -1])]);
        assert_eq!(q.orthogonal_complement(&[], 2), vec![v(&[1, 0]), v(&[0, 1])]);
        assert!(q.orthogonal_complement(&[v(&[1, 0]), v(&[0, 1])], 2).is_empty());
    }

    #[test]
    fn projection_examples() {
        let q = InnerProductForm::Standard;
        assert_eq!(q.project_orthogonal(&v(&[1, 2]), &[v(&[1, 0])]), v(&[0, 2]));
        assert_eq!(q.project_orthogonal(&v(&[1, 1]), &[v(&[1, 1])]), v(&[0, 0]));
        assert_eq!(
            q.project_orthogonal(&v(&[1, 0]), &[v(&[1, 1])]),
            RatVector::new(vec![rat(1, 2), rat(-1, 2)])
        );
    }

    #[test]
    fn projection_respects_custom_form() {
        let q = InnerProductForm::from_gram(gram(&[&[2, 1], &[1, 2]])).unwrap();
        let w = q.project_orthogonal(&v(&[0, 1]), &[v(&[1, 0])]);
        assert_eq!(q.inner_product(&w, &v(&[1, 0])), int(0));
        assert_eq!(w, RatVector::new(vec![rat(-1, 2), int(1)]));
    }
}
