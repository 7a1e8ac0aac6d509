//! Dense Gaussian elimination over `Q`. Matrices are row lists; rows of
//! unequal length are zero-padded to the widest one.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::vector::RatVector;

fn to_rows(vectors: &[RatVector], ncols: usize) -> Vec<Vec<Rational>> {
    vectors
        .iter()
        .map(|v| v.padded(ncols).into_coords())
        .collect()
}

fn width(vectors: &[RatVector]) -> usize {
    vectors.iter().map(RatVector::dim).max().unwrap_or(0)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(vectors: &[RatVector]) -> (Vec<RatVector>, Vec<usize>) {
    let ncols = width(vectors);
    let mut m = to_rows(vectors, ncols);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let d = &f * &m[row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m.into_iter().map(RatVector::new).collect(), pivots)
}

pub fn rank(vectors: &[RatVector]) -> usize {
    rref(vectors).1.len()
}

/// Basis of `{x in Q^ncols : <row, x> = 0 for every row}`. Each vector has a
/// one in its free coordinate and is sign-normalised so that its first
/// nonzero coordinate is positive.
pub fn nullspace(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let padded: Vec<RatVector> = rows.iter().map(|r| r.padded(ncols)).collect();
    let (red, pivots) = rref(&padded);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -red[r].get(free);
        }
        if let Some(first) = x.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                x.iter_mut().for_each(|v| *v = -v.clone());
            }
        }
        out.push(RatVector::new(x));
    }
    out
}

/// Determinant of a square matrix given by rows.
pub fn determinant(rows: &[RatVector]) -> Rational {
    let n = rows.len();
    let mut m = to_rows(rows, n);
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
            }
        }
    }
    det
}

/// Indices of a maximal linearly independent subset, chosen greedily in
/// input order.
pub fn independent_subset(vectors: &[RatVector]) -> Vec<usize> {
    let mut chosen: Vec<RatVector> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        chosen.push(v.clone());
        if rank(&chosen) == chosen.len() {
            idx.push(i);
        } else {
            chosen.pop();
        }
    }
    idx
}

/// Coefficients `c` with `v = sum c_i basis_i`, or `None` when `v` is not in
/// the span. `basis` must be linearly independent.
pub fn solve_in_span(basis: &[RatVector], v: &RatVector) -> Option<Vec<Rational>> {
    let n = basis.len();
    let ncols = width(basis).max(v.dim());
    // Columns are the basis vectors; augment with v and eliminate.
    let mut m: Vec<Vec<Rational>> = (0..ncols)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.get(r)).collect();
            row.push(v.get(r));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let p = (pivot_row..ncols).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..ncols {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = &f * &m[pivot_row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| m[r][n].clone()).collect())
}
