use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{determinant, nullspace, rank, solve_in_span};
use super::rational::Rational;
use super::vector::RatVector;
use crate::error::{Error, Result};

/// Integer row echelon form restricted to the first `pivot_cols` columns.
///
/// Row operations are unimodular and act on whole rows, so trailing columns
/// record the transformation when the caller augments with an identity.
/// Returns `(rows, pivots, rest)`: the rows carrying a pivot in Hermite form
/// (positive pivot, entries above each pivot reduced into `[0, pivot)`) and
/// the remaining rows, which vanish on the first `pivot_cols` columns.
fn integer_echelon(
    mut m: Vec<Vec<BigInt>>,
    pivot_cols: usize,
) -> (Vec<Vec<BigInt>>, Vec<usize>, Vec<Vec<BigInt>>) {
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        if r == m.len() {
            break;
        }
        loop {
            let best = (r..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(best) = best else { break };
            m.swap(r, best);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[r][col]);
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * p;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r >= m.len() || m[r][col].is_zero() {
            continue;
        }
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = m[r].clone();
        for row in m.iter_mut().take(r) {
            let q = row[col].div_floor(&pivot_row[col]);
            if !q.is_zero() {
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let rest = m.split_off(r);
    (m, pivots, rest)
}

/// Row-style Hermite normal form of an integer matrix; zero rows dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, BigInt::zero());
            r
        })
        .collect();
    integer_echelon(m, ncols).0
}

/// A full-rank lattice inside a rational subspace, stored canonically as
/// `basis / denom` where `basis` is an integer matrix in Hermite normal form
/// and `denom` is the least positive integer clearing all denominators.
#[derive(Clone, Debug)]
pub struct IntLattice {
    ambient_dim: usize,
    denom: BigInt,
    basis: Vec<Vec<BigInt>>,
}

fn trim(v: &[BigInt]) -> &[BigInt] {
    let end = v.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1);
    &v[..end]
}

impl IntLattice {
    pub fn zero(ambient_dim: usize) -> Self {
        IntLattice { ambient_dim, denom: BigInt::one(), basis: Vec::new() }
    }

    /// The standard lattice `Z^k`.
    pub fn standard(k: usize) -> Self {
        Self::generated_by(&(0..k).map(|i| RatVector::unit(i, k)).collect::<Vec<_>>())
    }

    /// Canonical basis of the abelian group generated by `vectors`.
    pub fn generated_by(vectors: &[RatVector]) -> Self {
        let ambient_dim = vectors.iter().map(RatVector::dim).max().unwrap_or(0);
        let denom = vectors
            .iter()
            .flat_map(|v| v.coords().iter())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let rows: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|v| {
                v.padded(ambient_dim)
                    .coords()
                    .iter()
                    .map(|x| (x * &denom).to_integer())
                    .collect()
            })
            .collect();
        let hnf = hermite_normal_form(&rows);
        let g = hnf
            .iter()
            .flat_map(|r| r.iter())
            .fold(denom.clone(), |acc, x| acc.gcd(x));
        let basis = hnf
            .into_iter()
            .map(|r| r.into_iter().map(|x| x / &g).collect())
            .collect();
        IntLattice { ambient_dim, denom: denom / g, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub fn integer_basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis(&self) -> Vec<RatVector> {
        self.basis
            .iter()
            .map(|r| {
                RatVector::new(r.iter().map(|x| Rational::new(x.clone(), self.denom.clone())).collect())
            })
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &RatVector) -> Option<Vec<Rational>> {
        solve_in_span(&self.basis(), v)
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.coordinates(v)
            .is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    pub fn contains_lattice(&self, other: &IntLattice) -> bool {
        other.basis().iter().all(|b| self.contains(b))
    }

    /// The saturation `self ∩ span_Q(vs)`.
    pub fn intersect_span(&self, vs: &[RatVector]) -> IntLattice {
        let k = vs.iter().map(RatVector::dim).max().unwrap_or(0).max(self.ambient_dim);
        if self.basis.is_empty() || rank(vs) == 0 {
            return IntLattice::zero(k);
        }
        let annihilator = nullspace(vs, k);
        let basis = self.basis();
        let n = basis.len();
        let m = annihilator.len();
        // Row i: (<b_i, w_1>, ..., <b_i, w_m>) scaled to integers, then e_i.
        let pairing: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| annihilator.iter().map(|w| b.dot(w)).collect())
            .collect();
        let scale = pairing
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let rows: Vec<Vec<BigInt>> = pairing
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row: Vec<BigInt> = r.iter().map(|x| (x * &scale).to_integer()).collect();
                row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
                row
            })
            .collect();
        let (_, _, kernel) = integer_echelon(rows, m);
        let gens: Vec<RatVector> = kernel
            .iter()
            .map(|row| {
                basis.iter().zip(&row[m..]).fold(RatVector::zeros(k), |acc, (b, x)| {
                    &acc + &b.scale(&Rational::from_integer(x.clone()))
                })
            })
            .collect();
        let mut out = IntLattice::generated_by(&gens);
        out.ambient_dim = k;
        out
    }

    /// `[sup : self]` for a sublattice of equal rank.
    pub fn index_in(&self, sup: &IntLattice) -> Result<BigInt> {
        if self.rank() != sup.rank() {
            return Err(Error::Lattice(format!(
                "ranks differ ({} vs {})",
                self.rank(),
                sup.rank()
            )));
        }
        let sup_basis = sup.basis();
        let mut rows = Vec::with_capacity(self.rank());
        for b in self.basis() {
            let c = solve_in_span(&sup_basis, &b)
                .filter(|c| c.iter().all(|x| x.is_integer()))
                .ok_or_else(|| Error::Lattice(format!("{b} is not in the superlattice")))?;
            rows.push(RatVector::new(c));
        }
        Ok(determinant(&rows).abs().to_integer())
    }

    fn key(&self) -> (&BigInt, Vec<&[BigInt]>) {
        (&self.denom, self.basis.iter().map(|r| trim(r)).collect())
    }
}

impl PartialEq for IntLattice {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for IntLattice {}

impl Hash for IntLattice {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for IntLattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntLattice {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, ra) = self.key();
        let (db, rb) = other.key();
        ra.len()
            .cmp(&rb.len())
            .then_with(|| {
                for (x, y) in ra.iter().zip(&rb) {
                    let c = super::cmp_padded(x, y);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
            .then_with(|| da.cmp(db))
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis().iter().map(|b| format!("Z{b}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
