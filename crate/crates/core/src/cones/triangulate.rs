//! Placing triangulation for cones given by possibly redundant generators.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use super::cone::LatticeCone;
use super::ConeElement;
use crate::error::{Error, Result};
use crate::linalg::{cmp_padded, primitive_integer_vector, rank, IntLattice, RatVector};

/// Normal of the hyperplane through `facet` inside `span(facet ∪ {apex})`,
/// oriented positive on `apex`.
fn inner_normal(facet: &[RatVector], apex: &RatVector) -> RatVector {
    let q = crate::linalg::InnerProductForm::Standard;
    q.project_orthogonal(apex, facet)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A linear functional that is strictly positive on every generator, if the
/// cone is strongly convex: the sum of all supporting facet normals.
fn positive_functional(gens: &[RatVector]) -> Option<RatVector> {
    let d = rank(gens);
    if d == 0 {
        return None;
    }
    let mut sum = RatVector::zeros(0);
    for facet in subsets(gens.len(), d - 1) {
        let pts: Vec<RatVector> = facet.iter().map(|&i| gens[i].clone()).collect();
        if rank(&pts) != d - 1 {
            continue;
        }
        let Some(apex) = gens.iter().find(|g| rank(&[pts.clone(), vec![(*g).clone()]].concat()) == d) else {
            continue;
        };
        let mut w = inner_normal(&pts, apex);
        let signs: Vec<_> = gens.iter().map(|g| w.dot(g)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
        } else if signs.iter().all(|s| !s.is_positive()) {
            w = -&w;
        } else {
            continue;
        }
        sum = &sum + &w;
    }
    gens.iter().all(|g| sum.dot(g).is_positive()).then_some(sum)
}

/// Triangulates the cone generated by `generators` into simplicial cones by
/// placing the rays in decreasing lexicographic order. Every maximal piece
/// carries coefficient one and the lattice `Λ ∩ span`, where `Λ` defaults to
/// the group generated by the primitive generators.
pub fn triangulate(generators: &[Vec<BigInt>], lattice: Option<&[Vec<BigInt>]>) -> Result<ConeElement> {
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for g in generators {
        let r = RatVector::from_bigints(g);
        let Some((p, _)) = primitive_integer_vector(r.coords()) else {
            return Err(Error::BadCone("zero generator".into()));
        };
        if !rays.iter().any(|h| cmp_padded(h, &p) == Ordering::Equal) {
            rays.push(p);
        }
    }
    let k = rays.iter().map(Vec::len).max().unwrap_or(0);
    if rays.is_empty() {
        return Ok(ConeElement::basis(LatticeCone::zero(k)));
    }
    rays.sort_by(|a, b| cmp_padded(b, a));
    let pts: Vec<RatVector> = rays.iter().map(|r| RatVector::from_bigints(r)).collect();
    if positive_functional(&pts).is_none() {
        return Err(Error::NotStronglyConvex);
    }
    let lattice = match lattice {
        Some(l) => IntLattice::generated_by(&l.iter().map(|x| RatVector::from_bigints(x)).collect::<Vec<_>>()),
        None => IntLattice::generated_by(&pts),
    };
    if rank(&[lattice.basis(), pts.clone()].concat()) != lattice.rank() || lattice.rank() != rank(&pts) {
        return Err(Error::BadCone("lattice does not span the cone's linear span".into()));
    }

    // Simplices as index lists into `pts`.
    let mut simplices: Vec<Vec<usize>> = vec![vec![0]];
    let mut placed = vec![0usize];
    for new in 1..pts.len() {
        let span: Vec<RatVector> = placed.iter().map(|&i| pts[i].clone()).collect();
        let cur_rank = rank(&span);
        if rank(&[span.clone(), vec![pts[new].clone()]].concat()) > cur_rank {
            for s in simplices.iter_mut() {
                s.push(new);
            }
            placed.push(new);
            continue;
        }
        // Boundary facets: facets of exactly one simplex.
        let mut added = Vec::new();
        for s in &simplices {
            for drop in 0..s.len() {
                let facet: Vec<usize> = s.iter().enumerate().filter(|(j, _)| *j != drop).map(|(_, &i)| i).collect();
                let shared = simplices
                    .iter()
                    .filter(|t| facet.iter().all(|i| t.contains(i)))
                    .count();
                if shared != 1 {
                    continue;
                }
                let fpts: Vec<RatVector> = facet.iter().map(|&i| pts[i].clone()).collect();
                let w = inner_normal(&fpts, &pts[s[drop]]);
                if w.dot(&pts[new]).is_negative() {
                    let mut t = facet.clone();
                    t.push(new);
                    added.push(t);
                }
            }
        }
        if !added.is_empty() {
            simplices.extend(added);
            placed.push(new);
        }
    }

    let mut out = ConeElement::zero();
    for s in simplices {
        let gens: Vec<Vec<BigInt>> = s.iter().map(|&i| rays[i].clone()).collect();
        let span: Vec<RatVector> = s.iter().map(|&i| pts[i].clone()).collect();
        let piece = LatticeCone::assemble(gens, lattice.intersect_span(&span), k)?;
        out.add_term(BigInt::from(1).into(), piece);
    }
    Ok(out)
}
