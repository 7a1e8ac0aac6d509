//! Smooth subdivision by repeated stellar subdivision of a simplicial fan.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::LatticeCone;
use crate::linalg::{determinant, primitive_integer_vector, solve_in_span, IntLattice, RatVector, Rational};

/// Which parallelepiped point is used as the next stellar pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotOrder {
    /// Smallest squared Euclidean norm, ties broken lexicographically (smallest first).
    #[default]
    Shortest,
    /// Largest squared Euclidean norm, ties broken lexicographically (largest first).
    Longest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SubdivisionStrategy {
    pub pivot: PivotOrder,
    /// After reaching a smooth fan, additionally star every maximal cone at
    /// the sum of its rays. The result is still smooth but has more pieces.
    pub refine: bool,
}

/// Which half-open parallelepiped to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelepiped {
    /// Coefficients in `[0, 1)`; contains the origin.
    ClosedAtOrigin,
    /// Coefficients in `(0, 1]`; the interior-point representatives.
    OpenAtOrigin,
}

/// Lattice points `p = sum λ_i rays_i` of `lattice` with all `λ_i` in the
/// chosen half-open unit interval. `rays` must be lattice vectors spanning
/// the same space as `lattice`. Returns each point with its coefficients.
pub fn parallelepiped_points(
    rays: &[RatVector],
    lattice: &IntLattice,
    kind: Parallelepiped,
) -> Vec<(RatVector, Vec<Rational>)> {
    let n = rays.len();
    if n == 0 {
        return vec![(RatVector::zeros(lattice.ambient_dim()), Vec::new())];
    }
    let basis = lattice.basis();
    // Ray coordinates in the lattice basis (integral).
    let coords: Vec<Vec<Rational>> = rays
        .iter()
        .map(|r| lattice.coordinates(r).expect("ray lies in the lattice span"))
        .collect();
    let m = basis.len();
    let lo: Vec<BigInt> = (0..m)
        .map(|j| coords.iter().map(|c| c[j].clone().min(Rational::zero())).sum::<Rational>().floor().to_integer())
        .collect();
    let hi: Vec<BigInt> = (0..m)
        .map(|j| coords.iter().map(|c| c[j].clone().max(Rational::zero())).sum::<Rational>().ceil().to_integer())
        .collect();
    let ray_cols: Vec<RatVector> = coords.iter().map(|c| RatVector::new(c.clone())).collect();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let xv = RatVector::new(x.iter().map(|v| Rational::from_integer(v.clone())).collect());
        if let Some(lambda) = solve_in_span(&ray_cols, &xv) {
            let ok = lambda.iter().all(|l| match kind {
                Parallelepiped::ClosedAtOrigin => !l.is_negative() && *l < Rational::one(),
                Parallelepiped::OpenAtOrigin => l.is_positive() && *l <= Rational::one(),
            });
            if ok {
                let point = basis
                    .iter()
                    .zip(&x)
                    .fold(RatVector::zeros(lattice.ambient_dim()), |acc, (b, c)| {
                        &acc + &b.scale(&Rational::from_integer(c.clone()))
                    });
                out.push((point, lambda));
            }
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i].clone();
            i += 1;
        }
    }
}

fn index_of(rays: &[RatVector], lattice: &IntLattice) -> BigInt {
    let rows: Vec<RatVector> = rays
        .iter()
        .map(|r| RatVector::new(lattice.coordinates(r).expect("ray in lattice span")))
        .collect();
    determinant(&rows).abs().to_integer()
}

fn norm2(v: &RatVector) -> Rational {
    v.dot(v)
}

fn cmp_vec(a: &RatVector, b: &RatVector) -> Ordering {
    let n = a.dim().max(b.dim());
    (0..n).map(|i| a.get(i).cmp(&b.get(i))).find(|o| *o != Ordering::Equal).unwrap_or(Ordering::Equal)
}

fn choose_pivot(points: Vec<RatVector>, order: PivotOrder) -> RatVector {
    let key = |a: &RatVector, b: &RatVector| norm2(a).cmp(&norm2(b)).then_with(|| cmp_vec(a, b));
    match order {
        PivotOrder::Shortest => points.into_iter().min_by(key),
        PivotOrder::Longest => points.into_iter().max_by(key),
    }
    .expect("a non-smooth cone has a nonzero parallelepiped point")
}

/// Stellar subdivision of every cone of `fan` that contains `v`.
fn star(fan: &mut Vec<Vec<RatVector>>, v: &RatVector) {
    let mut next = Vec::with_capacity(fan.len() + 2);
    for rays in fan.drain(..) {
        let mu = solve_in_span(&rays, v);
        match mu {
            Some(mu) if mu.iter().all(|x| !x.is_negative()) => {
                for (i, m) in mu.iter().enumerate() {
                    if m.is_positive() {
                        let mut r = rays.clone();
                        r[i] = v.clone();
                        next.push(r);
                    }
                }
            }
            _ => next.push(rays),
        }
    }
    *fan = next;
}

/// Subdivides a lattice cone into a fan of cones that are smooth with
/// respect to `Λ_C`, using the default strategy.
pub fn smooth_subdivision(cone: &LatticeCone) -> Vec<LatticeCone> {
    smooth_subdivision_with(cone, SubdivisionStrategy::default())
}

pub fn smooth_subdivision_with(cone: &LatticeCone, strategy: SubdivisionStrategy) -> Vec<LatticeCone> {
    if cone.is_zero() {
        return vec![cone.clone()];
    }
    let lattice = cone.lattice().clone();
    let mut fan = vec![cone.lattice_rays()];
    while let Some(pos) = fan.iter().position(|rays| !index_of(rays, &lattice).is_one()) {
        let candidates: Vec<RatVector> =
            parallelepiped_points(&fan[pos], &lattice, Parallelepiped::ClosedAtOrigin)
                .into_iter()
                .map(|(p, _)| p)
                .filter(|p| !p.is_zero())
                .collect();
        let pivot = choose_pivot(candidates, strategy.pivot);
        star(&mut fan, &pivot);
    }
    if strategy.refine {
        let maximal = fan.clone();
        for rays in maximal {
            let centre = rays.iter().fold(RatVector::zeros(0), |acc, r| &acc + r);
            star(&mut fan, &centre);
        }
    }
    let mut pieces: Vec<LatticeCone> = fan
        .into_iter()
        .map(|rays| {
            let gens = rays
                .iter()
                .map(|r| primitive_integer_vector(r.coords()).expect("nonzero ray").0)
                .collect();
            LatticeCone::assemble(gens, lattice.clone(), cone.ambient_dim())
                .expect("stellar pieces stay simplicial")
        })
        .collect();
    pieces.sort();
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_cone(gens: &[&[i64]]) -> LatticeCone {
        LatticeCone::with_lattice(gens, &[&[1, 0], &[0, 1]]).unwrap()
    }

    #[test]
    fn subdivides_index_two_cone() {
        let pieces = smooth_subdivision(&z2_cone(&[&[1, 0], &[1, 2]]));
        assert_eq!(
            pieces,
            vec![z2_cone(&[&[1, 0], &[1, 1]]), z2_cone(&[&[1, 1], &[1, 2]])]
        );
        assert!(pieces.iter().all(LatticeCone::is_smooth));
    }

    #[test]
    fn smooth_cone_is_kept() {
        let c = z2_cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(smooth_subdivision(&c), vec![c]);
    }

    #[test]
    fn subdivides_index_three_cone() {
        let pieces = smooth_subdivision(&z2_cone(&[&[1, 0], &[1, 3]]));
        assert_eq!(
            pieces,
            vec![
                z2_cone(&[&[1, 0], &[1, 1]]),
                z2_cone(&[&[1, 1], &[1, 2]]),
                z2_cone(&[&[1, 2], &[1, 3]]),
            ]
        );
        let longest = smooth_subdivision_with(
            &z2_cone(&[&[1, 0], &[1, 3]]),
            SubdivisionStrategy { pivot: PivotOrder::Longest, refine: false },
        );
        assert_eq!(longest, pieces);
        let refined = smooth_subdivision_with(
            &z2_cone(&[&[1, 0], &[1, 3]]),
            SubdivisionStrategy { pivot: PivotOrder::Longest, refine: true },
        );
        assert_eq!(refined.len(), 6);
        assert!(refined.iter().all(LatticeCone::is_smooth));
    }

    #[test]
    fn parallelepiped_enumeration() {
        let rays = vec![RatVector::from_ints(&[1, 0]), RatVector::from_ints(&[1, 3])];
        let z2 = IntLattice::standard(2);
        let closed = parallelepiped_points(&rays, &z2, Parallelepiped::ClosedAtOrigin);
        assert_eq!(closed.len(), 3);
        let open = parallelepiped_points(&rays, &z2, Parallelepiped::OpenAtOrigin);
        let mut pts: Vec<RatVector> = open.into_iter().map(|(p, _)| p).collect();
        pts.sort_by(cmp_vec);
        assert_eq!(
            pts,
            vec![RatVector::from_ints(&[1, 1]), RatVector::from_ints(&[1, 2]), RatVector::from_ints(&[2, 3])]
        );
    }

    #[test]
    fn three_dimensional_index_two() {
        let c = LatticeCone::with_lattice(
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]],
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        )
        .unwrap();
        assert_eq!(c.smoothness_index(), BigInt::from(2));
        let pieces = smooth_subdivision(&c);
        assert_eq!(pieces.len(), 3);
        assert!(pieces.iter().all(LatticeCone::is_smooth));
    }
}
