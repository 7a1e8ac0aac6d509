//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use conelab::germs::{MeromorphicGerm, Polynomial, EXACT};
use conelab::linalg::{rat, solve_in_span, InnerProductForm, RatVector};
use conelab::LatticeCone;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::Rng;

/// A cone whose lattice is `Z^k ∩ span`.
pub fn std_cone(gens: &[&[i64]]) -> LatticeCone {
    let k = gens[0].len();
    let span: Vec<RatVector> = gens.iter().map(|g| RatVector::from_ints(g)).collect();
    let lattice = conelab::IntLattice::standard(k).intersect_span(&span);
    LatticeCone::from_rational(&span, Some(&lattice.basis())).unwrap()
}

pub fn cone_with(gens: &[&[i64]], lattice: &[&[i64]]) -> LatticeCone {
    LatticeCone::with_lattice(gens, lattice).unwrap()
}

/// Simplicial lattice cones of dimension at most three, smooth and not.
pub fn corpus() -> Vec<(&'static str, LatticeCone)> {
    vec![
        ("<e1>", std_cone(&[&[1]])),
        ("<e1,e2>", std_cone(&[&[1, 0], &[0, 1]])),
        ("<(1,0),(1,1)>", std_cone(&[&[1, 0], &[1, 1]])),
        ("<(1,0),(1,2)>", std_cone(&[&[1, 0], &[1, 2]])),
        ("<(1,0),(1,3)>", std_cone(&[&[1, 0], &[1, 3]])),
        ("<(2,1),(1,3)>", std_cone(&[&[2, 1], &[1, 3]])),
        ("<(1,2)> in Z^2", std_cone(&[&[1, 2]])),
        ("<e1,e2> in D2", cone_with(&[&[1, 0], &[0, 1]], &[&[1, 1], &[1, -1]])),
        ("<e1,e2,e3>", std_cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("<(1,0,0),(1,1,0),(1,1,1)>", std_cone(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]])),
        ("<(1,0,0),(0,1,0),(1,1,2)>", std_cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])),
        ("<(1,0,0),(0,1,2)>", std_cone(&[&[1, 0, 0], &[0, 1, 2]])),
        ("<(0,1,0),(0,1,2)> in Z^3", std_cone(&[&[0, 1, 0], &[0, 1, 2]])),
    ]
}

/// Pairs of cones with orthogonal lattices (standard inner product).
pub fn orthogonal_pairs() -> Vec<(LatticeCone, LatticeCone)> {
    vec![
        (std_cone(&[&[1, 0]]), std_cone(&[&[0, 1]])),
        (std_cone(&[&[1, 1]]), std_cone(&[&[1, -1]])),
        (std_cone(&[&[1, 2]]), std_cone(&[&[2, -1]])),
        (std_cone(&[&[1, 0, 0]]), std_cone(&[&[0, 1, 0], &[0, 0, 1]])),
        (std_cone(&[&[1, 0, 0]]), std_cone(&[&[0, 1, 0], &[0, 1, 2]])),
        (std_cone(&[&[1, 0, 0], &[1, 2, 0]]), std_cone(&[&[0, 0, 1]])),
        (std_cone(&[&[1, 0, 0], &[1, 3, 0]]), std_cone(&[&[0, 0, 1]])),
        (std_cone(&[&[1, 1, 0]]), std_cone(&[&[1, -1, 0], &[0, 0, 1]])),
        (std_cone(&[&[1, 1, 1]]), std_cone(&[&[1, -1, 0]])),
        (std_cone(&[&[1, 1, 1]]), std_cone(&[&[1, -1, 0], &[1, 1, -2]])),
        (std_cone(&[&[0, 1, 0], &[0, 1, 3]]), std_cone(&[&[1, 0, 0]])),
        (cone_with(&[&[2, 0]], &[&[2, 0]]), std_cone(&[&[0, 1]])),
    ]
}

/// Points `z` in the dual open cone with `<g_i, z> = -a_i`, `a_i` drawn
/// from `[lo, hi]`, for the primitive generators `g_i`.
pub fn dual_points(c: &LatticeCone, count: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> Vec<Vec<Complex64>> {
    let gens = c.generator_vectors();
    let k = c.ambient_dim();
    // dual basis inside span(gens): w_i with <g_j, w_i> = delta_ij
    let gram: Vec<Vec<f64>> = gens
        .iter()
        .map(|a| gens.iter().map(|b| a.dot(b).to_f64().unwrap()).collect())
        .collect();
    let n = gens.len();
    let inv = invert(&gram);
    (0..count)
        .map(|_| {
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..hi)).collect();
            let mut z = vec![0.0; k];
            for i in 0..n {
                // w_i = sum_j inv[i][j] g_j
                for j in 0..n {
                    for (r, zr) in z.iter_mut().enumerate() {
                        *zr -= a[i] * inv[i][j] * gens[j].get(r).to_f64().unwrap();
                    }
                }
            }
            z.into_iter().map(|x| Complex64::new(x, 0.0)).collect()
        })
        .collect()
}

fn invert(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| (i == j) as i32 as f64));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
        a.swap(c, p);
        let d = a[c][c];
        a[c].iter_mut().for_each(|x| *x /= d);
        for r in 0..n {
            if r != c {
                let f = a[r][c];
                let row_c = a[c].clone();
                a[r].iter_mut().zip(row_c).for_each(|(x, y)| *x -= f * y);
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Two mutually `q`-orthogonal families of vectors spanning complementary
/// subspaces of `Q^k`, split at a random position.
pub fn orthogonal_split(q: &InnerProductForm, k: usize, rng: &mut impl Rng) -> (Vec<RatVector>, Vec<RatVector>) {
    let na = rng.gen_range(1..k);
    let a: Vec<RatVector> = loop {
        let vs: Vec<RatVector> = (0..na)
            .map(|_| RatVector::from_ints(&(0..k).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>()))
            .collect();
        if conelab::linalg::rank(&vs) == na {
            break vs;
        }
    };
    let b = q.orthogonal_complement(&a, k);
    (a, b)
}

fn random_form(basis: &[RatVector], rng: &mut impl Rng) -> RatVector {
    loop {
        let v = basis.iter().fold(RatVector::zeros(0), |acc, b| {
            &acc + &b.scale(&conelab::linalg::int(rng.gen_range(-2..=2)))
        });
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random germ built from linear forms in the span of `basis`.
pub fn random_germ(basis: &[RatVector], k: usize, rng: &mut impl Rng, allow_poles: bool) -> MeromorphicGerm {
    let mut g = MeromorphicGerm::zero(k, EXACT);
    for _ in 0..rng.gen_range(1..=3) {
        let mut num = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let mut mono = Polynomial::constant(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
            for _ in 0..rng.gen_range(0..=2) {
                mono = mono.mul(&Polynomial::linear(&random_form(basis, rng)));
            }
            num.add_assign(&mono);
        }
        let poles = if allow_poles { rng.gen_range(0..=2) } else { 0 };
        let den: Vec<(RatVector, u32)> =
            (0..poles).map(|_| (random_form(basis, rng), rng.gen_range(1..=2))).collect();
        g = g.add(&MeromorphicGerm::from_term(num, &den, k, EXACT));
    }
    g
}

/// Whether `v` is in the span of `basis`.
pub fn in_span(basis: &[RatVector], v: &RatVector) -> bool {
    solve_in_span(basis, v).is_some()
}
