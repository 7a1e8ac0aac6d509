//! Brute-force numeric evaluation of the exponential lattice sum over the
//! interior of a cone, used to cross-check the symbolic germs.
//!
//! Interior lattice points are enumerated as `p + Σ m_i u_i`, where `u_i`
//! are the lattice rays, `m_i ≥ 0`, and `p` runs over the lattice points of
//! the parallelepiped `{Σ λ_i u_i : 0 < λ_i ≤ 1}`.

use num_complex::Complex64;

use crate::cones::{parallelepiped_points, LatticeCone, Parallelepiped};
use crate::error::{Error, Result};
use crate::germs::to_f64;
use crate::linalg::RatVector;

#[derive(Clone, Debug)]
pub struct OracleSum {
    pub value: Complex64,
    /// Rigorous bound on the modulus of the omitted tail.
    pub truncation_estimate: f64,
    pub radius: usize,
    pub points: usize,
}

fn pairing(v: &RatVector, z: &[Complex64]) -> Complex64 {
    v.coords()
        .iter()
        .zip(z)
        .map(|(a, b)| b * to_f64(a))
        .sum()
}

struct Setup {
    offsets: Vec<Complex64>,
    steps: Vec<Complex64>,
}

fn setup(c: &LatticeCone, z: &[Complex64]) -> Result<Setup> {
    let rays = c.lattice_rays();
    for (g, u) in c.generator_vectors().iter().zip(&rays) {
        let t = pairing(u, z).re;
        if !(t < 0.0) {
            return Err(Error::OutsideDualCone { generator: g.to_string(), value: t });
        }
    }
    let offsets = parallelepiped_points(&rays, c.lattice(), Parallelepiped::OpenAtOrigin)
        .into_iter()
        .map(|(p, _)| pairing(&p, z))
        .collect();
    let steps = rays.iter().map(|u| pairing(u, z)).collect();
    Ok(Setup { offsets, steps })
}

fn tail_bound(s: &Setup, radius: usize) -> f64 {
    let base: f64 = s.offsets.iter().map(|o| o.re.exp()).sum();
    let mut full = 1.0;
    let mut kept = 1.0;
    for t in &s.steps {
        let r = t.re.exp();
        full /= 1.0 - r;
        kept *= (1.0 - r.powi(radius as i32 + 1)) / (1.0 - r);
    }
    base * (full - kept).max(0.0)
}

/// `Σ e^{<n,z>}` over interior lattice points with all `m_i ≤ radius`.
/// Requires `Re <g, z> < 0` for every generator `g`.
pub fn oracle_sum(c: &LatticeCone, z: &[Complex64], radius: usize) -> Result<OracleSum> {
    if c.is_zero() {
        return Ok(OracleSum { value: Complex64::new(1.0, 0.0), truncation_estimate: 0.0, radius, points: 1 });
    }
    let s = setup(c, z)?;
    let n = s.steps.len();
    let mut total = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut points = 0;
    let mut m = vec![0usize; n];
    loop {
        let shift: Complex64 = m.iter().zip(&s.steps).map(|(&k, t)| t * k as f64).sum();
        for o in &s.offsets {
            // compensated summation
            let y = (o + shift).exp() - comp;
            let t = total + y;
            comp = (t - total) - y;
            total = t;
            points += 1;
        }
        let mut i = 0;
        while i < n {
            m[i] += 1;
            if m[i] <= radius {
                break;
            }
            m[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(OracleSum { value: total, truncation_estimate: tail_bound(&s, radius), radius, points })
}

/// Chooses the smallest radius (doubling from 8) whose tail bound is below
/// `tolerance`, subject to a budget on the number of enumerated points.
pub fn oracle_sum_adaptive(c: &LatticeCone, z: &[Complex64], tolerance: f64, max_points: usize) -> Result<OracleSum> {
    if c.is_zero() {
        return oracle_sum(c, z, 0);
    }
    let s = setup(c, z)?;
    let per_box = s.offsets.len();
    let n = s.steps.len() as u32;
    let mut radius = 8usize;
    loop {
        let next = radius * 2;
        let next_points = per_box.saturating_mul((next + 1).saturating_pow(n));
        if tail_bound(&s, radius) < tolerance || next_points > max_points {
            break;
        }
        radius = next;
    }
    oracle_sum(c, z, radius)
}
