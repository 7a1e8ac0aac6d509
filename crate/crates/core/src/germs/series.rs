use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::form::LinearForm;
use super::germ::{Denominator, MeromorphicGerm, EXACT};
use super::poly::Polynomial;
use crate::error::Result;
use crate::linalg::{RatVector, Rational};

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k)))
}

/// Coefficients `c_0..=c_n` of `a / b` for power series with `b_0 != 0`.
pub fn series_divide(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let get = |s: &[Rational], i: usize| s.get(i).cloned().unwrap_or_else(Rational::zero);
    let mut c: Vec<Rational> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = get(a, i);
        for j in 0..i {
            acc -= &c[j] * get(b, i - j);
        }
        c.push(acc / &b[0]);
    }
    c
}

/// Laurent coefficients of `e^t / (1 - e^t)` at `t = 0`:
/// element `j` is the coefficient of `t^{j-1}`, for `j = 0..=order+1`.
pub fn laurent_coeffs(order: usize) -> Vec<Rational> {
    // 1 - e^t = -t E(t) with E(t) = sum t^n / (n+1)!
    let n = order + 1;
    let exp: Vec<Rational> = (0..=n).map(|k| Rational::one() / factorial(k)).collect();
    let e: Vec<Rational> = (0..=n).map(|k| Rational::one() / factorial(k + 1)).collect();
    series_divide(&exp, &e, n).into_iter().map(|x| -x).collect()
}

/// Laurent expansion of `e^t / (1 - e^t)` with `t = <u, z>` through total
/// degree `order`; `u` must be a primitive integer vector.
pub fn geometric_germ(u: &[BigInt], order: i64) -> Result<MeromorphicGerm> {
    let (form, sign) = LinearForm::from_primitive(u)?;
    Ok(scaled_geometric(&form, &sign, order))
}

/// The same expansion for `t = c <L, z>` with canonical `L` and `c != 0`.
pub(crate) fn scaled_geometric(form: &LinearForm, c: &Rational, order: i64) -> MeromorphicGerm {
    let top = order.max(0) as usize;
    let coeffs = laurent_coeffs(top);
    let l = form.polynomial();
    let dim = form.len();
    let mut hol = Polynomial::zero();
    let mut lp = Polynomial::one();
    let mut cp = Rational::one();
    for j in 0..=top {
        if order >= 0 && !coeffs[j + 1].is_zero() {
            hol.add_assign(&lp.scale(&(&coeffs[j + 1] * &cp)));
        }
        lp = lp.mul(&l);
        cp *= c;
    }
    let mut g = MeromorphicGerm::zero(dim, order);
    g.insert(Denominator::from_factors([(form.clone(), 1)]), Polynomial::constant(&coeffs[0] / c));
    g.insert(Denominator::one(), hol);
    g
}

/// `e^t/(1-e^t)` in `t = <v, z>` for any nonzero rational vector `v`.
pub fn geometric_germ_rational(v: &RatVector, order: i64) -> MeromorphicGerm {
    let (form, c) = LinearForm::normalize(v).expect("nonzero vector");
    scaled_geometric(&form, &c, order)
}

/// `-1 / <v, z>`, the exponential integral over a ray, exact.
pub fn inverse_form_germ(v: &RatVector) -> MeromorphicGerm {
    let (form, c) = LinearForm::normalize(v).expect("nonzero vector");
    let dim = form.len();
    let mut g = MeromorphicGerm::zero(dim, EXACT);
    g.insert(Denominator::from_factors([(form, 1)]), Polynomial::constant(-Rational::one() / c));
    g
}

/// Taylor jet of `e^{<v, z>}` through degree `order`.
pub fn exp_jet(v: &RatVector, order: i64) -> MeromorphicGerm {
    let l = Polynomial::linear(v);
    let mut p = Polynomial::zero();
    let mut lp = Polynomial::one();
    for j in 0..=order.max(-1) {
        p.add_assign(&lp.scale(&(Rational::one() / factorial(j as usize))));
        lp = lp.mul(&l);
    }
    MeromorphicGerm::from_polynomial(p, v.dim(), order)
}
