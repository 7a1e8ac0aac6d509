use num_bigint::BigInt;
use num_complex::Complex64;

use super::*;
use crate::linalg::{rat, InnerProductForm, RatVector, Rational};

fn v(xs: &[i64]) -> RatVector {
    RatVector::from_ints(xs)
}

fn inv(xs: &[i64]) -> MeromorphicGerm {
    MeromorphicGerm::from_term(Polynomial::one(), &[(v(xs), 1)], xs.len(), EXACT)
}

fn z(i: usize) -> Polynomial {
    Polynomial::var(i)
}

fn poly_germ(p: Polynomial) -> MeromorphicGerm {
    let n = p.nvars();
    MeromorphicGerm::from_polynomial(p, n, EXACT)
}

#[test]
fn add_and_scale() {
    let a = inv(&[1]);
    assert!(a.add(&a.neg()).is_empty());
    assert_eq!(a.add(&MeromorphicGerm::one(1)).num_terms(), 2);
    let two = a.scale(&rat(2, 1));
    assert_eq!(two.scale(&rat(1, 2)), a);
}

#[test]
fn multiplication() {
    let a = inv(&[1]);
    let sq = a.mul(&a);
    assert_eq!(sq.to_string(), "z1^-2");
    let one = a.mul(&poly_germ(z(0)));
    assert!(one.agrees_with(&MeromorphicGerm::one(1)));

    let e = exp_jet(&v(&[1]), 3);
    let prod = e.mul(&a);
    assert_eq!(prod.valid_up_to(), 2);
    assert_eq!(prod.to_string(), "z1^-1 + 1 + 1/2 z1 + 1/6 z1^2");
}

#[test]
fn dependent_denominators_are_split() {
    // 1/(z1 z2 (z1+z2)) has three pairwise dependent forms in two variables
    let g = inv(&[1, 0]).mul(&inv(&[0, 1])).mul(&inv(&[1, 1]));
    for (d, _) in g.terms() {
        assert!(d.has_independent_forms());
    }
    // check numerically against the product
    let pt = [Complex64::new(0.3, 0.1), Complex64::new(-0.7, 0.2)];
    let direct = 1.0 / (pt[0] * pt[1] * (pt[0] + pt[1]));
    assert!((g.evaluate_numeric(&pt).unwrap() - direct).norm() < 1e-12);
}

#[test]
fn decomposition_examples() {
    let q = InnerProductForm::Standard;
    let f = MeromorphicGerm::from_term(z(0).add(&z(1)), &[(v(&[1, 0]), 1)], 2, EXACT);
    let d = f.decompose(&q);
    assert_eq!(d.holomorphic.to_string(), "1");
    assert_eq!(d.polar.to_string(), "z2 z1^-1");

    let g = inv(&[1, 0]).mul(&inv(&[0, 1]));
    let d = g.decompose(&q);
    assert!(d.holomorphic.is_empty());
    assert_eq!(d.polar, g);

    let h = MeromorphicGerm::from_term(z(0), &[(v(&[0, 1]), 1)], 2, EXACT);
    let d = h.decompose(&q);
    assert!(d.holomorphic.is_empty());
    assert_eq!(d.polar, h);
}

#[test]
fn decomposition_with_gram() {
    // Q = [[2,1],[1,2]]: the complement of (1,0) is (-1,2)
    let q = InnerProductForm::from_gram(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(2, 1)]]).unwrap();
    let f = MeromorphicGerm::from_term(z(1), &[(v(&[1, 0]), 1)], 2, EXACT);
    let d = f.decompose(&q);
    assert!(d.holomorphic.add(&d.polar).agrees_with(&f));
    // z2 = (z1 + (2 z2 - z1)) / 2: holomorphic part 1/2
    assert_eq!(d.holomorphic.to_string(), "1/2");
    for (den, p) in d.polar.terms() {
        let forms = den.forms();
        for m in p.essential_forms() {
            for l in &forms {
                assert_eq!(q.inner_product(&m, l), Rational::from_integer(0.into()));
            }
        }
    }
}

#[test]
fn projections() {
    let q = InnerProductForm::Standard;
    let f = geometric_germ(&[BigInt::from(1)], 1).unwrap();
    assert_eq!(f.project_plus(&q).to_string(), "-1/2 - 1/12 z1");
    let jet = exp_jet(&v(&[1, 2]), 3);
    assert_eq!(jet.project_plus(&q), jet);
    let g = inv(&[1, 0]).mul(&inv(&[0, 1]));
    assert_eq!(g.project_minus(&q), g);
}

#[test]
fn independence_examples() {
    let q = InnerProductForm::Standard;
    let a = inv(&[1, 0]);
    assert!(are_independent_germs(&a, &exp_jet(&v(&[0, 1]), 3), &q));
    assert!(!are_independent_germs(&a, &inv(&[1, 1]), &q));
    let c = MeromorphicGerm::constant(rat(3, 1), 2);
    assert!(are_independent_germs(&c, &inv(&[1, 1]), &q));
    // a representation may hide its true support: (z1+z2)/z1 - z2/z1 = 1
    let hidden = MeromorphicGerm::from_term(z(0).add(&z(1)), &[(v(&[1, 0]), 1)], 2, EXACT)
        .sub(&MeromorphicGerm::from_term(z(1), &[(v(&[1, 0]), 1)], 2, EXACT));
    assert!(are_independent_germs(&hidden, &a, &q));
}

#[test]
fn geometric_germ_examples() {
    let e1 = [BigInt::from(1)];
    assert_eq!(geometric_germ(&e1, 3).unwrap().to_string(), "-z1^-1 - 1/2 - 1/12 z1 + 1/720 z1^3");
    assert_eq!(geometric_germ(&e1, 0).unwrap().to_string(), "-z1^-1 - 1/2");
    assert!(geometric_germ(&[BigInt::from(2)], 3).is_err());
    // negative direction: t = -z1
    let g = geometric_germ(&[BigInt::from(-1)], 1).unwrap();
    assert_eq!(g.to_string(), "z1^-1 - 1/2 + 1/12 z1");
}

#[test]
fn numeric_evaluation() {
    let g = geometric_germ(&[BigInt::from(1)], 3).unwrap();
    let x = g.evaluate_real(&[-1.0]).unwrap();
    assert!((x - 0.581_944_444).abs() < 1e-6, "{x}");
    let h = inv(&[1, 0]).mul(&inv(&[0, 1]));
    assert!((h.evaluate_real(&[1.0, 2.0]).unwrap() - 0.5).abs() < 1e-15);
    assert!(matches!(inv(&[1]).evaluate_real(&[0.0]), Err(crate::Error::PoleHit { .. })));
}

#[test]
fn exact_zero_test_sees_through_representations() {
    // 1/(z1 z2) = 1/(z1 (z1+z2)) + 1/(z2 (z1+z2))
    let lhs = inv(&[1, 0]).mul(&inv(&[0, 1]));
    let rhs = MeromorphicGerm::from_term(Polynomial::one(), &[(v(&[1, 0]), 1), (v(&[1, 1]), 1)], 2, EXACT).add(
        &MeromorphicGerm::from_term(Polynomial::one(), &[(v(&[0, 1]), 1), (v(&[1, 1]), 1)], 2, EXACT),
    );
    assert_ne!(lhs, rhs);
    assert!(lhs.agrees_with(&rhs));
}
