mod common;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{orthogonal_split, random_germ};
use conelab::germs::{are_independent_germs, geometric_germ, MeromorphicGerm, EXACT};
use conelab::io::{germ_to_json, parse_germ};
use conelab::linalg::{int, InnerProductForm, RatVector, Rational};

fn gram() -> InnerProductForm {
    let g = [[2, 1, 0], [1, 2, 1], [0, 1, 3]];
    InnerProductForm::from_gram(g.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

fn forms(k: usize) -> Vec<RatVector> {
    (0..k).map(|i| RatVector::unit(i, k)).collect()
}

/// A pair of random germs with forms drawn from Q-orthogonal subspaces.
fn independent_pair(seed: u64) -> (InnerProductForm, MeromorphicGerm, MeromorphicGerm) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = if seed % 2 == 0 { InnerProductForm::Standard } else { gram() };
    let k = 2 + (seed % 2) as usize;
    let (a, b) = orthogonal_split(&q, k, &mut rng);
    (q, random_germ(&a, k, &mut rng, true), random_germ(&b, k, &mut rng, true))
}

fn safe_point(g: &[&MeromorphicGerm], k: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    'outer: loop {
        let z: Vec<Complex64> = (0..k).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        for f in g {
            for v in f.raw_forms() {
                let c: Vec<f64> = v.coords().iter().map(|c| c.to_f64().unwrap()).collect();
                let s: Complex64 = c.iter().zip(&z).map(|(c, x)| x * c).sum();
                if s.norm() < 0.2 * c.iter().map(|c| c * c).sum::<f64>().sqrt() {
                    continue 'outer;
                }
            }
        }
        return z;
    }
}

/// The geometric series oracle 1/(e^{-t} - 1) evaluated directly.
fn geometric_closed_form(t: Complex64) -> Complex64 {
    Complex64::new(1.0, 0.0) / ((-t).exp() - 1.0)
}

#[test]
fn geometric_germ_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for u in [[1i64, 0], [1, 2], [3, -1], [-2, 5]] {
        let ub: Vec<BigInt> = u.iter().map(|&x| x.into()).collect();
        let g = geometric_germ(&ub, 12).unwrap();
        for _ in 0..5 {
            let z: Vec<Complex64> = (0..2).map(|_| Complex64::new(rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1))).collect();
            let t = z[0] * u[0] as f64 + z[1] * u[1] as f64;
            if t.norm() < 1e-3 {
                continue;
            }
            let got = g.evaluate_numeric(&z).unwrap();
            assert!((got - geometric_closed_form(t)).norm() < 1e-10, "u = {u:?}: {got} at t = {t}");
        }
    }
    assert!(geometric_germ(&[BigInt::from(2), BigInt::from(4)], 4).is_err());
}

#[test]
fn germ_file_rejects_bad_fields() {
    let err = parse_germ(r#"{"ambient_dim": 1, "valid_up_to": 2, "terms": [{"den": [], "num": [{"exps": [0], "coeff": "1/0"}]}]}"#)
        .unwrap_err()
        .to_string();
    assert!(err.contains("coeff"), "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_reassembles(seed in any::<u64>()) {
        let (q, f, _) = independent_pair(seed);
        let d = f.decompose(&q);
        prop_assert!(d.holomorphic.add(&d.polar).agrees_with(&f));
        prop_assert!(d.holomorphic.is_polynomial());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = f.ambient_dim();
        let (a, _) = orthogonal_split(&q, k, &mut rng);
        let g = random_germ(&a, k, &mut rng, true).add(&random_germ(&forms(k), k, &mut rng, true));
        let d = g.decompose(&q);
        prop_assert!(d.holomorphic.add(&d.polar).agrees_with(&g));
    }

    #[test]
    fn projections_are_complementary_idempotents(seed in any::<u64>()) {
        let (q, f, g) = independent_pair(seed);
        let h = f.add(&g).mul(&f);
        let p = h.project_plus(&q);
        prop_assert!(p.project_plus(&q).agrees_with(&p));
        prop_assert!(h.project_minus(&q).project_plus(&q).is_zero());
        prop_assert!(p.project_minus(&q).is_zero());
        for d in -3..=4 {
            let component = h.homogeneous_component(d).project_plus(&q);
            prop_assert!(component.agrees_with(&p.homogeneous_component(d)), "degree {}", d);
        }
    }

    #[test]
    fn plus_projection_is_multiplicative_on_independent_pairs(seed in any::<u64>()) {
        let (q, f, g) = independent_pair(seed);
        prop_assert!(are_independent_germs(&f, &g, &q));
        let lhs = f.mul(&g).project_plus(&q);
        prop_assert!(lhs.agrees_with(&f.project_plus(&q).mul(&g.project_plus(&q))));
    }

    #[test]
    fn minus_projection_is_rota_baxter(seed in any::<u64>()) {
        let (q, a, b) = independent_pair(seed);
        let p = |x: &MeromorphicGerm| x.project_minus(&q);
        let lhs = p(&a).mul(&p(&b));
        let rhs = p(&p(&a).mul(&b)).add(&p(&a.mul(&p(&b)))).sub(&p(&a.mul(&b)));
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn polar_germs_form_a_locality_ideal(seed in any::<u64>()) {
        let (q, f, g) = independent_pair(seed);
        let polar = g.project_minus(&q);
        prop_assert!(f.mul(&polar).project_plus(&q).is_zero());
    }

    #[test]
    fn numeric_product_matches(seed in any::<u64>()) {
        let (_, f, g) = independent_pair(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let z = safe_point(&[&f, &g], f.ambient_dim(), &mut rng);
        let fg = f.mul(&g).evaluate_numeric(&z).unwrap();
        let prod = f.evaluate_numeric(&z).unwrap() * g.evaluate_numeric(&z).unwrap();
        prop_assert!((fg - prod).norm() <= 1e-9 * (1.0 + prod.norm()), "{} vs {}", fg, prod);
    }

    #[test]
    fn truncated_products_stay_valid(seed in any::<u64>(), v in 0i64..5) {
        let (_, f, g) = independent_pair(seed);
        let (ft, gt) = (f.truncate(v), g.truncate(v));
        let prod = ft.mul(&gt);
        prop_assert_eq!(f.mul(&g).valid_up_to(), EXACT);
        prop_assert!(prod.valid_up_to() < EXACT);
        prop_assert!(prod.agrees_with(&f.mul(&g).truncate(prod.valid_up_to())));
    }

    #[test]
    fn germ_json_round_trip(seed in any::<u64>(), v in prop_oneof![Just(EXACT), -2i64..6]) {
        let (q, f, g) = independent_pair(seed);
        for h in [f.truncate(v), g.decompose(&q).polar, f.mul(&g)] {
            let back = parse_germ(&germ_to_json(&h)).unwrap();
            prop_assert_eq!(&back, &h);
        }
    }

    #[test]
    fn exact_zero_detection(seed in any::<u64>(), c in -3i64..=3) {
        let (q, f, g) = independent_pair(seed);
        let d = f.decompose(&q);
        let twice = f.scale(&Rational::from_integer(c.into())).sub(&d.polar.add(&d.holomorphic).scale(&Rational::from_integer(c.into())));
        prop_assert!(twice.is_zero());
        prop_assert!(f.sub(&g).is_zero() == f.agrees_with(&g));
    }
}
