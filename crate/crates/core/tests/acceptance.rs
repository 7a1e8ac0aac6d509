//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{corpus, dual_points, orthogonal_pairs, orthogonal_split, random_germ, std_cone};
use conelab::cones::{smooth_subdivision_with, PivotOrder, SubdivisionStrategy};
use conelab::germs::{are_independent_germs, MeromorphicGerm, Polynomial};
use conelab::hopf::{
    birkhoff_of_sum, euler_maclaurin_verify, exp_integral, exp_sum, exp_sum_with, renormalized_mu, ConeBialgebra,
    GermAlgebra,
};
use conelab::linalg::{int, InnerProductForm, RatVector, Rational};
use conelab::locality::{
    check_antipode, check_bialgebra_compatibility, check_coassociativity, check_counit, check_grading_and_locality,
    check_locality_axioms, check_locality_homomorphism, check_nilpotency, check_rota_baxter, iterated_reduced_coproduct,
    AxiomReport, TargetAlgebra,
};
use conelab::oracle::oracle_sum_adaptive;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pass(report: AxiomReport, ctx: &str) -> Result<(), String> {
    ensure(report.is_pass(), || format!("{ctx}: {report}"))
}

fn std_q() -> InnerProductForm {
    InnerProductForm::Standard
}

/// Laurent coefficients of e^t/(1-e^t) from Bernoulli numbers:
/// the coefficient of t^{n-1} is -B_n (-1)^n / n!.
fn bernoulli_oracle(count: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    let binom = |n: usize, k: usize| -> Rational {
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        Rational::from_integer(r)
    };
    for m in 1..count {
        let s: Rational = (0..m).map(|k| binom(m + 1, k) * &b[k]).sum();
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    let mut fact = Rational::one();
    (0..count)
        .map(|n| {
            if n > 0 {
                fact *= Rational::from_integer(BigInt::from(n));
            }
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            -(&b[n] * sign) / &fact
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let order = 10;
    let g = exp_sum(&std_cone(&[&[1]]), order);
    let oracle = bernoulli_oracle(order as usize + 2);
    ensure(g.valid_up_to() == order, || format!("valid_up_to {}", g.valid_up_to()))?;
    for (j, want) in oracle.iter().enumerate() {
        let d = j as i64 - 1;
        let comp = g.homogeneous_component(d);
        let expect = if d < 0 {
            MeromorphicGerm::from_term(Polynomial::constant(want.clone()), &[(RatVector::from_ints(&[1]), 1)], 1, conelab::germs::EXACT)
        } else {
            MeromorphicGerm::from_polynomial(Polynomial::monomial(vec![d as u32], want.clone()), 1, conelab::germs::EXACT)
        };
        ensure(comp.agrees_with(&expect), || format!("degree {d}: got {comp}, oracle {want}"))?;
    }
    let named = [(-1, "-1"), (0, "-1/2"), (1, "-1/12"), (2, "0"), (3, "1/720")];
    for (d, c) in named {
        let want = conelab::linalg::parse_rational(c).unwrap();
        ensure(oracle[(d + 1) as usize] == want, || format!("oracle coefficient of t^{d}"))?;
    }
    Ok(format!("12 coefficients through t^{order}"))
}

fn criterion_2() -> Outcome {
    let q = std_q();
    let cones = corpus();
    let mut non_smooth = 0;
    for (name, c) in &cones {
        let r = euler_maclaurin_verify(c, &q, 6).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.matches, || format!("{name}: discrepancy {}", r.discrepancy))?;
        non_smooth += usize::from(!c.is_smooth());
    }
    ensure(cones.len() >= 10 && non_smooth >= 3, || "corpus too small".into())?;
    Ok(format!("{} cones ({non_smooth} non-smooth) through degree 6", cones.len()))
}

fn criterion_3() -> Outcome {
    let q = std_q();
    let order = 5;
    let pairs = orthogonal_pairs();
    for (a, b) in &pairs {
        ensure(a.is_orthogonal_to(&q, b), || format!("{a}, {b} not orthogonal"))?;
        let ab = a.minkowski_product(b).map_err(|e| e.to_string())?;
        let (da, db) = (a.dim() as i64, b.dim() as i64);
        let s = exp_sum(&a, order + db).mul(&exp_sum(b, order + da));
        ensure(exp_sum(&ab, order).agrees_through(&s, order), || format!("S({a}·{b})"))?;
        let i = exp_integral(a).mul(&exp_integral(b));
        ensure(exp_integral(&ab).agrees_with(&i), || format!("I({a}·{b})"))?;
        let m = renormalized_mu(a, &q, order).mul(&renormalized_mu(b, &q, order));
        ensure(renormalized_mu(&ab, &q, order).agrees_through(&m, order), || format!("mu({a}·{b})"))?;
    }
    let c = std_cone(&[&[1]]);
    let cc = c.minkowski_product(&c).map_err(|e| e.to_string())?;
    let sq = exp_sum(&c, order + 1).mul(&exp_sum(&c, order + 1));
    ensure(!exp_sum(&cc, order).agrees_through(&sq, order), || "S(C·C) = S(C)^2 for C = <e1>".into())?;
    Ok(format!("{} orthogonal pairs; negative control S(C·C) != S(C)^2", pairs.len()))
}

fn spans_orthogonal(q: &InnerProductForm, a: &[RatVector], b: &[RatVector]) -> bool {
    a.iter().all(|u| b.iter().all(|v| q.inner_product(u, v).is_zero()))
}

fn criterion_4() -> Outcome {
    let q = std_q();
    let order = 4;
    let pairs = orthogonal_pairs();
    for (a, b) in &pairs {
        let (ma, mb) = (renormalized_mu(a, &q, order), renormalized_mu(b, &q, order));
        ensure(spans_orthogonal(&q, &ma.support_span(&q), &mb.support_span(&q)), || format!("mu: {a}, {b}"))?;
        let (_, pa) = birkhoff_of_sum(a, &q, order, false).map_err(|e| e.to_string())?;
        let (_, pb) = birkhoff_of_sum(b, &q, order, false).map_err(|e| e.to_string())?;
        ensure(spans_orthogonal(&q, &pa.support_span(&q), &pb.support_span(&q)), || format!("phi2: {a}, {b}"))?;
    }
    Ok(format!("{} orthogonal pairs", pairs.len()))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grams = [
        std_q(),
        InnerProductForm::from_gram(vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(2), int(1)],
            vec![int(0), int(1), int(3)],
        ])
        .unwrap(),
    ];
    let mut pairs = 0;
    let mut rb_checked = 0;
    while pairs < 100 {
        let q = &grams[pairs % 2];
        let k = 2 + pairs % 2;
        let (wa, wb) = orthogonal_split(q, k, &mut rng);
        let f = random_germ(&wa, k, &mut rng, true);
        let g = random_germ(&wb, k, &mut rng, true);
        ensure(are_independent_germs(&f, &g, q), || format!("generated pair not independent: {f} | {g}"))?;
        let pf = f.project_plus(q);
        ensure(pf.project_plus(q).agrees_with(&pf), || format!("idempotence: {f}"))?;
        ensure(f.project_minus(q).project_plus(q).is_zero(), || format!("pi+ pi- = 0: {f}"))?;
        let lhs = f.mul(&g).project_plus(q);
        ensure(lhs.agrees_with(&pf.mul(&g.project_plus(q))), || format!("multiplicativity: {f} | {g}"))?;
        let target = GermAlgebra::new(q.clone());
        let (rb, n) = check_rota_baxter(&target, |x| x.project_minus(q), &[(f.clone(), g.clone())], &int(-1));
        pass(rb, "Rota-Baxter")?;
        rb_checked += n;
        let p = g.project_minus(q);
        ensure(f.mul(&p).project_plus(q).is_zero(), || format!("ideal: {f} | {p}"))?;
        pairs += 1;
    }
    ensure(rb_checked == 100, || format!("only {rb_checked} pairs checked"))?;
    Ok("100 independent pairs under two inner products".into())
}

fn criterion_6() -> Outcome {
    let q = std_q();
    let h = ConeBialgebra::new(q.clone());
    let cones = corpus();
    for (name, c) in &cones {
        pass(check_coassociativity(&h, c), name)?;
        pass(check_counit(&h, c), name)?;
        pass(check_grading_and_locality(&h, c), name)?;
        pass(check_nilpotency(&h, c), name)?;
        for k in c.dim()..=c.dim() + 1 {
            ensure(iterated_reduced_coproduct(&h, c, k).is_zero() || c.is_zero(), || format!("{name}: k = {k}"))?;
        }
        pass(check_antipode(&h, c).map_err(|e| e.to_string())?, name)?;
    }
    for (a, b) in orthogonal_pairs() {
        pass(check_bialgebra_compatibility(&h, &a, &b).map_err(|e| e.to_string())?, &format!("{a}, {b}"))?;
    }
    Ok(format!("{} cones, {} orthogonal pairs", cones.len(), orthogonal_pairs().len()))
}

fn criterion_7() -> Outcome {
    let q = std_q();
    let target = GermAlgebra::new(q.clone());
    let order = 4;
    for (name, c) in corpus() {
        let (a1, b1) = birkhoff_of_sum(&c, &q, order, false).map_err(|e| format!("{name}: {e}"))?;
        let (a2, b2) = birkhoff_of_sum(&c, &q, order, true).map_err(|e| format!("{name}: {e}"))?;
        ensure(a1.agrees_with(&a2), || format!("{name}: phi1^-1 differs"))?;
        ensure(b1.agrees_with(&b2), || format!("{name}: phi2 differs"))?;
        if !c.is_zero() {
            ensure(target.in_first(&a1), || format!("{name}: phi1^-1 not holomorphic"))?;
            ensure(target.in_second(&b1), || format!("{name}: phi2 not polar"))?;
        }
        ensure(b1.agrees_with(&exp_integral(&c).truncate(order)), || format!("{name}: phi2 != I"))?;
    }
    Ok(format!("{} cones", corpus().len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for (name, c) in corpus() {
        let g = exp_sum(&c, 8);
        for z in dual_points(&c, 5, 0.3, 0.7, &mut rng) {
            let germ = g.evaluate_numeric(&z).map_err(|e| format!("{name}: {e}"))?;
            let germ_est = g.truncation_estimate(&z).map_err(|e| e.to_string())?;
            let oracle = oracle_sum_adaptive(&c, &z, 1e-9, 3_000_000).map_err(|e| format!("{name}: {e}"))?;
            let diff = (germ - oracle.value).norm();
            let bound = 1e-6 + germ_est + oracle.truncation_estimate;
            ensure(diff < bound, || {
                format!("{name} at {z:?}: |{germ} - {}| = {diff:e} > {bound:e}", oracle.value)
            })?;
            worst = worst.max(diff);
            count += 1;
        }
    }
    Ok(format!("{count} evaluations, max deviation {worst:.2e}"))
}

fn criterion_9() -> Outcome {
    let c = std_cone(&[&[1, 0], &[1, 3]]);
    let a = SubdivisionStrategy::default();
    let b = SubdivisionStrategy { pivot: PivotOrder::Longest, refine: true };
    let (pa, pb) = (smooth_subdivision_with(&c, a), smooth_subdivision_with(&c, b));
    ensure(pa != pb, || "subdivisions coincide".into())?;
    for order in [4, 8] {
        let (sa, sb) = (exp_sum_with(&c, order, a), exp_sum_with(&c, order, b));
        ensure(sa.agrees_with(&sb), || format!("order {order}: {sa} vs {sb}"))?;
    }
    Ok(format!("{} vs {} pieces", pa.len(), pb.len()))
}

type Subspace = Vec<RatVector>;

fn subspace(vs: &[&[i64]]) -> Subspace {
    let rows: Vec<RatVector> = vs.iter().map(|v| RatVector::from_ints(v)).collect();
    conelab::linalg::rref(&rows).0
}

fn criterion_10() -> Outcome {
    let xs: Vec<Subspace> = vec![
        subspace(&[]),
        subspace(&[&[1, 0]]),
        subspace(&[&[0, 1]]),
        subspace(&[&[1, 1]]),
        subspace(&[&[1, 0], &[0, 1]]),
    ];
    let dim = |v: &Subspace| conelab::linalg::rank(v);
    let join = |a: &Subspace, b: &Subspace| {
        let mut all = a.clone();
        all.extend(b.iter().cloned());
        conelab::linalg::rref(&all).0
    };
    let transverse = |a: &Subspace, b: &Subspace| dim(&join(a, b)) == dim(a) + dim(b);
    let report = check_locality_axioms(&xs, transverse, join, Some(&xs[0]));
    let AxiomReport::Violation { axiom, .. } = &report else {
        return Err("transverse subspaces reported as a locality monoid".into());
    };
    ensure(axiom == "polar closure", || format!("unexpected axiom {axiom}"))?;

    let ns: Vec<u64> = (1..=36).collect();
    let gcd = |a: u64, b: u64| num_integer::Integer::gcd(&a, &b);
    let coprime = |a: &u64, b: &u64| gcd(*a, *b) == 1;
    let totient = |n: &u64| (1..=*n).filter(|k| gcd(*k, *n) == 1).count() as u64;
    pass(check_locality_axioms(&ns, coprime, |a, b| a * b, Some(&1)), "coprime monoid")?;
    pass(
        check_locality_homomorphism(&ns, coprime, |a, b| a * b, totient, |a, b| a * b, None),
        "totient",
    )?;
    Ok(format!("transverse subspaces violate {axiom}; coprime and totient pass"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("1D Laurent coefficients", criterion_1, 1),
        ("Euler-Maclaurin S = mu * I", criterion_2, 30),
        ("orthogonal multiplicativity", criterion_3, 10),
        ("locality preservation", criterion_4, 10),
        ("germ algebra projections", criterion_5, 30),
        ("coalgebra and Hopf axioms", criterion_6, 30),
        ("Birkhoff consistency", criterion_7, 30),
        ("numeric cross-validation", criterion_8, 60),
        ("subdivision invariance", criterion_9, 5),
        ("axiom-checker calibration", criterion_10, 1),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit}s"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
