use std::fmt::{self, Debug};

use num_traits::Zero;

use super::structure::TargetAlgebra;
use crate::linalg::Rational;

/// Outcome of a sample-based axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    Violation { axiom: String, witness: String },
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub(crate) fn violation(axiom: &str, witness: impl Into<String>) -> Self {
        AxiomReport::Violation { axiom: axiom.to_string(), witness: witness.into() }
    }

    /// Keeps the first violation.
    pub fn and_then(self, next: impl FnOnce() -> AxiomReport) -> AxiomReport {
        match self {
            AxiomReport::Pass => next(),
            v => v,
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => write!(f, "pass"),
            AxiomReport::Violation { axiom, witness } => write!(f, "{axiom} violated: {witness}"),
        }
    }
}

/// `U^⊤ = {x ∈ X : u ⊤ x for all u ∈ U}`.
pub fn polar_set<T: Clone>(x: &[T], u: &[T], related: impl Fn(&T, &T) -> bool) -> Vec<T> {
    x.iter().filter(|a| u.iter().all(|b| related(b, a))).cloned().collect()
}

/// Checks the locality semigroup axioms on a finite sample: symmetry of the
/// relation, closure of polar sets `{u}^⊤` under products of related pairs,
/// locality associativity on pairwise related triples, and the unit.
pub fn check_locality_axioms<T: PartialEq + Debug>(
    elements: &[T],
    related: impl Fn(&T, &T) -> bool,
    product: impl Fn(&T, &T) -> T,
    unit: Option<&T>,
) -> AxiomReport {
    for a in elements {
        for b in elements {
            if related(a, b) != related(b, a) {
                return AxiomReport::violation("symmetry", format!("{a:?}, {b:?}"));
            }
        }
    }
    for u in elements {
        for a in elements.iter().filter(|a| related(u, a)) {
            for b in elements.iter().filter(|b| related(u, b) && related(a, b)) {
                let ab = product(a, b);
                if !related(u, &ab) {
                    return AxiomReport::violation(
                        "polar closure",
                        format!("{a:?} and {b:?} lie in the polar set of {u:?} but their product {ab:?} does not"),
                    );
                }
            }
        }
    }
    for a in elements {
        for b in elements.iter().filter(|b| related(a, b)) {
            for c in elements.iter().filter(|c| related(a, c) && related(b, c)) {
                let ab = product(a, b);
                let bc = product(b, c);
                if !related(&ab, c) || !related(a, &bc) {
                    return AxiomReport::violation("locality associativity", format!("{a:?}, {b:?}, {c:?}"));
                }
                if product(&ab, c) != product(a, &bc) {
                    return AxiomReport::violation("associativity", format!("{a:?}, {b:?}, {c:?}"));
                }
            }
        }
    }
    if let Some(e) = unit {
        for a in elements {
            if !related(e, a) || product(e, a) != *a || product(a, e) != *a {
                return AxiomReport::violation("unit", format!("{a:?}"));
            }
        }
    }
    AxiomReport::Pass
}

/// Checks `f(ab) = f(a) f(b)` on related sample pairs and, when a target
/// relation is given, that related pairs map to related pairs.
pub fn check_locality_homomorphism<S: Debug, T: PartialEq + Debug>(
    elements: &[S],
    related: impl Fn(&S, &S) -> bool,
    product: impl Fn(&S, &S) -> S,
    f: impl Fn(&S) -> T,
    target_product: impl Fn(&T, &T) -> T,
    target_related: Option<&dyn Fn(&T, &T) -> bool>,
) -> AxiomReport {
    for a in elements {
        for b in elements.iter().filter(|b| related(a, b)) {
            let (fa, fb) = (f(a), f(b));
            if let Some(tr) = target_related {
                if !tr(&fa, &fb) {
                    return AxiomReport::violation("locality of the map", format!("{a:?}, {b:?}"));
                }
            }
            if f(&product(a, b)) != target_product(&fa, &fb) {
                return AxiomReport::violation("multiplicativity", format!("{a:?}, {b:?}"));
            }
        }
    }
    AxiomReport::Pass
}

/// Checks the locality Rota–Baxter relation of weight `λ`,
/// `P(a)P(b) = P(P(a)b) + P(aP(b)) + λP(ab)`, on the independent pairs of
/// the sample. Returns the report and the number of pairs checked.
pub fn check_rota_baxter<A: TargetAlgebra>(
    target: &A,
    p: impl Fn(&A::Value) -> A::Value,
    pairs: &[(A::Value, A::Value)],
    lambda: &Rational,
) -> (AxiomReport, usize) {
    let mut checked = 0;
    for (a, b) in pairs {
        if !target.independent(a, b) {
            continue;
        }
        checked += 1;
        let (pa, pb) = (p(a), p(b));
        let lhs = target.mul(&pa, &pb);
        let mut rhs = target.add(&p(&target.mul(&pa, b)), &p(&target.mul(a, &pb)));
        if !lambda.is_zero() {
            rhs = target.add(&rhs, &target.scale(lambda, &p(&target.mul(a, b))));
        }
        if !target.equal(&lhs, &rhs) {
            return (AxiomReport::violation("Rota-Baxter relation", format!("{a:?}, {b:?}")), checked);
        }
    }
    (AxiomReport::Pass, checked)
}
