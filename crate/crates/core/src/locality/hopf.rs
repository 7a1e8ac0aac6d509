use num_traits::One;

use super::axioms::AxiomReport;
use super::structure::{LocalityBialgebra, LocalityCoalgebra};
use super::FormalSum;
use crate::error::Result;
use crate::linalg::Rational;

type Tensor2<B> = FormalSum<(B, B)>;

fn coproduct_sum<C: LocalityCoalgebra>(c: &C, b: &C::Basis) -> Tensor2<C::Basis> {
    c.coproduct(b).into_iter().map(|(x, l, r)| (x, (l, r))).collect()
}

/// `Δ̃^{(k)}(b)` as a combination of `(k+1)`-tuples, expanding the rightmost
/// factor at each step. `k = 0` gives `b` itself.
pub fn iterated_reduced_coproduct<C: LocalityCoalgebra>(
    c: &C,
    b: &C::Basis,
    k: usize,
) -> FormalSum<Vec<C::Basis>> {
    let mut level = FormalSum::basis(vec![b.clone()]);
    for _ in 0..k {
        let mut next = FormalSum::zero();
        for (tuple, coef) in level.iter() {
            let (last, init) = tuple.split_last().expect("nonempty tuple");
            for (d, l, r) in c.reduced_coproduct(last) {
                let mut t = init.to_vec();
                t.push(l);
                t.push(r);
                next.add_term(coef * &d, t);
            }
        }
        level = next;
        if level.is_zero() {
            break;
        }
    }
    level
}

fn multiply_out<H: LocalityBialgebra>(h: &H, tuple: &[H::Basis]) -> Result<FormalSum<H::Basis>> {
    let mut acc = FormalSum::basis(tuple[0].clone());
    for x in &tuple[1..] {
        let mut next = FormalSum::zero();
        for (a, c) in acc.iter() {
            next.add_assign(&h.product(a, x)?.scale(c));
        }
        acc = next;
    }
    Ok(acc)
}

/// Product of two combinations, bilinearly over basis pairs.
pub fn product_linear<H: LocalityBialgebra>(
    h: &H,
    a: &FormalSum<H::Basis>,
    b: &FormalSum<H::Basis>,
) -> Result<FormalSum<H::Basis>> {
    let mut out = FormalSum::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_assign(&h.product(x, y)?.scale(&(c * d)));
        }
    }
    Ok(out)
}

/// The antipode by the von Neumann series
/// `S(b) = Σ_k (-1)^k m^{(k-1)} Δ̃^{(k-1)}(b)` for `b ≠ J`; the series stops
/// once the iterated reduced coproduct vanishes.
pub fn antipode<H: LocalityBialgebra>(h: &H, b: &H::Basis) -> Result<FormalSum<H::Basis>> {
    if *b == h.unit() {
        return Ok(FormalSum::basis(b.clone()));
    }
    let mut total = FormalSum::zero();
    let mut sign = -Rational::one();
    for k in 0..=h.degree(b) {
        let level = iterated_reduced_coproduct(h, b, k);
        if level.is_zero() {
            break;
        }
        for (tuple, c) in level.iter() {
            total.add_assign(&multiply_out(h, tuple)?.scale(&(c * &sign)));
        }
        sign = -sign;
    }
    Ok(total)
}

pub fn check_coassociativity<C: LocalityCoalgebra>(c: &C, b: &C::Basis) -> AxiomReport {
    let mut left: FormalSum<(C::Basis, C::Basis, C::Basis)> = FormalSum::zero();
    let mut right = FormalSum::zero();
    for (x, l, r) in c.coproduct(b) {
        for (y, ll, lr) in c.coproduct(&l) {
            left.add_term(&x * &y, (ll, lr, r.clone()));
        }
        for (y, rl, rr) in c.coproduct(&r) {
            right.add_term(&x * &y, (l.clone(), rl, rr));
        }
    }
    if left == right {
        AxiomReport::Pass
    } else {
        AxiomReport::violation("coassociativity", format!("{b:?}"))
    }
}

pub fn check_counit<C: LocalityCoalgebra>(c: &C, b: &C::Basis) -> AxiomReport {
    let mut left = FormalSum::zero();
    let mut right = FormalSum::zero();
    for (x, l, r) in c.coproduct(b) {
        left.add_term(&x * c.counit(&l), r.clone());
        right.add_term(&x * c.counit(&r), l);
    }
    let id = FormalSum::basis(b.clone());
    if left == id && right == id {
        AxiomReport::Pass
    } else {
        AxiomReport::violation("counit", format!("{b:?}"))
    }
}

/// Degree additivity and locality of coproduct pairs.
pub fn check_grading_and_locality<C: LocalityCoalgebra>(c: &C, b: &C::Basis) -> AxiomReport {
    let j = c.unit();
    if c.degree(&j) != 0 || c.counit(&j) != Rational::one() {
        return AxiomReport::violation("connectedness", format!("{j:?}"));
    }
    if *b != j && (c.degree(b) == 0 || c.counit(b) != Rational::from_integer(0.into())) {
        return AxiomReport::violation("connectedness", format!("{b:?}"));
    }
    for (_, l, r) in c.coproduct(b) {
        if c.degree(&l) + c.degree(&r) != c.degree(b) {
            return AxiomReport::violation("grading", format!("{b:?} -> ({l:?}, {r:?})"));
        }
        if !c.is_local(&l, &r) {
            return AxiomReport::violation("coproduct locality", format!("{b:?} -> ({l:?}, {r:?})"));
        }
    }
    AxiomReport::Pass
}

/// `Δ̃^{(k)}(b) = 0` for `k = degree(b)`.
pub fn check_nilpotency<C: LocalityCoalgebra>(c: &C, b: &C::Basis) -> AxiomReport {
    if *b == c.unit() || iterated_reduced_coproduct(c, b, c.degree(b)).is_zero() {
        AxiomReport::Pass
    } else {
        AxiomReport::violation("reduced coproduct nilpotency", format!("{b:?}"))
    }
}

pub fn check_coalgebra<C: LocalityCoalgebra>(c: &C, samples: &[C::Basis]) -> AxiomReport {
    for b in samples {
        let r = check_coassociativity(c, b)
            .and_then(|| check_counit(c, b))
            .and_then(|| check_grading_and_locality(c, b))
            .and_then(|| check_nilpotency(c, b));
        if !r.is_pass() {
            return r;
        }
    }
    AxiomReport::Pass
}

/// `Δ(ab) = Δ(a) Δ(b)` for a local pair.
pub fn check_bialgebra_compatibility<H: LocalityBialgebra>(
    h: &H,
    a: &H::Basis,
    b: &H::Basis,
) -> Result<AxiomReport> {
    if !h.is_local(a, b) {
        return Ok(AxiomReport::Pass);
    }
    let mut left = FormalSum::zero();
    for (p, x) in h.product(a, b)?.iter() {
        for ((l, r), y) in coproduct_sum(h, p).iter() {
            left.add_term(x * y, (l.clone(), r.clone()));
        }
    }
    let mut right = FormalSum::zero();
    for (x, al, ar) in h.coproduct(a) {
        for (y, bl, br) in h.coproduct(b) {
            let ls = h.product(&al, &bl)?;
            let rs = h.product(&ar, &br)?;
            for (l, u) in ls.iter() {
                for (r, v) in rs.iter() {
                    right.add_term(&x * &y * u * v, (l.clone(), r.clone()));
                }
            }
        }
    }
    Ok(if left == right {
        AxiomReport::Pass
    } else {
        AxiomReport::violation("bialgebra compatibility", format!("{a:?}, {b:?}"))
    })
}

/// `m(S ⊗ Id)Δ(b) = m(Id ⊗ S)Δ(b) = ε(b) J`.
pub fn check_antipode<H: LocalityBialgebra>(h: &H, b: &H::Basis) -> Result<AxiomReport> {
    let expected = FormalSum::term(h.counit(b), h.unit());
    let mut left = FormalSum::zero();
    let mut right = FormalSum::zero();
    for (x, l, r) in h.coproduct(b) {
        let sl = antipode(h, &l)?;
        let sr = antipode(h, &r)?;
        left.add_assign(&product_linear(h, &sl, &FormalSum::basis(r.clone()))?.scale(&x));
        right.add_assign(&product_linear(h, &FormalSum::basis(l), &sr)?.scale(&x));
    }
    Ok(if left == expected && right == expected {
        AxiomReport::Pass
    } else {
        AxiomReport::violation("antipode", format!("{b:?}: {left:?} / {right:?}"))
    })
}
