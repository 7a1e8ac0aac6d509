use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::germ::{monomial_degree, Denominator, MeromorphicGerm, EXACT};
use super::poly::{to_f64, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

fn form_value(den: &Denominator, z: &[Complex64]) -> Result<Complex64> {
    let mut acc = Complex64::one();
    for (l, p) in den.factors() {
        let v = l.polynomial();
        let x = v.eval_complex(z);
        let scale: f64 = l.coeffs().iter().map(|c| to_f64(&Rational::from_integer(c.abs()))).sum::<f64>()
            * z.iter().map(|w| w.norm()).fold(0.0, f64::max);
        if x.norm() <= 1e-13 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::PoleHit { form: l.to_string() });
        }
        acc *= x.powu(*p);
    }
    Ok(acc)
}

impl MeromorphicGerm {
    /// Evaluates the stored truncation at `z` in double precision. The
    /// discarded tail is of order `|z|^{valid_up_to + 1}`; see
    /// [`MeromorphicGerm::truncation_estimate`].
    pub fn evaluate_numeric(&self, z: &[Complex64]) -> Result<Complex64> {
        let mut total = Complex64::zero();
        for (den, p) in self.terms() {
            total += p.eval_complex(z) / form_value(den, z)?;
        }
        Ok(total)
    }

    pub fn evaluate_real(&self, z: &[f64]) -> Result<f64> {
        let zc: Vec<Complex64> = z.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Ok(self.evaluate_numeric(&zc)?.re)
    }

    /// Heuristic size of the discarded tail at `z`: the magnitudes of the two
    /// highest stored homogeneous components. Zero for exact germs.
    pub fn truncation_estimate(&self, z: &[Complex64]) -> Result<f64> {
        let v = self.valid_up_to();
        if v == EXACT {
            return Ok(0.0);
        }
        let mut est = 0.0;
        for d in [v, v - 1] {
            est += self.homogeneous_component(d).evaluate_numeric(z)?.norm();
        }
        Ok(est)
    }
}

fn write_monomial(out: &mut Vec<String>, m: &[u32]) {
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(format!("z{}", i + 1)),
            _ => out.push(format!("z{}^{}", i + 1, e)),
        }
    }
}

impl fmt::Display for MeromorphicGerm {
    /// Laurent-style listing in increasing homogeneous degree, e.g.
    /// `-z1^-1 - 1/2 - 1/12 z1 + 1/720 z1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(i64, &Denominator, &Vec<u32>, &Rational)> = Vec::new();
        for (den, p) in self.terms() {
            for (m, c) in p.terms() {
                items.push((monomial_degree(m) - den.pole_order(), den, m, c));
            }
        }
        if items.is_empty() {
            return write!(f, "0");
        }
        items.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        for (idx, (_, den, m, c)) in items.iter().enumerate() {
            let mut factors = Vec::new();
            write_monomial(&mut factors, m);
            for (l, p) in den.factors() {
                let base = match l.coordinate_index() {
                    Some(i) => format!("z{}", i + 1),
                    None => format!("({l})"),
                };
                factors.push(format!("{base}^-{p}"));
            }
            let mag = c.abs();
            let body = match (mag.is_one(), factors.is_empty()) {
                (true, false) => factors.join(" "),
                (_, true) => format_rational(&mag),
                (false, false) => format!("{} {}", format_rational(&mag), factors.join(" ")),
            };
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Pretty-prints a polynomial with the germ conventions.
pub fn format_polynomial(p: &Polynomial) -> String {
    MeromorphicGerm::from_polynomial(p.clone(), p.nvars(), EXACT).to_string()
}
