//! Truncated meromorphic germs with linear poles at the origin.

mod decompose;
mod eval;
mod form;
mod germ;
mod poly;
mod series;

pub use decompose::{are_independent_germs, Decomposition};
pub use eval::format_polynomial;
pub use form::LinearForm;
pub use germ::{Denominator, MeromorphicGerm, EXACT};
pub use poly::{mono_degree, Monomial, Polynomial};
pub use series::{
    exp_jet, geometric_germ, geometric_germ_rational, inverse_form_germ, laurent_coeffs, series_divide,
};

#[cfg(test)]
mod tests;
pub(crate) use poly::to_f64;
