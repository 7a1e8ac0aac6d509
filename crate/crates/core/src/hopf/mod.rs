//! The locality Hopf algebra of lattice cones and its characters: the
//! exponential sum `S`, the exponential integral `I` and `μ = π₊ S`, related
//! by the Euler–Maclaurin formula `S = μ ⋆ I`.

mod characters;
mod coalgebra;
mod euler;
mod target;

pub use characters::{exp_integral, exp_integral_with, exp_sum, exp_sum_with, renormalized_mu};
pub use coalgebra::{cone_antipode, cone_coproduct, cone_counit, reduced_coproduct, ConeBialgebra};
pub use euler::{
    birkhoff_of_sum, euler_maclaurin_verify, integral_character, mu_character, sum_character, ConeCharacter,
    EulerMaclaurinReport,
};
pub use target::GermAlgebra;
