//! Locality structures: relations and polar sets, connected locality
//! coalgebras, characters with convolution, Birkhoff factorisation and the
//! antipode, plus sample-based axiom checkers.

mod axioms;
mod birkhoff;
mod character;
mod formal;
mod hopf;
mod structure;

pub use axioms::{check_locality_axioms, check_locality_homomorphism, check_rota_baxter, polar_set, AxiomReport};
pub use birkhoff::{Birkhoff, BirkhoffPart, BirkhoffViaProjection, ProjectionPart};
pub use character::{
    evaluate_linear, Character, Convolution, ConvolutionInverse, CounitCharacter, FnCharacter,
};
pub use formal::FormalSum;
pub use hopf::{
    antipode, check_antipode, check_bialgebra_compatibility, check_coalgebra, check_coassociativity,
    check_counit, check_grading_and_locality, check_nilpotency, iterated_reduced_coproduct, product_linear,
};
pub use structure::{CoproductTerm, LocalityBialgebra, LocalityCoalgebra, TargetAlgebra};
