use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("invalid inner product form: {0}")]
    BadGram(String),

    #[error("lattice error: {0}")]
    Lattice(String),

    #[error("non-simplicial input; triangulate first")]
    NonSimplicial,

    #[error("product leaves the simplicial class")]
    ProductNotSimplicial,

    #[error("not strongly convex")]
    NotStronglyConvex,

    #[error("invalid cone: {0}")]
    BadCone(String),

    #[error("{0} is not a face of the cone")]
    NotAFace(String),

    #[error("invalid germ: {0}")]
    BadGerm(String),

    #[error("pole hit: linear form {form} vanishes at the evaluation point")]
    PoleHit { form: String },

    #[error("point is not in the dual open cone: <{generator}, z> = {value} is not negative")]
    OutsideDualCone { generator: String, value: f64 },

    #[error("locality violation: {0}")]
    Locality(String),

    #[error("projection shortcut requires locality ideal")]
    NotAnIdeal,

    #[error("{0}")]
    Input(String),
}
