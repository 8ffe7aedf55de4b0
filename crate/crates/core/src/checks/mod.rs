//! Property deciders. Every checker returns a [`Verdict`](crate::Verdict):
//! certified passes never depend on sampling, sampled passes say so, and
//! failures carry an exact witness.

mod eval;
mod lines;
mod lorentzian;
mod mconvex;
mod rayleigh;
mod sampler;

pub use lines::{hyperbolicity_check, stability_falsifier, ConeMode};
pub use lorentzian::is_lorentzian;
pub use mconvex::{
    is_mconvex_function, is_mconvex_set, is_valuated_matroid, DiscreteFunction, FunctionMode, SetMode, ValuatedMatroid,
};
pub use rayleigh::{c_rayleigh_check, strongly_rayleigh_check, GRID, GRID_LIMIT};
pub use sampler::{Sampler, ScaledPoint};

use crate::kernel::KernelError;
use crate::matroid::MatroidError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("empty input set")]
    EmptyInput,
    #[error("function has an empty effective domain")]
    EmptyDomain,
    #[error("effective domain is not contained in {{0,1}}^n")]
    DomainNotBinary,
    #[error("exponent vectors have different lengths")]
    RaggedInput,
    #[error("the zero polynomial is not a valid input")]
    ZeroPolynomial,
    #[error("input polynomial has a negative coefficient")]
    NegativeCoefficientInput,
    #[error("c must be positive")]
    NonpositiveC,
    #[error("input polynomial is not multiaffine")]
    NotMultiaffine,
    #[error("input polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("direction e lies on the vanishing locus of h")]
    EOnVanishingLocus,
    #[error("bad sampler: {0}")]
    BadSampler(String),
    #[error("symmetric and local exchange checks disagree on an M-convex domain")]
    ExchangeModesDisagree,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}
