//! Tropicalization of Puiseux-coefficient polynomials, (local, positive)
//! Dressian membership, valuated flags, and Lorentzian lifts of valuated
//! matroids. Everything is computed in min-plus internally; max-plus inputs
//! are negated on the way in and witnesses are reported in the input's
//! convention.

mod dressian;
mod lift;
mod puiseux;
mod weights;

pub use dressian::{is_in_dressian, is_in_positive_dressian, is_valuated_flag};
pub use lift::{
    flag_lorentzian_lift, lift_to_lorentzian, lorentzian_schedule, specialize, tropicalize, LorentzianSchedule,
    PuiseuxMatrix, PuiseuxPoly, ScheduleStep, Tropicalization, SCHEDULE_STEPS,
};
pub use puiseux::Puiseux;
pub use weights::{FlagChain, WeightVector};

use crate::checks::CheckError;
use crate::convention::Convention;
use crate::kernel::Rational;
use crate::matroid::MatroidError;
use crate::poly::PolyError;
use crate::subset::BitSet;
use crate::verdict::Witness;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropicalError {
    #[error("a zero coefficient is stored")]
    ZeroCoefficientStored,
    #[error("the zero polynomial has no tropicalization")]
    ZeroPolynomial,
    #[error("weight vector has no finite entries")]
    EmptyWeights,
    #[error("set {set} has the wrong cardinality")]
    MixedCardinality { set: BitSet },
    #[error("set {set} is listed twice")]
    DuplicateSet { set: BitSet },
    #[error("the only infinite value allowed in {convention} is {}", convention.infinity())]
    WrongInfinity { convention: Convention },
    #[error("weights are not supported on the bases of the given matroid")]
    SupportMismatch,
    #[error("the matroid is not a positroid in the given order")]
    NotAPositroid,
    #[error("weights violate a three-term tropical Plücker relation: {0:?}")]
    NotValuated(Box<Witness>),
    #[error("a flag needs at least 2 constituents, got {0}")]
    ChainTooShort(usize),
    #[error("inconsistent flag: {0}")]
    ChainMismatch(String),
    #[error("constituent {index} of the flag is not a valuated matroid")]
    ConstituentNotValuated { index: usize },
    #[error("flag violates an incidence relation: {0:?}")]
    NotValuatedFlag(Box<Witness>),
    #[error("t0 must be positive")]
    NonpositiveT0,
    #[error("{t0}^({exponent}) is irrational")]
    IrrationalPower { exponent: Rational, t0: Rational },
    #[error("matrix is empty or ragged")]
    EmptyMatrix,
    #[error("{rows} x {cols} matrix has more rows than columns")]
    TooManyRows { rows: usize, cols: usize },
    #[error("every maximal minor vanishes")]
    RankDeficient,
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
