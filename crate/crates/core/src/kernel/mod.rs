//! Exact scalar, matrix and univariate-polynomial arithmetic.

mod matrix;
mod rational;
mod ring;
mod unipoly;

pub use matrix::{vandermonde_matrix, EigenSignature, PlueckerVector, RationalMatrix};
pub use rational::{q, ParseRationalError, Rational};
pub use ring::{cofactor_det, Ring};
pub use unipoly::{RootCount, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("matrix has no entries")]
    EmptyMatrix,
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has rank {rank} < {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("{rows} x {cols} matrix has more rows than columns")]
    TooManyRows { rows: usize, cols: usize },
    #[error("the zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("bad parameters: {0}")]
    BadParams(String),
}
