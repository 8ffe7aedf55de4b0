//! Exact decision procedures relating positroids, Lorentzian, stable and
//! Rayleigh polynomials, and (positive, local, flag) Dressians.
//!
//! Every certified verdict is computed in rational arithmetic; sampled
//! verdicts are labelled as such and every failure carries a witness that can
//! be re-evaluated exactly.

pub mod checks;
pub mod convention;
pub mod kernel;
pub mod matroid;
pub mod poly;
pub mod positroid;
pub mod registry;
pub mod subset;
pub mod tropical;
pub mod verdict;

pub use convention::{Convention, TropicalValue};
pub use kernel::{Rational, RationalMatrix, UniPoly};
pub use matroid::{GroundSet, Matroid};
pub use poly::MultiPoly;
pub use subset::BitSet;
pub use verdict::{Certificate, Status, Verdict, Witness};
