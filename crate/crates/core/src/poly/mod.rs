//! Sparse multivariate polynomials.
//!
//! [`Poly`] is generic over its coefficient ring so the same term-map code
//! carries rational polynomials ([`MultiPoly`]) and polynomials with finite
//! Puiseux-sum coefficients. The calculus needed by the checkers (Hessians,
//! line restrictions, Rayleigh differences) lives on the rational instance.

mod calculus;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::kernel::{Rational, Ring};

pub use calculus::{generating_function_fj, Predicates};

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

/// Set of exponent vectors with nonzero coefficient.
pub type Support = BTreeSet<Exponent>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable index {index} out of range for {n} variables")]
    BadIndex { index: usize, n: usize },
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty exponent set")]
    EmptyJ,
    #[error("Rayleigh difference needs two distinct variables")]
    SameVariable,
}

/// Sparse polynomial in `n` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    n: usize,
    terms: BTreeMap<Exponent, C>,
}

pub type MultiPoly = Poly<Rational>;

impl<C: Ring> Poly<C> {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Poly::monomial(vec![0; n], c)
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let n = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Poly { n, terms }
    }

    /// `x_i` (0-based).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Poly::monomial(e, C::one())
    }

    /// Builds a polynomial, summing repeated exponents.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut p = Poly::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(PolyError::DimensionMismatch { expected: n, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&C> {
        self.terms.get(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Support {
        self.terms.keys().cloned().collect()
    }

    /// Highest total degree (`None` for zero).
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| degree_of(e)).max()
    }

    /// Common degree of every term, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|e| degree_of(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&a| a <= 1))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(factor));
        }
        out
    }

    /// Naive sparse convolution.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Poly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// `∂f/∂x_i` (0-based index).
    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.n {
            return Err(PolyError::BadIndex { index: i, n: self.n });
        }
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c.scale_int(e[i] as i64));
        }
        Ok(out)
    }

    /// `∂^α f`.
    pub fn derivative(&self, alpha: &[u32]) -> Result<Self, PolyError> {
        if alpha.len() != self.n {
            return Err(PolyError::DimensionMismatch { expected: self.n, got: alpha.len() });
        }
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            if e.iter().zip(alpha).any(|(x, a)| x < a) {
                continue;
            }
            let factor: i64 =
                e.iter().zip(alpha).map(|(&x, &a)| ((x - a + 1)..=x).map(i64::from).product::<i64>()).product();
            let d: Exponent = e.iter().zip(alpha).map(|(x, a)| x - a).collect();
            out.add_term(d, c.scale_int(factor));
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring, E>(&self, mut f: impl FnMut(&C) -> Result<D, E>) -> Result<Poly<D>, E> {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }
}

pub(crate) fn degree_of(e: &[u32]) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

impl<C: Ring + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest degree first, then lexicographically largest exponent.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| degree_of(b.0).cmp(&degree_of(a.0)).then(b.0.cmp(a.0)));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono = monomial_string(e);
            let coeff = c.to_string();
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) if coeff.contains(['+', ' ']) => write!(f, "({coeff})*{mono}")?,
                (false, _) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.n)
    }
}

fn monomial_string(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
        .collect::<Vec<_>>()
        .join("*")
}
