//! Univariate polynomials over the rationals, with Sturm sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{KernelError, Rational};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient list.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// Outcome of a Sturm real-root count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    pub degree: usize,
    /// Distinct real roots over all of the real line.
    pub distinct_real: usize,
    /// Every complex root is real (with multiplicity).
    pub all_real: bool,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c · t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from(k)).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..len)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_default();
                    match other.coeffs.get(k) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if sd < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Positive rescaling to integer coefficients with content 1.
    ///
    /// Only a positive factor is applied, so signs at every point are kept;
    /// Sturm sequences rely on that.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::from(1u32), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs();
        UniPoly::new(ints.into_iter().map(|c| Rational::from_integer(c / &content)).collect())
    }

    /// Sign at `+∞` (0 for the zero polynomial).
    pub fn sign_at_pos_inf(&self) -> i32 {
        self.leading().map_or(0, Rational::signum)
    }

    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Sturm sequence `p, p', -rem(..), ...`, each term primitive.
    pub fn sturm_sequence(&self) -> Result<Vec<UniPoly>, KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        let mut seq = vec![self.primitive_part()];
        let d = self.derivative();
        if d.is_zero() {
            return Ok(seq);
        }
        seq.push(d.primitive_part());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().primitive_part());
        }
        Ok(seq)
    }

    /// Distinct real roots via Sturm, plus whether all roots are real.
    pub fn real_root_count(&self) -> Result<RootCount, KernelError> {
        let seq = self.sturm_sequence()?;
        let at_neg: Vec<i32> = seq.iter().map(UniPoly::sign_at_neg_inf).collect();
        let at_pos: Vec<i32> = seq.iter().map(UniPoly::sign_at_pos_inf).collect();
        let distinct_real = sign_variations(&at_neg) - sign_variations(&at_pos);
        let degree = self.degree().unwrap_or(0);
        // The last Sturm term is gcd(p, p') up to a constant.
        let gcd_degree = seq.last().and_then(UniPoly::degree).unwrap_or(0);
        let squarefree_degree = degree - gcd_degree;
        Ok(RootCount { degree, distinct_real, all_real: distinct_real == squarefree_degree })
    }

    /// Distinct real roots in the open interval `(-∞, 0)`.
    pub fn negative_root_count(&self) -> Result<usize, KernelError> {
        let stripped = self.strip_zero_roots()?;
        let seq = stripped.sturm_sequence()?;
        let at_neg: Vec<i32> = seq.iter().map(UniPoly::sign_at_neg_inf).collect();
        let at_zero: Vec<i32> = seq.iter().map(|p| p.eval(&Rational::zero()).signum()).collect();
        Ok(sign_variations(&at_neg) - sign_variations(&at_zero))
    }

    /// Distinct real roots in the open interval `(0, ∞)`.
    pub fn positive_root_count(&self) -> Result<usize, KernelError> {
        let stripped = self.strip_zero_roots()?;
        let seq = stripped.sturm_sequence()?;
        let at_zero: Vec<i32> = seq.iter().map(|p| p.eval(&Rational::zero()).signum()).collect();
        let at_pos: Vec<i32> = seq.iter().map(UniPoly::sign_at_pos_inf).collect();
        Ok(sign_variations(&at_zero) - sign_variations(&at_pos))
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn strip_zero_roots(&self) -> Result<UniPoly, KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        let m = self.zero_root_multiplicity();
        Ok(UniPoly { coeffs: self.coeffs[m..].to_vec() })
    }

    /// Sign changes in the coefficient sequence, zeros skipped.
    pub fn descartes_sign_changes(&self) -> usize {
        let signs: Vec<i32> = self.coeffs.iter().map(Rational::signum).collect();
        sign_variations(&signs)
    }

    /// `p(-t)`
    pub fn reflect(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect())
    }
}

fn sign_variations(signs: &[i32]) -> usize {
    let mut last = 0;
    let mut count = 0;
    for &s in signs.iter().filter(|&&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use proptest::prelude::*;

    fn from_roots(roots: &[i64]) -> UniPoly {
        roots.iter().fold(UniPoly::from_ints(&[1]), |acc, &r| acc.mul(&UniPoly::from_ints(&[-r, 1])))
    }

    #[test]
    fn no_real_roots() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let c = p.real_root_count().unwrap();
        assert_eq!(c.distinct_real, 0);
        assert!(!c.all_real);
    }

    #[test]
    fn two_simple_roots() {
        let c = UniPoly::from_ints(&[2, -3, 1]).real_root_count().unwrap();
        assert_eq!((c.distinct_real, c.all_real), (2, true));
    }

    #[test]
    fn double_root_counts_once() {
        let c = UniPoly::from_ints(&[1, -2, 1]).real_root_count().unwrap();
        assert_eq!((c.distinct_real, c.all_real), (1, true));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(UniPoly::zero().real_root_count(), Err(KernelError::ZeroPolynomial));
    }

    #[test]
    fn constants_have_no_roots_and_are_real_rooted() {
        let c = UniPoly::constant(q(5, 1)).real_root_count().unwrap();
        assert_eq!((c.degree, c.distinct_real, c.all_real), (0, 0, true));
    }

    #[test]
    fn mixed_multiplicity_with_complex_pair() {
        // (t-1)^2 (t^2+1)
        let p = from_roots(&[1, 1]).mul(&UniPoly::from_ints(&[1, 0, 1]));
        let c = p.real_root_count().unwrap();
        assert_eq!((c.distinct_real, c.all_real), (1, false));
    }

    #[test]
    fn signed_root_counts() {
        let p = from_roots(&[-3, -1, 0, 0, 2]);
        assert_eq!(p.negative_root_count().unwrap(), 2);
        assert_eq!(p.positive_root_count().unwrap(), 1);
        assert_eq!(p.zero_root_multiplicity(), 2);
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[3, 0, -2, 5, 1]);
        let b = UniPoly::new(vec![q(1, 2), q(-1, 1), q(2, 1)]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(qt.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[-12, -4, 1]).to_string(), "t^2 - 4*t - 12");
    }

    proptest! {
        #[test]
        fn sturm_agrees_with_known_integer_roots(
            roots in proptest::collection::vec(-6i64..=6, 1..6),
            extra_complex in any::<bool>(),
        ) {
            let mut p = from_roots(&roots);
            if extra_complex {
                p = p.mul(&UniPoly::from_ints(&[2, 2, 1]));
            }
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            let c = p.real_root_count().unwrap();
            prop_assert_eq!(c.distinct_real, distinct.len());
            prop_assert_eq!(c.all_real, !extra_complex);
            let neg = distinct.iter().filter(|&&r| r < 0).count();
            let pos = distinct.iter().filter(|&&r| r > 0).count();
            prop_assert_eq!(p.negative_root_count().unwrap(), neg);
            prop_assert_eq!(p.positive_root_count().unwrap(), pos);
        }
    }
}
