use std::collections::BTreeMap;
use std::fmt;

use super::TropicalError;
use crate::kernel::{Rational, Ring};

/// Finite sum `Σ c_e t^e` with rational exponents; zero coefficients are
/// never stored and terms are sorted by exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Puiseux {
    terms: Vec<(Rational, Rational)>,
}

impl Puiseux {
    /// Sums repeated exponents and drops zero coefficients.
    pub fn new(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut acc: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(Rational::zero);
            *slot = &*slot + &c;
        }
        Puiseux { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `t^e`.
    pub fn t_pow(e: Rational) -> Self {
        Puiseux { terms: vec![(e, Rational::one())] }
    }

    pub fn constant(c: Rational) -> Self {
        Puiseux::new([(Rational::zero(), c)])
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    /// Least exponent; `None` for zero.
    pub fn ord(&self) -> Option<&Rational> {
        self.terms.first().map(|(e, _)| e)
    }

    /// Coefficient of `t^ord`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Value at `t = t0 > 0`; fails when some `t0^e` is irrational.
    pub fn evaluate(&self, t0: &Rational) -> Result<Rational, TropicalError> {
        if !t0.is_positive() {
            return Err(TropicalError::NonpositiveT0);
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let p = t0
                .rational_power(e)
                .ok_or_else(|| TropicalError::IrrationalPower { exponent: e.clone(), t0: t0.clone() })?;
            total = total + c * &p;
        }
        Ok(total)
    }
}

impl Ring for Puiseux {
    fn zero() -> Self {
        Puiseux::default()
    }
    fn one() -> Self {
        Puiseux::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        Puiseux::new(self.terms.iter().chain(&other.terms).cloned())
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Puiseux::new(self.terms.iter().flat_map(|(e1, c1)| other.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))))
    }
    fn neg(&self) -> Self {
        Puiseux { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn from_int(value: i64) -> Self {
        Puiseux::constant(Rational::from(value))
    }
}

impl fmt::Display for Puiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let power = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "t".to_string()
            } else if e.is_integer() && e.is_positive() {
                format!("t^{e}")
            } else {
                format!("t^({e})")
            };
            match (power.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&power)?,
                (false, false) => write!(f, "{c}*{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Puiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Puiseux({self})")
    }
}
