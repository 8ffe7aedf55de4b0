//! Batched evaluation of several polynomials at sample points.
//!
//! When the inputs are homogeneous with rational coefficients, every
//! polynomial is scaled to integer coefficients and evaluated at the integer
//! numerators of the point in `i128`. Homogeneity makes each value a fixed
//! positive multiple of the true value, which is all a sign test between
//! products of equal total degree needs. Overflow, or inhomogeneous input,
//! falls back to exact rational evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::sampler::ScaledPoint;
use crate::kernel::Rational;
use crate::poly::MultiPoly;

struct IntPoly {
    terms: Vec<(i128, Vec<(usize, u32)>)>,
}

impl IntPoly {
    fn from_poly(p: &MultiPoly, scale: &BigInt) -> Option<IntPoly> {
        let terms = p
            .terms()
            .map(|(e, c)| {
                let v = (c.as_big() * scale).to_integer().to_i128()?;
                let vars = e.iter().enumerate().filter(|(_, &a)| a > 0).map(|(v, &a)| (v, a)).collect();
                Some((v, vars))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntPoly { terms })
    }

    fn eval(&self, x: &[i128]) -> Option<i128> {
        let mut total: i128 = 0;
        for (c, vars) in &self.terms {
            let mut term = *c;
            for &(v, a) in vars {
                let p = if a == 1 { x[v] } else { x[v].checked_pow(a)? };
                term = term.checked_mul(p)?;
            }
            total = total.checked_add(term)?;
        }
        Some(total)
    }
}

/// Values of every polynomial at one point.
pub(crate) enum Values {
    /// Positive multiples of the true values (common factor per degree).
    Scaled(Vec<i128>),
    Exact(Vec<Rational>),
}

pub(crate) struct Evaluator {
    polys: Vec<MultiPoly>,
    ints: Option<Vec<IntPoly>>,
}

impl Evaluator {
    /// `homogeneous` must hold for every polynomial for the scaled path to
    /// be sign-correct; otherwise only exact evaluation is used.
    pub fn new(polys: Vec<MultiPoly>, homogeneous: bool) -> Evaluator {
        let ints = if homogeneous {
            let scale = polys
                .iter()
                .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()))
                .fold(BigInt::one(), |l, d| l.lcm(&d));
            polys.iter().map(|p| IntPoly::from_poly(p, &scale)).collect::<Option<Vec<_>>>()
        } else {
            None
        };
        Evaluator { polys, ints }
    }

    pub fn poly(&self, k: usize) -> &MultiPoly {
        &self.polys[k]
    }

    pub fn eval(&self, point: &ScaledPoint) -> Values {
        if let Some(ints) = &self.ints {
            if let Some(v) = ints.iter().map(|p| p.eval(&point.numer)).collect::<Option<Vec<_>>>() {
                return Values::Scaled(v);
            }
        }
        self.eval_exact(&point.to_rationals())
    }

    pub fn eval_exact(&self, x: &[Rational]) -> Values {
        Values::Exact(self.polys.iter().map(|p| p.evaluate(x).expect("point has the right length")).collect())
    }
}
