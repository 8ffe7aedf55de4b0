use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::dressian::{is_in_dressian, is_valuated_flag};
use super::puiseux::Puiseux;
use super::weights::{FlagChain, WeightVector};
use super::TropicalError;
use crate::checks::{is_lorentzian, DiscreteFunction};
use crate::convention::Convention;
use crate::kernel::{cofactor_det, Rational, Ring};
use crate::poly::{Exponent, MultiPoly, Poly};
use crate::subset::BitSet;
use crate::verdict::{Status, Verdict};

/// Polynomial with finite Puiseux-sum coefficients.
pub type PuiseuxPoly = Poly<Puiseux>;

/// `α ↦ ord(c_α)` together with the sign of every leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tropicalization {
    pub min_plus: DiscreteFunction,
    pub signs: BTreeMap<Exponent, i32>,
}

impl Tropicalization {
    /// The negated view, read in max-plus.
    pub fn max_plus(&self) -> DiscreteFunction {
        let values = self.min_plus.values().iter().map(|(e, v)| (e.clone(), -v));
        DiscreteFunction::new(self.min_plus.n(), values, Convention::MaxPlus).expect("same domain")
    }
}

pub fn tropicalize(f: &PuiseuxPoly) -> Result<Tropicalization, TropicalError> {
    if f.is_zero() {
        return Err(TropicalError::ZeroPolynomial);
    }
    let mut values = Vec::with_capacity(f.num_terms());
    let mut signs = BTreeMap::new();
    for (e, c) in f.terms() {
        let (Some(ord), Some(lead)) = (c.ord(), c.leading_coeff()) else {
            return Err(TropicalError::ZeroCoefficientStored);
        };
        values.push((e.clone(), ord.clone()));
        signs.insert(e.clone(), lead.signum());
    }
    let min_plus = DiscreteFunction::new(f.nvars(), values, Convention::MinPlus)?;
    Ok(Tropicalization { min_plus, signs })
}

/// `Σ_B t^{μ(B)} x^B` with `μ` read in min-plus, so `tropicalize` returns `μ`.
pub fn lift_to_lorentzian(mu: &WeightVector) -> Result<PuiseuxPoly, TropicalError> {
    let verdict = is_in_dressian(mu.matroid(), mu)?;
    if let Some(w) = verdict.witness {
        return Err(TropicalError::NotValuated(Box::new(w)));
    }
    let n = mu.n();
    let terms = mu.values().keys().map(|&b| {
        let e = mu.min_plus(b).expect("basis");
        (b.indicator(n), Puiseux::t_pow(e))
    });
    Ok(Poly::from_terms(n, terms)?)
}

/// Constituent-wise lift of a valuated flag.
pub fn flag_lorentzian_lift(chain: &FlagChain) -> Result<Vec<PuiseuxPoly>, TropicalError> {
    let verdict = is_valuated_flag(chain)?;
    if let Some(w) = verdict.witness {
        return Err(TropicalError::NotValuatedFlag(Box::new(w)));
    }
    chain.constituents().iter().map(lift_to_lorentzian).collect()
}

/// Rational polynomial obtained by setting `t = t0`.
pub fn specialize(f: &PuiseuxPoly, t0: &Rational) -> Result<MultiPoly, TropicalError> {
    f.try_map_coeffs(|c| c.evaluate(t0))
}

/// Least common denominator of the exponents of `t` in `f`.
fn exponent_denominator(f: &PuiseuxPoly) -> u32 {
    f.terms()
        .flat_map(|(_, c)| c.terms().iter().map(|(e, _)| e.denom().to_u32().unwrap_or(1)))
        .fold(1, |l, d| l.lcm(&d))
}

/// One step of the `t0 → 0` schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleStep {
    pub t0: Rational,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianSchedule {
    pub steps: Vec<ScheduleStep>,
    /// The last three verdicts agree.
    pub stable: bool,
}

impl LorentzianSchedule {
    pub fn final_status(&self) -> Status {
        self.steps.last().expect("nonempty schedule").verdict.status
    }
}

pub const SCHEDULE_STEPS: u32 = 10;

/// Lorentzian verdicts of `f(t0)` for `t0 = 2^{−m·q}`, `m = 1..10`, where
/// `q` clears the denominators of the exponents so every `t0^e` is rational.
pub fn lorentzian_schedule(f: &PuiseuxPoly) -> Result<LorentzianSchedule, TropicalError> {
    let q = exponent_denominator(f);
    let mut steps = Vec::new();
    for m in 1..=SCHEDULE_STEPS {
        let t0 = Rational::new(1, 2).pow((m * q) as i32);
        let verdict = is_lorentzian(&specialize(f, &t0)?)?;
        steps.push(ScheduleStep { t0, verdict });
    }
    let tail = &steps[steps.len() - 3..];
    let stable = tail.iter().all(|s| s.verdict.status == tail[0].verdict.status);
    Ok(LorentzianSchedule { steps, stable })
}

/// Full-rank `k × n` matrix over finite Puiseux sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxMatrix {
    rows: Vec<Vec<Puiseux>>,
}

impl PuiseuxMatrix {
    pub fn new(rows: Vec<Vec<Puiseux>>) -> Result<Self, TropicalError> {
        let n = rows.first().map(Vec::len).ok_or(TropicalError::EmptyMatrix)?;
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(TropicalError::EmptyMatrix);
        }
        if rows.len() > n {
            return Err(TropicalError::TooManyRows { rows: rows.len(), cols: n });
        }
        Ok(PuiseuxMatrix { rows })
    }

    /// `k × n` Vandermonde matrix with row `r` equal to `(t^{r·c_j})_j`.
    pub fn vandermonde(k: usize, exponents: &[Rational]) -> Result<Self, TropicalError> {
        let rows = (0..k).map(|r| exponents.iter().map(|c| Puiseux::t_pow(c * &Rational::from(r))).collect()).collect();
        PuiseuxMatrix::new(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Nonzero maximal minors, by cofactor expansion.
    pub fn maximal_minors(&self) -> Result<BTreeMap<BitSet, Puiseux>, TropicalError> {
        let minors: BTreeMap<BitSet, Puiseux> = BitSet::k_subsets(self.cols(), self.rows())
            .into_iter()
            .filter_map(|s| {
                let cols = s.to_vec();
                let sub: Vec<Vec<Puiseux>> =
                    self.rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
                let d = cofactor_det(&sub);
                (!d.is_zero()).then_some((s, d))
            })
            .collect();
        if minors.is_empty() {
            return Err(TropicalError::RankDeficient);
        }
        Ok(minors)
    }

    /// Min-plus weights `B ↦ ord(p_B)` on the column matroid.
    pub fn weights(&self) -> Result<WeightVector, TropicalError> {
        let minors = self.maximal_minors()?;
        let entries = minors.iter().map(|(s, p)| (*s, p.ord().expect("nonzero").clone()));
        WeightVector::from_finite(self.cols(), entries, Convention::MinPlus)
    }

    /// `Σ_B p_B x^B`.
    pub fn representing_polynomial(&self) -> Result<PuiseuxPoly, TropicalError> {
        let n = self.cols();
        let minors = self.maximal_minors()?;
        Ok(Poly::from_terms(n, minors.into_iter().map(|(s, p)| (s.indicator(n), p)))?)
    }

    /// Every nonzero minor has a positive leading coefficient, i.e. the
    /// matrix is totally nonnegative for all small `t > 0`.
    pub fn is_eventually_nonnegative(&self) -> Result<bool, TropicalError> {
        Ok(self.maximal_minors()?.values().all(|p| p.leading_coeff().is_some_and(Rational::is_positive)))
    }
}
