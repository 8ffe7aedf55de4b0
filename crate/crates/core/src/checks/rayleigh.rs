use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;

use super::eval::{Evaluator, Values};
use super::sampler::{Sampler, ScaledPoint};
use super::CheckError;
use crate::kernel::Rational;
use crate::poly::{Exponent, MultiPoly};
use crate::verdict::{Certificate, Verdict, Witness};

/// Deterministic fallback grid for signed witness search.
pub const GRID: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];

/// The grid is only walked when it has at most this many points.
pub const GRID_LIMIT: usize = 1_000_000;

/// One Rayleigh difference `c·A_i·A_j − B·C`, as indices into the
/// derivative table.
struct Triple {
    i: usize,
    j: usize,
    alpha: Exponent,
    base: usize,
    di: usize,
    dj: usize,
    dij: usize,
}

struct RayleighSystem {
    eval: Evaluator,
    triples: Vec<Triple>,
    c: Rational,
    c_num: Option<i128>,
    c_den: Option<i128>,
}

enum Sign {
    Negative,
    NonNegative,
    Unknown,
}

impl RayleighSystem {
    /// `keep_trivial` retains pairs whose mixed derivative vanishes; they
    /// are nonnegative on the orthant but not on all of `R^n`.
    fn new(f: &MultiPoly, c: &Rational, alphas: &BTreeSet<Exponent>, keep_trivial: bool) -> Result<Self, CheckError> {
        let n = f.nvars();
        let mut index: BTreeMap<Exponent, usize> = BTreeMap::new();
        let mut polys: Vec<MultiPoly> = Vec::new();
        fn slot(
            f: &MultiPoly,
            e: Exponent,
            index: &mut BTreeMap<Exponent, usize>,
            polys: &mut Vec<MultiPoly>,
        ) -> Result<usize, CheckError> {
            if let Some(&k) = index.get(&e) {
                return Ok(k);
            }
            polys.push(f.derivative(&e)?);
            index.insert(e, polys.len() - 1);
            Ok(polys.len() - 1)
        }
        let mut triples = Vec::new();
        for alpha in alphas {
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut eij = alpha.clone();
                    eij[i] += 1;
                    eij[j] += 1;
                    let dij = slot(f, eij, &mut index, &mut polys)?;
                    if !keep_trivial && polys[dij].is_zero() {
                        continue;
                    }
                    let mut ei = alpha.clone();
                    ei[i] += 1;
                    let mut ej = alpha.clone();
                    ej[j] += 1;
                    let base = slot(f, alpha.clone(), &mut index, &mut polys)?;
                    let di = slot(f, ei, &mut index, &mut polys)?;
                    let dj = slot(f, ej, &mut index, &mut polys)?;
                    triples.push(Triple { i, j, alpha: alpha.clone(), base, di, dj, dij });
                }
            }
        }
        let homogeneous = f.homogeneous_degree().is_some();
        Ok(RayleighSystem {
            eval: Evaluator::new(polys, homogeneous),
            triples,
            c: c.clone(),
            c_num: c.numer().to_i128(),
            c_den: c.denom().to_i128(),
        })
    }

    fn delta_poly(&self, t: &Triple) -> MultiPoly {
        let p = |k: usize| self.eval.poly(k);
        p(t.di).mul(p(t.dj)).scale(&self.c).sub(&p(t.base).mul(p(t.dij)))
    }

    fn scaled_sign(&self, v: &[i128], t: &Triple) -> Sign {
        let (Some(cn), Some(cd)) = (self.c_num, self.c_den) else {
            return Sign::Unknown;
        };
        let lhs = cn.checked_mul(v[t.di]).and_then(|x| x.checked_mul(v[t.dj]));
        let rhs = cd.checked_mul(v[t.base]).and_then(|x| x.checked_mul(v[t.dij]));
        match (lhs, rhs) {
            (Some(l), Some(r)) if l < r => Sign::Negative,
            (Some(_), Some(_)) => Sign::NonNegative,
            _ => Sign::Unknown,
        }
    }

    fn exact_delta(&self, v: &[Rational], t: &Triple) -> Rational {
        &self.c * &v[t.di] * &v[t.dj] - &v[t.base] * &v[t.dij]
    }

    /// The first triple (in construction order) negative at `point`.
    fn violation(&self, point: &ScaledPoint) -> Option<Witness> {
        let x = point.to_rationals();
        let mut exact: Option<Vec<Rational>> = None;
        let scaled = match self.eval.eval(point) {
            Values::Scaled(v) => Some(v),
            Values::Exact(v) => {
                exact = Some(v);
                None
            }
        };
        for t in &self.triples {
            let negative = match scaled.as_ref().map(|v| self.scaled_sign(v, t)) {
                Some(Sign::Negative) => true,
                Some(Sign::NonNegative) => false,
                Some(Sign::Unknown) | None => {
                    let v = exact.get_or_insert_with(|| match self.eval.eval_exact(&x) {
                        Values::Exact(v) => v,
                        Values::Scaled(_) => unreachable!(),
                    });
                    self.exact_delta(v, t).is_negative()
                }
            };
            if negative {
                let v = match exact.take() {
                    Some(v) => v,
                    None => match self.eval.eval_exact(&x) {
                        Values::Exact(v) => v,
                        Values::Scaled(_) => unreachable!(),
                    },
                };
                let delta = self.exact_delta(&v, t);
                debug_assert!(delta.is_negative());
                return Some(Witness::RayleighPoint {
                    i: t.i,
                    j: t.j,
                    alpha: t.alpha.clone(),
                    c: self.c.clone(),
                    point: x,
                    delta,
                });
            }
        }
        None
    }
}

fn check_input(f: &MultiPoly) -> Result<(), CheckError> {
    if f.is_zero() {
        return Err(CheckError::ZeroPolynomial);
    }
    if !f.has_nonnegative_coeffs() {
        return Err(CheckError::NegativeCoefficientInput);
    }
    Ok(())
}

/// Every `α` for which some `∂^{α+e_i+e_j} f` can be nonzero.
fn rayleigh_orders(f: &MultiPoly) -> BTreeSet<Exponent> {
    let n = f.nvars();
    if f.is_multiaffine() {
        return [vec![0; n]].into_iter().collect();
    }
    let mut out = BTreeSet::new();
    for (e, _) in f.terms() {
        let total: u32 = e.iter().sum();
        if total < 2 {
            continue;
        }
        let mut cur = vec![0u32; n];
        loop {
            if cur.iter().sum::<u32>() + 2 <= total {
                out.insert(cur.clone());
            }
            // Odometer over the box below `e`.
            let mut k = 0;
            while k < n && cur[k] == e[k] {
                cur[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            cur[k] += 1;
        }
    }
    out
}

/// c-Rayleigh test on the nonnegative orthant.
///
/// Certified when every Rayleigh difference has nonnegative coefficients.
/// Otherwise the all-ones point is tested first, then `sampler.count` points
/// of the sampler's box (which should lie in the orthant), each against
/// every `(i, j, α)`.
pub fn c_rayleigh_check(f: &MultiPoly, c: &Rational, sampler: &Sampler) -> Result<Verdict, CheckError> {
    check_input(f)?;
    if !c.is_positive() {
        return Err(CheckError::NonpositiveC);
    }
    sampler.validate()?;
    let system = RayleighSystem::new(f, c, &rayleigh_orders(f), false)?;
    let relations = system.triples.len() as u64;
    if system.triples.iter().all(|t| system.delta_poly(t).has_nonnegative_coeffs()) {
        return Ok(Verdict::certified(Certificate::CoefficientwiseNonnegative).with_relations(relations));
    }
    let n = f.nvars();
    let anchor = ScaledPoint::constant(n, 1);
    let mut samples = 0u64;
    for point in std::iter::once(anchor).chain(sampler.points(n)) {
        samples += 1;
        if let Some(w) = system.violation(&point) {
            return Ok(Verdict::fail(w).with_samples(samples).with_relations(relations));
        }
    }
    Ok(Verdict::sampled().with_samples(samples).with_relations(relations))
}

/// Strong Rayleigh test (`c = 1`, all real points) for multiaffine `f`.
///
/// Certified when every difference is a nonnegative combination of
/// even-power monomials. Otherwise `sampler.count` points of the sampler's
/// box are tried, then the grid `GRID^n` when it has at most
/// [`GRID_LIMIT`] points.
pub fn strongly_rayleigh_check(f: &MultiPoly, sampler: &Sampler) -> Result<Verdict, CheckError> {
    check_input(f)?;
    if !f.is_multiaffine() {
        return Err(CheckError::NotMultiaffine);
    }
    sampler.validate()?;
    let n = f.nvars();
    let system = RayleighSystem::new(f, &Rational::one(), &rayleigh_orders(f), true)?;
    let relations = system.triples.len() as u64;
    let even_squares = system.triples.iter().all(|t| {
        let d = system.delta_poly(t);
        d.has_nonnegative_coeffs() && d.terms().all(|(e, _)| e.iter().all(|a| a % 2 == 0))
    });
    if even_squares {
        return Ok(Verdict::certified(Certificate::EvenSquares).with_relations(relations));
    }
    let mut samples = 0u64;
    for point in sampler.points(n) {
        samples += 1;
        if let Some(w) = system.violation(&point) {
            return Ok(Verdict::fail(w).with_samples(samples).with_relations(relations));
        }
    }
    let grid_size = 7usize.checked_pow(n as u32).filter(|&g| g <= GRID_LIMIT);
    if grid_size.is_some() {
        let values: Vec<i128> = GRID.iter().map(|&(p, q)| (p * 2 / q) as i128).collect();
        let mut digits = vec![0usize; n];
        loop {
            samples += 1;
            let point = ScaledPoint { numer: digits.iter().map(|&d| values[d]).collect(), denom: 2 };
            if let Some(w) = system.violation(&point) {
                return Ok(Verdict::fail(w).with_samples(samples).with_relations(relations));
            }
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(Verdict::sampled().with_samples(samples).with_relations(relations));
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < values.len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }
    Ok(Verdict::sampled().with_samples(samples).with_relations(relations))
}
