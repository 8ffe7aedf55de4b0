use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::CheckError;
use crate::convention::Convention;
use crate::kernel::Rational;
use crate::matroid::{matroid_from_bases, GroundSet, Matroid};
use crate::poly::{degree_of, Exponent};
use crate::subset::BitSet;
use crate::verdict::{Certificate, Verdict, Witness};

/// Which exchange condition an M-convex set check enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SetMode {
    /// `α − e_i + e_j ∈ J`.
    #[default]
    Exchange,
    /// Also run the symmetric variant (`β + e_i − e_j ∈ J` as well) and
    /// report whether it agrees.
    WithSymmetric,
}

/// Which exchange inequality an M-convex function check enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FunctionMode {
    /// All `α, β` in the domain and all admissible `i`.
    #[default]
    Symmetric,
    /// Only pairs with `|α − β|₁ = 4`, on an M-convex domain. The symmetric
    /// check is run as well and must agree.
    Local,
}

/// Finite values of `μ : N^n → R ∪ {±∞}`; absent points are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteFunction {
    n: usize,
    values: BTreeMap<Exponent, Rational>,
    convention: Convention,
}

impl DiscreteFunction {
    pub fn new(
        n: usize,
        values: impl IntoIterator<Item = (Exponent, Rational)>,
        convention: Convention,
    ) -> Result<Self, CheckError> {
        let values: BTreeMap<Exponent, Rational> = values.into_iter().collect();
        if values.is_empty() {
            return Err(CheckError::EmptyDomain);
        }
        if values.keys().any(|e| e.len() != n) {
            return Err(CheckError::RaggedInput);
        }
        Ok(DiscreteFunction { n, values, convention })
    }

    /// Function on subsets of `[n]`, read as 0/1 vectors.
    pub fn on_sets(
        n: usize,
        values: impl IntoIterator<Item = (BitSet, Rational)>,
        convention: Convention,
    ) -> Result<Self, CheckError> {
        DiscreteFunction::new(n, values.into_iter().map(|(s, v)| (s.indicator(n), v)), convention)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn values(&self) -> &BTreeMap<Exponent, Rational> {
        &self.values
    }

    pub fn domain(&self) -> BTreeSet<Exponent> {
        self.values.keys().cloned().collect()
    }

    /// Values in min-plus orientation (negated for `MaxPlus`).
    pub fn min_plus_values(&self) -> HashMap<Exponent, Rational> {
        self.values.iter().map(|(e, v)| (e.clone(), self.convention.to_min_plus(v))).collect()
    }
}

fn check_same_length(j: &BTreeSet<Exponent>) -> Result<usize, CheckError> {
    let n = j.first().ok_or(CheckError::EmptyInput)?.len();
    if j.iter().any(|e| e.len() != n) {
        return Err(CheckError::RaggedInput);
    }
    Ok(n)
}

/// The lexicographically first pair of different total degree.
fn degree_mismatch(j: &BTreeSet<Exponent>) -> Option<Witness> {
    let first = j.first()?;
    let d = degree_of(first);
    j.iter().find(|e| degree_of(e) != d).map(|e| Witness::DegreeMismatch { alpha: first.clone(), beta: e.clone() })
}

fn shifted(base: &[u32], minus: usize, plus: usize) -> Option<Exponent> {
    if base[minus] == 0 {
        return None;
    }
    let mut v = base.to_vec();
    v[minus] -= 1;
    v[plus] += 1;
    Some(v)
}

/// Checks the exchange axiom on `J`. The first failing `(α, β, i)` is the
/// witness.
pub fn is_mconvex_set(j: &BTreeSet<Exponent>, mode: SetMode) -> Result<Verdict, CheckError> {
    let n = check_same_length(j)?;
    let lookup: HashSet<&Exponent> = j.iter().collect();
    let mut symmetric_ok = true;
    let mut relations = 0u64;
    for alpha in j {
        for beta in j {
            if alpha == beta {
                continue;
            }
            for i in (0..n).filter(|&i| alpha[i] > beta[i]) {
                relations += 1;
                let mut plain = false;
                let mut symmetric = false;
                for jj in (0..n).filter(|&jj| alpha[jj] < beta[jj]) {
                    let a_ok = shifted(alpha, i, jj).is_some_and(|v| lookup.contains(&v));
                    if a_ok {
                        plain = true;
                        if mode == SetMode::WithSymmetric && shifted(beta, jj, i).is_some_and(|v| lookup.contains(&v)) {
                            symmetric = true;
                        }
                    }
                    if plain && (mode == SetMode::Exchange || symmetric) {
                        break;
                    }
                }
                if !plain {
                    let w = Witness::SetExchange { alpha: alpha.clone(), beta: beta.clone(), i };
                    return Ok(Verdict::fail(w).with_relations(relations));
                }
                symmetric_ok &= symmetric;
            }
        }
    }
    if let Some(w) = degree_mismatch(j) {
        return Ok(Verdict::fail(w).with_relations(relations));
    }
    let symmetric_agrees = (mode == SetMode::WithSymmetric).then_some(symmetric_ok);
    Ok(Verdict::certified(Certificate::Exchange { symmetric_agrees }).with_relations(relations))
}

/// Min-plus exchange test of `μ` (M-convexity). `MaxPlus` inputs are
/// negated first, so they are tested for M-concavity.
pub fn is_mconvex_function(mu: &DiscreteFunction, mode: FunctionMode) -> Result<Verdict, CheckError> {
    let symmetric = symmetric_exchange(mu);
    match mode {
        FunctionMode::Symmetric => Ok(symmetric),
        FunctionMode::Local => {
            let domain = is_mconvex_set(&mu.domain(), SetMode::Exchange)?;
            if domain.is_fail() {
                return Ok(domain);
            }
            let local = local_exchange(mu);
            if local.is_pass() != symmetric.is_pass() {
                return Err(CheckError::ExchangeModesDisagree);
            }
            Ok(local)
        }
    }
}

fn symmetric_exchange(mu: &DiscreteFunction) -> Verdict {
    let n = mu.n;
    let values = mu.min_plus_values();
    let dom: Vec<&Exponent> = mu.values.keys().collect();
    let mut relations = 0u64;
    for alpha in &dom {
        for beta in &dom {
            if alpha == beta {
                continue;
            }
            let lhs = &values[*alpha] + &values[*beta];
            for i in (0..n).filter(|&i| alpha[i] > beta[i]) {
                relations += 1;
                let mut best: Option<Rational> = None;
                for jj in (0..n).filter(|&jj| alpha[jj] < beta[jj]) {
                    let rhs = exchange_value(&values, alpha, beta, i, jj);
                    if let Some(r) = rhs {
                        if best.as_ref().is_none_or(|b| r < *b) {
                            best = Some(r);
                        }
                    }
                }
                if best.as_ref().is_none_or(|b| lhs < *b) {
                    let w = Witness::FunctionExchange { alpha: (*alpha).clone(), beta: (*beta).clone(), i, lhs, best };
                    return Verdict::fail(w).with_relations(relations);
                }
            }
        }
    }
    Verdict::certified(Certificate::Exchange { symmetric_agrees: None }).with_relations(relations)
}

/// `μ(α − e_i + e_j) + μ(β + e_i − e_j)`, `None` if either is infinite.
fn exchange_value(
    values: &HashMap<Exponent, Rational>,
    alpha: &[u32],
    beta: &[u32],
    i: usize,
    j: usize,
) -> Option<Rational> {
    let a = values.get(&shifted(alpha, i, j)?)?;
    let b = values.get(&shifted(beta, j, i)?)?;
    Some(a + b)
}

fn local_exchange(mu: &DiscreteFunction) -> Verdict {
    let n = mu.n;
    let values = mu.min_plus_values();
    let dom: Vec<&Exponent> = mu.values.keys().collect();
    let mut relations = 0u64;
    for alpha in &dom {
        for beta in &dom {
            let dist: u32 = alpha.iter().zip(beta.iter()).map(|(a, b)| a.abs_diff(*b)).sum();
            if dist != 4 {
                continue;
            }
            relations += 1;
            let lhs = &values[*alpha] + &values[*beta];
            let mut best: Option<Rational> = None;
            for i in (0..n).filter(|&i| alpha[i] > beta[i]) {
                for jj in (0..n).filter(|&jj| alpha[jj] < beta[jj]) {
                    if let Some(r) = exchange_value(&values, alpha, beta, i, jj) {
                        if best.as_ref().is_none_or(|b| r < *b) {
                            best = Some(r);
                        }
                    }
                }
            }
            if best.as_ref().is_none_or(|b| lhs < *b) {
                let i = (0..n).find(|&i| alpha[i] > beta[i]).unwrap_or(0);
                let w = Witness::FunctionExchange { alpha: (*alpha).clone(), beta: (*beta).clone(), i, lhs, best };
                return Verdict::fail(w).with_relations(relations);
            }
        }
    }
    Verdict::certified(Certificate::LocalExchange).with_relations(relations)
}

/// Verdict on `μ` as a valuated matroid, with its underlying matroid when
/// the domain is a basis family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuatedMatroid {
    pub verdict: Verdict,
    pub underlying: Option<Matroid>,
}

/// A 0/1-domain function passing the exchange test in its convention.
pub fn is_valuated_matroid(mu: &DiscreteFunction) -> Result<ValuatedMatroid, CheckError> {
    if mu.values.keys().any(|e| e.iter().any(|&a| a > 1)) {
        return Err(CheckError::DomainNotBinary);
    }
    let domain = is_mconvex_set(&mu.domain(), SetMode::Exchange)?;
    if domain.is_fail() {
        return Ok(ValuatedMatroid { verdict: domain, underlying: None });
    }
    let bases: Vec<BitSet> = mu
        .values
        .keys()
        .map(|e| BitSet::from_elements(e.iter().enumerate().filter(|(_, &a)| a == 1).map(|(k, _)| k)))
        .collect();
    let rank = bases[0].len();
    let underlying = matroid_from_bases(GroundSet::new(mu.n)?, rank, bases)?;
    let verdict = symmetric_exchange(mu);
    Ok(ValuatedMatroid { verdict, underlying: Some(underlying) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use crate::matroid::uniform;
    use crate::verdict::Status;

    fn set(v: &[&[u32]]) -> BTreeSet<Exponent> {
        v.iter().map(|e| e.to_vec()).collect()
    }

    fn on_pairs(values: &[(&[usize], i64)], convention: Convention) -> DiscreteFunction {
        let entries = BitSet::k_subsets(4, 2).into_iter().map(|s| {
            let v =
                values.iter().find(|(e, _)| BitSet::from_elements(e.iter().map(|x| x - 1)) == s).map_or(0, |(_, v)| *v);
            (s, Rational::from(v))
        });
        DiscreteFunction::on_sets(4, entries, convention).unwrap()
    }

    #[test]
    fn set_examples() {
        let u23 = set(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(is_mconvex_set(&u23, SetMode::WithSymmetric).unwrap().status, Status::PassCertified);
        assert!(is_mconvex_set(&set(&[&[1, 0, 0], &[0, 0, 1]]), SetMode::Exchange).unwrap().is_pass());
        let v = is_mconvex_set(&set(&[&[1, 0, 0], &[0, 0, 2]]), SetMode::Exchange).unwrap();
        assert_eq!(v.witness, Some(Witness::SetExchange { alpha: vec![0, 0, 2], beta: vec![1, 0, 0], i: 2 }));
        let empty = BTreeSet::new();
        assert_eq!(is_mconvex_set(&empty, SetMode::Exchange), Err(CheckError::EmptyInput));
    }

    #[test]
    fn symmetric_variant_agrees_on_matroids() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let j: BTreeSet<Exponent> = uniform(k, n).unwrap().bases().iter().map(|b| b.indicator(n)).collect();
            let v = is_mconvex_set(&j, SetMode::WithSymmetric).unwrap();
            assert_eq!(v.certificate, Some(Certificate::Exchange { symmetric_agrees: Some(true) }));
        }
    }

    #[test]
    fn function_examples() {
        let zero = on_pairs(&[], Convention::MaxPlus);
        assert!(is_mconvex_function(&zero, FunctionMode::Symmetric).unwrap().is_pass());
        let bad = on_pairs(&[(&[1, 2], 1), (&[3, 4], 1)], Convention::MaxPlus);
        assert!(is_mconvex_function(&bad, FunctionMode::Symmetric).unwrap().is_fail());
        assert!(is_mconvex_function(&bad, FunctionMode::Local).unwrap().is_fail());
        // The same values read as min-plus are M-convex.
        let min = on_pairs(&[(&[1, 2], 1), (&[3, 4], 1)], Convention::MinPlus);
        assert!(is_mconvex_function(&min, FunctionMode::Symmetric).unwrap().is_pass());
        let good = on_pairs(&[(&[1, 2], 1), (&[3, 4], 1), (&[1, 3], 1), (&[2, 4], 1)], Convention::MaxPlus);
        assert!(is_mconvex_function(&good, FunctionMode::Symmetric).unwrap().is_pass());
        assert_eq!(
            is_mconvex_function(&good, FunctionMode::Local).unwrap().certificate,
            Some(Certificate::LocalExchange)
        );
    }

    #[test]
    fn failure_witness_is_exact() {
        let bad = on_pairs(&[(&[1, 2], 1), (&[3, 4], 1)], Convention::MaxPlus);
        let v = is_mconvex_function(&bad, FunctionMode::Symmetric).unwrap();
        match v.witness {
            Some(Witness::FunctionExchange { lhs, best: Some(best), .. }) => {
                assert_eq!(lhs, q(-2, 1));
                assert_eq!(best, q(0, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn valuated_matroid_examples() {
        let zero = on_pairs(&[], Convention::MaxPlus);
        let r = is_valuated_matroid(&zero).unwrap();
        assert!(r.verdict.is_pass());
        assert_eq!(r.underlying, Some(uniform(2, 4).unwrap()));
        let bad = on_pairs(&[(&[1, 2], 1), (&[3, 4], 1)], Convention::MaxPlus);
        assert!(is_valuated_matroid(&bad).unwrap().verdict.is_fail());
        let path = DiscreteFunction::new(
            3,
            [(vec![1, 1, 0], Rational::zero()), (vec![0, 1, 1], Rational::zero())],
            Convention::MaxPlus,
        )
        .unwrap();
        let r = is_valuated_matroid(&path).unwrap();
        assert!(r.verdict.is_pass());
        let m = r.underlying.unwrap();
        assert_eq!(m.bases(), &[BitSet::from_elements([0, 1]), BitSet::from_elements([1, 2])]);
        let nonbinary = DiscreteFunction::new(2, [(vec![2, 0], Rational::zero())], Convention::MinPlus).unwrap();
        assert_eq!(is_valuated_matroid(&nonbinary), Err(CheckError::DomainNotBinary));
    }
}
