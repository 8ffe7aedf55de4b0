use super::{Matroid, MatroidError};
use crate::kernel::Rational;
use crate::subset::BitSet;
use crate::verdict::{Certificate, Verdict, Witness};

/// Joint statistics of two elements under the uniform basis measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStats {
    pub pr_both: Rational,
    pub pr_neither: Rational,
    pub pr_i_only: Rational,
    pub pr_j_only: Rational,
    pub pr_i: Rational,
    pub pr_j: Rational,
}

impl PairStats {
    fn from_counts(total: usize, both: usize, i: usize, j: usize) -> PairStats {
        let pr = |c: usize| Rational::new(c as i64, total as i64);
        PairStats {
            pr_both: pr(both),
            pr_neither: pr(total + both - i - j),
            pr_i_only: pr(i - both),
            pr_j_only: pr(j - both),
            pr_i: pr(i),
            pr_j: pr(j),
        }
    }

    /// `(Pr(ij)·Pr(¬i¬j), Pr(i¬j)·Pr(¬ij))`.
    pub fn rayleigh_products(&self) -> (Rational, Rational) {
        (&self.pr_both * &self.pr_neither, &self.pr_i_only * &self.pr_j_only)
    }

    /// `Pr(ij) − Pr(i)Pr(j)`; equals the difference of the Rayleigh products.
    pub fn gap(&self) -> Rational {
        &self.pr_both - &self.pr_i * &self.pr_j
    }
}

pub fn pair_stats(m: &Matroid, i: usize, j: usize) -> Result<PairStats, MatroidError> {
    if i == j {
        return Err(MatroidError::SameElement);
    }
    for e in [i, j] {
        if e >= m.n() {
            return Err(MatroidError::OutOfRange { element: e, n: m.n() });
        }
    }
    let c = Counts::new(m.bases(), m.n());
    Ok(PairStats::from_counts(c.total, c.pair(i, j), c.single[i], c.single[j]))
}

/// Element and pair counts over a basis list.
struct Counts {
    total: usize,
    n: usize,
    single: Vec<usize>,
    pairs: Vec<usize>,
}

impl Counts {
    fn new(bases: &[BitSet], n: usize) -> Counts {
        let mut single = vec![0; n];
        let mut pairs = vec![0; n * n];
        for b in bases {
            let elems = b.to_vec();
            for (k, &x) in elems.iter().enumerate() {
                single[x] += 1;
                for &y in &elems[k + 1..] {
                    pairs[x * n + y] += 1;
                }
            }
        }
        Counts { total: bases.len(), n, single, pairs }
    }

    fn pair(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.pairs[a * self.n + b]
    }

    /// Pairs within `elements` with `N·n_ij > n_i·n_j`, in lexicographic order.
    fn violations(&self, elements: BitSet) -> Vec<(usize, usize)> {
        let elems = elements.to_vec();
        let pairs: Vec<(usize, usize)> =
            elems.iter().enumerate().flat_map(|(k, &i)| elems[k + 1..].iter().map(move |&j| (i, j))).collect();
        pairs
            .into_iter()
            .filter(|&(i, j)| {
                (self.total as u128) * (self.pair(i, j) as u128) > (self.single[i] as u128) * (self.single[j] as u128)
            })
            .collect()
    }

    fn witness(&self, i: usize, j: usize) -> Witness {
        let s = PairStats::from_counts(self.total, self.pair(i, j), self.single[i], self.single[j]);
        let gap = s.gap();
        Witness::CorrelatedPair { i, j, pr_both: s.pr_both, pr_i: s.pr_i, pr_j: s.pr_j, gap }
    }
}

/// Every pair with `Pr(ij) > Pr(i)Pr(j)`, with its statistics.
pub fn correlated_pairs(m: &Matroid) -> Vec<(usize, usize, PairStats)> {
    let c = Counts::new(m.bases(), m.n());
    c.violations(m.ground().full())
        .into_iter()
        .map(|(i, j)| (i, j, PairStats::from_counts(c.total, c.pair(i, j), c.single[i], c.single[j])))
        .collect()
}

/// Exact check of `Pr(ij) ≤ Pr(i)Pr(j)` over all pairs; the witness is the
/// lexicographically first violating pair.
pub fn is_negatively_correlated(m: &Matroid) -> Verdict {
    let c = Counts::new(m.bases(), m.n());
    let n = m.n() as u64;
    let pairs = n * n.saturating_sub(1) / 2;
    match c.violations(m.ground().full()).first().copied() {
        Some((i, j)) => Verdict::fail(c.witness(i, j)),
        None => Verdict::certified(Certificate::AllPairs),
    }
    .with_relations(pairs)
}

/// Negative correlation of every minor `M / C ∖ D` with `C` independent,
/// starting with `M` itself. Minors are checked in the original labels.
pub fn is_balanced(m: &Matroid) -> Verdict {
    let full = m.ground().full();
    let mut checked = 0u64;
    // Independent sets, smallest first, so that the first witness is as
    // close to M as possible.
    let mut independent: Vec<BitSet> = full.subsets().filter(|s| m.is_independent(*s)).collect();
    independent.sort_by_key(|s| (s.len(), *s));
    for contracted in independent {
        let rest = full.difference(contracted);
        let mut deletions: Vec<BitSet> = rest.subsets().collect();
        deletions.sort_by_key(|s| (s.len(), *s));
        for deleted in deletions {
            let remaining = rest.difference(deleted);
            if remaining.len() < 2 {
                continue;
            }
            let bases = m
                .minor_bases(deleted, contracted)
                .expect("contracted set is independent and disjoint from the deletion");
            checked += 1;
            let c = Counts::new(&bases, m.n());
            if let Some((i, j)) = c.violations(remaining).first().copied() {
                let pair = Box::new(c.witness(i, j));
                return Verdict::fail(Witness::CorrelatedMinor { deleted, contracted, pair }).with_relations(checked);
            }
        }
    }
    Verdict::certified(Certificate::AllMinors { minors: checked }).with_relations(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use crate::matroid::{named, uniform};
    use crate::verdict::Status;

    #[test]
    fn uniform_pair_stats() {
        let s = pair_stats(&uniform(2, 3).unwrap(), 0, 1).unwrap();
        assert_eq!(s.pr_both, q(1, 3));
        assert_eq!(s.pr_i, q(2, 3));
        let s = pair_stats(&uniform(1, 2).unwrap(), 0, 1).unwrap();
        assert!(s.pr_both.is_zero() && s.pr_neither.is_zero());
        assert_eq!(pair_stats(&uniform(1, 2).unwrap(), 1, 1), Err(MatroidError::SameElement));
    }

    #[test]
    fn stats_sum_to_one() {
        let l = named("choe-wagner-L").unwrap();
        for i in 0..12 {
            for j in (i + 1)..12 {
                let s = pair_stats(&l, i, j).unwrap();
                let total = &s.pr_both + &s.pr_neither + &s.pr_i_only + &s.pr_j_only;
                assert_eq!(total, Rational::one());
                assert_eq!(s.pr_i, &s.pr_both + &s.pr_i_only);
                let (a, b) = s.rayleigh_products();
                assert_eq!(a - b, s.gap());
            }
        }
    }

    #[test]
    fn l_pair_e_f() {
        let l = named("choe-wagner-L").unwrap();
        let s = pair_stats(&l, 10, 11).unwrap();
        let (both, split) = s.rayleigh_products();
        assert_eq!(both, q(462, 10609));
        assert_eq!(split, q(456, 10609));
        let bad = correlated_pairs(&l);
        assert_eq!(bad.iter().map(|(i, j, _)| (*i, *j)).collect::<Vec<_>>(), vec![(10, 11)]);
    }

    #[test]
    fn correlation_verdicts() {
        assert_eq!(is_negatively_correlated(&uniform(2, 4).unwrap()).status, Status::PassCertified);
        assert_eq!(is_negatively_correlated(&uniform(1, 5).unwrap()).status, Status::PassCertified);
        let v = is_negatively_correlated(&named("choe-wagner-L").unwrap());
        assert!(matches!(v.witness, Some(Witness::CorrelatedPair { i: 10, j: 11, .. })));
    }

    #[test]
    fn balanced_verdicts() {
        let v = is_balanced(&uniform(2, 4).unwrap());
        assert_eq!(v.status, Status::PassCertified);
        assert!(is_balanced(&uniform(1, 2).unwrap()).is_pass());
        let v = is_balanced(&named("choe-wagner-L").unwrap());
        match v.witness {
            Some(Witness::CorrelatedMinor { deleted, contracted, .. }) => {
                assert!(deleted.is_empty() && contracted.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
