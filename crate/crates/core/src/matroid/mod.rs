//! Matroids given by their bases, with minors, duality, a small named corpus
//! and negative-correlation statistics of the uniform basis measure.

mod corpus;
mod correlation;
mod transversal;

use std::collections::HashSet;
use std::fmt;

use crate::kernel::Rational;
use crate::poly::MultiPoly;
use crate::subset::{BitSet, MAX_GROUND};

pub use corpus::{named, CORPUS_NAMES};
pub use correlation::{correlated_pairs, is_balanced, is_negatively_correlated, pair_stats, PairStats};
pub use transversal::{transversal_matroid, SetSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("ground set size {0} outside 1..=64")]
    BadGroundSize(usize),
    #[error("labels: {0}")]
    BadLabels(String),
    #[error("element {element} outside a ground set of size {n}")]
    OutOfRange { element: usize, n: usize },
    #[error("no bases given")]
    EmptyBases,
    #[error("basis {set} does not have cardinality {rank}")]
    MixedCardinality { set: BitSet, rank: usize },
    #[error("basis exchange fails for I = {i}, J = {j}, a = {}", a + 1)]
    ExchangeFailure { i: BitSet, j: BitSet, a: usize },
    #[error("rank {k} exceeds ground set size {n}")]
    BadRank { k: usize, n: usize },
    #[error("set system: {0}")]
    BadSetSystem(String),
    #[error("set system has no nonempty partial transversal")]
    NoTransversal,
    #[error("transversal rank {actual} differs from the requested rank {expected}")]
    RankMismatch { expected: usize, actual: usize },
    #[error("deleted and contracted sets overlap in {0}")]
    OverlapError(BitSet),
    #[error("contracted set {0} is dependent")]
    DependentContraction(BitSet),
    #[error("minor has an empty ground set")]
    EmptyResult,
    #[error("unknown matroid name {0:?}")]
    UnknownName(String),
    #[error("pair statistics need two distinct elements")]
    SameElement,
}

/// `n` elements with optional display labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, MatroidError> {
        if n == 0 || n > MAX_GROUND {
            return Err(MatroidError::BadGroundSize(n));
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, MatroidError> {
        let ground = GroundSet::new(labels.len())?;
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(MatroidError::BadLabels("labels are not distinct".into()));
        }
        Ok(GroundSet { labels: Some(labels), ..ground })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `e`: its label, or `e + 1`.
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => (e + 1).to_string(),
        }
    }

    pub fn format_set(&self, s: BitSet) -> String {
        let items: Vec<String> = s.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Position of a label (or of a 1-based number when unlabelled).
    pub fn index_of(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(p) = labels.iter().position(|l| l == name) {
                return Some(p);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i >= 1 && i <= self.n).map(|i| i - 1)
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.n)
    }

    fn restrict(&self, keep: &[usize]) -> GroundSet {
        GroundSet { n: keep.len(), labels: self.labels.as_ref().map(|l| keep.iter().map(|&e| l[e].clone()).collect()) }
    }
}

/// A matroid stored as its sorted list of bases.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    rank: usize,
    bases: Vec<BitSet>,
    index: HashSet<BitSet>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(rank {} on {}, {} bases)", self.rank, self.ground.n, self.bases.len())
    }
}

/// Validating constructor: cardinalities, then the exchange axiom.
pub fn matroid_from_bases(
    ground: GroundSet,
    rank: usize,
    bases: impl IntoIterator<Item = BitSet>,
) -> Result<Matroid, MatroidError> {
    let m = Matroid::from_bases_unchecked(ground, rank, bases)?;
    m.check_exchange()?;
    Ok(m)
}

impl Matroid {
    /// Checks cardinality and range but skips the exchange axiom; for
    /// trusted inputs such as the corpus and derived minors.
    pub fn from_bases_unchecked(
        ground: GroundSet,
        rank: usize,
        bases: impl IntoIterator<Item = BitSet>,
    ) -> Result<Matroid, MatroidError> {
        let full = ground.full();
        let mut list: Vec<BitSet> = Vec::new();
        for b in bases {
            if !b.is_subset(full) {
                let element = b.difference(full).iter().next().unwrap_or(0);
                return Err(MatroidError::OutOfRange { element, n: ground.n });
            }
            if b.len() != rank {
                return Err(MatroidError::MixedCardinality { set: b, rank });
            }
            list.push(b);
        }
        if list.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        if rank > ground.n {
            return Err(MatroidError::BadRank { k: rank, n: ground.n });
        }
        list.sort();
        list.dedup();
        let index = list.iter().copied().collect();
        Ok(Matroid { ground, rank, bases: list, index })
    }

    fn check_exchange(&self) -> Result<(), MatroidError> {
        for &i in &self.bases {
            for &j in &self.bases {
                for a in i.difference(j).iter() {
                    let reduced = i.remove(a);
                    let ok = j.difference(i).iter().any(|b| self.index.contains(&reduced.insert(b)));
                    if !ok {
                        return Err(MatroidError::ExchangeFailure { i, j, a });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[BitSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: BitSet) -> bool {
        self.index.contains(&s)
    }

    pub fn is_independent(&self, s: BitSet) -> bool {
        self.bases.iter().any(|&b| s.is_subset(b))
    }

    /// Rank of an arbitrary subset.
    pub fn rank_of(&self, s: BitSet) -> usize {
        self.bases.iter().map(|b| b.intersection(s).len()).max().unwrap_or(0)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Matroid, MatroidError> {
        if labels.len() != self.ground.n {
            return Err(MatroidError::BadLabels(format!("{} labels for {} elements", labels.len(), self.ground.n)));
        }
        self.ground = GroundSet::with_labels(labels)?;
        Ok(self)
    }

    /// Complements of the bases.
    pub fn dual(&self) -> Matroid {
        let full = self.ground.full();
        Matroid::from_bases_unchecked(
            self.ground.clone(),
            self.ground.n - self.rank,
            self.bases.iter().map(|b| full.difference(*b)),
        )
        .expect("complements of bases form a matroid")
    }

    /// Bases of `M / contracted ∖ deleted`, still in the original labels.
    pub fn minor_bases(&self, deleted: BitSet, contracted: BitSet) -> Result<Vec<BitSet>, MatroidError> {
        let overlap = deleted.intersection(contracted);
        if !overlap.is_empty() {
            return Err(MatroidError::OverlapError(overlap));
        }
        let after_contract: Vec<BitSet> =
            self.bases.iter().filter(|b| contracted.is_subset(**b)).map(|b| b.difference(contracted)).collect();
        if after_contract.is_empty() {
            return Err(MatroidError::DependentContraction(contracted));
        }
        let trimmed: Vec<BitSet> = after_contract.iter().map(|b| b.difference(deleted)).collect();
        let r = trimmed.iter().map(|b| b.len()).max().unwrap_or(0);
        let mut out: Vec<BitSet> = trimmed.into_iter().filter(|b| b.len() == r).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `M / contracted ∖ deleted` with the surviving elements renumbered in
    /// increasing order.
    pub fn minor(&self, deleted: BitSet, contracted: BitSet) -> Result<Minor, MatroidError> {
        let bases = self.minor_bases(deleted, contracted)?;
        let removed = deleted.union(contracted);
        let mapping: Vec<usize> = (0..self.ground.n).filter(|e| !removed.contains(*e)).collect();
        if mapping.is_empty() {
            return Err(MatroidError::EmptyResult);
        }
        let relabel = |b: BitSet| {
            BitSet::from_elements(mapping.iter().enumerate().filter(|(_, &e)| b.contains(e)).map(|(k, _)| k))
        };
        let rank = bases[0].len();
        let matroid =
            Matroid::from_bases_unchecked(self.ground.restrict(&mapping), rank, bases.into_iter().map(relabel))?;
        Ok(Minor { matroid, mapping })
    }

    /// `Σ_B x^B`.
    pub fn basis_generating_polynomial(&self) -> MultiPoly {
        let n = self.ground.n;
        MultiPoly::from_terms(n, self.bases.iter().map(|b| (b.indicator(n), Rational::one())))
            .expect("indicator vectors have length n")
    }
}

/// A minor together with the original index of each of its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    pub mapping: Vec<usize>,
}

pub fn uniform(k: usize, n: usize) -> Result<Matroid, MatroidError> {
    if k > n {
        return Err(MatroidError::BadRank { k, n });
    }
    Matroid::from_bases_unchecked(GroundSet::new(n)?, k, BitSet::k_subsets(n, k))
}

pub fn minor(m: &Matroid, deleted: BitSet, contracted: BitSet) -> Result<Minor, MatroidError> {
    m.minor(deleted, contracted)
}

pub fn dual(m: &Matroid) -> Matroid {
    m.dual()
}

pub fn basis_generating_polynomial(m: &Matroid) -> MultiPoly {
    m.basis_generating_polynomial()
}
