//! Positroid recognition through Grassmann necklaces, and the polynomials
//! represented by points of the Grassmannian.

use crate::kernel::{KernelError, RationalMatrix};
use crate::matroid::{GroundSet, Matroid, MatroidError};
use crate::poly::MultiPoly;
use crate::subset::BitSet;
use crate::verdict::{Certificate, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PositroidError {
    #[error("invalid necklace: {0}")]
    InvalidNecklace(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// `(I_1, .., I_n)` with `I_{i+1} ⊇ I_i ∖ {i}` cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Necklace {
    n: usize,
    k: usize,
    sets: Vec<BitSet>,
}

impl Necklace {
    pub fn new(n: usize, sets: Vec<BitSet>) -> Result<Self, PositroidError> {
        if sets.len() != n || n == 0 {
            return Err(PositroidError::InvalidNecklace(format!("expected {n} sets, got {}", sets.len())));
        }
        let k = sets[0].len();
        let full = BitSet::full(n);
        for (i, s) in sets.iter().enumerate() {
            if s.len() != k || !s.is_subset(full) {
                return Err(PositroidError::InvalidNecklace(format!("I_{} is not a {k}-subset of [{n}]", i + 1)));
            }
            let next = sets[(i + 1) % n];
            let coherent = if s.contains(i) { s.remove(i).is_subset(next) } else { next == *s };
            if !coherent {
                return Err(PositroidError::InvalidNecklace(format!(
                    "I_{} = {} and I_{} = {} are not coherent",
                    i + 1,
                    s,
                    (i + 1) % n + 1,
                    next
                )));
            }
        }
        Ok(Necklace { n, k, sets })
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn rank(&self) -> usize {
        self.k
    }
}

/// `I_i` is the greedy (Gale-minimal) basis for the order `i < i+1 < .. < i−1`.
pub fn grassmann_necklace(m: &Matroid) -> Necklace {
    let n = m.n();
    let sets = (0..n)
        .map(|start| {
            let mut current = BitSet::EMPTY;
            for e in (0..n).map(|k| (start + k) % n) {
                let candidate = current.insert(e);
                if m.is_independent(candidate) {
                    current = candidate;
                }
            }
            current
        })
        .collect();
    Necklace { n, k: m.rank(), sets }
}

/// `A ≤ B` in the Gale order for the cyclic order starting at `start`.
fn gale_leq(a: BitSet, b: BitSet, start: usize, n: usize) -> bool {
    let key = |e: usize| (e + n - start) % n;
    let a = a.cyclic_sorted(start, n);
    let b = b.cyclic_sorted(start, n);
    a.iter().zip(&b).all(|(&x, &y)| key(x) <= key(y))
}

/// Bases `B` with `I_i ≤_i B` for every `i`.
pub fn positroid_from_necklace(necklace: &Necklace) -> Result<Matroid, PositroidError> {
    let necklace = Necklace::new(necklace.n, necklace.sets.clone())?;
    let n = necklace.n;
    let bases = BitSet::k_subsets(n, necklace.k)
        .into_iter()
        .filter(|b| necklace.sets.iter().enumerate().all(|(i, s)| gale_leq(*s, *b, i, n)));
    Ok(Matroid::from_bases_unchecked(GroundSet::new(n)?, necklace.k, bases)?)
}

/// Necklace round trip; the witness is a basis of the necklace positroid
/// that `m` lacks.
pub fn is_positroid(m: &Matroid) -> Verdict {
    let envelope = positroid_from_necklace(&grassmann_necklace(m)).expect("necklaces of matroids are valid");
    let relations = envelope.num_bases() as u64;
    match envelope.bases().iter().find(|b| !m.is_basis(**b)) {
        Some(&set) => Verdict::fail(Witness::MissingBasis { set }),
        None => Verdict::certified(Certificate::NecklaceRoundTrip),
    }
    .with_relations(relations)
}

/// `Σ_I det(A_I) x^I` over the maximal minors of a full-rank `k × n` matrix.
pub fn representing_polynomial(a: &RationalMatrix) -> Result<MultiPoly, PositroidError> {
    let minors = a.maximal_minors()?;
    let n = a.cols();
    let terms = minors.values.iter().map(|(s, v)| (s.indicator(n), v.clone()));
    Ok(MultiPoly::from_terms(n, terms).expect("indicator length is n"))
}

/// Column matroid of `a` together with its total-nonnegativity verdict.
pub fn positroid_of_matrix(a: &RationalMatrix) -> Result<(Matroid, Verdict), PositroidError> {
    let minors = a.maximal_minors()?;
    let bases = minors.support();
    let m = Matroid::from_bases_unchecked(GroundSet::new(a.cols())?, a.rows(), bases)?;
    Ok((m, a.is_totally_nonnegative()?))
}
