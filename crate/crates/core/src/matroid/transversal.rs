use super::{GroundSet, Matroid, MatroidError};
use crate::subset::BitSet;

/// Finite family `A_1, .., A_r` of nonempty subsets of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub ground: GroundSet,
    pub sets: Vec<BitSet>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, sets: Vec<BitSet>) -> Result<Self, MatroidError> {
        if sets.is_empty() {
            return Err(MatroidError::BadSetSystem("no sets".into()));
        }
        let full = ground.full();
        for (k, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(MatroidError::BadSetSystem(format!("set {} is empty", k + 1)));
            }
            if !s.is_subset(full) {
                let element = s.difference(full).iter().next().unwrap_or(0);
                return Err(MatroidError::OutOfRange { element, n: ground.len() });
            }
        }
        Ok(SetSystem { ground, sets })
    }

    /// Whether the elements of `s` can be matched to distinct sets.
    pub fn is_partial_transversal(&self, s: BitSet) -> bool {
        let elems = s.to_vec();
        matching_size(&elems, &self.sets) == elems.len()
    }

    /// Size of a maximum matching between elements and sets.
    pub fn transversal_rank(&self) -> usize {
        let elems = self.ground.full().to_vec();
        matching_size(&elems, &self.sets)
    }
}

/// Kuhn's augmenting-path matching of `elems` into `sets`.
fn matching_size(elems: &[usize], sets: &[BitSet]) -> usize {
    fn augment(e: usize, sets: &[BitSet], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for (k, s) in sets.iter().enumerate() {
            if s.contains(e) && !seen[k] {
                seen[k] = true;
                if owner[k].is_none_or(|other| augment(other, sets, seen, owner)) {
                    owner[k] = Some(e);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; sets.len()];
    let mut matched = 0;
    for &e in elems {
        let mut seen = vec![false; sets.len()];
        if augment(e, sets, &mut seen, &mut owner) {
            matched += 1;
        }
    }
    matched
}

/// Bases are the maximum-size partial transversals. With `rank_hint`, the
/// computed rank must equal the hint.
pub fn transversal_matroid(system: &SetSystem, rank_hint: Option<usize>) -> Result<Matroid, MatroidError> {
    let rank = system.transversal_rank();
    if rank == 0 && rank_hint.is_some_and(|h| h > 0) {
        return Err(MatroidError::NoTransversal);
    }
    if let Some(expected) = rank_hint {
        if expected != rank {
            return Err(MatroidError::RankMismatch { expected, actual: rank });
        }
    }
    let bases = BitSet::k_subsets(system.ground.len(), rank).into_iter().filter(|s| system.is_partial_transversal(*s));
    Matroid::from_bases_unchecked(system.ground.clone(), rank, bases)
}
