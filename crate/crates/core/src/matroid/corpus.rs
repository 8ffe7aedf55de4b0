use super::{transversal_matroid, uniform, GroundSet, Matroid, MatroidError, SetSystem};
use crate::subset::BitSet;

/// Names accepted by [`named`], besides `uniform-k-n`.
pub const CORPUS_NAMES: [&str; 3] = ["fano", "vamos", "choe-wagner-L"];

const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];

const VAMOS_HYPERPLANES: [[usize; 4]; 5] = [[1, 2, 3, 4], [1, 2, 5, 6], [1, 2, 7, 8], [3, 4, 5, 6], [3, 4, 7, 8]];

/// The four sets whose transversals form `L`; `e` and `f` are the last
/// two elements.
const L_SETS: [&[&str]; 4] = [
    &["1", "2", "3", "4", "f"],
    &["5", "6", "7", "f"],
    &["8", "9", "10", "f"],
    &["1", "2", "3", "5", "6", "8", "9", "e", "f"],
];

fn one_based(elems: &[usize]) -> BitSet {
    BitSet::from_elements(elems.iter().map(|e| e - 1))
}

/// Looks up a corpus matroid: `fano`, `vamos`, `choe-wagner-L` or
/// `uniform-k-n`.
pub fn named(name: &str) -> Result<Matroid, MatroidError> {
    match name {
        "fano" => {
            let lines: Vec<BitSet> = FANO_LINES.iter().map(|l| one_based(l)).collect();
            let bases = BitSet::k_subsets(7, 3).into_iter().filter(|b| !lines.contains(b));
            Matroid::from_bases_unchecked(GroundSet::new(7)?, 3, bases)
        }
        "vamos" => {
            let planes: Vec<BitSet> = VAMOS_HYPERPLANES.iter().map(|p| one_based(p)).collect();
            let bases = BitSet::k_subsets(8, 4).into_iter().filter(|b| !planes.contains(b));
            Matroid::from_bases_unchecked(GroundSet::new(8)?, 4, bases)
        }
        "choe-wagner-L" => choe_wagner_l(),
        other => parse_uniform(other)
            .ok_or_else(|| MatroidError::UnknownName(other.to_string()))
            .and_then(|(k, n)| uniform(k, n)),
    }
}

fn parse_uniform(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("uniform-")?;
    let (k, n) = rest.split_once('-')?;
    Some((k.parse().ok()?, n.parse().ok()?))
}

fn choe_wagner_l() -> Result<Matroid, MatroidError> {
    let labels: Vec<String> = (1..=10).map(|i| i.to_string()).chain(["e".to_string(), "f".to_string()]).collect();
    let ground = GroundSet::with_labels(labels)?;
    let sets = L_SETS
        .iter()
        .map(|s| BitSet::from_elements(s.iter().map(|l| ground.index_of(l).expect("label in ground set"))))
        .collect();
    transversal_matroid(&SetSystem::new(ground, sets)?, Some(4))
}
