use std::collections::BTreeMap;

use super::TropicalError;
use crate::checks::DiscreteFunction;
use crate::convention::{Convention, TropicalValue};
use crate::kernel::Rational;
use crate::matroid::{matroid_from_bases, GroundSet, Matroid};
use crate::subset::BitSet;

/// Weights on the `k`-subsets of `[n]`, finite exactly on the bases of a
/// matroid. Off-basis values are the convention's infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    matroid: Matroid,
    values: BTreeMap<BitSet, Rational>,
    convention: Convention,
}

impl WeightVector {
    /// Entries may list infinite values explicitly; they must be the
    /// convention's infinity and are dropped. The finite support must be the
    /// basis family of a matroid.
    pub fn new(
        ground: GroundSet,
        entries: impl IntoIterator<Item = (BitSet, TropicalValue)>,
        convention: Convention,
    ) -> Result<Self, TropicalError> {
        let mut values = BTreeMap::new();
        let mut rank = None;
        for (s, v) in entries {
            if *rank.get_or_insert(s.len()) != s.len() {
                return Err(TropicalError::MixedCardinality { set: s });
            }
            match v {
                TropicalValue::Finite(v) => {
                    if values.insert(s, v).is_some() {
                        return Err(TropicalError::DuplicateSet { set: s });
                    }
                }
                inf if inf == convention.infinity() => {}
                _ => return Err(TropicalError::WrongInfinity { convention }),
            }
        }
        let rank = rank.ok_or(TropicalError::EmptyWeights)?;
        if values.is_empty() {
            return Err(TropicalError::EmptyWeights);
        }
        let matroid = matroid_from_bases(ground, rank, values.keys().copied())?;
        Ok(WeightVector { matroid, values, convention })
    }

    pub fn from_finite(
        n: usize,
        entries: impl IntoIterator<Item = (BitSet, Rational)>,
        convention: Convention,
    ) -> Result<Self, TropicalError> {
        let entries = entries.into_iter().map(|(s, v)| (s, TropicalValue::Finite(v)));
        WeightVector::new(GroundSet::new(n)?, entries, convention)
    }

    /// `μ ≡ 0` on the bases of `m`.
    pub fn zero_on(m: &Matroid, convention: Convention) -> Self {
        let values = m.bases().iter().map(|&b| (b, Rational::zero())).collect();
        WeightVector { matroid: m.clone(), values, convention }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn n(&self) -> usize {
        self.matroid.n()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Finite values in the vector's own convention.
    pub fn values(&self) -> &BTreeMap<BitSet, Rational> {
        &self.values
    }

    pub fn get(&self, s: BitSet) -> TropicalValue {
        match self.values.get(&s) {
            Some(v) => TropicalValue::Finite(v.clone()),
            None => self.convention.infinity(),
        }
    }

    /// Min-plus value; `None` is `+∞`.
    pub fn min_plus(&self, s: BitSet) -> Option<Rational> {
        self.values.get(&s).map(|v| self.convention.to_min_plus(v))
    }

    /// The same point read in `convention` (values negated on a switch).
    pub fn in_convention(&self, convention: Convention) -> WeightVector {
        if convention == self.convention {
            return self.clone();
        }
        let values = self.values.iter().map(|(s, v)| (*s, -v)).collect();
        WeightVector { matroid: self.matroid.clone(), values, convention }
    }

    /// Adds `c + Σ_{b∈B} v_b` to every finite value.
    pub fn shifted(&self, c: &Rational, v: &[Rational]) -> WeightVector {
        let values = self.values.iter().map(|(s, x)| (*s, s.iter().fold(x + c, |acc, b| acc + &v[b]))).collect();
        WeightVector { matroid: self.matroid.clone(), values, convention: self.convention }
    }

    pub fn to_discrete_function(&self) -> DiscreteFunction {
        DiscreteFunction::on_sets(self.n(), self.values.iter().map(|(s, v)| (*s, v.clone())), self.convention)
            .expect("weight vectors are nonempty")
    }
}

/// Weight vectors on a common ground set with strictly increasing ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagChain {
    constituents: Vec<WeightVector>,
}

impl FlagChain {
    pub fn new(constituents: Vec<WeightVector>) -> Result<Self, TropicalError> {
        let Some(first) = constituents.first() else {
            return Err(TropicalError::ChainTooShort(0));
        };
        for (k, pair) in constituents.windows(2).enumerate() {
            if pair[1].n() != first.n() {
                return Err(TropicalError::ChainMismatch(format!(
                    "constituent {} has {} elements, expected {}",
                    k + 2,
                    pair[1].n(),
                    first.n()
                )));
            }
            if pair[1].convention() != first.convention() {
                return Err(TropicalError::ChainMismatch("constituents use different conventions".into()));
            }
            if pair[1].rank() <= pair[0].rank() {
                return Err(TropicalError::ChainMismatch(format!(
                    "ranks {} and {} are not strictly increasing",
                    pair[0].rank(),
                    pair[1].rank()
                )));
            }
        }
        Ok(FlagChain { constituents })
    }

    pub fn constituents(&self) -> &[WeightVector] {
        &self.constituents
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    pub fn convention(&self) -> Convention {
        self.constituents[0].convention()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use crate::matroid::uniform;

    #[test]
    fn construction_and_views() {
        let entries = BitSet::k_subsets(4, 2).into_iter().map(|s| (s, TropicalValue::Finite(q(s.0 as i64, 1))));
        let w = WeightVector::new(GroundSet::new(4).unwrap(), entries, Convention::MinPlus).unwrap();
        assert_eq!(w.matroid(), &uniform(2, 4).unwrap());
        let max = w.in_convention(Convention::MaxPlus);
        let s = BitSet::from_elements([0, 1]);
        assert_eq!(max.get(s), TropicalValue::Finite(q(-3, 1)));
        assert_eq!(max.min_plus(s), w.min_plus(s));
    }

    #[test]
    fn infinities_and_support() {
        let g = GroundSet::new(3).unwrap();
        let a = BitSet::from_elements([0]);
        let b = BitSet::from_elements([1]);
        let c = BitSet::from_elements([2]);
        let w = WeightVector::new(
            g.clone(),
            [(a, TropicalValue::Finite(q(1, 1))), (b, TropicalValue::PosInf), (c, TropicalValue::Finite(q(0, 1)))],
            Convention::MinPlus,
        )
        .unwrap();
        assert_eq!(w.matroid().num_bases(), 2);
        assert_eq!(w.get(b), TropicalValue::PosInf);
        let wrong = WeightVector::new(g.clone(), [(a, TropicalValue::NegInf)], Convention::MinPlus);
        assert_eq!(wrong, Err(TropicalError::WrongInfinity { convention: Convention::MinPlus }));
        let not_matroid = WeightVector::from_finite(
            4,
            [(BitSet::from_elements([0, 1]), q(0, 1)), (BitSet::from_elements([2, 3]), q(0, 1))],
            Convention::MinPlus,
        );
        assert!(matches!(not_matroid, Err(TropicalError::Matroid(_))));
    }

    #[test]
    fn chains() {
        let u = |k| WeightVector::zero_on(&uniform(k, 4).unwrap(), Convention::MinPlus);
        assert!(FlagChain::new(vec![u(1), u(2), u(3)]).is_ok());
        assert!(matches!(FlagChain::new(vec![u(2), u(2)]), Err(TropicalError::ChainMismatch(_))));
        let other = WeightVector::zero_on(&uniform(2, 5).unwrap(), Convention::MinPlus);
        assert!(matches!(FlagChain::new(vec![u(1), other]), Err(TropicalError::ChainMismatch(_))));
    }
}
