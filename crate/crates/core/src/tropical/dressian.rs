use super::weights::{FlagChain, WeightVector};
use super::TropicalError;
use crate::convention::{Convention, TropicalValue};
use crate::kernel::Rational;
use crate::matroid::Matroid;
use crate::positroid::is_positroid;
use crate::subset::BitSet;
use crate::verdict::{Certificate, IncidenceTerm, Verdict, Witness};

/// Min-plus `x + y` with `None` as `+∞`.
fn tplus(x: Option<Rational>, y: Option<Rational>) -> Option<Rational> {
    Some(x? + y?)
}

/// Min-plus order with `+∞` on top.
fn tmin(values: &[Option<Rational>]) -> Option<&Rational> {
    values.iter().flatten().min()
}

/// The minimum is infinite or attained at least twice.
fn attained_twice(values: &[Option<Rational>]) -> bool {
    match tmin(values) {
        None => true,
        Some(m) => values.iter().flatten().filter(|v| *v == m).count() >= 2,
    }
}

/// Every `(S, a<b<c<d)` with `|S| = k − 2` disjoint from `{a,b,c,d}`.
fn three_term_relations(n: usize, k: usize) -> impl Iterator<Item = (BitSet, [usize; 4])> {
    let sets = if k >= 2 { BitSet::k_subsets(n, k - 2) } else { Vec::new() };
    let quads = BitSet::k_subsets(n, 4);
    sets.into_iter().flat_map(move |s| {
        quads
            .iter()
            .filter(move |quad| quad.is_disjoint(s))
            .map(move |quad| {
                let v = quad.to_vec();
                (s, [v[0], v[1], v[2], v[3]])
            })
            .collect::<Vec<_>>()
    })
}

/// Min-plus products `(Sab+Scd, Sac+Sbd, Sad+Sbc)`.
fn products(mu: &WeightVector, s: BitSet, [a, b, c, d]: [usize; 4]) -> [Option<Rational>; 3] {
    let p = |x: usize, y: usize| mu.min_plus(s.insert(x).insert(y));
    [tplus(p(a, b), p(c, d)), tplus(p(a, c), p(b, d)), tplus(p(a, d), p(b, c))]
}

fn relation_witness(mu: &WeightVector, s: BitSet, quad: [usize; 4], prods: [Option<Rational>; 3]) -> Witness {
    let conv = mu.convention();
    let [a, b, c, d] = quad;
    let products = prods.map(|p| TropicalValue::from_min_plus(p.as_ref(), conv));
    Witness::TropicalRelation { set: s, a, b, c, d, products }
}

fn check_support(m: &Matroid, mu: &WeightVector) -> Result<(), TropicalError> {
    if mu.matroid() != m {
        return Err(TropicalError::SupportMismatch);
    }
    Ok(())
}

/// Three-term tropical Plücker relations on the bases of `m`; with the
/// off-basis values infinite this is membership in the local Dressian.
pub fn is_in_dressian(m: &Matroid, mu: &WeightVector) -> Result<Verdict, TropicalError> {
    check_support(m, mu)?;
    let mut relations = 0u64;
    for (s, quad) in three_term_relations(m.n(), m.rank()) {
        relations += 1;
        let prods = products(mu, s, quad);
        if !attained_twice(&prods) {
            return Ok(Verdict::fail(relation_witness(mu, s, quad, prods)).with_relations(relations));
        }
    }
    Ok(Verdict::certified(Certificate::TropicalRelations).with_relations(relations))
}

/// Positive relations: the middle product `Sac + Sbd` equals the optimum of
/// the other two. Requires `m` to be a positroid in its given order.
pub fn is_in_positive_dressian(m: &Matroid, mu: &WeightVector) -> Result<Verdict, TropicalError> {
    if is_positroid(m).is_fail() {
        return Err(TropicalError::NotAPositroid);
    }
    check_support(m, mu)?;
    let mut relations = 0u64;
    for (s, quad) in three_term_relations(m.n(), m.rank()) {
        relations += 1;
        let prods = products(mu, s, quad);
        if prods[1].as_ref() != tmin(&[prods[0].clone(), prods[2].clone()]) {
            return Ok(Verdict::fail(relation_witness(mu, s, quad, prods)).with_relations(relations));
        }
    }
    Ok(Verdict::certified(Certificate::PositiveRelations).with_relations(relations))
}

/// Tropical incidence relations between consecutive constituents of a flag
/// whose constituents are each valuated matroids.
pub fn is_valuated_flag(chain: &FlagChain) -> Result<Verdict, TropicalError> {
    if chain.len() < 2 {
        return Err(TropicalError::ChainTooShort(chain.len()));
    }
    for (index, mu) in chain.constituents().iter().enumerate() {
        if is_in_dressian(mu.matroid(), mu)?.is_fail() {
            return Err(TropicalError::ConstituentNotValuated { index: index + 1 });
        }
    }
    let conv: Convention = chain.convention();
    let mut relations = 0u64;
    for (index, pair) in chain.constituents().windows(2).enumerate() {
        let (lower, upper) = (&pair[0], &pair[1]);
        let (r, s) = (lower.rank(), upper.rank());
        if r == 0 {
            continue;
        }
        let n = lower.n();
        let small = BitSet::k_subsets(n, r - 1);
        let large = BitSet::k_subsets(n, s + 1);
        for &sset in &small {
            for &tset in &large {
                relations += 1;
                let js: Vec<usize> = tset.difference(sset).to_vec();
                let values: Vec<Option<Rational>> =
                    js.iter().map(|&j| tplus(lower.min_plus(sset.insert(j)), upper.min_plus(tset.remove(j)))).collect();
                if !attained_twice(&values) {
                    let terms = js
                        .iter()
                        .zip(&values)
                        .map(|(&j, v)| IncidenceTerm { j, value: TropicalValue::from_min_plus(v.as_ref(), conv) })
                        .collect();
                    let w = Witness::Incidence { index, s: sset, t: tset, terms };
                    return Ok(Verdict::fail(w).with_relations(relations));
                }
            }
        }
    }
    Ok(Verdict::certified(Certificate::IncidenceRelations).with_relations(relations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use crate::matroid::{named, uniform};
    use crate::verdict::Status;

    fn set(elems: &[usize]) -> BitSet {
        BitSet::from_elements(elems.iter().map(|e| e - 1))
    }

    /// Weights on U_{2,4} listed as (p12, p13, p14, p23, p24, p34).
    fn u24(values: [i64; 6], conv: Convention) -> WeightVector {
        let sets = BitSet::k_subsets(4, 2);
        WeightVector::from_finite(4, sets.into_iter().zip(values.map(|v| q(v, 1))), conv).unwrap()
    }

    #[test]
    fn dressian_examples() {
        let m = uniform(2, 4).unwrap();
        let min = Convention::MinPlus;
        for values in [[0; 6], [1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0], [2, 1, 0, 1, 0, 0]] {
            let v = is_in_dressian(&m, &u24(values, min)).unwrap();
            assert_eq!((v.status, v.effort.relations), (Status::PassCertified, 1), "{values:?}");
        }
        let v = is_in_dressian(&m, &u24([-1, 0, 0, 0, 0, 0], min)).unwrap();
        let zero = TropicalValue::Finite(q(0, 1));
        assert_eq!(
            v.witness,
            Some(Witness::TropicalRelation {
                set: BitSet::EMPTY,
                a: 0,
                b: 1,
                c: 2,
                d: 3,
                products: [TropicalValue::Finite(q(-1, 1)), zero.clone(), zero]
            })
        );
    }

    #[test]
    fn support_mismatch() {
        let w = u24([0; 6], Convention::MinPlus);
        assert_eq!(is_in_dressian(&uniform(2, 5).unwrap(), &w), Err(TropicalError::SupportMismatch));
    }

    #[test]
    fn positive_examples() {
        let m = uniform(2, 4).unwrap();
        let min = Convention::MinPlus;
        assert!(is_in_positive_dressian(&m, &u24([0; 6], min)).unwrap().is_pass());
        assert!(is_in_positive_dressian(&m, &u24([2, 1, 0, 1, 0, 0], min)).unwrap().is_pass());
        assert!(is_in_positive_dressian(&m, &u24([0, -1, 0, 0, 0, 0], min)).unwrap().is_fail());
        // In the Dressian but not positive: the middle product is not the minimum.
        let w = u24([0, 1, 0, 0, 0, 0], min);
        assert!(is_in_dressian(&m, &w).unwrap().is_pass());
        assert!(is_in_positive_dressian(&m, &w).unwrap().is_fail());
        let fano = named("fano").unwrap();
        let w = WeightVector::zero_on(&fano, min);
        assert_eq!(is_in_positive_dressian(&fano, &w), Err(TropicalError::NotAPositroid));
    }

    #[test]
    fn max_plus_reads_negated_values() {
        let m = uniform(2, 4).unwrap();
        for values in [[-1, 0, 0, 0, 0, 0], [2, 1, 0, 1, 0, 0], [0, 1, 0, 0, 0, 0]] {
            let a = is_in_dressian(&m, &u24(values, Convention::MinPlus)).unwrap();
            let b = is_in_dressian(&m, &u24(values.map(|v| -v), Convention::MaxPlus)).unwrap();
            assert_eq!(a.status, b.status);
        }
    }

    #[test]
    fn flag_examples() {
        let min = Convention::MinPlus;
        let z = |k, n| WeightVector::zero_on(&uniform(k, n).unwrap(), min);
        let v = is_valuated_flag(&FlagChain::new(vec![z(1, 3), z(2, 3)]).unwrap()).unwrap();
        assert_eq!(v.status, Status::PassCertified);
        let point = WeightVector::from_finite(3, [(set(&[1]), q(0, 1))], min).unwrap();
        let v = is_valuated_flag(&FlagChain::new(vec![point, z(2, 3)]).unwrap()).unwrap();
        match v.witness {
            Some(Witness::Incidence { index: 0, s, t, terms }) => {
                assert_eq!((s, t), (BitSet::EMPTY, set(&[1, 2, 3])));
                let finite: Vec<usize> = terms.iter().filter(|x| x.value.is_finite()).map(|x| x.j).collect();
                assert_eq!(finite, vec![0]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let chain = FlagChain::new(vec![z(1, 4), z(2, 4), z(3, 4)]).unwrap();
        assert!(is_valuated_flag(&chain).unwrap().is_pass());
    }

    #[test]
    fn flag_errors() {
        let min = Convention::MinPlus;
        let single = FlagChain::new(vec![WeightVector::zero_on(&uniform(1, 3).unwrap(), min)]).unwrap();
        assert_eq!(is_valuated_flag(&single), Err(TropicalError::ChainTooShort(1)));
        let bad = u24([-1, 0, 0, 0, 0, 0], min);
        let chain = FlagChain::new(vec![WeightVector::zero_on(&uniform(1, 4).unwrap(), min), bad]).unwrap();
        assert_eq!(is_valuated_flag(&chain), Err(TropicalError::ConstituentNotValuated { index: 2 }));
    }

    #[test]
    fn non_quotient_flag_fails() {
        // U_{1,2} ⊕ loops is not a quotient of the rank-2 matroid {34}.
        let min = Convention::MinPlus;
        let lower = WeightVector::from_finite(4, [(set(&[1]), q(0, 1)), (set(&[2]), q(0, 1))], min).unwrap();
        let upper = WeightVector::from_finite(4, [(set(&[3, 4]), q(0, 1))], min).unwrap();
        let chain = FlagChain::new(vec![lower, upper]).unwrap();
        assert!(is_valuated_flag(&chain).unwrap().is_fail());
    }
}
