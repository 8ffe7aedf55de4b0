use std::collections::BTreeSet;

use super::{Exponent, MultiPoly, PolyError, Support};
use crate::kernel::{Rational, RationalMatrix, UniPoly};

/// Structural facts read off the term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    /// Degree when every term has the same total degree.
    pub homogeneous_degree: Option<usize>,
    pub is_multiaffine: bool,
    pub has_nonnegative_coeffs: bool,
    pub support: Support,
}

impl Predicates {
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree.is_some()
    }
}

impl MultiPoly {
    fn check_len(&self, len: usize) -> Result<(), PolyError> {
        if len == self.nvars() {
            Ok(())
        } else {
            Err(PolyError::DimensionMismatch { expected: self.nvars(), got: len })
        }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational, PolyError> {
        self.check_len(x.len())?;
        let mut total = Rational::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            for (xi, &a) in x.iter().zip(e) {
                if a > 0 {
                    term *= &xi.pow(a as i32);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Matrix of second partials `∂_i∂_j f` evaluated at `x`.
    pub fn hessian_at(&self, x: &[Rational]) -> Result<RationalMatrix, PolyError> {
        self.check_len(x.len())?;
        let n = self.nvars();
        let mut h = RationalMatrix::zeros(n, n);
        for i in 0..n {
            let di = self.partial_derivative(i)?;
            for j in i..n {
                let v = di.partial_derivative(j)?.evaluate(x)?;
                h.set(i, j, v.clone());
                h.set(j, i, v);
            }
        }
        Ok(h)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms().all(|(_, c)| !c.is_negative())
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            homogeneous_degree: self.homogeneous_degree(),
            is_multiaffine: self.is_multiaffine(),
            has_nonnegative_coeffs: self.has_nonnegative_coeffs(),
            support: self.support(),
        }
    }

    /// `Δ = c·∂^{α+e_i}f·∂^{α+e_j}f − ∂^α f·∂^{α+e_i+e_j}f`.
    pub fn rayleigh_difference(&self, i: usize, j: usize, c: &Rational, alpha: &[u32]) -> Result<MultiPoly, PolyError> {
        if i == j {
            return Err(PolyError::SameVariable);
        }
        let fa = self.derivative(alpha)?;
        let fi = fa.partial_derivative(i)?;
        let fj = fa.partial_derivative(j)?;
        let fij = fi.partial_derivative(j)?;
        Ok(fi.mul(&fj).scale(c).sub(&fa.mul(&fij)))
    }

    /// `t ↦ f(a + t·b)`.
    pub fn restrict_to_line(&self, a: &[Rational], b: &[Rational]) -> Result<UniPoly, PolyError> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let max_exp: Vec<u32> = (0..self.nvars()).map(|v| self.terms().map(|(e, _)| e[v]).max().unwrap_or(0)).collect();
        // powers[v][k] = (a_v + t b_v)^k
        let powers: Vec<Vec<UniPoly>> = a
            .iter()
            .zip(b)
            .zip(&max_exp)
            .map(|((av, bv), &m)| {
                let linear = UniPoly::new(vec![av.clone(), bv.clone()]);
                let mut row = vec![UniPoly::constant(Rational::one())];
                for k in 1..=m as usize {
                    let next = row[k - 1].mul(&linear);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut out = UniPoly::zero();
        for (e, c) in self.terms() {
            let mut term = UniPoly::constant(c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&powers[v][k as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// `Σ_{α∈J} x^α / α!`.
pub fn generating_function_fj<'a, I>(exponents: I) -> Result<MultiPoly, PolyError>
where
    I: IntoIterator<Item = &'a Exponent>,
{
    let set: BTreeSet<&Exponent> = exponents.into_iter().collect();
    let n = set.first().ok_or(PolyError::EmptyJ)?.len();
    let terms = set.into_iter().map(|e| {
        let fact: num_bigint::BigInt = e.iter().flat_map(|&a| 1..=a).map(num_bigint::BigInt::from).product();
        (e.clone(), Rational::new(1, fact))
    });
    MultiPoly::from_terms(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use crate::poly::tests::poly;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn e3() -> MultiPoly {
        poly(3, &[(&[1, 1, 0], q(1, 1)), (&[1, 0, 1], q(1, 1)), (&[0, 1, 1], q(1, 1))])
    }

    #[test]
    fn evaluation() {
        assert_eq!(e3().evaluate(&ints(&[1, 1, 1])).unwrap(), q(3, 1));
        let f = poly(2, &[(&[1, 0], q(1, 1)), (&[0, 1], q(1, 1))]);
        assert_eq!(f.evaluate(&[q(1, 2), q(1, 3)]).unwrap(), q(5, 6));
        let g = poly(2, &[(&[2, 1], q(3, 1)), (&[0, 0], q(-7, 2))]);
        assert_eq!(g.evaluate(&ints(&[0, 0])).unwrap(), q(-7, 2));
        assert_eq!(g.evaluate(&ints(&[0])), Err(PolyError::DimensionMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn hessians() {
        let f = poly(2, &[(&[2, 0], q(1, 1)), (&[1, 1], q(4, 1)), (&[0, 2], q(1, 1))]);
        let h = f.hessian_at(&[q(3, 7), q(-5, 1)]).unwrap();
        assert_eq!(h, RationalMatrix::from_ints(&[&[2, 4], &[4, 2]]).unwrap());
        let h = e3().hessian_at(&ints(&[2, 3, 4])).unwrap();
        assert_eq!(h, RationalMatrix::from_ints(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap());
        let cube = poly(1, &[(&[3], q(1, 1))]);
        assert_eq!(cube.hessian_at(&ints(&[1])).unwrap(), RationalMatrix::from_ints(&[&[6]]).unwrap());
    }

    #[test]
    fn predicate_examples() {
        let p = poly(3, &[(&[1, 1, 0], q(1, 1)), (&[0, 1, 1], q(1, 1))]).predicates();
        assert_eq!(p.homogeneous_degree, Some(2));
        assert!(p.is_multiaffine && p.has_nonnegative_coeffs);
        let p = poly(2, &[(&[2, 0], q(1, 1)), (&[0, 1], q(1, 1))]).predicates();
        assert!(!p.is_homogeneous());
        let p = poly(3, &[(&[1, 1, 0], q(1, 1)), (&[0, 0, 2], q(-1, 1))]).predicates();
        assert_eq!(p.homogeneous_degree, Some(2));
        assert!(!p.has_nonnegative_coeffs);
        assert!(!p.is_multiaffine);
    }

    #[test]
    fn normalized_generating_functions() {
        let j = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(generating_function_fj(&j).unwrap(), e3());
        let j = vec![vec![2, 0]];
        assert_eq!(generating_function_fj(&j).unwrap(), poly(2, &[(&[2, 0], q(1, 2))]));
        let j = vec![vec![1, 1], vec![2, 0], vec![0, 2]];
        assert_eq!(
            generating_function_fj(&j).unwrap(),
            poly(2, &[(&[1, 1], q(1, 1)), (&[2, 0], q(1, 2)), (&[0, 2], q(1, 2))])
        );
        let empty: Vec<Exponent> = vec![];
        assert_eq!(generating_function_fj(&empty), Err(PolyError::EmptyJ));
    }

    #[test]
    fn rayleigh_differences() {
        let one = q(1, 1);
        let lin = poly(2, &[(&[1, 0], q(1, 1)), (&[0, 1], q(1, 1))]);
        assert_eq!(lin.rayleigh_difference(0, 1, &one, &[0, 0]).unwrap(), poly(2, &[(&[0, 0], one.clone())]));
        // (x2+x3)(x1+x3) − f = x3²
        let delta = e3().rayleigh_difference(0, 1, &one, &[0, 0, 0]).unwrap();
        assert_eq!(delta, poly(3, &[(&[0, 0, 2], one.clone())]));
        let mono = poly(2, &[(&[1, 1], q(1, 1))]);
        assert!(mono.rayleigh_difference(0, 1, &one, &[0, 0]).unwrap().is_zero());
        assert_eq!(mono.rayleigh_difference(1, 1, &one, &[0, 0]), Err(PolyError::SameVariable));
    }

    #[test]
    fn line_restrictions() {
        let mono = poly(2, &[(&[1, 1], q(1, 1))]);
        let r = mono.restrict_to_line(&ints(&[0, 0]), &ints(&[1, 1])).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[0, 0, 1]));
        let h = poly(3, &[(&[1, 1, 0], q(1, 1)), (&[0, 0, 2], q(-1, 1))]);
        let r = h.restrict_to_line(&ints(&[-1, -1, 0]), &ints(&[1, 1, 0])).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[1, -2, 1]));
        let five = poly(2, &[(&[0, 0], q(5, 1))]);
        assert_eq!(five.restrict_to_line(&ints(&[3, 4]), &ints(&[1, 1])).unwrap(), UniPoly::from_ints(&[5]));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
    }

    fn random_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..=3, n), small_rational()), 0..6)
            .prop_map(move |terms| MultiPoly::from_terms(n, terms).unwrap())
    }

    fn random_homogeneous(n: usize, d: u32) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..=d, n - 1), small_rational()), 1..6).prop_map(move |terms| {
            let terms = terms.into_iter().filter_map(|(mut e, c)| {
                let s: u32 = e.iter().sum();
                (s <= d).then(|| {
                    e.push(d - s);
                    (e, c)
                })
            });
            MultiPoly::from_terms(n, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn partials_commute(f in random_poly(3), i in 0usize..3, j in 0usize..3) {
            let a = f.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
            let b = f.partial_derivative(j).unwrap().partial_derivative(i).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn line_restriction_consistent(
            f in random_poly(3),
            a in prop::collection::vec(small_rational(), 3),
            b in prop::collection::vec(small_rational(), 3),
            t in small_rational(),
        ) {
            let r = f.restrict_to_line(&a, &b).unwrap();
            let x: Vec<Rational> = a.iter().zip(&b).map(|(ai, bi)| ai + &t * bi).collect();
            prop_assert_eq!(r.eval(&t), f.evaluate(&x).unwrap());
        }

        #[test]
        fn euler_identity(f in random_homogeneous(3, 3), x in prop::collection::vec(small_rational(), 3)) {
            let d = f.homogeneous_degree().unwrap_or(3);
            let lhs: Rational = (0..3)
                .map(|i| &x[i] * f.partial_derivative(i).unwrap().evaluate(&x).unwrap())
                .sum();
            prop_assert_eq!(lhs, Rational::from(d as i64) * f.evaluate(&x).unwrap());
        }

        #[test]
        fn quadratic_hessian_constant(f in random_homogeneous(3, 2),
            x in prop::collection::vec(small_rational(), 3),
            y in prop::collection::vec(small_rational(), 3)) {
            prop_assert_eq!(f.hessian_at(&x).unwrap(), f.hessian_at(&y).unwrap());
        }
    }
}
