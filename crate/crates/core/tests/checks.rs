use poslab::checks::{
    c_rayleigh_check, is_lorentzian, is_mconvex_function, is_mconvex_set, is_valuated_matroid, stability_falsifier,
    strongly_rayleigh_check, DiscreteFunction, FunctionMode, Sampler, SetMode,
};
use poslab::kernel::q;
use poslab::matroid::{named, uniform};
use poslab::{BitSet, Convention, MultiPoly, Rational, Status, Verdict, Witness};
use proptest::prelude::*;

/// Multiaffine polynomial with nonnegative integer coefficients on `n`
/// variables, homogeneous of degree `k`.
fn multiaffine(n: usize, k: usize) -> impl Strategy<Value = MultiPoly> {
    let sets = BitSet::k_subsets(n, k);
    prop::collection::vec(0i64..=3, sets.len()).prop_filter_map("zero polynomial", move |coeffs| {
        let terms = sets.iter().zip(coeffs).filter(|(_, c)| *c > 0).map(|(s, c)| (s.indicator(n), Rational::from(c)));
        let f = MultiPoly::from_terms(n, terms).unwrap();
        (!f.is_zero()).then_some(f)
    })
}

/// Nonnegative polynomial of total degree 2 or 3 in three variables.
fn nonnegative(degree: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0..=degree, 0..=degree, 0i64..=4), 1..=6).prop_filter_map("zero polynomial", move |terms| {
        let terms = terms
            .into_iter()
            .filter(|(a, b, _)| a + b <= degree)
            .map(|(a, b, c)| (vec![a, b, degree - a - b], Rational::from(c)));
        let f = MultiPoly::from_terms(3, terms).unwrap();
        (!f.is_zero()).then_some(f)
    })
}

/// A failing verdict's witness, re-evaluated from scratch.
fn reverify(f: &MultiPoly, v: &Verdict) {
    match &v.witness {
        None => assert!(v.is_pass()),
        Some(Witness::RayleighPoint { i, j, alpha, c, point, delta }) => {
            let d = f.rayleigh_difference(*i, *j, c, alpha).unwrap().evaluate(point).unwrap();
            assert_eq!(&d, delta);
            assert!(d.is_negative());
        }
        Some(Witness::Line { base, direction, restriction, roots }) => {
            assert_eq!(&f.restrict_to_line(base, direction).unwrap(), restriction);
            assert!(!restriction.real_root_count().unwrap().all_real);
            assert!(!roots.all_real);
        }
        Some(Witness::DegreeDrop { base, direction, restriction }) => {
            assert_eq!(&f.restrict_to_line(base, direction).unwrap(), restriction);
            assert!(direction.iter().all(Rational::is_positive));
            assert!(restriction.degree() < f.total_degree());
        }
        Some(Witness::HessianSignature { alpha, signature }) => {
            let g = f.derivative(alpha).unwrap();
            let ones = vec![Rational::one(); f.nvars()];
            let sig = g.hessian_at(&ones).unwrap().eigen_signature().unwrap();
            assert_eq!(&sig, signature);
            assert!(sig.positive >= 2);
        }
        Some(Witness::NegativeCoefficient { exponent, coeff }) => {
            assert_eq!(f.coeff(exponent), Some(coeff));
            assert!(coeff.is_negative());
        }
        Some(Witness::NotHomogeneous { .. } | Witness::SetExchange { .. } | Witness::DegreeMismatch { .. }) => {
            assert!(
                is_mconvex_set(&f.support(), SetMode::Exchange).map(|v| v.is_fail()).unwrap_or(true)
                    || f.homogeneous_degree().is_none()
            );
        }
        Some(other) => panic!("unexpected witness {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rayleigh_and_stability_witnesses_reverify(f in (3usize..=4).prop_flat_map(|n| (1..n).prop_flat_map(move |k| multiaffine(n, k)))) {
        let strong = strongly_rayleigh_check(&f, &Sampler::signed(3, 200)).unwrap();
        reverify(&f, &strong);
        let stable = stability_falsifier(&f, &Sampler::signed(3, 200)).unwrap();
        reverify(&f, &stable);
        for c in [q(1, 1), q(8, 7), q(2, 1)] {
            reverify(&f, &c_rayleigh_check(&f, &c, &Sampler::nonnegative(3, 100)).unwrap());
        }
        // A certified strong Rayleigh pass and an exact stability failure contradict each other.
        prop_assert!(!(strong.status == Status::PassCertified && stable.is_fail()));
    }

    #[test]
    fn lorentzian_witnesses_reverify(f in (2u32..=3).prop_flat_map(nonnegative)) {
        reverify(&f, &is_lorentzian(&f).unwrap());
    }

    #[test]
    fn scaling_preserves_verdicts(f in (2u32..=3).prop_flat_map(nonnegative), num in 1i64..=9, den in 1i64..=9) {
        let lambda = q(num, den);
        let g = f.scale(&lambda);
        prop_assert_eq!(is_lorentzian(&f).unwrap().status, is_lorentzian(&g).unwrap().status);
        for c in [q(1, 1), q(8, 7)] {
            let sampler = Sampler::nonnegative(1, 50);
            let a = c_rayleigh_check(&f, &c, &sampler).unwrap();
            let b = c_rayleigh_check(&g, &c, &sampler).unwrap();
            prop_assert_eq!(a.status, b.status);
        }
    }

    #[test]
    fn local_and_symmetric_exchange_agree(values in prop::collection::vec(-3i64..=3, 6)) {
        let sets = BitSet::k_subsets(4, 2);
        let mu = DiscreteFunction::on_sets(4, sets.into_iter().zip(values.into_iter().map(Rational::from)), Convention::MinPlus).unwrap();
        let symmetric = is_mconvex_function(&mu, FunctionMode::Symmetric).unwrap();
        let local = is_mconvex_function(&mu, FunctionMode::Local).unwrap();
        prop_assert_eq!(symmetric.is_pass(), local.is_pass());
        prop_assert_eq!(is_valuated_matroid(&mu).unwrap().verdict.is_pass(), symmetric.is_pass());
    }
}

#[test]
fn uniform_basis_polynomials_are_lorentzian() {
    for n in 1..=6 {
        for k in 0..=n {
            let f = uniform(k, n).unwrap().basis_generating_polynomial();
            let support = f.support();
            assert!(is_mconvex_set(&support, SetMode::WithSymmetric).unwrap().is_pass());
            assert_eq!(is_lorentzian(&f).unwrap().status, Status::PassCertified, "U_{{{k},{n}}}");
        }
    }
}

#[test]
fn corpus_witnesses_reverify() {
    let sampler = Sampler::signed(0, 300);
    for name in ["fano", "vamos", "choe-wagner-L"] {
        let f = named(name).unwrap().basis_generating_polynomial();
        reverify(&f, &strongly_rayleigh_check(&f, &sampler).unwrap());
        reverify(&f, &stability_falsifier(&f, &sampler).unwrap());
        reverify(&f, &c_rayleigh_check(&f, &Rational::one(), &Sampler::nonnegative(0, 200)).unwrap());
    }
}
