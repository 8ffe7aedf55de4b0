use super::sampler::Sampler;
use super::CheckError;
use crate::kernel::Rational;
use crate::poly::MultiPoly;
use crate::verdict::{Verdict, Witness};

/// Real-rootedness of `f` along sampled lines `a + t·b` with `b > 0`.
///
/// A line with a non-real root proves `f` is not real stable; for
/// homogeneous `f` this is the same as failing the `Re > 0` half-plane
/// property. A restriction of degree below `deg f` is also a witness: the
/// top-degree part of a stable polynomial cannot vanish at a positive point.
pub fn stability_falsifier(f: &MultiPoly, sampler: &Sampler) -> Result<Verdict, CheckError> {
    if f.is_zero() {
        return Err(CheckError::ZeroPolynomial);
    }
    sampler.validate()?;
    let n = f.nvars();
    let degree = f.total_degree().expect("nonzero");
    let mut rng = sampler.rng();
    let mut samples = 0u64;
    for _ in 0..sampler.count {
        let base = sampler.draw(&mut rng, n).to_rationals();
        let direction = sampler.draw_positive(&mut rng, n).to_rationals();
        samples += 1;
        let restriction = f.restrict_to_line(&base, &direction)?;
        if restriction.degree() != Some(degree) {
            return Ok(Verdict::fail(Witness::DegreeDrop { base, direction, restriction }).with_samples(samples));
        }
        let roots = restriction.real_root_count()?;
        if !roots.all_real {
            return Ok(Verdict::fail(Witness::Line { base, direction, restriction, roots }).with_samples(samples));
        }
    }
    Ok(Verdict::sampled().with_samples(samples))
}

/// Whether hyperbolicity sampling also tests the nonnegative orthant
/// against the hyperbolicity cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConeMode {
    #[default]
    Off,
    /// Sample `x ≥ 0` and require `t ↦ h(te − x)` to have no negative
    /// root, i.e. `λ_min(x) ≥ 0`.
    Orthant,
}

/// Sampled test that `t ↦ h(t·e − x)` is real-rooted.
pub fn hyperbolicity_check(
    h: &MultiPoly,
    e: &[Rational],
    sampler: &Sampler,
    cone: ConeMode,
) -> Result<Verdict, CheckError> {
    if h.is_zero() {
        return Err(CheckError::ZeroPolynomial);
    }
    if h.homogeneous_degree().is_none() {
        return Err(CheckError::NotHomogeneous);
    }
    if h.evaluate(e)?.is_zero() {
        return Err(CheckError::EOnVanishingLocus);
    }
    let mut sampler = sampler.clone();
    if cone == ConeMode::Orthant && sampler.lo.is_negative() {
        sampler.lo = Rational::zero();
    }
    sampler.validate()?;
    let n = h.nvars();
    let mut samples = 0u64;
    for point in sampler.points(n) {
        samples += 1;
        let x = point.to_rationals();
        let neg_x: Vec<Rational> = x.iter().map(|v| -v).collect();
        let restriction = h.restrict_to_line(&neg_x, e)?;
        let roots = restriction.real_root_count()?;
        let negative_roots = match cone {
            ConeMode::Orthant => Some(restriction.negative_root_count()?),
            ConeMode::Off => None,
        };
        if !roots.all_real || negative_roots.is_some_and(|k| k > 0) {
            let w = Witness::HyperbolicPoint { point: x, restriction, roots, negative_roots };
            return Ok(Verdict::fail(w).with_samples(samples));
        }
    }
    Ok(Verdict::sampled().with_samples(samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::UniPoly;
    use crate::matroid::{named, uniform};
    use crate::verdict::Status;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), Rational::from(*c)))).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn stability_examples() {
        let s = Sampler::signed(11, 1000);
        let u24 = uniform(2, 4).unwrap().basis_generating_polynomial();
        let v = stability_falsifier(&u24, &s).unwrap();
        assert_eq!((v.status, v.effort.samples), (Status::PassSampled, 1000));
        let x1x2 = poly(2, &[(&[1, 1], 1)]);
        assert_eq!(stability_falsifier(&x1x2, &s).unwrap().status, Status::PassSampled);
        let fano = named("fano").unwrap().basis_generating_polynomial();
        let v = stability_falsifier(&fano, &Sampler::signed(11, 20_000)).unwrap();
        match v.witness {
            Some(Witness::Line { base, direction, restriction, .. }) => {
                assert!(direction.iter().all(Rational::is_positive));
                assert_eq!(fano.restrict_to_line(&base, &direction).unwrap(), restriction);
                assert!(!restriction.real_root_count().unwrap().all_real);
            }
            other => panic!("expected a line witness, got {other:?}"),
        }
        // Real-rooted on every line, but zero at x1 = x4 = i.
        let split = poly(4, &[(&[1, 1, 0, 0], 1), (&[1, 0, 1, 0], 1), (&[0, 1, 0, 1], -1), (&[0, 0, 1, 1], -1)]);
        match stability_falsifier(&split, &s).unwrap().witness {
            Some(Witness::DegreeDrop { direction, restriction, .. }) => {
                assert_eq!(direction[0], direction[3]);
                assert!(restriction.degree() < Some(2));
            }
            other => panic!("expected a degree drop, got {other:?}"),
        }
    }

    #[test]
    fn hyperbolicity_examples() {
        let s = Sampler::signed(4, 500);
        let lorentz = poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]);
        let v = hyperbolicity_check(&lorentz, &ints(&[1, 1, 0]), &s, ConeMode::Off).unwrap();
        assert_eq!(v.status, Status::PassSampled);
        let circle = poly(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let v = hyperbolicity_check(&circle, &ints(&[1, 0]), &s, ConeMode::Off).unwrap();
        assert!(v.is_fail());
        // The documented point: h(t·e − (0,1)) = t² + 1.
        let r = circle.restrict_to_line(&ints(&[0, -1]), &ints(&[1, 0])).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[1, 0, 1]));
        assert!(!r.real_root_count().unwrap().all_real);
        let x1x2 = poly(2, &[(&[1, 1], 1)]);
        let v = hyperbolicity_check(&x1x2, &ints(&[1, 1]), &s, ConeMode::Orthant).unwrap();
        assert_eq!(v.status, Status::PassSampled);
    }

    #[test]
    fn cone_mode_detects_negative_eigenvalues() {
        // For h = x1·x2 and e = (1, −1) the orthant is not inside the cone.
        let x1x2 = poly(2, &[(&[1, 1], 1)]);
        let s = Sampler::nonnegative(4, 200);
        let v = hyperbolicity_check(&x1x2, &ints(&[1, -1]), &s, ConeMode::Orthant).unwrap();
        assert!(matches!(v.witness, Some(Witness::HyperbolicPoint { negative_roots: Some(k), .. }) if k > 0));
    }

    #[test]
    fn hyperbolicity_input_errors() {
        let s = Sampler::signed(4, 10);
        let x1x2 = poly(2, &[(&[1, 1], 1)]);
        assert_eq!(hyperbolicity_check(&x1x2, &ints(&[1, 0]), &s, ConeMode::Off), Err(CheckError::EOnVanishingLocus));
        let inhom = poly(2, &[(&[1, 1], 1), (&[1, 0], 1)]);
        assert_eq!(hyperbolicity_check(&inhom, &ints(&[1, 1]), &s, ConeMode::Off), Err(CheckError::NotHomogeneous));
    }
}
