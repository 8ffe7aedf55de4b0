use std::borrow::Cow;
use std::collections::BTreeSet;

use super::{Check, CheckOptions, Outcome, RegistryError, Subject};
use crate::checks::{
    c_rayleigh_check, hyperbolicity_check, is_lorentzian, is_mconvex_set, stability_falsifier, strongly_rayleigh_check,
    Sampler, SetMode,
};
use crate::matroid::{correlated_pairs, is_balanced, is_negatively_correlated, Matroid};
use crate::poly::MultiPoly;
use crate::positroid::{is_positroid, positroid_of_matrix, representing_polynomial};
use crate::tropical::{
    is_in_dressian, is_in_positive_dressian, is_valuated_flag, lift_to_lorentzian, lorentzian_schedule, specialize,
};

pub const DEFAULT_SAMPLES: usize = Sampler::DEFAULT_COUNT;
/// Sample budget of the strongly Rayleigh search before its fixed grid.
pub const STRONG_RAYLEIGH_SAMPLES: usize = 100_000;

pub(super) fn all() -> Vec<Box<dyn Check>> {
    macro_rules! check {
        ($name:literal, $desc:literal, $run:path) => {{
            struct C;
            impl Check for C {
                fn name(&self) -> &'static str {
                    $name
                }
                fn description(&self) -> &'static str {
                    $desc
                }
                fn run(&self, subject: &Subject, options: &CheckOptions) -> Result<Outcome, RegistryError> {
                    $run(subject, options)
                }
            }
            Box::new(C) as Box<dyn Check>
        }};
    }
    vec![
        check!("validate", "basis exchange axiom of a set family", validate),
        check!("positroid", "necklace round trip, or total nonnegativity of a matrix", positroid),
        check!("correlated", "negative correlation of every pair of elements", correlated),
        check!("balanced", "negative correlation of every minor", balanced),
        check!("rayleigh", "sampled c-Rayleigh check on the nonnegative orthant", rayleigh),
        check!("strong-rayleigh", "sampled Rayleigh check on all of real space", strong_rayleigh),
        check!("stable", "real-rootedness along sampled positive lines", stable),
        check!("lorentzian", "exact Lorentzian test", lorentzian),
        check!("hyperbolic", "sampled hyperbolicity in direction e", hyperbolic),
        check!("dressian", "three-term tropical Plücker relations", dressian),
        check!("positive-dressian", "positive three-term tropical Plücker relations", positive_dressian),
        check!("flag", "tropical incidence relations of a flag", flag),
        check!("lift", "Lorentzian lift of a valuated matroid, checked at small t", lift),
    ]
}

fn matroid<'a>(check: &'static str, s: &'a Subject) -> Result<&'a Matroid, RegistryError> {
    match s {
        Subject::Matroid(m) => Ok(m),
        _ => Err(RegistryError::WrongSubject { check, expected: "a matroid" }),
    }
}

/// Polynomial view: basis generating polynomial of a matroid, or the
/// representing polynomial of a matrix.
fn polynomial<'a>(check: &'static str, s: &'a Subject) -> Result<Cow<'a, MultiPoly>, RegistryError> {
    match s {
        Subject::Poly(f) => Ok(Cow::Borrowed(f)),
        Subject::Matroid(m) => Ok(Cow::Owned(m.basis_generating_polynomial())),
        Subject::Matrix(a) => Ok(Cow::Owned(representing_polynomial(a)?)),
        _ => Err(RegistryError::WrongSubject { check, expected: "a polynomial, matroid or matrix" }),
    }
}

fn samples(options: &CheckOptions, default: usize) -> usize {
    options.samples.unwrap_or(default)
}

fn validate(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    let (n, sets): (usize, Cow<'_, [_]>) = match s {
        Subject::Family { n, sets } => (*n, Cow::Borrowed(sets.as_slice())),
        Subject::Matroid(m) => (m.n(), Cow::Borrowed(m.bases())),
        _ => return Err(RegistryError::WrongSubject { check: "validate", expected: "a set family" }),
    };
    let points: BTreeSet<Vec<u32>> = sets.iter().map(|b| b.indicator(n)).collect();
    let verdict = is_mconvex_set(&points, SetMode::WithSymmetric)?;
    Ok(Outcome::new(verdict).detail("sets", points.len()))
}

fn positroid(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    match s {
        Subject::Matrix(a) => {
            let (m, verdict) = positroid_of_matrix(a)?;
            Ok(Outcome::new(verdict).detail("bases", m.num_bases()))
        }
        _ => {
            let m = matroid("positroid", s)?;
            Ok(Outcome::new(is_positroid(m)).detail("bases", m.num_bases()))
        }
    }
}

fn correlated(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    let m = matroid("correlated", s)?;
    let mut out = Outcome::new(is_negatively_correlated(m));
    for (i, j, stats) in correlated_pairs(m) {
        let pair = m.ground().format_set(crate::subset::BitSet::from_elements([i, j]));
        let (both, split) = stats.rayleigh_products();
        out = out.detail(
            format!("correlated {pair}"),
            format!("Pr(both)Pr(neither) = {both}, Pr(i only)Pr(j only) = {split}"),
        );
    }
    Ok(out)
}

fn balanced(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    Ok(Outcome::new(is_balanced(matroid("balanced", s)?)))
}

fn rayleigh(s: &Subject, o: &CheckOptions) -> Result<Outcome, RegistryError> {
    let f = polynomial("rayleigh", s)?;
    let c = o.c.as_ref().ok_or(RegistryError::MissingOption { check: "rayleigh", option: "c" })?;
    let sampler = Sampler::nonnegative(o.seed, samples(o, DEFAULT_SAMPLES));
    Ok(Outcome::new(c_rayleigh_check(&f, c, &sampler)?).detail("c", c))
}

fn strong_rayleigh(s: &Subject, o: &CheckOptions) -> Result<Outcome, RegistryError> {
    let f = polynomial("strong-rayleigh", s)?;
    let sampler = Sampler::signed(o.seed, samples(o, STRONG_RAYLEIGH_SAMPLES));
    Ok(Outcome::new(strongly_rayleigh_check(&f, &sampler)?))
}

fn stable(s: &Subject, o: &CheckOptions) -> Result<Outcome, RegistryError> {
    let f = polynomial("stable", s)?;
    let sampler = Sampler::signed(o.seed, samples(o, DEFAULT_SAMPLES));
    Ok(Outcome::new(stability_falsifier(&f, &sampler)?))
}

fn lorentzian(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    let f = polynomial("lorentzian", s)?;
    Ok(Outcome::new(is_lorentzian(&f)?))
}

fn hyperbolic(s: &Subject, o: &CheckOptions) -> Result<Outcome, RegistryError> {
    let h = polynomial("hyperbolic", s)?;
    let e = o.e.as_ref().ok_or(RegistryError::MissingOption { check: "hyperbolic", option: "e" })?;
    let sampler = Sampler::signed(o.seed, samples(o, DEFAULT_SAMPLES));
    Ok(Outcome::new(hyperbolicity_check(&h, e, &sampler, o.cone)?))
}

fn weighted<'a>(
    check: &'static str,
    s: &'a Subject,
) -> Result<(&'a Matroid, &'a crate::tropical::WeightVector), RegistryError> {
    match s {
        Subject::Weighted { matroid, weights } => Ok((matroid, weights)),
        _ => Err(RegistryError::WrongSubject { check, expected: "a weight vector" }),
    }
}

fn dressian(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    let (m, w) = weighted("dressian", s)?;
    Ok(Outcome::new(is_in_dressian(m, w)?))
}

fn positive_dressian(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    let (m, w) = weighted("positive-dressian", s)?;
    Ok(Outcome::new(is_in_positive_dressian(m, w)?))
}

fn flag(s: &Subject, _: &CheckOptions) -> Result<Outcome, RegistryError> {
    match s {
        Subject::Chain(chain) => Ok(Outcome::new(is_valuated_flag(chain)?)),
        _ => Err(RegistryError::WrongSubject { check: "flag", expected: "a flag chain" }),
    }
}

fn lift(s: &Subject, o: &CheckOptions) -> Result<Outcome, RegistryError> {
    let (m, w) = weighted("lift", s)?;
    if w.matroid() != m {
        return Err(crate::tropical::TropicalError::SupportMismatch.into());
    }
    let f = lift_to_lorentzian(w)?;
    match &o.t0 {
        Some(t0) => {
            let g = specialize(&f, t0)?;
            Ok(Outcome::new(is_lorentzian(&g)?).detail("lift", &f).detail(format!("f({t0})"), g))
        }
        None => {
            let schedule = lorentzian_schedule(&f)?;
            let mut out = Outcome::new(schedule.steps.last().expect("nonempty").verdict.clone()).detail("lift", &f);
            for step in &schedule.steps {
                out = out.detail(format!("t0 = {}", step.t0), step.verdict.status.label());
            }
            Ok(out.detail("stable", schedule.stable))
        }
    }
}
