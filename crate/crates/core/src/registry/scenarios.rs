use super::{CheckOptions, Outcome, RegistryError, Scenario, Step};
use crate::checks::{c_rayleigh_check, is_lorentzian, stability_falsifier, Sampler};
use crate::kernel::{q, Rational};
use crate::matroid::{correlated_pairs, is_negatively_correlated, named};
use crate::positroid::{grassmann_necklace, is_positroid, positroid_from_necklace};
use crate::tropical::{is_in_dressian, is_in_positive_dressian, specialize, PuiseuxMatrix};
use crate::verdict::{Status, Verdict};

pub const SCENARIO_NAMES: [&str; 4] =
    ["choe-wagner-L", "fano-not-positroid", "vamos-rayleigh-sample", "vandermonde-positroid-pipeline"];

/// Default per-scenario sample budget; `--samples` overrides it.
const SCENARIO_SAMPLES: usize = 1000;

pub(super) fn all() -> Vec<Box<dyn Scenario>> {
    vec![Box::new(ChoeWagnerL), Box::new(FanoNotPositroid), Box::new(VamosRayleigh), Box::new(VandermondePipeline)]
}

fn exact_and_rounded(v: &Rational) -> String {
    format!("{v} ≈ {}", v.to_decimal_string(5))
}

fn step(name: impl Into<String>, verdict: &Verdict) -> Step {
    Step { name: name.into(), verdict: verdict.clone() }
}

fn nonnegative_sampler(o: &CheckOptions) -> Sampler {
    Sampler::nonnegative(o.seed, o.samples.unwrap_or(SCENARIO_SAMPLES))
}

struct ChoeWagnerL;

impl Scenario for ChoeWagnerL {
    fn name(&self) -> &'static str {
        "choe-wagner-L"
    }

    fn description(&self) -> &'static str {
        "transversal matroid L: a correlated pair, 1-Rayleigh failure and the 8/7 re-check"
    }

    /// The top-level verdict is the 1-Rayleigh check.
    fn run(&self, o: &CheckOptions) -> Result<Outcome, RegistryError> {
        let l = named("choe-wagner-L")?;
        let f = l.basis_generating_polynomial();
        let correlation = is_negatively_correlated(&l);
        let one = c_rayleigh_check(&f, &Rational::one(), &nonnegative_sampler(o))?;
        let eight_sevenths = c_rayleigh_check(&f, &q(8, 7), &nonnegative_sampler(o))?;
        let mut out = Outcome::new(one.clone()).detail("bases", l.num_bases());
        for (i, j, stats) in correlated_pairs(&l) {
            let pair = l.ground().format_set(crate::subset::BitSet::from_elements([i, j]));
            let (both, split) = stats.rayleigh_products();
            out = out
                .detail(format!("{pair} Pr(both)·Pr(neither)"), exact_and_rounded(&both))
                .detail(format!("{pair} Pr(i only)·Pr(j only)"), exact_and_rounded(&split));
        }
        out.steps = vec![
            step("negatively correlated", &correlation),
            step("1-Rayleigh", &one),
            step("8/7-Rayleigh", &eight_sevenths),
        ];
        Ok(out)
    }
}

struct FanoNotPositroid;

impl Scenario for FanoNotPositroid {
    fn name(&self) -> &'static str {
        "fano-not-positroid"
    }

    fn description(&self) -> &'static str {
        "the Fano plane fails the necklace round trip"
    }

    fn run(&self, _: &CheckOptions) -> Result<Outcome, RegistryError> {
        let fano = named("fano")?;
        let necklace = grassmann_necklace(&fano);
        let envelope = positroid_from_necklace(&necklace)?;
        let verdict = is_positroid(&fano);
        let sets: Vec<String> = necklace.sets().iter().map(|s| fano.ground().format_set(*s)).collect();
        let mut out = Outcome::new(verdict.clone())
            .detail("bases", fano.num_bases())
            .detail("necklace", sets.join(" "))
            .detail("necklace positroid bases", envelope.num_bases());
        out.steps = vec![step("positroid", &verdict)];
        Ok(out)
    }
}

struct VamosRayleigh;

impl Scenario for VamosRayleigh {
    fn name(&self) -> &'static str {
        "vamos-rayleigh-sample"
    }

    fn description(&self) -> &'static str {
        "the Vámos matroid: not a positroid, negatively correlated, sampled 1-Rayleigh"
    }

    /// The top-level verdict is the sampled 1-Rayleigh check.
    fn run(&self, o: &CheckOptions) -> Result<Outcome, RegistryError> {
        let vamos = named("vamos")?;
        let positroid = is_positroid(&vamos);
        let correlation = is_negatively_correlated(&vamos);
        let rayleigh =
            c_rayleigh_check(&vamos.basis_generating_polynomial(), &Rational::one(), &nonnegative_sampler(o))?;
        let mut out = Outcome::new(rayleigh.clone()).detail("bases", vamos.num_bases());
        out.steps = vec![
            step("positroid", &positroid),
            step("negatively correlated", &correlation),
            step("1-Rayleigh", &rayleigh),
        ];
        Ok(out)
    }
}

struct VandermondePipeline;

/// Number of sampled lines per `t0` in the pipeline scenario.
const PIPELINE_LINES: usize = 1000;

impl Scenario for VandermondePipeline {
    fn name(&self) -> &'static str {
        "vandermonde-positroid-pipeline"
    }

    fn description(&self) -> &'static str {
        "Puiseux Vandermonde matrix: minors, positive Dressian, Lorentzian and stable specializations"
    }

    /// The top-level verdict is the weakest step.
    fn run(&self, o: &CheckOptions) -> Result<Outcome, RegistryError> {
        let a = PuiseuxMatrix::vandermonde(2, &[q(3, 1), q(2, 1), q(1, 1), q(0, 1)])?;
        let minors = a.maximal_minors()?;
        let weights = a.weights()?;
        let m = weights.matroid().clone();
        let f = a.representing_polynomial()?;
        let mut out =
            Outcome::new(Verdict::sampled()).detail("positive leading coefficients", a.is_eventually_nonnegative()?);
        for (s, p) in &minors {
            out = out.detail(format!("p{}", m.ground().format_set(*s)), p);
        }
        let mut steps = vec![
            step("dressian", &is_in_dressian(&m, &weights)?),
            step("positive dressian", &is_in_positive_dressian(&m, &weights)?),
        ];
        let sampler = Sampler::signed(o.seed, o.samples.unwrap_or(PIPELINE_LINES));
        for t0 in [q(1, 2), q(1, 4), q(1, 8)] {
            let g = specialize(&f, &t0)?;
            steps.push(step(format!("lorentzian at t0 = {t0}"), &is_lorentzian(&g)?));
            steps.push(step(format!("stable at t0 = {t0}"), &stability_falsifier(&g, &sampler)?));
        }
        out.verdict = weakest(&steps);
        out.steps = steps;
        Ok(out)
    }
}

/// First failing step, else a sampled pass if any step was sampled, else the
/// first certified pass.
fn weakest(steps: &[Step]) -> Verdict {
    let worst = steps.iter().map(|s| s.verdict.status).max().unwrap_or(Status::PassCertified);
    steps.iter().find(|s| s.verdict.status == worst).map(|s| s.verdict.clone()).unwrap_or_else(Verdict::sampled)
}
