//! Acceptance run: one PASS/FAIL line per criterion, each checked against
//! its time limit. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use poslab::checks::{
    c_rayleigh_check, is_lorentzian, is_valuated_matroid, stability_falsifier, strongly_rayleigh_check, Sampler,
};
use poslab::kernel::q;
use poslab::matroid::{is_negatively_correlated, named, pair_stats, uniform};
use poslab::positroid::is_positroid;
use poslab::tropical::{
    flag_lorentzian_lift, is_in_dressian, is_in_positive_dressian, is_valuated_flag, specialize, tropicalize,
    FlagChain, PuiseuxMatrix, WeightVector,
};
use poslab::{BitSet, Certificate, Convention, MultiPoly, Rational, Status, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn set(elems: &[usize]) -> BitSet {
    BitSet::from_elements(elems.iter().map(|e| e - 1))
}

fn poly(n: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    MultiPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), Rational::from(*c)))).unwrap()
}

fn l_pair_values() -> Outcome {
    let l = named("choe-wagner-L").map_err(|e| e.to_string())?;
    let n = l.n();
    for i in 0..n {
        for j in i + 1..n {
            let stats = pair_stats(&l, i, j).map_err(|e| e.to_string())?;
            let (both, split) = stats.rayleigh_products();
            if both.to_decimal_string(5) == "0.04355" && split.to_decimal_string(5) == "0.04298" && both > split {
                let pair = l.ground().format_set(BitSet::from_elements([i, j]));
                return Ok(format!("pair {pair}: {both} vs {split}"));
            }
        }
    }
    Err("no pair rounds to 0.04355 / 0.04298".into())
}

fn l_not_rayleigh() -> Outcome {
    let l = named("choe-wagner-L").map_err(|e| e.to_string())?;
    ensure(is_negatively_correlated(&l).is_fail(), "L reported negatively correlated")?;
    let f = l.basis_generating_polynomial();
    let v = c_rayleigh_check(&f, &Rational::one(), &Sampler::nonnegative(SEED, 100)).map_err(|e| e.to_string())?;
    match v.witness {
        Some(Witness::RayleighPoint { ref point, ref delta, .. }) => {
            ensure(point.iter().all(Rational::is_one), "witness is not the all-ones point")?;
            Ok(format!("1-Rayleigh fails at all-ones, delta = {delta}"))
        }
        other => Err(format!("expected a Rayleigh witness, got {other:?}")),
    }
}

fn l_eight_sevenths() -> Outcome {
    let l = named("choe-wagner-L").map_err(|e| e.to_string())?;
    let f = l.basis_generating_polynomial();
    let sampler = Sampler::nonnegative(SEED, 10_000);
    let v = c_rayleigh_check(&f, &q(8, 7), &sampler).map_err(|e| e.to_string())?;
    ensure(v.status == Status::PassSampled, format!("status {}", v.status.label()))?;
    Ok(format!("{} points x {} relations, no violation", v.effort.samples, v.effort.relations))
}

fn positroids() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for k in 0..=3.min(n) {
            let m = uniform(k, n).map_err(|e| e.to_string())?;
            ensure(is_positroid(&m).status == Status::PassCertified, format!("U_{{{k},{n}}} rejected"))?;
            count += 1;
        }
    }
    let mut witnesses = Vec::new();
    for name in ["fano", "vamos"] {
        let m = named(name).map_err(|e| e.to_string())?;
        match is_positroid(&m).witness {
            Some(Witness::MissingBasis { set }) => {
                ensure(!m.is_basis(set), format!("{name}: witness {set:?} is a basis"))?;
                witnesses.push(format!("{name} missing {}", m.ground().format_set(set)));
            }
            other => return Err(format!("{name}: expected a missing basis, got {other:?}")),
        }
    }
    Ok(format!("{count} uniform matroids pass; {}", witnesses.join(", ")))
}

fn pipeline() -> Outcome {
    let err = |e: poslab::tropical::TropicalError| e.to_string();
    let a = PuiseuxMatrix::vandermonde(2, &[q(3, 1), q(2, 1), q(1, 1), q(0, 1)]).map_err(err)?;
    let minors = a.maximal_minors().map_err(err)?;
    ensure(minors.values().all(|p| p.leading_coeff().is_some_and(Rational::is_positive)), "a minor leads negatively")?;
    let w = a.weights().map_err(err)?;
    let got: Vec<Rational> = BitSet::k_subsets(4, 2).into_iter().map(|s| w.min_plus(s).unwrap()).collect();
    let want: Vec<Rational> = [2, 1, 0, 1, 0, 0].iter().map(|&v| q(v, 1)).collect();
    ensure(got == want, format!("weights {got:?}"))?;
    let m = w.matroid().clone();
    ensure(is_in_dressian(&m, &w).map_err(err)?.is_pass(), "not in the Dressian")?;
    ensure(is_in_positive_dressian(&m, &w).map_err(err)?.is_pass(), "not in the positive Dressian")?;
    let f = a.representing_polynomial().map_err(err)?;
    let sampler = Sampler::signed(SEED, 1000);
    for t0 in [q(1, 2), q(1, 4), q(1, 8)] {
        let g = specialize(&f, &t0).map_err(err)?;
        let lorentz = is_lorentzian(&g).map_err(|e| e.to_string())?;
        ensure(lorentz.status == Status::PassCertified, format!("Lorentzian at {t0}: {}", lorentz.status.label()))?;
        let stable = stability_falsifier(&g, &sampler).map_err(|e| e.to_string())?;
        ensure(stable.status == Status::PassSampled, format!("stable at {t0}: {}", stable.status.label()))?;
    }
    Ok("weights (2,1,0,1,0,0); Lorentzian certified and 1000 real-rooted lines at t0 = 1/2, 1/4, 1/8".into())
}

fn fano_strongly_rayleigh() -> Outcome {
    let fano = named("fano").map_err(|e| e.to_string())?;
    let f = fano.basis_generating_polynomial();
    let v = strongly_rayleigh_check(&f, &Sampler::signed(SEED, 100_000)).map_err(|e| e.to_string())?;
    match v.witness {
        Some(Witness::RayleighPoint { i, j, ref alpha, ref c, ref point, ref delta }) => {
            let d = f.rayleigh_difference(i, j, c, alpha).and_then(|r| r.evaluate(point)).map_err(|e| e.to_string())?;
            ensure(&d == delta && d.is_negative(), format!("witness re-evaluates to {d}, reported {delta}"))?;
            let point: Vec<String> = point.iter().map(ToString::to_string).collect();
            Ok(format!(
                "pair ({},{}) at ({}): delta = {d}, after {} points",
                i + 1,
                j + 1,
                point.join(", "),
                v.effort.samples
            ))
        }
        other => Err(format!("expected a Rayleigh witness, got {:?} ({other:?})", v.status)),
    }
}

fn dressian_oracle() -> Outcome {
    let m = uniform(2, 4).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut inside, mut outside) = (0, 0);
    for trial in 0..1000 {
        let values: Vec<(BitSet, Rational)> =
            m.bases().iter().map(|&b| (b, Rational::from(rng.random_range(-3i64..=3)))).collect();
        let w = WeightVector::from_finite(4, values, Convention::MinPlus).map_err(|e| e.to_string())?;
        let tropical = is_in_dressian(&m, &w).map_err(|e| e.to_string())?.is_pass();
        let exchange = is_valuated_matroid(&w.to_discrete_function()).map_err(|e| e.to_string())?.verdict.is_pass();
        ensure(tropical == exchange, format!("instance {trial} disagrees: {:?}", w.values()))?;
        if tropical {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    Ok(format!("1000/1000 agree ({inside} valuated, {outside} not)"))
}

fn lorentzian_exact() -> Outcome {
    let check = |f: &MultiPoly| is_lorentzian(f).map_err(|e| e.to_string());
    let good = check(&poly(2, &[(&[2, 0], 1), (&[1, 1], 4), (&[0, 2], 1)]))?;
    ensure(good.status == Status::PassCertified, "x1^2+4x1x2+x2^2 not certified")?;
    let bad = check(&poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]))?;
    ensure(bad.is_fail(), "x1^2+x1x2+x2^2 not rejected")?;
    let mut count = 0;
    for n in 1..=6 {
        for k in 0..=n {
            let v = check(&uniform(k, n).map_err(|e| e.to_string())?.basis_generating_polynomial())?;
            ensure(
                matches!(v.certificate, Some(Certificate::Lorentzian { .. })),
                format!("U_{{{k},{n}}}: {}", v.status.label()),
            )?;
            count += 1;
        }
    }
    Ok(format!("both quadratics decided; {count} uniform basis polynomials certified"))
}

fn flags() -> Outcome {
    let err = |e: poslab::tropical::TropicalError| e.to_string();
    let min = Convention::MinPlus;
    let zero = |k: usize, n: usize| WeightVector::zero_on(&uniform(k, n).unwrap(), min);
    for n in 3..=5 {
        let chain = FlagChain::new((1..n).map(|k| zero(k, n)).collect()).map_err(err)?;
        ensure(is_valuated_flag(&chain).map_err(err)?.status == Status::PassCertified, format!("uniform flag on {n}"))?;
    }
    let point = WeightVector::from_finite(3, [(set(&[1]), q(0, 1))], min).map_err(err)?;
    let bad = FlagChain::new(vec![point, zero(2, 3)]).map_err(err)?;
    match is_valuated_flag(&bad).map_err(err)?.witness {
        Some(Witness::Incidence { s, t, terms, .. }) => {
            ensure(s.is_empty() && t == set(&[1, 2, 3]), format!("witness S={s:?}, T={t:?}"))?;
            let finite: Vec<usize> = terms.iter().filter(|x| x.value.is_finite()).map(|x| x.j + 1).collect();
            ensure(finite == [1], format!("finite terms at {finite:?}"))?;
        }
        other => return Err(format!("expected an incidence witness, got {other:?}")),
    }
    // Row one of [[1, t, t^2], [1, 1, 1]] and its 2x2 minors.
    let lower =
        WeightVector::from_finite(3, (0..3).map(|e| (BitSet::singleton(e), q(e as i64, 1))), min).map_err(err)?;
    let upper =
        WeightVector::from_finite(3, [(set(&[1, 2]), q(0, 1)), (set(&[1, 3]), q(0, 1)), (set(&[2, 3]), q(1, 1))], min)
            .map_err(err)?;
    let chains = [
        FlagChain::new(vec![zero(1, 4), zero(2, 4), zero(3, 4)]).map_err(err)?,
        FlagChain::new(vec![lower, upper]).map_err(err)?,
    ];
    for chain in &chains {
        ensure(is_valuated_flag(chain).map_err(err)?.is_pass(), "flag rejected")?;
        for (mu, f) in chain.constituents().iter().zip(flag_lorentzian_lift(chain).map_err(err)?) {
            let back = tropicalize(&f).map_err(err)?;
            ensure(
                back.min_plus == mu.to_discrete_function(),
                format!("lift of rank {} does not round-trip", mu.rank()),
            )?;
            ensure(back.signs.values().all(|&s| s == 1), "lift has a negative leading coefficient")?;
        }
    }
    Ok("uniform flags pass; S = {}, T = {1,2,3} witness; lifts round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("L pair products 0.04355 > 0.04298", Duration::from_secs(5), l_pair_values),
        ("L not balanced, not 1-Rayleigh", Duration::from_secs(10), l_not_rayleigh),
        ("L 8/7-Rayleigh on 10^4 samples", Duration::from_secs(300), l_eight_sevenths),
        ("positroid recognition", Duration::from_secs(10), positroids),
        ("Vandermonde pipeline", Duration::from_secs(60), pipeline),
        ("Fano not strongly Rayleigh", Duration::from_secs(600), fano_strongly_rayleigh),
        ("Dressian vs valuated matroid on U_{2,4}", Duration::from_secs(30), dressian_oracle),
        ("exact Lorentzian checks", Duration::from_secs(30), lorentzian_exact),
        ("flag membership and lifts", Duration::from_secs(5), flags),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(note) if elapsed > *limit => Err(format!("{note}; over the {}s limit", limit.as_secs())),
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(note) => println!("PASS {} {name} ({secs:.2}s): {note}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
