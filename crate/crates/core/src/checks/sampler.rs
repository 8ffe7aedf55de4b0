use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckError;
use crate::kernel::Rational;

/// Seeded source of rational sample points in a box.
///
/// Each point draws one denominator `q ∈ 1..=max_den` and then integer
/// numerators uniformly in `[lo·q, hi·q]`, so the same seed and settings
/// always give the same sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sampler {
    pub seed: u64,
    pub count: usize,
    pub lo: Rational,
    pub hi: Rational,
    pub max_den: u32,
}

/// A rational point `numer / denom` with a shared positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledPoint {
    pub numer: Vec<i128>,
    pub denom: i128,
}

impl ScaledPoint {
    pub fn integral(numer: Vec<i128>) -> Self {
        ScaledPoint { numer, denom: 1 }
    }

    pub fn constant(n: usize, value: i128) -> Self {
        ScaledPoint::integral(vec![value; n])
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.numer.iter().map(|&a| Rational::new(a, self.denom)).collect()
    }
}

impl Sampler {
    pub const DEFAULT_COUNT: usize = 1000;
    pub const DEFAULT_MAX_DEN: u32 = 16;

    /// Box `[0, 2]^n`.
    pub fn nonnegative(seed: u64, count: usize) -> Self {
        Sampler { seed, count, lo: Rational::zero(), hi: Rational::from(2), max_den: Self::DEFAULT_MAX_DEN }
    }

    /// Box `[−2, 2]^n`.
    pub fn signed(seed: u64, count: usize) -> Self {
        Sampler { seed, count, lo: Rational::from(-2), hi: Rational::from(2), max_den: Self::DEFAULT_MAX_DEN }
    }

    pub fn validate(&self) -> Result<(), CheckError> {
        if self.max_den == 0 {
            return Err(CheckError::BadSampler("denominator bound must be positive".into()));
        }
        if self.lo > self.hi {
            return Err(CheckError::BadSampler(format!("empty box [{}, {}]", self.lo, self.hi)));
        }
        for bound in [&self.lo, &self.hi] {
            if bound.abs() > Rational::from(1i64 << 20) {
                return Err(CheckError::BadSampler(format!("box bound {bound} too large")));
            }
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// The next point of the box.
    pub fn draw(&self, rng: &mut ChaCha8Rng, n: usize) -> ScaledPoint {
        draw_in(rng, n, &self.lo, &self.hi, self.max_den, false)
    }

    /// A point of `(0, hi]^n`; used for line directions.
    pub fn draw_positive(&self, rng: &mut ChaCha8Rng, n: usize) -> ScaledPoint {
        let hi = if self.hi.is_positive() { self.hi.clone() } else { Rational::from(2) };
        draw_in(rng, n, &Rational::zero(), &hi, self.max_den, true)
    }

    /// `count` points of the box.
    pub fn points(&self, n: usize) -> impl Iterator<Item = ScaledPoint> + '_ {
        let mut rng = self.rng();
        (0..self.count).map(move |_| self.draw(&mut rng, n))
    }
}

fn draw_in(
    rng: &mut ChaCha8Rng,
    n: usize,
    lo: &Rational,
    hi: &Rational,
    max_den: u32,
    open_below: bool,
) -> ScaledPoint {
    let q = rng.random_range(1..=max_den) as i64;
    let qb = BigInt::from(q);
    let scaled_lo = lo.as_big() * &qb;
    let scaled_hi = hi.as_big() * &qb;
    let mut lo_n = scaled_lo.ceil().to_integer().to_i128().expect("bounded box");
    let hi_n = scaled_hi.floor().to_integer().to_i128().expect("bounded box");
    if open_below && lo_n <= 0 {
        lo_n = 1;
    }
    let numer = (0..n).map(|_| rng.random_range(lo_n..=hi_n.max(lo_n))).collect();
    // Keep the stored fraction in lowest terms for readable witnesses.
    reduce(ScaledPoint { numer, denom: q as i128 })
}

fn reduce(p: ScaledPoint) -> ScaledPoint {
    let g = p.numer.iter().fold(p.denom, |g, &a| g.gcd(&a));
    if g <= 1 {
        return p;
    }
    ScaledPoint { numer: p.numer.iter().map(|a| a / g).collect(), denom: p.denom / g }
}
