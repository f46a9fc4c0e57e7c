//! Seeded generation of generic parameter tuples and random test objects.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, Poly, RatFunc, Rational};
use crate::hypergeometric::HGParams;
use crate::q_hypergeometric::QHGParams;
use crate::skew::SkewOperator;

/// Numerators and denominators are drawn uniformly from `1..=HEIGHT`.
pub const HEIGHT: i64 = 97;

const MAX_ATTEMPTS: usize = 10_000;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A positive rational `n/d` with `n, d` in `1..=HEIGHT`.
    pub fn positive_rational(&mut self) -> Rational {
        rat(self.rng.gen_range(1..=HEIGHT), self.rng.gen_range(1..=HEIGHT))
    }

    /// A rational `n/d` with `|n| <= height` and `d` in `1..=height`.
    pub fn signed_rational(&mut self, height: i64) -> Rational {
        rat(self.rng.gen_range(-height..=height), self.rng.gen_range(1..=height))
    }

    pub fn poly(&mut self, degree: usize, height: i64) -> Poly {
        Poly::new((0..=degree).map(|_| self.signed_rational(height)).collect())
    }

    /// Random `num/den` with the given degree bounds and `den(0) != 0`.
    pub fn ratfunc(&mut self, num_deg: usize, den_deg: usize, height: i64) -> RatFunc {
        loop {
            let den = self.poly(den_deg, height);
            if den.coeff(0) != Rational::from_integer(0.into()) {
                return RatFunc::new(self.poly(num_deg, height), den).expect("nonzero denominator");
            }
        }
    }

    /// Theta operator of the given order with polynomial coefficients of
    /// degree at most `degree` and nonzero leading coefficient.
    pub fn theta_operator(&mut self, order: usize, degree: usize, height: i64) -> SkewOperator {
        loop {
            let coeffs: Vec<RatFunc> = (0..=order).map(|_| RatFunc::from(self.poly(degree, height))).collect();
            if !coeffs[order].is_zero() {
                return SkewOperator::theta(coeffs).expect("nonzero leading coefficient");
            }
        }
    }

    /// Generic parameters of order `r`, resampled until genericity holds.
    pub fn hg_params(&mut self, r: usize) -> HGParams {
        for _ in 0..MAX_ATTEMPTS {
            let a = (0..r).map(|_| self.positive_rational()).collect();
            let b = (0..r - 1).map(|_| self.positive_rational()).collect();
            if let Ok(p) = HGParams::new(a, b) {
                return p;
            }
        }
        panic!("no generic parameters of order {r} found");
    }

    pub fn qhg_params(&mut self, r: usize, q: &Rational) -> QHGParams {
        for _ in 0..MAX_ATTEMPTS {
            let a = (0..r).map(|_| self.positive_rational()).collect();
            let b = (0..r - 1).map(|_| self.positive_rational()).collect();
            if let Ok(p) = QHGParams::new(q.clone(), a, b) {
                return p;
            }
        }
        panic!("no generic q-parameters of order {r} found");
    }
}

/// Seed of sample `index` in a run seeded with `seed`, so samples can be
/// generated independently of each other.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn hg_samples(r: usize, count: usize, seed: u64) -> Vec<HGParams> {
    (0..count)
        .map(|i| Sampler::new(sample_seed(seed, i)).hg_params(r))
        .collect()
}

pub fn qhg_samples(r: usize, q: &Rational, count: usize, seed: u64) -> Vec<QHGParams> {
    (0..count)
        .map(|i| Sampler::new(sample_seed(seed, i)).qhg_params(r, q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn seeded_runs_repeat() {
        assert_eq!(hg_samples(3, 4, 7), hg_samples(3, 4, 7));
        assert_ne!(hg_samples(3, 4, 7), hg_samples(3, 4, 8));
    }

    #[test]
    fn heights_in_range() {
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let x = s.positive_rational();
            assert!(x > int(0) && x <= int(HEIGHT) && x >= rat(1, HEIGHT));
        }
    }

    #[test]
    fn q_samples_are_generic() {
        for p in qhg_samples(4, &rat(1, 2), 5, 3) {
            assert!(crate::q_hypergeometric::genericity_check_q(&p).is_none());
            assert_eq!(p.b()[3], rat(1, 2));
        }
    }
}
