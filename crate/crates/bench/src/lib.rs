//! Deterministic fixture builders shared by the benchmarks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kummer_core::{Circle, CyclotomicInteger, Point};

/// A reproducible batch of dense cyclotomic integers.
pub fn random_elements(lambda: u64, bound: i64, count: usize, seed: u64) -> Vec<CyclotomicInteger> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let raw: Vec<i64> = (0..lambda)
                .map(|_| rng.random_range(-bound..=bound))
                .collect();
            CyclotomicInteger::from_i64_coeffs(lambda, &raw).unwrap()
        })
        .collect()
}

/// A reproducible batch of circles with rational centers and radii squared.
pub fn random_circles(count: usize, seed: u64) -> Vec<Circle> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rat = move |lo: i64, hi: i64, den: i64| {
        BigRational::new(
            BigInt::from(rng.random_range(lo..=hi)),
            BigInt::from(rng.random_range(1..=den)),
        )
    };
    (0..count)
        .map(|_| {
            let center = Point::new(rat(-12, 12, 4), rat(-12, 12, 4));
            Circle::new(center, rat(1, 120, 4)).unwrap()
        })
        .collect()
}
