//! Rational-prime factorization of norm magnitudes, backed by `num-prime`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Factors n into (prime, exponent) pairs in ascending prime order. Primes
/// beyond the u64 range are rejected; divisor machinery carries q as u64.
pub(crate) fn factor_into_u64_primes(n: &BigUint) -> Result<Vec<(u64, u64)>> {
    num_prime::nt_funcs::factorize(n.clone())
        .into_iter()
        .map(|(p, e)| match p.to_u64() {
            Some(p) => Ok((p, e as u64)),
            None => Err(Error::PrimeTooLarge(p)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_in_ascending_order() {
        let n = BigUint::from(2u64 * 3 * 3 * 11 * 11 * 11 * 19);
        assert_eq!(
            factor_into_u64_primes(&n).unwrap(),
            vec![(2, 1), (3, 2), (11, 3), (19, 1)]
        );
    }

    #[test]
    fn factors_norm_scale_numbers() {
        // 5^12 · 761 · 20161
        let n = BigUint::from(5u64).pow(12) * BigUint::from(761u64) * BigUint::from(20161u64);
        assert_eq!(
            factor_into_u64_primes(&n).unwrap(),
            vec![(5, 12), (761, 1), (20161, 1)]
        );
    }
}
