//! Exact arithmetic in Z[α], where α is a primitive λ-th root of unity and
//! λ is an odd prime.
//!
//! Elements are stored with λ integer coefficients, coefficient `i` belonging
//! to α^i. The representation is non-unique because 1 + α + … + α^{λ−1} = 0;
//! the canonical form fixes a_{λ−1} = 0 so that equality is a plain
//! coefficient comparison and coefficientwise divisibility tests are exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{internal, Error, Result};

/// Checks primality of a machine-sized integer.
pub fn is_prime_u64(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

pub(crate) fn check_lambda(lambda: u64) -> Result<()> {
    if lambda < 3 || !is_prime_u64(lambda) {
        return Err(Error::InvalidLambda(lambda));
    }
    Ok(())
}

/// A cyclotomic integer a_0 + a_1 α + … + a_{λ−1} α^{λ−1} in canonical form
/// (a_{λ−1} = 0).
///
/// All operations are pure and the type is immutable; values can be shared
/// freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    lambda: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInteger {
    /// Builds the canonical form of `raw` (length λ, coefficient of α^i at
    /// index i), reducing with 1 + α + … + α^{λ−1} = 0.
    pub fn new(lambda: u64, raw: Vec<BigInt>) -> Result<Self> {
        check_lambda(lambda)?;
        if raw.len() != lambda as usize {
            return Err(Error::WrongLength {
                expected: lambda as usize,
                got: raw.len(),
            });
        }
        let mut coeffs = raw;
        let last = coeffs[lambda as usize - 1].clone();
        if !last.is_zero() {
            for c in coeffs.iter_mut() {
                *c -= &last;
            }
        }
        Ok(CyclotomicInteger { lambda, coeffs })
    }

    pub fn from_i64_coeffs(lambda: u64, raw: &[i64]) -> Result<Self> {
        Self::new(lambda, raw.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parses the textual encoding: a comma-separated list of λ integers.
    pub fn parse(lambda: u64, text: &str) -> Result<Self> {
        let coeffs: Result<Vec<BigInt>> = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::BadCoefficientList(text.to_string()))
            })
            .collect();
        Self::new(lambda, coeffs?)
    }

    pub fn zero(lambda: u64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(CyclotomicInteger {
            lambda,
            coeffs: vec![BigInt::zero(); lambda as usize],
        })
    }

    pub fn one(lambda: u64) -> Result<Self> {
        Self::constant(lambda, BigInt::one())
    }

    /// The rational integer `c` as a cyclotomic integer.
    pub fn constant(lambda: u64, c: BigInt) -> Result<Self> {
        check_lambda(lambda)?;
        let mut coeffs = vec![BigInt::zero(); lambda as usize];
        coeffs[0] = c;
        Ok(CyclotomicInteger { lambda, coeffs })
    }

    /// α^k (k reduced modulo λ).
    pub fn alpha_power(lambda: u64, k: u64) -> Result<Self> {
        check_lambda(lambda)?;
        let mut raw = vec![BigInt::zero(); lambda as usize];
        raw[(k % lambda) as usize] = BigInt::one();
        Self::new(lambda, raw)
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Canonical coefficients (length λ, last entry always zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// If the value is a rational integer, returns it.
    pub fn as_constant(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_lambda(&self, other: &Self) -> Result<()> {
        if self.lambda != other.lambda {
            return Err(Error::MismatchedLambda(self.lambda, other.lambda));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_lambda(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        // canonical inputs sum to a canonical output (last entries are 0)
        Ok(CyclotomicInteger {
            lambda: self.lambda,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger {
            lambda: self.lambda,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product, computed as the convolution of coefficients with exponents
    /// reduced modulo λ, then canonicalized.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_lambda(other)?;
        let n = self.lambda as usize;
        let mut acc = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                acc[k] += a * b;
            }
        }
        Self::new(self.lambda, acc)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        CyclotomicInteger {
            lambda: self.lambda,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The substitution α ↦ α^k, defined for k not divisible by λ.
    ///
    /// `conjugate(·, 1)` is the identity and
    /// `conjugate(conjugate(g, k), k') = conjugate(g, k·k' mod λ)`.
    pub fn conjugate(&self, k: u64) -> Result<Self> {
        let k = k % self.lambda;
        if k == 0 {
            return Err(Error::BadConjugation {
                k,
                lambda: self.lambda,
            });
        }
        let n = self.lambda as usize;
        let mut raw = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let target = ((i as u64 * k) % self.lambda) as usize;
            raw[target] += a;
        }
        Self::new(self.lambda, raw)
    }

    /// The norm: the product of all λ−1 conjugates, always a rational
    /// integer.
    ///
    /// The symbolic conjugate product must canonicalize to a constant; a
    /// non-constant product signals an arithmetic bug and surfaces as
    /// `Error::Internal`. An independent resultant-based route lives in the
    /// oracle module for cross-checking.
    pub fn norm(&self) -> Result<BigInt> {
        let mut acc = self.clone();
        for k in 2..self.lambda {
            acc = acc.mul(&self.conjugate(k)?)?;
        }
        match acc.as_constant() {
            Some(c) => Ok(c.clone()),
            None => Err(internal(format!(
                "conjugate product is not rational for lambda={}",
                self.lambda
            ))),
        }
    }

    /// Σ a_i ξ^i reduced into [0, modulus).
    ///
    /// When ξ^λ ≡ 1 (mod modulus) this is a ring homomorphism; for other ξ
    /// it is still a well-defined map on canonical forms.
    pub fn evaluate_mod(&self, xi: u64, modulus: u64) -> Result<u64> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus));
        }
        let m = BigInt::from(modulus);
        let xi = BigInt::from(xi % modulus);
        // Horner from the top coefficient down.
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * &xi + c) % &m;
        }
        if acc.is_negative() {
            acc += &m;
        }
        let (_, digits) = acc.to_u64_digits();
        Ok(digits.first().copied().unwrap_or(0))
    }

    pub fn pow(&self, mut n: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(self.lambda)?;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Textual encoding: comma-separated canonical coefficients (length λ).
    pub fn to_coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Human-readable polynomial form, e.g. `2 + α - α^3`.
    pub fn to_alpha_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                out.push('α');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_coeff_string())
    }
}

impl std::fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclo(λ={}: {})", self.lambda, self.to_alpha_string())
    }
}
