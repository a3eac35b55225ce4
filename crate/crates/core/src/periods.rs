//! Gauss period systems for a pair of distinct primes (λ, q): the e periods
//! of f terms each, the degree-e period polynomial, the congruence roots
//! u_0 … u_{e−1} attached to the periods, and the representation of an
//! arbitrary cyclotomic integer as φ_0(η) + α φ_1(η) + … + α^{f−1} φ_{f−1}(η).
//!
//! Here f is the multiplicative order of q modulo λ and e·f = λ−1. Period
//! j is η_j = Σ_k α^{γ^{ke+j}}, γ the least primitive root modulo λ, so the
//! substitution α ↦ α^γ sends η_j to η_{j+1 mod e} and η_0 is the period
//! containing α itself.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cyclo::{check_lambda, is_prime_u64, CyclotomicInteger};
use crate::error::{internal, Error, Result};
use crate::linalg::{adjugate_from_inverse, bareiss_determinant, invert_rational};
use crate::modpoly;

/// Smallest positive primitive root modulo a prime.
pub fn primitive_root(lambda: u64) -> Result<u64> {
    check_lambda(lambda)?;
    let phi = lambda - 1;
    let prime_factors: Vec<u64> = num_prime::nt_funcs::factorize64(phi)
        .into_keys()
        .collect();
    'cand: for g in 2..lambda {
        for &p in &prime_factors {
            if modpoly::powmod_u64(g, phi / p, lambda) == 1 {
                continue 'cand;
            }
        }
        return Ok(g);
    }
    Err(internal(format!("no primitive root found mod {lambda}")))
}

/// Multiplicative order of q modulo lambda.
fn multiplicative_order(q: u64, lambda: u64) -> usize {
    let mut acc = q % lambda;
    let mut ord = 1usize;
    while acc != 1 {
        acc = (acc as u128 * (q % lambda) as u128 % lambda as u128) as u64;
        ord += 1;
    }
    ord
}

/// The data (λ, q, f, e, γ) together with the e exponent cosets defining the
/// periods, and the precomputed change-of-basis matrix for representing
/// cyclotomic integers over the basis {α^i η_j}.
#[derive(Debug)]
pub struct PeriodSystem {
    lambda: u64,
    q: u64,
    f: usize,
    e: usize,
    gamma: u64,
    cosets: Vec<Vec<u64>>,
    basis_det: BigInt,
    basis_adjugate: Vec<Vec<BigInt>>,
}

/// Builds the period system for primes q ≠ λ.
pub fn period_system(lambda: u64, q: u64) -> Result<Arc<PeriodSystem>> {
    check_lambda(lambda)?;
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    if q == lambda {
        return Err(Error::MismatchedLambda(lambda, q));
    }
    let f = multiplicative_order(q, lambda);
    let e = (lambda as usize - 1) / f;
    let gamma = primitive_root(lambda)?;

    // coset j = { γ^{ke+j} mod λ : k = 1..f }; γ^{ef+j} = γ^j, so coset 0
    // contains exponent 1 and η_0 contains α.
    let mut cosets = Vec::with_capacity(e);
    for j in 0..e {
        let mut coset = Vec::with_capacity(f);
        for k in 1..=f {
            let exp = (k * e + j) as u64 % (lambda - 1);
            coset.push(modpoly::powmod_u64(gamma, exp, lambda));
        }
        cosets.push(coset);
    }
    {
        let mut all: Vec<u64> = cosets.iter().flatten().copied().collect();
        all.sort_unstable();
        let expect: Vec<u64> = (1..lambda).collect();
        if all != expect {
            return Err(internal("cosets do not partition {1..λ−1}"));
        }
    }

    let mut ps = PeriodSystem {
        lambda,
        q,
        f,
        e,
        gamma,
        cosets,
        basis_det: BigInt::zero(),
        basis_adjugate: Vec::new(),
    };

    // Change-of-basis matrix: column i·e+j holds the canonical coordinates
    // (on 1, α, …, α^{λ−2}) of α^i·η_j. Kummer's representation theorem says
    // this is a Z-basis, hence the adjugate/determinant inverse is exact.
    let n = lambda as usize - 1;
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..f {
        let alpha_i = CyclotomicInteger::alpha_power(lambda, i as u64)?;
        for j in 0..e {
            let v = ps.period(j)?.mul(&alpha_i)?;
            cols.push(v.coeffs()[..n].to_vec());
        }
    }
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    let det = bareiss_determinant(matrix.clone());
    if det.is_zero() {
        return Err(internal("period basis matrix is singular"));
    }
    let inv = invert_rational(&matrix)
        .ok_or_else(|| internal("period basis matrix inversion failed"))?;
    let adj = adjugate_from_inverse(&inv, &det)
        .ok_or_else(|| internal("period basis adjugate is not integral"))?;
    ps.basis_det = det;
    ps.basis_adjugate = adj;
    Ok(Arc::new(ps))
}

impl PeriodSystem {
    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Residue degree: the multiplicative order of q mod λ.
    pub fn f(&self) -> usize {
        self.f
    }

    /// Number of periods (and of conjugate divisors over q).
    pub fn e(&self) -> usize {
        self.e
    }

    /// The least primitive root modulo λ used to order the periods.
    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    /// Exponents appearing in η_j.
    pub fn coset(&self, j: usize) -> &[u64] {
        &self.cosets[j]
    }

    /// η_j as a cyclotomic integer.
    pub fn period(&self, j: usize) -> Result<CyclotomicInteger> {
        let mut raw = vec![BigInt::zero(); self.lambda as usize];
        for &t in &self.cosets[j] {
            raw[t as usize] += 1;
        }
        CyclotomicInteger::new(self.lambda, raw)
    }

    /// The monic integer polynomial of degree e whose roots are the periods,
    /// as ascending coefficients. Computed by expanding Π_j (x − η_j) with
    /// exact cyclotomic arithmetic; every coefficient must come out rational.
    pub fn period_polynomial(&self) -> Result<Vec<BigInt>> {
        // poly[k] is the coefficient of x^k, as a cyclotomic integer
        let one = CyclotomicInteger::one(self.lambda)?;
        let mut poly = vec![one];
        for j in 0..self.e {
            let eta = self.period(j)?;
            let mut next = vec![CyclotomicInteger::zero(self.lambda)?; poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c)?;
                next[k] = next[k].sub(&c.mul(&eta)?)?;
            }
            poly = next;
        }
        let mut out = Vec::with_capacity(poly.len());
        for c in &poly {
            match c.as_constant() {
                Some(v) => out.push(v.clone()),
                None => {
                    return Err(internal(
                        "period polynomial has a non-rational coefficient",
                    ))
                }
            }
        }
        Ok(out)
    }

    /// The canonical congruence assignment η_j ↦ u_j for this system.
    ///
    /// Construction: take one irreducible degree-f factor h of the λ-th
    /// cyclotomic polynomial mod q and map each period to its image in
    /// F_q[x]/(h), which must be a degree-0 element. The resulting tuple is
    /// rotated so that u_0 is the smallest entry; its e cyclic shifts
    /// enumerate all valid assignments.
    pub fn congruence_assignment(self: &Arc<Self>) -> Result<CongruenceAssignment> {
        let q = self.q;
        let phi = modpoly::cyclotomic_mod(self.lambda, q);
        let factors = modpoly::equal_degree_factorization(&phi, self.f, q)?;
        if factors.len() != self.e {
            return Err(internal(format!(
                "expected {} irreducible factors mod {}, got {}",
                self.e,
                q,
                factors.len()
            )));
        }
        let h = factors
            .iter()
            .min()
            .ok_or_else(|| internal("no factors returned"))?;

        let mut u = Vec::with_capacity(self.e);
        for j in 0..self.e {
            let mut image = vec![0u64];
            for &t in &self.cosets[j] {
                let xt = modpoly::x_power_mod(t, h, q);
                // accumulate Σ x^t mod (h, q)
                let n = image.len().max(xt.len());
                let mut sum = vec![0u64; n];
                for (idx, slot) in sum.iter_mut().enumerate() {
                    let a = image.get(idx).copied().unwrap_or(0);
                    let b = xt.get(idx).copied().unwrap_or(0);
                    *slot = (a + b) % q;
                }
                while sum.last() == Some(&0) {
                    sum.pop();
                }
                image = sum;
            }
            if image.len() > 1 {
                return Err(internal(format!(
                    "period {j} does not map into the prime field mod {q}"
                )));
            }
            u.push(image.first().copied().unwrap_or(0));
        }

        // self-checks: distinct entries, each a root of the period polynomial
        let poly_mod_q: Vec<u64> = {
            let qi = BigInt::from(q);
            self.period_polynomial()?
                .iter()
                .map(|c| {
                    let mut r = c % &qi;
                    if r.is_negative() {
                        r += &qi;
                    }
                    r.to_u64_digits().1.first().copied().unwrap_or(0)
                })
                .collect()
        };
        for (j, &uj) in u.iter().enumerate() {
            if modpoly::eval_poly(&poly_mod_q, uj, q) != 0 {
                return Err(internal(format!(
                    "u_{j} = {uj} is not a root of the period polynomial mod {q}"
                )));
            }
        }
        // Entries may repeat when q < e (the e periods land in only q
        // residues), but the e cyclic rotations must stay pairwise distinct:
        // the periods span the subfield's integers, so distinct primes give
        // distinct tuples.
        for c in 1..self.e {
            if (0..self.e).all(|j| u[(j + c) % self.e] == u[j]) {
                return Err(internal(
                    "two conjugate divisors share every congruence root",
                ));
            }
        }

        // canonical rotation: lexicographically smallest (plain smallest
        // first entry is ambiguous when entries repeat)
        let best = (0..self.e)
            .min_by_key(|&r| (0..self.e).map(|j| u[(j + r) % self.e]).collect::<Vec<_>>())
            .unwrap_or(0);
        u.rotate_left(best);

        Ok(CongruenceAssignment {
            system: Arc::clone(self),
            u,
        })
    }

    /// Writes g = Σ_{i<f} α^i φ_i(η) exactly; the φ_i have integer
    /// coordinates on the periods (constants are folded via Ση_j = −1).
    pub fn represent_in_period_basis(
        &self,
        g: &CyclotomicInteger,
    ) -> Result<Vec<PeriodElement>> {
        if g.lambda() != self.lambda {
            return Err(Error::MismatchedLambda(self.lambda, g.lambda()));
        }
        let n = self.lambda as usize - 1;
        let a = &g.coeffs()[..n];
        let mut phis = Vec::with_capacity(self.f);
        let mut coords = vec![BigInt::zero(); n];
        for (k, slot) in coords.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for (j, aj) in a.iter().enumerate() {
                if !aj.is_zero() {
                    acc += &self.basis_adjugate[k][j] * aj;
                }
            }
            let (quot, rem) = num_integer::Integer::div_rem(&acc, &self.basis_det);
            if !rem.is_zero() {
                return Err(internal(
                    "period-basis representation is not integral",
                ));
            }
            *slot = quot;
        }
        for i in 0..self.f {
            phis.push(PeriodElement {
                coords: coords[i * self.e..(i + 1) * self.e].to_vec(),
            });
        }
        Ok(phis)
    }
}

/// An integer combination Σ c_j η_j of the periods. Rational integers are
/// folded in through Ση_j = −1, so coordinates are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodElement {
    coords: Vec<BigInt>,
}

impl PeriodElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        PeriodElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        PeriodElement {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Σ c_j η_j as a cyclotomic integer.
    pub fn to_cyclotomic(&self, ps: &PeriodSystem) -> Result<CyclotomicInteger> {
        let mut acc = CyclotomicInteger::zero(ps.lambda())?;
        for (j, c) in self.coords.iter().enumerate() {
            acc = acc.add(&ps.period(j)?.scalar_mul(c))?;
        }
        Ok(acc)
    }
}

/// A valid assignment η_j ↦ u_j of congruence roots mod q to the periods,
/// canonically rotated so u_0 is minimal.
#[derive(Debug)]
pub struct CongruenceAssignment {
    system: Arc<PeriodSystem>,
    u: Vec<u64>,
}

impl PartialEq for CongruenceAssignment {
    fn eq(&self, other: &Self) -> bool {
        self.system.lambda == other.system.lambda
            && self.system.q == other.system.q
            && self.u == other.u
    }
}
impl Eq for CongruenceAssignment {}

impl CongruenceAssignment {
    pub fn system(&self) -> &Arc<PeriodSystem> {
        &self.system
    }

    pub fn u(&self) -> &[u64] {
        &self.u
    }

    pub fn q(&self) -> u64 {
        self.system.q
    }

    pub fn e(&self) -> usize {
        self.system.e
    }

    /// Σ_j c_j · u_{(j+shift) mod e} reduced mod q.
    pub fn evaluate_period_element(&self, phi: &PeriodElement, shift: usize) -> u64 {
        let e = self.system.e;
        let q = BigInt::from(self.system.q);
        let mut acc = BigInt::zero();
        for (j, c) in phi.coords().iter().enumerate() {
            acc += c * BigInt::from(self.u[(j + shift) % e]);
        }
        let mut r = acc % &q;
        if r.is_negative() {
            r += &q;
        }
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    }
}
