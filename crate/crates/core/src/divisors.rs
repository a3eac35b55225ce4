//! Ideal prime divisors of cyclotomic integers: divisibility tests,
//! valuations, and complete factorization.
//!
//! A divisor of a rational prime q ≠ λ is encoded by a congruence
//! assignment (η_j ↦ u_j) together with a cyclic shift; divisibility of g
//! is decided by writing g = Σ α^i φ_i(η) and asking that every φ_i vanish
//! mod q under the shifted assignment. Multiplicities are exposed by the ψ
//! multiplier: ν(g) is the largest m with q^m dividing every coefficient of
//! g·ψ^m. The prime λ itself is carried by the single divisor of 1−α, whose
//! valuation is computed by repeated exact division.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::{check_lambda, is_prime_u64, CyclotomicInteger};
use crate::error::{internal, Error, Result};
use crate::intfactor;
use crate::oracle;
use crate::periods::{period_system, CongruenceAssignment};

#[derive(Clone, Debug)]
pub enum DivisorKind {
    /// The unique divisor of q = λ, the divisor of 1−α.
    Lambda,
    /// A divisor of q ≠ λ: a congruence assignment plus a cyclic shift.
    General {
        assignment: Arc<CongruenceAssignment>,
        shift: usize,
    },
}

/// One ideal prime divisor of a rational prime q over λ.
#[derive(Clone, Debug)]
pub struct IdealPrimeDivisor {
    lambda: u64,
    q: u64,
    kind: DivisorKind,
}

impl PartialEq for IdealPrimeDivisor {
    fn eq(&self, other: &Self) -> bool {
        if self.lambda != other.lambda || self.q != other.q {
            return false;
        }
        match (&self.kind, &other.kind) {
            (DivisorKind::Lambda, DivisorKind::Lambda) => true,
            (
                DivisorKind::General { assignment: a, shift: s },
                DivisorKind::General { assignment: b, shift: t },
            ) => s == t && a == b,
            _ => false,
        }
    }
}
impl Eq for IdealPrimeDivisor {}

/// All ideal prime divisors of q over λ: the single λ-divisor when q = λ,
/// otherwise exactly e divisors in increasing shift of the canonical
/// assignment.
pub fn prime_divisors_of(q: u64, lambda: u64) -> Result<Vec<IdealPrimeDivisor>> {
    check_lambda(lambda)?;
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    if q == lambda {
        return Ok(vec![IdealPrimeDivisor::lambda_divisor(lambda)?]);
    }
    let ps = period_system(lambda, q)?;
    let assignment = Arc::new(ps.congruence_assignment()?);
    Ok((0..ps.e())
        .map(|shift| IdealPrimeDivisor {
            lambda,
            q,
            kind: DivisorKind::General {
                assignment: Arc::clone(&assignment),
                shift,
            },
        })
        .collect())
}

impl IdealPrimeDivisor {
    pub fn lambda_divisor(lambda: u64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(IdealPrimeDivisor {
            lambda,
            q: lambda,
            kind: DivisorKind::Lambda,
        })
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> &DivisorKind {
        &self.kind
    }

    pub fn is_lambda(&self) -> bool {
        matches!(self.kind, DivisorKind::Lambda)
    }

    /// Residue degree: 1 for the λ-divisor, the order of q mod λ otherwise.
    pub fn f(&self) -> usize {
        match &self.kind {
            DivisorKind::Lambda => 1,
            DivisorKind::General { assignment, .. } => assignment.system().f(),
        }
    }

    pub fn e(&self) -> usize {
        match &self.kind {
            DivisorKind::Lambda => 1,
            DivisorKind::General { assignment, .. } => assignment.system().e(),
        }
    }

    pub fn shift(&self) -> usize {
        match &self.kind {
            DivisorKind::Lambda => 0,
            DivisorKind::General { shift, .. } => *shift,
        }
    }

    /// The single congruence root describing this divisor when f = 1
    /// (ξ = u_shift, with ξ^λ ≡ 1 mod q), or ξ = 1 for the λ-divisor.
    pub fn xi(&self) -> Option<u64> {
        match &self.kind {
            DivisorKind::Lambda => Some(1),
            DivisorKind::General { assignment, shift } => {
                if assignment.system().f() == 1 {
                    Some(assignment.u()[*shift])
                } else {
                    None
                }
            }
        }
    }

    /// The u-tuple of this divisor, starting at its shift.
    pub fn u_rotated(&self) -> Option<Vec<u64>> {
        match &self.kind {
            DivisorKind::Lambda => None,
            DivisorKind::General { assignment, shift } => {
                let u = assignment.u();
                let e = u.len();
                Some((0..e).map(|j| u[(shift + j) % e]).collect())
            }
        }
    }

    fn sibling(&self, shift: usize) -> Result<Self> {
        match &self.kind {
            DivisorKind::Lambda => Err(Error::LambdaKindNotAllowed),
            DivisorKind::General { assignment, .. } => Ok(IdealPrimeDivisor {
                lambda: self.lambda,
                q: self.q,
                kind: DivisorKind::General {
                    assignment: Arc::clone(assignment),
                    shift: shift % assignment.system().e(),
                },
            }),
        }
    }

    /// σ^c P, the image of this divisor under c applications of α ↦ α^γ.
    ///
    /// As an ideal map this lowers the shift: g is divisible by σP exactly
    /// when conjugate(g, γ^{-1}) is divisible by P.
    pub fn conjugate_divisor(&self, c: usize) -> Result<Self> {
        let e = self.e();
        self.sibling((self.shift() + e - c % e) % e)
    }

    /// Divisibility test (the congruence definition): write
    /// g = Σ α^i φ_i(η) and require every φ_i(u) ≡ 0 mod q under this
    /// divisor's shift. For the λ-divisor the test is g(1) ≡ 0 mod λ.
    /// Zero is divisible by every divisor.
    pub fn divides(&self, g: &CyclotomicInteger) -> Result<bool> {
        if g.lambda() != self.lambda {
            return Err(Error::MismatchedLambda(self.lambda, g.lambda()));
        }
        match &self.kind {
            DivisorKind::Lambda => Ok(g.evaluate_mod(1, self.lambda)? == 0),
            DivisorKind::General { assignment, shift } => {
                if g.is_zero() {
                    return Ok(true);
                }
                let phis = assignment.system().represent_in_period_basis(g)?;
                Ok(phis
                    .iter()
                    .all(|phi| assignment.evaluate_period_element(phi, *shift) == 0))
            }
        }
    }

    /// The first congruence definition, available when f = 1: g is divisible
    /// exactly when g(ξ) ≡ 0 mod q. Must agree with `divides` on its domain.
    pub fn divides_def1(&self, g: &CyclotomicInteger) -> Result<bool> {
        if g.lambda() != self.lambda {
            return Err(Error::MismatchedLambda(self.lambda, g.lambda()));
        }
        let xi = self.xi().ok_or(Error::ResidueDegreeNotOne(self.f()))?;
        Ok(g.evaluate_mod(xi, self.q)? == 0)
    }

    /// The multiplicity-exposing multiplier ψ: one factor (η_j − u) per
    /// conjugate divisor, built so ψ is divisible by every conjugate except
    /// this one. With pairwise-distinct congruence roots this is exactly
    /// Π_{c=1}^{e−1} (η_0 − u_{shift+c}); when roots repeat (possible for
    /// q < e), each factor instead uses the first period whose root
    /// separates the conjugate from this divisor. Both contract halves are
    /// asserted before ψ is returned.
    pub fn psi_multiplier(&self) -> Result<CyclotomicInteger> {
        let (assignment, shift) = match &self.kind {
            DivisorKind::Lambda => return Err(Error::LambdaKindNotAllowed),
            DivisorKind::General { assignment, shift } => (assignment, *shift),
        };
        let ps = assignment.system();
        let e = ps.e();
        let u = assignment.u();
        let mut psi = CyclotomicInteger::one(self.lambda)?;
        for c in 1..e {
            let other = (shift + c) % e;
            let j = (0..e)
                .find(|&j| u[(j + shift) % e] != u[(j + other) % e])
                .ok_or_else(|| {
                    internal("two conjugate divisors share every congruence root")
                })?;
            let factor = ps.period(j)?.sub(&CyclotomicInteger::constant(
                self.lambda,
                BigInt::from(u[(j + other) % e]),
            )?)?;
            psi = psi.mul(&factor)?;
        }
        if self.divides(&psi)? {
            return Err(internal("psi multiplier vanishes on its own divisor"));
        }
        for c in 1..e {
            if !self.sibling((shift + c) % e)?.divides(&psi)? {
                return Err(internal(
                    "psi multiplier fails to vanish on a conjugate divisor",
                ));
            }
        }
        Ok(psi)
    }

    /// Multiplicity of this divisor in g (g ≠ 0).
    pub fn valuation(&self, g: &CyclotomicInteger) -> Result<u64> {
        if g.lambda() != self.lambda {
            return Err(Error::MismatchedLambda(self.lambda, g.lambda()));
        }
        if g.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let nrm = g.norm()?;
        let cap = prime_exponent_of(&nrm.magnitude().clone(), self.q) / self.f() as u64;
        self.valuation_capped(g, cap)
    }

    /// Valuation with the termination bound ν ≤ cap supplied by the caller
    /// (cap = v_q(|norm g|)/f). Exceeding the cap is a contract violation.
    pub(crate) fn valuation_capped(&self, g: &CyclotomicInteger, cap: u64) -> Result<u64> {
        match &self.kind {
            DivisorKind::Lambda => {
                let one_minus_alpha = CyclotomicInteger::from_i64_coeffs(
                    self.lambda,
                    &{
                        let mut v = vec![0i64; self.lambda as usize];
                        v[0] = 1;
                        v[1] = -1;
                        v
                    },
                )?;
                let mut m = 0u64;
                let mut cur = g.clone();
                while let Some(next) = oracle::exact_divide(&cur, &one_minus_alpha)? {
                    m += 1;
                    if m > cap {
                        return Err(internal(
                            "lambda-divisor valuation exceeded its norm bound",
                        ));
                    }
                    cur = next;
                }
                Ok(m)
            }
            DivisorKind::General { .. } => {
                let psi = self.psi_multiplier()?;
                let q = BigInt::from(self.q);
                let mut qpow = q.clone();
                let mut prod = g.mul(&psi)?;
                let mut m = 0u64;
                loop {
                    let divisible = prod
                        .coeffs()
                        .iter()
                        .all(|c| (c % &qpow).is_zero());
                    if !divisible {
                        return Ok(m);
                    }
                    m += 1;
                    if m > cap {
                        return Err(internal("valuation exceeded its norm bound"));
                    }
                    prod = prod.mul(&psi)?;
                    qpow *= &q;
                }
            }
        }
    }
}

impl std::fmt::Display for IdealPrimeDivisor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            DivisorKind::Lambda => write!(f, "(q={}, 1-α)", self.q),
            DivisorKind::General { .. } => match self.xi() {
                Some(xi) => write!(f, "(q={}, ξ={})", self.q, xi),
                None => {
                    let u = self.u_rotated().unwrap_or_default();
                    let u: Vec<String> = u.iter().map(|x| x.to_string()).collect();
                    write!(
                        f,
                        "(q={}, shift={}, u=({}))",
                        self.q,
                        self.shift(),
                        u.join(",")
                    )
                }
            },
        }
    }
}

/// The multiset of (divisor, multiplicity) pairs for a cyclotomic integer,
/// together with the sign of its norm.
#[derive(Clone, Debug)]
pub struct DivisorFactorization {
    subject: CyclotomicInteger,
    entries: Vec<(IdealPrimeDivisor, u64)>,
    unit_norm_residual: i8,
    norm: BigInt,
}

impl DivisorFactorization {
    pub fn subject(&self) -> &CyclotomicInteger {
        &self.subject
    }

    pub fn entries(&self) -> &[(IdealPrimeDivisor, u64)] {
        &self.entries
    }

    pub fn unit_norm_residual(&self) -> i8 {
        self.unit_norm_residual
    }

    pub fn norm(&self) -> &BigInt {
        &self.norm
    }
}

/// Exponent of the prime q in n.
pub(crate) fn prime_exponent_of(n: &BigUint, q: u64) -> u64 {
    let q = BigUint::from(q);
    let mut n = n.clone();
    let mut v = 0u64;
    if n.is_zero() {
        return 0;
    }
    while (&n % &q).is_zero() {
        n /= &q;
        v += 1;
    }
    v
}

/// Factors |norm(g)| into rational primes and records the valuation of every
/// divisor above each of them; the result satisfies
/// |norm(g)| = Π q^{f·multiplicity} exactly.
pub fn factor(g: &CyclotomicInteger) -> Result<DivisorFactorization> {
    if g.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let lambda = g.lambda();
    let nrm = g.norm()?;
    let unit_norm_residual: i8 = if nrm.is_negative() { -1 } else { 1 };
    let abs: BigUint = nrm.magnitude().clone();
    let mut entries: Vec<(IdealPrimeDivisor, u64)> = Vec::new();
    if !abs.is_one() {
        for (q, exp) in intfactor::factor_into_u64_primes(&abs)? {
            let divisors = prime_divisors_of(q, lambda)?;
            let f = divisors[0].f() as u64;
            let cap = exp / f;
            for p in divisors {
                let v = p.valuation_capped(g, cap)?;
                if v > 0 {
                    entries.push((p, v));
                }
            }
        }
    }
    let mut reconstructed = BigUint::one();
    for (p, v) in &entries {
        let exp = p.f() as u64 * v;
        let exp: u32 = exp
            .to_u32()
            .ok_or_else(|| internal("factorization exponent overflow"))?;
        reconstructed *= BigUint::from(p.q()).pow(exp);
    }
    if reconstructed != abs {
        return Err(internal(format!(
            "norm reconstruction failed: |norm|={abs} but divisors give {reconstructed}"
        )));
    }
    Ok(DivisorFactorization {
        subject: g.clone(),
        entries,
        unit_norm_residual,
        norm: nrm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lambda: u64, raw: &[i64]) -> CyclotomicInteger {
        CyclotomicInteger::from_i64_coeffs(lambda, raw).unwrap()
    }

    fn divisor_by_xi(lambda: u64, q: u64, xi: u64) -> IdealPrimeDivisor {
        prime_divisors_of(q, lambda)
            .unwrap()
            .into_iter()
            .find(|p| p.xi() == Some(xi))
            .unwrap()
    }

    #[test]
    fn divisors_of_a_fully_split_prime() {
        let divisors = prime_divisors_of(11, 5).unwrap();
        assert_eq!(divisors.len(), 4);
        let mut xis: Vec<u64> = divisors.iter().filter_map(|p| p.xi()).collect();
        xis.sort_unstable();
        assert_eq!(xis, vec![3, 4, 5, 9]);
        for (shift, p) in divisors.iter().enumerate() {
            assert_eq!((p.f(), p.e(), p.shift()), (1, 4, shift));
        }
    }

    #[test]
    fn divisors_of_an_inert_prime() {
        let divisors = prime_divisors_of(2, 5).unwrap();
        assert_eq!(divisors.len(), 1);
        assert_eq!((divisors[0].f(), divisors[0].e()), (4, 1));
        assert_eq!(divisors[0].xi(), None);
    }

    #[test]
    fn divisor_of_lambda_itself() {
        let divisors = prime_divisors_of(5, 5).unwrap();
        assert_eq!(divisors.len(), 1);
        assert!(divisors[0].is_lambda());
        assert_eq!(divisors[0].xi(), Some(1));
        assert!(prime_divisors_of(9, 5).is_err());
    }

    #[test]
    fn divides_examples() {
        let p = divisor_by_xi(5, 11, 9);
        assert!(p.divides(&c(5, &[2, 1, 0, 0, 0])).unwrap());

        let divisors = prime_divisors_of(19, 5).unwrap();
        let shift0 = &divisors[0];
        assert_eq!(shift0.u_rotated().unwrap(), vec![4, 14]);
        assert!(!shift0.divides(&c(5, &[0, 0, 1, 0, 0])).unwrap());

        let lam = IdealPrimeDivisor::lambda_divisor(5).unwrap();
        assert!(lam.divides(&c(5, &[1, -1, 0, 0, 0])).unwrap());

        // zero is divisible by everything
        let zero = CyclotomicInteger::zero(5).unwrap();
        assert!(p.divides(&zero).unwrap());
        assert!(lam.divides(&zero).unwrap());
    }

    #[test]
    fn divides_def1_examples() {
        let p9 = divisor_by_xi(5, 11, 9);
        let g = c(5, &[2, 1, 0, 0, 0]).mul(&c(5, &[1, 1, 0, 0, 0])).unwrap();
        assert!(p9.divides_def1(&g).unwrap());
        assert!(!p9.divides_def1(&c(5, &[1, 1, 0, 0, 0])).unwrap());

        let p3 = divisor_by_xi(5, 11, 3);
        assert!(p3.divides_def1(&c(5, &[11, 0, 0, 0, 0])).unwrap());

        // f = 2 divisors have no single ξ
        let p19 = &prime_divisors_of(19, 5).unwrap()[0];
        assert!(matches!(
            p19.divides_def1(&c(5, &[1, 0, 0, 0, 0])),
            Err(Error::ResidueDegreeNotOne(2))
        ));
    }

    #[test]
    fn def1_agrees_with_def2_where_both_apply() {
        for q in [11u64, 31, 41] {
            for p in prime_divisors_of(q, 5).unwrap() {
                for raw in [
                    [2i64, 1, 0, 0, 0],
                    [1, 1, 1, 0, 0],
                    [3, -2, 0, 1, 4],
                    [7, 0, 0, 0, 0],
                    [0, 5, -5, 1, 2],
                ] {
                    let g = c(5, &raw);
                    assert_eq!(
                        p.divides(&g).unwrap(),
                        p.divides_def1(&g).unwrap(),
                        "q={q} xi={:?}",
                        p.xi()
                    );
                }
            }
        }
    }

    #[test]
    fn psi_multiplier_examples() {
        // λ=5, q=19, shift 0: ψ = η_0 − 14 = −14 + α + α⁴
        let p = &prime_divisors_of(19, 5).unwrap()[0];
        assert_eq!(p.psi_multiplier().unwrap(), c(5, &[-14, 1, 0, 0, 1]));

        // e = 1: empty product
        let inert = &prime_divisors_of(2, 5).unwrap()[0];
        assert!(inert.psi_multiplier().unwrap().is_one());

        // λ=5, q=11, ξ=9 (shift 1 of u=(3,9,4,5)): ψ = (α−4)(α−5)(α−3)
        let p9 = divisor_by_xi(5, 11, 9);
        assert_eq!(p9.shift(), 1);
        assert_eq!(p9.psi_multiplier().unwrap(), c(5, &[-60, 47, -12, 1, 0]));

        let lam = IdealPrimeDivisor::lambda_divisor(5).unwrap();
        assert!(matches!(
            lam.psi_multiplier(),
            Err(Error::LambdaKindNotAllowed)
        ));
    }

    #[test]
    fn psi_multiplier_with_repeated_congruence_roots() {
        // λ=13, q=3: e=4 periods land in only 3 residues, so the u-tuple has
        // a repeat and the separating-period construction kicks in.
        let divisors = prime_divisors_of(3, 13).unwrap();
        assert_eq!(divisors.len(), 4);
        let u = divisors[0].u_rotated().unwrap();
        let mut sorted = u.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert!(sorted.len() < 4, "expected repeated congruence roots, got {u:?}");
        for p in &divisors {
            // constructor asserts both contract halves; reaching here is the test
            let psi = p.psi_multiplier().unwrap();
            assert!(!p.divides(&psi).unwrap());
        }
    }

    #[test]
    fn valuation_examples() {
        let p9 = divisor_by_xi(5, 11, 9);
        let g = c(5, &[2, 1, 0, 0, 0]);
        let g2 = g.mul(&g).unwrap();
        assert_eq!(p9.valuation(&g2).unwrap(), 2);

        let lam = IdealPrimeDivisor::lambda_divisor(5).unwrap();
        assert_eq!(lam.valuation(&c(5, &[5, 0, 0, 0, 0])).unwrap(), 4);

        let p3 = divisor_by_xi(5, 11, 3);
        assert_eq!(p3.valuation(&g).unwrap(), 0);

        assert!(matches!(
            p3.valuation(&CyclotomicInteger::zero(5).unwrap()),
            Err(Error::ZeroArgument)
        ));
    }

    #[test]
    fn divides_iff_valuation_positive() {
        for q in [2u64, 11, 19] {
            for p in prime_divisors_of(q, 5).unwrap() {
                for raw in [[2i64, 1, 0, 0, 0], [1, 1, 1, 0, 0], [19, 0, 0, 0, 0], [4, -1, 3, 0, 2]] {
                    let g = c(5, &raw);
                    assert_eq!(
                        p.divides(&g).unwrap(),
                        p.valuation(&g).unwrap() >= 1,
                        "q={q} shift={} g={g:?}",
                        p.shift()
                    );
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f = factor(&c(5, &[2, 1, 0, 0, 0])).unwrap();
        assert_eq!(f.entries().len(), 1);
        let (p, m) = &f.entries()[0];
        assert_eq!((p.q(), p.xi(), *m), (11, Some(9), 1));
        assert_eq!(f.norm(), &BigInt::from(11));
        assert_eq!(f.unit_norm_residual(), 1);

        let f = factor(&c(5, &[11, 0, 0, 0, 0])).unwrap();
        assert_eq!(f.entries().len(), 4);
        assert!(f.entries().iter().all(|(p, m)| p.q() == 11 && *m == 1));

        let f = factor(&CyclotomicInteger::one(5).unwrap()).unwrap();
        assert!(f.entries().is_empty());

        assert!(matches!(
            factor(&CyclotomicInteger::zero(5).unwrap()),
            Err(Error::ZeroArgument)
        ));
    }

    #[test]
    fn factor_mixed_ramified_and_split() {
        // 5(2+α) has norm 5⁴·11
        let g = c(5, &[10, 5, 0, 0, 0]);
        let f = factor(&g).unwrap();
        let mut entries: Vec<(u64, Option<u64>, u64)> =
            f.entries().iter().map(|(p, m)| (p.q(), p.xi(), *m)).collect();
        entries.sort();
        assert_eq!(entries, vec![(5, Some(1), 4), (11, Some(9), 1)]);
    }

    #[test]
    fn factor_with_repeated_congruence_roots() {
        // λ=13: the rational prime 3 has f=3, e=4; norm(3) = 3¹²
        let mut raw = vec![0i64; 13];
        raw[0] = 3;
        let g = c(13, &raw);
        let f = factor(&g).unwrap();
        assert_eq!(f.entries().len(), 4);
        assert!(f.entries().iter().all(|(p, m)| p.q() == 3 && p.f() == 3 && *m == 1));
    }

    #[test]
    fn conjugate_divisor_action() {
        // σ(P_{ξ=9}) = P_{ξ=3}: σ maps shift 1 to shift 0 for u=(3,9,4,5)
        let p9 = divisor_by_xi(5, 11, 9);
        assert_eq!(p9.conjugate_divisor(1).unwrap().xi(), Some(3));
        // and σ^e is the identity
        assert_eq!(p9.conjugate_divisor(4).unwrap(), p9);
    }

    #[test]
    fn conjugation_equivariance() {
        // divides(σ^c P, conjugate(g, γ^c)) = divides(P, g)
        for (lambda, q) in [(5u64, 11u64), (5, 19), (13, 3)] {
            let divisors = prime_divisors_of(q, lambda).unwrap();
            let gamma = match &divisors[0].kind {
                DivisorKind::General { assignment, .. } => assignment.system().gamma(),
                _ => unreachable!(),
            };
            let g = CyclotomicInteger::from_i64_coeffs(
                lambda,
                &(0..lambda as i64).map(|i| (3 * i * i - 7 * i + 2) % 9 - 4).collect::<Vec<_>>(),
            )
            .unwrap();
            for p in &divisors {
                for c in 0..p.e() {
                    let gk = modpoly_powmod(gamma, c as u64, lambda);
                    let sg = g.conjugate(gk).unwrap();
                    assert_eq!(
                        p.conjugate_divisor(c).unwrap().divides(&sg).unwrap(),
                        p.divides(&g).unwrap(),
                        "λ={lambda} q={q} shift={} c={c}",
                        p.shift()
                    );
                }
            }
        }
    }

    fn modpoly_powmod(base: u64, exp: u64, modulus: u64) -> u64 {
        let mut acc = 1u64;
        let mut b = base % modulus;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % modulus;
            }
            b = b * b % modulus;
            e >>= 1;
        }
        acc
    }
}
