//! Independent brute-force oracles for the divisor machinery: exact division
//! by actual elements, a resultant-based norm, and bounded searches for
//! actual generators of ideal divisors.
//!
//! Everything here is deliberately naive. The point is independence: these
//! routines share as little as possible with the period/congruence path they
//! are used to validate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclo::CyclotomicInteger;
use crate::divisors::{prime_divisors_of, DivisorKind, IdealPrimeDivisor};
use crate::error::{internal, Error, Result};
use crate::linalg::bareiss_determinant;

/// Bounds for the brute-force candidate enumeration.
///
/// Candidates are raw coefficient vectors of length λ with at most
/// `max_support` nonzero entries, each in [−coeff_bound, coeff_bound].
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_support: usize,
    pub coeff_bound: u64,
    pub max_candidates: u64,
}

impl SearchBudget {
    pub fn new(max_support: usize, coeff_bound: u64, max_candidates: u64) -> Result<Self> {
        if max_support == 0 || coeff_bound == 0 || max_candidates == 0 {
            return Err(Error::EmptyBudget);
        }
        Ok(SearchBudget {
            max_support,
            coeff_bound,
            max_candidates,
        })
    }

    /// Number of candidate vectors the enumeration would visit for a given λ.
    pub fn space_size(&self, lambda: u64) -> u128 {
        let n = lambda as u128;
        let s_max = self.max_support.min(lambda as usize) as u128;
        let values = 2 * self.coeff_bound as u128;
        let mut total: u128 = 0;
        let mut choose: u128 = 1; // C(n, s)
        let mut power: u128 = 1; // values^s
        for s in 1..=s_max {
            choose = choose * (n - s + 1) / s;
            power = power.saturating_mul(values);
            total = total.saturating_add(choose.saturating_mul(power));
        }
        total
    }
}

/// Result of a bounded generator search. Absence is evidence, not proof, of
/// non-principality; `Capped` means the budget cap stopped the scan before
/// the space was exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CyclotomicInteger),
    Exhausted,
    Capped,
}

/// If h divides g exactly in Z[α], returns the quotient.
///
/// Multiplies g by every conjugate of h except h itself; the result equals
/// (g/h)·norm(h), so h | g exactly when norm(h) divides every coefficient.
pub fn exact_divide(
    g: &CyclotomicInteger,
    h: &CyclotomicInteger,
) -> Result<Option<CyclotomicInteger>> {
    if g.lambda() != h.lambda() {
        return Err(Error::MismatchedLambda(g.lambda(), h.lambda()));
    }
    if h.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let lambda = g.lambda();
    let mut cofactor = CyclotomicInteger::one(lambda)?;
    for k in 2..lambda {
        cofactor = cofactor.mul(&h.conjugate(k)?)?;
    }
    let scaled = g.mul(&cofactor)?;
    let nrm = h
        .mul(&cofactor)?
        .as_constant()
        .cloned()
        .ok_or_else(|| internal("conjugate product of h is not rational"))?;
    let mut quot_coeffs = Vec::with_capacity(lambda as usize);
    for c in scaled.coeffs() {
        let (q, r) = c.div_rem(&nrm);
        if !r.is_zero() {
            return Ok(None);
        }
        quot_coeffs.push(q);
    }
    let quotient = CyclotomicInteger::new(lambda, quot_coeffs)?;
    if quotient.mul(h)? != *g {
        return Err(internal("exact division failed its reconstruction check"));
    }
    Ok(Some(quotient))
}

/// The norm computed as the resultant of the λ-th cyclotomic polynomial and
/// the coefficient polynomial of g — an independent route that must agree
/// with `CyclotomicInteger::norm`.
pub fn norm_via_resultant(g: &CyclotomicInteger) -> BigInt {
    let n = g.lambda() as usize - 1; // degree of Φ_λ
    let mut gpoly: Vec<BigInt> = g.coeffs().to_vec();
    while gpoly.last().is_some_and(|c| c.is_zero()) {
        gpoly.pop();
    }
    if gpoly.is_empty() {
        return BigInt::zero();
    }
    let m = gpoly.len() - 1;
    if m == 0 {
        return num_traits::pow::pow(gpoly[0].clone(), n);
    }
    // Sylvester matrix of Φ (degree n, all-ones coefficients) and gpoly
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for (row, mat_row) in mat.iter_mut().enumerate().take(m) {
        for k in 0..=n {
            mat_row[row + k] = BigInt::one();
        }
    }
    for i in 0..n {
        for (k, c) in gpoly.iter().rev().enumerate() {
            mat[m + i][i + k] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

pub(crate) enum ScanEnd {
    Stopped,
    Exhausted,
    Capped,
}

/// Visits candidate vectors in the canonical order: by support size, then by
/// maximum coefficient magnitude, then positions and coefficient tuples
/// lexicographically (values ordered −m, …, −1, 1, …, m). The visitor
/// returns `true` to stop the scan.
pub(crate) fn enumerate_candidates<F>(
    lambda: u64,
    budget: &SearchBudget,
    mut visit: F,
) -> Result<ScanEnd>
where
    F: FnMut(&CyclotomicInteger) -> Result<bool>,
{
    let n = lambda as usize;
    let mut seen: u64 = 0;
    let mut raw = vec![0i64; n];
    let mut positions: Vec<usize> = Vec::new();
    let mut coeffs: Vec<i64> = Vec::new();

    // recursive descent over coefficient tuples at fixed positions, keeping
    // only tuples whose maximum magnitude is exactly m
    #[allow(clippy::too_many_arguments)]
    fn tuples<F2>(
        positions: &[usize],
        coeffs: &mut Vec<i64>,
        m: i64,
        has_max: bool,
        raw: &mut Vec<i64>,
        lambda: u64,
        seen: &mut u64,
        cap: u64,
        visit: &mut F2,
    ) -> Result<Option<ScanEnd>>
    where
        F2: FnMut(&CyclotomicInteger) -> Result<bool>,
    {
        let depth = coeffs.len();
        if depth == positions.len() {
            *seen += 1;
            for (&p, &c) in positions.iter().zip(coeffs.iter()) {
                raw[p] = c;
            }
            let candidate = CyclotomicInteger::from_i64_coeffs(lambda, raw)?;
            for &p in positions {
                raw[p] = 0;
            }
            if visit(&candidate)? {
                return Ok(Some(ScanEnd::Stopped));
            }
            if *seen >= cap {
                return Ok(Some(ScanEnd::Capped));
            }
            return Ok(None);
        }
        let last = depth + 1 == positions.len();
        let mut v = -m;
        while v <= m {
            if v == 0 {
                v = 1;
                continue;
            }
            if !(last && !has_max && v.abs() != m) {
                coeffs.push(v);
                let end = tuples(
                    positions,
                    coeffs,
                    m,
                    has_max || v.abs() == m,
                    raw,
                    lambda,
                    seen,
                    cap,
                    visit,
                )?;
                coeffs.pop();
                if end.is_some() {
                    return Ok(end);
                }
            }
            v += 1;
        }
        Ok(None)
    }

    // lexicographic position combinations of size s
    fn combos<F3>(
        n: usize,
        s: usize,
        start: usize,
        positions: &mut Vec<usize>,
        body: &mut F3,
    ) -> Result<Option<ScanEnd>>
    where
        F3: FnMut(&[usize]) -> Result<Option<ScanEnd>>,
    {
        if positions.len() == s {
            return body(positions);
        }
        for p in start..n {
            if n - p < s - positions.len() {
                break;
            }
            positions.push(p);
            let end = combos(n, s, p + 1, positions, body)?;
            positions.pop();
            if end.is_some() {
                return Ok(end);
            }
        }
        Ok(None)
    }

    for s in 1..=budget.max_support.min(n) {
        for m in 1..=budget.coeff_bound as i64 {
            let end = combos(n, s, 0, &mut positions, &mut |pos: &[usize]| {
                tuples(
                    pos,
                    &mut coeffs,
                    m,
                    false,
                    &mut raw,
                    lambda,
                    &mut seen,
                    budget.max_candidates,
                    &mut visit,
                )
            })?;
            if let Some(end) = end {
                return Ok(end);
            }
        }
    }
    Ok(ScanEnd::Exhausted)
}

/// Searches for an actual generator of the divisor P: the first candidate h
/// in enumeration order with |norm(h)| = q^f and valuation(P, h) = 1, which
/// forces h's divisor multiset to be exactly {P}.
pub fn search_generator(
    p: &IdealPrimeDivisor,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    if matches!(p.kind(), DivisorKind::Lambda) {
        return Err(Error::LambdaKindNotAllowed);
    }
    let target = BigUint::from(p.q()).pow(p.f() as u32);
    let mut found: Option<CyclotomicInteger> = None;
    let end = enumerate_candidates(p.lambda(), budget, |h| {
        // divides(P,h) plus the norm condition is equivalent to ν_P(h) = 1
        // with no other divisor present; test the cheap congruence first.
        if !p.divides(h)? {
            return Ok(false);
        }
        if h.norm()?.magnitude() != &target {
            return Ok(false);
        }
        if p.valuation(h)? != 1 {
            return Err(internal("norm q^f candidate with valuation != 1"));
        }
        found = Some(h.clone());
        Ok(true)
    })?;
    Ok(match (found, end) {
        (Some(h), _) => SearchOutcome::Found(h),
        (None, ScanEnd::Capped) => SearchOutcome::Capped,
        (None, _) => SearchOutcome::Exhausted,
    })
}

/// One row of the oracle-agreement report for a divisor of q.
#[derive(Clone, Debug)]
pub struct DivisorCheckRow {
    pub divisor: IdealPrimeDivisor,
    pub divides: bool,
    pub generator: Option<CyclotomicInteger>,
    pub oracle_divides: Option<bool>,
    pub agree: bool,
}

/// Oracle-agreement report: the congruence test against exact division by a
/// found generator, for every divisor of q.
#[derive(Clone, Debug)]
pub struct DivisorCheckReport {
    pub lambda: u64,
    pub q: u64,
    pub subject: CyclotomicInteger,
    pub rows: Vec<DivisorCheckRow>,
    pub all_agree: bool,
}

/// For each divisor P of q, tests divisibility of g along the period path
/// and, when a generator is found within budget, along the exact-division
/// path; reports agreement.
pub fn brute_force_divisor_check(
    q: u64,
    lambda: u64,
    g: &CyclotomicInteger,
    budget: &SearchBudget,
) -> Result<DivisorCheckReport> {
    if q == lambda {
        return Err(Error::MismatchedLambda(lambda, q));
    }
    let divisors = prime_divisors_of(q, lambda)?;
    let mut rows = Vec::with_capacity(divisors.len());
    let mut all_agree = true;
    for p in divisors {
        let divides = p.divides(g)?;
        let generator = match search_generator(&p, budget)? {
            SearchOutcome::Found(h) => Some(h),
            _ => None,
        };
        let oracle_divides = match &generator {
            Some(h) => Some(exact_divide(g, h)?.is_some()),
            None => None,
        };
        let agree = oracle_divides.is_none_or(|o| o == divides);
        all_agree &= agree;
        rows.push(DivisorCheckRow {
            divisor: p,
            divides,
            generator,
            oracle_divides,
            agree,
        });
    }
    Ok(DivisorCheckReport {
        lambda,
        q,
        subject: g.clone(),
        rows,
        all_agree,
    })
}

/// Search outcomes per prime: (q, rows of (divisor, outcome) in shift order).
pub type CensusReport = Vec<(u64, Vec<(IdealPrimeDivisor, SearchOutcome)>)>;

/// Per-divisor search outcomes for every prime q ≤ q_max except λ itself,
/// produced by a single shared candidate scan. Equivalent to running
/// `search_generator` per divisor (same order, same predicate) but the norm
/// of each candidate is computed once.
pub fn generator_census(
    lambda: u64,
    q_max: u64,
    budget: &SearchBudget,
) -> Result<CensusReport> {
    use std::collections::BTreeMap;

    struct Slot {
        divisors: Vec<IdealPrimeDivisor>,
        found: Vec<Option<CyclotomicInteger>>,
    }

    let mut slots: BTreeMap<BigUint, Slot> = BTreeMap::new();
    let mut order: Vec<(u64, BigUint)> = Vec::new();
    for q in 2..=q_max {
        if q == lambda || !crate::cyclo::is_prime_u64(q) {
            continue;
        }
        let divisors = prime_divisors_of(q, lambda)?;
        let target = BigUint::from(q).pow(divisors[0].f() as u32);
        let n = divisors.len();
        order.push((q, target.clone()));
        slots.insert(
            target,
            Slot {
                divisors,
                found: vec![None; n],
            },
        );
    }
    let mut remaining: usize = slots.values().map(|s| s.found.len()).sum();

    let end = enumerate_candidates(lambda, budget, |h| {
        let nrm = norm_magnitude(h)?;
        if let Some(slot) = slots.get_mut(&nrm) {
            for (i, p) in slot.divisors.iter().enumerate() {
                if slot.found[i].is_none() && p.divides(h)? {
                    slot.found[i] = Some(h.clone());
                    remaining -= 1;
                    break; // |norm| = q^f: exactly one divisor of q divides h
                }
            }
        }
        Ok(remaining == 0)
    })?;

    let absent = match end {
        ScanEnd::Capped => SearchOutcome::Capped,
        _ => SearchOutcome::Exhausted,
    };
    let mut out = Vec::with_capacity(order.len());
    for (q, target) in order {
        let slot = slots.remove(&target).expect("slot exists");
        let rows = slot
            .divisors
            .into_iter()
            .zip(slot.found)
            .map(|(p, found)| {
                let outcome = match found {
                    Some(h) => SearchOutcome::Found(h),
                    None => absent.clone(),
                };
                (p, outcome)
            })
            .collect();
        out.push((q, rows));
    }
    Ok(out)
}

/// |norm(h)| with an overflow-checked i128 fast path.
fn norm_magnitude(h: &CyclotomicInteger) -> Result<BigUint> {
    if let Some(n) = norm_i128(h) {
        return Ok(BigUint::from(n.unsigned_abs()));
    }
    Ok(h.norm()?.magnitude().clone())
}

fn norm_i128(h: &CyclotomicInteger) -> Option<i128> {
    use num_traits::ToPrimitive;
    let lambda = h.lambda() as usize;
    let base: Vec<i128> = h
        .coeffs()
        .iter()
        .map(|c| c.to_i128())
        .collect::<Option<Vec<_>>>()?;
    let mut acc = base.clone();
    for k in 2..lambda as u64 {
        let mut next = vec![0i128; lambda];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in base.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                // conjugate(h, k) has coefficient b at exponent j·k
                let idx = (i + j * k as usize) % lambda;
                next[idx] = next[idx].checked_add(a.checked_mul(b)?)?;
            }
        }
        // canonicalize: subtract the top coefficient
        let top = next[lambda - 1];
        if top != 0 {
            for c in next.iter_mut() {
                *c = c.checked_sub(top)?;
            }
        }
        acc = next;
    }
    if acc[1..].iter().any(|&c| c != 0) {
        return None; // signal a fall back to the checked BigInt route
    }
    Some(acc[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CyclotomicInteger;

    fn c(lambda: u64, raw: &[i64]) -> CyclotomicInteger {
        CyclotomicInteger::from_i64_coeffs(lambda, raw).unwrap()
    }

    #[test]
    fn exact_divide_examples() {
        // (2−α−α⁴)/(1−α) = 1−α⁴
        let g = c(5, &[2, -1, 0, 0, -1]);
        let h = c(5, &[1, -1, 0, 0, 0]);
        assert_eq!(exact_divide(&g, &h).unwrap(), Some(c(5, &[1, 0, 0, 0, -1])));

        // norm 11 does not divide norm 1
        let g = c(5, &[1, 1, 0, 0, 0]);
        let h = c(5, &[2, 1, 0, 0, 0]);
        assert_eq!(exact_divide(&g, &h).unwrap(), None);

        // unit division
        let g = c(5, &[3, -2, 5, 0, 1]);
        let one = CyclotomicInteger::one(5).unwrap();
        assert_eq!(exact_divide(&g, &one).unwrap(), Some(g.clone()));

        assert!(matches!(
            exact_divide(&g, &CyclotomicInteger::zero(5).unwrap()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn resultant_norm_examples() {
        assert_eq!(norm_via_resultant(&c(5, &[2, 1, 0, 0, 0])), BigInt::from(11));
        assert_eq!(norm_via_resultant(&c(5, &[1, -1, 0, 0, 0])), BigInt::from(5));
        assert_eq!(norm_via_resultant(&c(5, &[3, 0, 0, 0, 0])), BigInt::from(81));
        assert_eq!(
            norm_via_resultant(&CyclotomicInteger::zero(5).unwrap()),
            BigInt::zero()
        );
    }

    #[test]
    fn resultant_agrees_with_conjugate_product() {
        for (lambda, raw) in [
            (5u64, vec![3, -1, 0, 2, 4]),
            (7, vec![1, 1, -2, 0, 0, 3, -1]),
            (3, vec![4, -5, 1]),
        ] {
            let g = c(lambda, &raw);
            assert_eq!(norm_via_resultant(&g), g.norm().unwrap());
        }
    }

    #[test]
    fn enumeration_is_ordered_and_counts() {
        let budget = SearchBudget::new(2, 2, 1_000_000).unwrap();
        assert_eq!(budget.space_size(5), 5 * 4 + 10 * 16);
        let mut seen = Vec::new();
        let end = enumerate_candidates(5, &budget, |h| {
            seen.push(h.clone());
            Ok(false)
        })
        .unwrap();
        assert!(matches!(end, ScanEnd::Exhausted));
        assert_eq!(seen.len(), 180);
        // first candidates: support 1, magnitude 1, positions ascending
        assert_eq!(seen[0], c(5, &[-1, 0, 0, 0, 0]));
        assert_eq!(seen[1], c(5, &[1, 0, 0, 0, 0]));
        assert_eq!(seen[2], c(5, &[0, -1, 0, 0, 0]));
    }

    #[test]
    fn norm_i128_matches_bigint() {
        for (lambda, raw) in [
            (5u64, vec![3, -1, 0, 2, 4]),
            (7, vec![1, 1, -2, 0, 0, 3, -1]),
            (23, {
                let mut v = vec![0i64; 23];
                v[0] = 1;
                v[3] = -1;
                v[17] = 1;
                v
            }),
        ] {
            let g = c(lambda, &raw);
            assert_eq!(
                BigInt::from(norm_i128(&g).unwrap()),
                g.norm().unwrap(),
                "λ={lambda}"
            );
        }
    }
}

#[cfg(test)]
mod search_tests {
    use super::*;
    use crate::cyclo::CyclotomicInteger;
    use num_traits::{Signed, ToPrimitive};

    fn divisor_by_xi(lambda: u64, q: u64, xi: u64) -> IdealPrimeDivisor {
        prime_divisors_of(q, lambda)
            .unwrap()
            .into_iter()
            .find(|p| p.xi() == Some(xi))
            .unwrap()
    }

    #[test]
    fn finds_small_split_generator() {
        let p9 = divisor_by_xi(5, 11, 9);
        let budget = SearchBudget::new(2, 2, 1_000_000).unwrap();
        match search_generator(&p9, &budget).unwrap() {
            SearchOutcome::Found(h) => {
                assert_eq!(h.norm().unwrap().magnitude().to_u64(), Some(11));
                assert_eq!(p9.valuation(&h).unwrap(), 1);
            }
            other => panic!("expected a generator, got {other:?}"),
        }
    }

    #[test]
    fn finds_inert_prime_itself() {
        let p = prime_divisors_of(2, 5).unwrap().remove(0);
        let budget = SearchBudget::new(1, 2, 1_000_000).unwrap();
        match search_generator(&p, &budget).unwrap() {
            SearchOutcome::Found(h) => {
                // ±2: the inert prime is its own generator
                assert_eq!(h.as_constant().and_then(|c| c.abs().to_u64()), Some(2));
            }
            other => panic!("expected the rational prime back, got {other:?}"),
        }
    }

    #[test]
    fn tight_candidate_cap_reports_capped() {
        let p = prime_divisors_of(19, 5).unwrap().remove(0);
        let budget = SearchBudget::new(3, 3, 10).unwrap();
        assert!(budget.space_size(5) > 10);
        assert_eq!(search_generator(&p, &budget).unwrap(), SearchOutcome::Capped);
    }

    #[test]
    fn rejects_lambda_divisor_and_empty_budget() {
        let lam = crate::divisors::IdealPrimeDivisor::lambda_divisor(5).unwrap();
        let budget = SearchBudget::new(1, 1, 10).unwrap();
        assert!(matches!(
            search_generator(&lam, &budget),
            Err(Error::LambdaKindNotAllowed)
        ));
        assert!(matches!(SearchBudget::new(0, 3, 10), Err(Error::EmptyBudget)));
    }

    #[test]
    fn exhausts_lambda23_q47_without_generator() {
        // the classical non-principal territory: no small-support generator
        let p = prime_divisors_of(47, 23).unwrap().remove(0);
        let budget = SearchBudget::new(3, 1, 1_000_000).unwrap();
        assert_eq!(
            search_generator(&p, &budget).unwrap(),
            SearchOutcome::Exhausted
        );
    }

    #[test]
    fn census_matches_per_divisor_search() {
        let budget = SearchBudget::new(3, 3, 1_000_000).unwrap();
        let census = generator_census(5, 11, &budget).unwrap();
        for (_q, rows) in census {
            for (p, outcome) in rows {
                assert_eq!(outcome, search_generator(&p, &budget).unwrap());
            }
        }
    }

    #[test]
    fn brute_force_check_agrees_on_the_worked_example() {
        let budget = SearchBudget::new(2, 2, 1_000_000).unwrap();
        let g = CyclotomicInteger::from_i64_coeffs(5, &[2, 1, 0, 0, 0]).unwrap();
        let report = brute_force_divisor_check(11, 5, &g, &budget).unwrap();
        assert!(report.all_agree);
        assert_eq!(report.rows.len(), 4);
        for row in &report.rows {
            assert!(row.generator.is_some());
            assert_eq!(row.divides, row.divisor.xi() == Some(9));
            assert_eq!(row.oracle_divides, Some(row.divides));
        }
    }

    #[test]
    fn brute_force_check_all_divisors_divide_q() {
        let budget = SearchBudget::new(3, 4, 1_000_000).unwrap();
        let g = CyclotomicInteger::from_i64_coeffs(5, &[19, 0, 0, 0, 0]).unwrap();
        let report = brute_force_divisor_check(19, 5, &g, &budget).unwrap();
        assert!(report.all_agree);
        assert!(report.rows.iter().all(|r| r.divides));
        assert!(report.rows.iter().all(|r| r.generator.is_some()));
    }

    #[test]
    fn brute_force_check_unit_has_no_divisors() {
        let budget = SearchBudget::new(2, 2, 1_000_000).unwrap();
        let one = CyclotomicInteger::one(5).unwrap();
        let report = brute_force_divisor_check(11, 5, &one, &budget).unwrap();
        assert!(report.all_agree);
        assert!(report.rows.iter().all(|r| !r.divides));
    }
}
