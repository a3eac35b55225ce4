//! Dense polynomial arithmetic over Z/q (q prime, machine-sized) and
//! equal-degree factorization of the λ-th cyclotomic polynomial.
//!
//! Only what the period machinery needs: the λ-th cyclotomic polynomial
//! x^{λ−1} + … + 1 factors modulo q (q ≠ λ) into e distinct irreducible
//! polynomials, all of degree f = ord_λ(q). Cantor–Zassenhaus splitting is
//! randomized; the RNG is seeded from (λ, q) so results are reproducible.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{internal, Result};

/// Coefficients in ascending degree order, trimmed (no trailing zeros).
pub(crate) type Poly = Vec<u64>;

fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn submod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

pub(crate) fn powmod_u64(mut base: u64, mut exp: u64, q: u64) -> u64 {
    base %= q;
    let mut acc = 1 % q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, q);
        }
        base = mulmod(base, base, q);
        exp >>= 1;
    }
    acc
}

fn trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn mul(a: &Poly, b: &Poly, q: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = (out[i + j] as u128 + x as u128 * y as u128) % q as u128;
            out[i + j] = t as u64;
        }
    }
    trim(&mut out);
    out
}

fn add(a: &Poly, b: &Poly, q: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % q;
    }
    trim(&mut out);
    out
}

/// Remainder of a modulo b (b nonzero).
fn rem(a: &Poly, b: &Poly, q: u64) -> Poly {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = powmod_u64(b[db], q - 2, q);
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = mulmod(r[dr], lead_inv, q);
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[i + shift] = submod(r[i + shift], mulmod(factor, bc, q), q);
        }
        trim(&mut r);
    }
    r
}

fn divide_exact(a: &Poly, b: &Poly, q: u64) -> Poly {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = powmod_u64(b[db], q - 2, q);
    let mut r = a.clone();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = mulmod(r[dr], lead_inv, q);
        let shift = dr - db;
        quot[shift] = factor;
        for (i, &bc) in b.iter().enumerate() {
            r[i + shift] = submod(r[i + shift], mulmod(factor, bc, q), q);
        }
        trim(&mut r);
    }
    assert!(r.is_empty(), "non-exact polynomial division");
    trim(&mut quot);
    quot
}

fn make_monic(p: &mut Poly, q: u64) {
    if let Some(d) = degree(p) {
        if p[d] != 1 {
            let inv = powmod_u64(p[d], q - 2, q);
            for c in p.iter_mut() {
                *c = mulmod(*c, inv, q);
            }
        }
    }
}

fn gcd(a: &Poly, b: &Poly, q: u64) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = rem(&x, &y, q);
        x = y;
        y = r;
    }
    make_monic(&mut x, q);
    x
}

fn powmod_poly(base: &Poly, exp: &BigUint, modulus: &Poly, q: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, q);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            acc = rem(&mul(&acc, &b, q), modulus, q);
        }
        if i + 1 < exp.bits() {
            b = rem(&mul(&b, &b, q), modulus, q);
        }
    }
    acc
}

/// x^k modulo (h, q).
pub(crate) fn x_power_mod(k: u64, h: &Poly, q: u64) -> Poly {
    let mut p = vec![0u64; k as usize + 1];
    p[k as usize] = 1;
    rem(&p, h, q)
}

/// The λ-th cyclotomic polynomial 1 + x + … + x^{λ−1} reduced mod q.
pub(crate) fn cyclotomic_mod(lambda: u64, q: u64) -> Poly {
    let mut p = vec![1 % q; lambda as usize];
    trim(&mut p);
    p
}

/// Splits a product of distinct monic irreducible degree-f polynomials into
/// its factors (Cantor–Zassenhaus; Frobenius-trace splitting for q = 2).
pub(crate) fn equal_degree_factorization(poly: &Poly, f: usize, q: u64) -> Result<Vec<Poly>> {
    let deg = degree(poly).ok_or_else(|| internal("EDF of zero polynomial"))?;
    if deg % f != 0 {
        return Err(internal(format!(
            "EDF degree mismatch: deg={deg} is not a multiple of f={f}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(
        0x4b756d6d65720000u64 ^ (q << 8) ^ degree(poly).unwrap_or(0) as u64,
    );
    let mut out = Vec::with_capacity(deg / f);
    let mut stack = vec![poly.clone()];
    // (q^f - 1)/2 for the odd-characteristic power map
    let half_order = if q > 2 {
        (BigUint::from(q).pow(f as u32) - BigUint::one()) >> 1
    } else {
        BigUint::zero()
    };
    while let Some(mut cur) = stack.pop() {
        make_monic(&mut cur, q);
        let dcur = degree(&cur).unwrap();
        if dcur == f {
            out.push(cur);
            continue;
        }
        // random splitting attempts; each succeeds with probability >= 1/2,
        // so the cap is only reachable on invalid input
        let mut attempts = 0usize;
        loop {
            attempts += 1;
            if attempts > 64 + 4 * dcur * dcur {
                return Err(internal(format!(
                    "equal-degree splitting stalled at degree {dcur} mod {q}"
                )));
            }
            let r: Poly = {
                let mut v: Vec<u64> = (0..dcur).map(|_| rng.random_range(0..q)).collect();
                trim(&mut v);
                if v.is_empty() {
                    continue;
                }
                v
            };
            let shared = gcd(&r, &cur, q);
            let candidate = if degree(&shared).is_some_and(|d| d > 0 && d < dcur) {
                shared
            } else if q == 2 {
                // trace map r + r^2 + ... + r^{2^{f-1}} lands in F_2 per factor
                let mut tr = r.clone();
                let mut pw = r.clone();
                for _ in 1..f {
                    pw = rem(&mul(&pw, &pw, q), &cur, q);
                    tr = add(&tr, &pw, q);
                }
                gcd(&tr, &cur, q)
            } else {
                let s = powmod_poly(&r, &half_order, &cur, q);
                // s - 1
                let mut s1 = s;
                if s1.is_empty() {
                    s1 = vec![q - 1];
                } else {
                    s1[0] = submod(s1[0], 1, q);
                    trim(&mut s1);
                }
                gcd(&s1, &cur, q)
            };
            if let Some(d) = degree(&candidate) {
                if d > 0 && d < dcur {
                    let rest = divide_exact(&cur, &candidate, q);
                    stack.push(candidate);
                    stack.push(rest);
                    break;
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn eval_poly(p: &[u64], x: u64, q: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = (mulmod(acc, x, q) + c) % q;
    }
    acc
}
