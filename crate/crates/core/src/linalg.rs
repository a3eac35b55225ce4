//! Small exact linear-algebra helpers: fraction-free determinants and
//! rational matrix inversion. Matrices here are at most (λ−1)+(λ−2) square,
//! so cubic algorithms are fine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss' identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Inverse over the rationals; `None` for a singular matrix.
pub(crate) fn invert_rational(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &pivot;
            inv[col][j] /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &factor * &a[col][j];
                a[r][j] -= t;
                let t = &factor * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Scales a rational inverse by the determinant, asserting that every entry
/// becomes an exact integer (the adjugate matrix).
pub(crate) fn adjugate_from_inverse(
    inv: &[Vec<BigRational>],
    det: &BigInt,
) -> Option<Vec<Vec<BigInt>>> {
    let det_r = BigRational::from(det.clone());
    let mut out = Vec::with_capacity(inv.len());
    for row in inv {
        let mut orow = Vec::with_capacity(row.len());
        for x in row {
            let scaled = x * &det_r;
            if !scaled.is_integer() {
                return None;
            }
            orow.push(scaled.to_integer());
        }
        out.push(orow);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(bareiss_determinant(m(&[&[2]])), BigInt::from(2));
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        assert_eq!(
            bareiss_determinant(m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2], &[2, 4]])),
            BigInt::zero()
        );
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let mat = m(&[&[2, 1, 0], &[1, -1, 3], &[0, 5, 1]]);
        let inv = invert_rational(&mat).unwrap();
        let product: Vec<Vec<BigRational>> = mat
            .iter()
            .map(|row| {
                (0..3)
                    .map(|j| {
                        row.iter()
                            .enumerate()
                            .map(|(k, entry)| BigRational::from(entry.clone()) * &inv[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        for (i, row) in product.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(entry, &expect);
            }
        }
    }
}
