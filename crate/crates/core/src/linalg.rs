//! Small exact linear algebra over the rationals and integers.

use crate::ringcore::Rational;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub type Matrix = Vec<Vec<Rational>>;

pub fn to_rational(m: &[Vec<i64>]) -> Matrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = &a[n - 1][n - 1] * sign;
    d.to_i64().expect("determinant overflows i64")
}

/// Solves `a x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let delta = &f * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Inverse of an integer matrix with determinant ±1.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    if det_i64(m).abs() != 1 {
        return None;
    }
    let a = to_rational(m);
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        cols.push(solve(&a, &e)?);
    }
    let mut inv = vec![vec![0i64; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            debug_assert!(v.denom().is_one());
            inv[i][j] = v.to_integer().to_i64()?;
        }
    }
    Some(inv)
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::int;

    #[test]
    fn determinants() {
        assert_eq!(det_i64(&[vec![1, 0], vec![1, 2]]), 2);
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_i64(&[vec![2, 4], vec![1, 2]]), 0);
        assert_eq!(
            det_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            4
        );
    }

    #[test]
    fn solve_small_system() {
        let a = to_rational(&[vec![2, 1], vec![1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(
            x,
            vec![crate::ringcore::rat(4, 5), crate::ringcore::rat(7, 5)]
        );
        assert!(solve(&to_rational(&[vec![1, 2], vec![2, 4]]), &[int(1), int(1)]).is_none());
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = vec![vec![-1, 3], vec![0, -1]];
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![-1, -3], vec![0, -1]]);
        assert!(unimodular_inverse(&[vec![2, 0], vec![0, 1]]).is_none());
    }
}
