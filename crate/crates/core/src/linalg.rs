//! Exact linear algebra over the integers and rationals.
//!
//! Everything here is fraction-free (Bareiss) elimination on `BigInt`
//! matrices. Rational inputs are scaled row-wise to integers first, which
//! leaves rank and solution sets unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Fraction-free forward elimination with row pivoting, in place.
///
/// Returns the pivot columns and the sign of the row permutation. After the
/// call the last pivot equals the determinant of the leading square block
/// (up to that sign) when the matrix has full rank.
fn bareiss(m: &mut IntMatrix, cols: usize) -> (Vec<usize>, i32) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..m[i].len() {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, sign)
}

pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let (pivots, sign) = bareiss(&mut a, n);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinants of the k×k upper-left blocks, k = 1..=n.
pub fn leading_principal_minors(m: &IntMatrix) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let block: IntMatrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&block)
        })
        .collect()
}

pub fn rank(m: &IntMatrix) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut a = m.clone();
    bareiss(&mut a, cols).0.len()
}

/// Scales each row of a rational matrix by the lcm of its denominators.
pub fn clear_denominators(m: &[Vec<BigRational>]) -> IntMatrix {
    m.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| q.numer() * (&l / q.denom()))
                .collect()
        })
        .collect()
}

/// Solves `m x = b` for square nonsingular `m`; `None` if singular.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = m.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut a: IntMatrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (pivots, _) = bareiss(&mut a, n);
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Some(x)
}

/// Sign pattern test for negative definiteness: (-1)^k minor_k > 0.
pub fn is_negative_definite(m: &IntMatrix) -> bool {
    leading_principal_minors(m)
        .iter()
        .enumerate()
        .all(|(k, d)| {
            if k % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&to_big(&[vec![-2, 1], vec![1, -2]])), 3.into());
        assert_eq!(determinant(&to_big(&[vec![0, 1], vec![1, 0]])), (-1).into());
        assert_eq!(determinant(&to_big(&[vec![-2, 2], vec![2, -2]])), 0.into());
        let a3 = to_big(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -1]]);
        // cofactor expansion by hand: -2(2-1) - 1(-1-0) = -1
        assert_eq!(determinant(&a3), (-1).into());
    }

    #[test]
    fn minors_of_a3_chain() {
        let m = to_big(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]);
        let minors: Vec<i64> = leading_principal_minors(&m)
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(minors, vec![-2, 3, -4]);
        assert!(is_negative_definite(&m));
    }

    #[test]
    fn solve_exact() {
        let m = to_big(&[vec![-3]]);
        assert_eq!(solve(&m, &[1.into()]).unwrap(), vec![q(-1, 3)]);
        let m = to_big(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -1]]);
        let x = solve(&m, &[0.into(), 0.into(), 1.into()]).unwrap();
        assert_eq!(x, vec![q(-1, 1), q(-2, 1), q(-3, 1)]);
        assert!(solve(&to_big(&[vec![1, 1], vec![2, 2]]), &[0.into(), 0.into()]).is_none());
    }

    #[test]
    fn rank_with_rational_rows() {
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 1)]];
        assert_eq!(rank(&clear_denominators(&m)), 1);
        assert_eq!(rank(&to_big(&[vec![0, 0, 1], vec![0, 0, 2], vec![1, 0, 0]])), 2);
        assert_eq!(rank(&to_big(&[vec![0, 0], vec![0, 0]])), 0);
    }
}
