use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, QMatrix, QVector, Rational};
use crate::error::Error;

/// Integer matrix obtained by clearing denominators row by row, together
/// with the (positive) product of the row scale factors.
fn integer_rows(m: &QMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = common_denominator(row);
            let out = row.iter().map(|v| (v * Rational::from_integer(l.clone())).to_integer()).collect();
            scale *= &l;
            out
        })
        .collect();
    (rows, scale)
}

/// Fraction-free (Bareiss) forward elimination in place. Returns the rank,
/// the last pivot and the number of row swaps. After `k` pivots every
/// active entry is a `k+1` minor of the input, so each division is exact.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt, usize) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swaps += 1;
        }
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&pivot * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev, swaps)
}

/// Dimension of the row space.
pub fn rank(m: &QMatrix) -> usize {
    let (mut a, _) = integer_rows(m);
    bareiss(&mut a, m.cols()).0
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &QMatrix) -> Result<Rational, Error> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, scale) = integer_rows(m);
    let (r, last, swaps) = bareiss(&mut a, n);
    if r < n {
        return Ok(Rational::zero());
    }
    let det = if swaps % 2 == 1 { -last } else { last };
    Ok(Rational::new(det, scale))
}

/// Sign of the determinant: -1, 0 or +1.
pub fn det_sign(m: &QMatrix) -> Result<i8, Error> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "det_sign of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(1);
    }
    let (mut a, _) = integer_rows(m);
    let (r, last, swaps) = bareiss(&mut a, n);
    if r < n {
        return Ok(0);
    }
    let s: i8 = if last.is_positive() { 1 } else { -1 };
    Ok(if swaps % 2 == 1 { -s } else { s })
}

/// Reduced row echelon form of `[m | rhs]` over the rationals. Returns the
/// reduced rows and the pivot column of each nonzero row.
fn rref(mut a: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (a, pivots)
}

/// One exact solution of `m·x = rhs`, or `None` when the system is
/// inconsistent. Free variables are set to zero, so the answer is
/// deterministic; it is unique when `m` has full column rank.
pub fn solve_affine(m: &QMatrix, rhs: &[Rational]) -> Result<Option<QVector>, Error> {
    if rhs.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "system has {} rows but rhs has {} entries",
            m.rows(),
            rhs.len()
        )));
    }
    let n = m.cols();
    let aug: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(aug, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &col) in red.iter().zip(&pivots) {
        x[col] = row[n].clone();
    }
    Ok(Some(x))
}

/// Basis of the right kernel `{x : m·x = 0}`, one vector per free column
/// in elimination order.
pub fn kernel_basis(m: &QMatrix) -> Vec<QVector> {
    let n = m.cols();
    let (red, pivots) = rref(m.row_vecs(), n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}
