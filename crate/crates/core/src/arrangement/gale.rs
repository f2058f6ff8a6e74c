//! Arrangements from `(A, θ)` data: the normals are the rows of a kernel
//! basis matrix `B` of `A`, the offsets a lift `ψ` with `A·ψ = θ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Arrangement, Hyperplane};
use crate::error::Error;
use crate::rational::{common_denominator, kernel_basis, rank, solve_affine, QMatrix, Rational};

/// The `n × (n−d)` integer matrix whose columns span `ker A`, each column
/// scaled to a primitive integer vector. Column order follows the free
/// columns of the row reduction of `A`.
pub fn gale_normals(a: &QMatrix) -> Result<QMatrix, Error> {
    let d = a.rows();
    let n = a.cols();
    if rank(a) < d {
        return Err(Error::Degenerate(format!("A has rank {} < {d}", rank(a))));
    }
    let kernel = kernel_basis(a);
    if kernel.is_empty() {
        return Err(Error::Degenerate("A has trivial kernel (n = d)".into()));
    }
    let columns: Vec<Vec<Rational>> = kernel.into_iter().map(primitive).collect();
    let refs: Vec<&[Rational]> = columns.iter().map(Vec::as_slice).collect();
    Ok(QMatrix::from_columns(n, &refs))
}

fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let l = Rational::from_integer(common_denominator(&v));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Arrangement for `(A, θ)` using the lift `ψ` obtained by row reduction
/// (free coordinates zero).
pub fn gale_arrangement(a: &QMatrix, theta: &[Rational]) -> Result<Arrangement, Error> {
    if theta.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "theta has {} entries, A has {} rows",
            theta.len(),
            a.rows()
        )));
    }
    let normals = gale_normals(a)?;
    let psi = solve_affine(a, theta)?
        .ok_or_else(|| Error::Inconsistent("A·ψ = θ has no solution".into()))?;
    build(&normals, &psi)
}

/// Arrangement for `(A, θ)` with an explicit lift `ψ`; checks `A·ψ = θ`.
pub fn gale_arrangement_with_lift(
    a: &QMatrix,
    theta: &[Rational],
    psi: &[Rational],
) -> Result<Arrangement, Error> {
    if a.mul_vec(psi)? != theta {
        return Err(Error::Inconsistent("lift does not satisfy A·ψ = θ".into()));
    }
    let normals = gale_normals(a)?;
    build(&normals, psi)
}

fn build(normals: &QMatrix, psi: &[Rational]) -> Result<Arrangement, Error> {
    let hs = (0..normals.rows())
        .map(|i| {
            Hyperplane::new(normals.row(i).to_vec(), psi[i].clone())
                .map_err(|_| Error::Degenerate(format!("zero normal at index {}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(normals.cols(), hs)
}
