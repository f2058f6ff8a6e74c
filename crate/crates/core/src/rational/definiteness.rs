//! Exact definiteness certificates for symmetric rational matrices.
//!
//! The verdict is read off the leading principal minors (Sylvester's
//! criterion). Indefinite verdicts additionally carry explicit witness
//! vectors `z` with `zᵀSz < 0` and `zᵀSz > 0`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{determinant, dot, int, sign, QMatrix, QVector, Rational};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PositiveDefinite => "positive-definite",
            Verdict::NegativeDefinite => "negative-definite",
            Verdict::Indefinite => "indefinite",
            Verdict::Degenerate => "degenerate",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        [
            Verdict::PositiveDefinite,
            Verdict::NegativeDefinite,
            Verdict::Indefinite,
            Verdict::Degenerate,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitenessCertificate {
    pub verdict: Verdict,
    /// Leading principal minors `d_1, …, d_n`.
    pub minors: Vec<Rational>,
    /// Present for indefinite verdicts: `zᵀSz < 0`.
    pub negative_witness: Option<QVector>,
    /// Present for indefinite verdicts: `zᵀSz > 0`.
    pub positive_witness: Option<QVector>,
}

/// `zᵀ S z`.
pub fn quadratic_form(s: &QMatrix, z: &[Rational]) -> Rational {
    let sz = s.mul_vec(z).expect("vector length must match matrix");
    dot(z, &sz)
}

fn bilinear(s: &QMatrix, u: &[Rational], v: &[Rational]) -> Rational {
    dot(u, &s.mul_vec(v).expect("vector length must match matrix"))
}

/// Lagrange reduction: an `S`-orthogonal basis `v_1..v_n` of the whole
/// space, returned with the values `v_iᵀ S v_i`. The signs of those values
/// give the inertia of `S`.
pub fn diagonalize(s: &QMatrix) -> Vec<(QVector, Rational)> {
    let n = s.rows();
    let mut pending: Vec<QVector> = (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            e
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    while !pending.is_empty() {
        let pivot = pending
            .iter()
            .position(|w| !quadratic_form(s, w).is_zero());
        let idx = match pivot {
            Some(i) => i,
            None => {
                // every remaining vector is isotropic; combine a non-orthogonal pair
                let pair = (0..pending.len()).find_map(|i| {
                    (i + 1..pending.len())
                        .find(|&j| !bilinear(s, &pending[i], &pending[j]).is_zero())
                        .map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        let sum: QVector =
                            pending[i].iter().zip(&pending[j]).map(|(a, b)| a + b).collect();
                        pending[i] = sum;
                        i
                    }
                    None => {
                        out.extend(pending.drain(..).map(|w| (w, Rational::zero())));
                        break;
                    }
                }
            }
        };
        let u = pending.remove(idx);
        let su = s.mul_vec(&u).expect("vector length must match matrix");
        let d = dot(&u, &su);
        for w in pending.iter_mut() {
            let c = dot(w, &su) / &d;
            if !c.is_zero() {
                for (wi, ui) in w.iter_mut().zip(&u) {
                    *wi -= &c * ui;
                }
            }
        }
        out.push((u, d));
    }
    out
}

/// Small-integer witness search over `{-1,0,1}^n` (first nonzero entry
/// positive). Returns the vector minimising (or maximising) `zᵀSz`,
/// earliest in enumeration order on ties.
fn small_witness(s: &QMatrix, want_negative: bool) -> Option<QVector> {
    let n = s.rows();
    if n == 0 || n > 8 {
        return None;
    }
    let mut best: Option<(Rational, QVector)> = None;
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut z = Vec::with_capacity(n);
        for _ in 0..n {
            // digit order 1, 0, -1 so that (1,1,...) comes first
            z.push(int(1 - (c % 3) as i64));
            c /= 3;
        }
        match z.iter().find(|v| !v.is_zero()) {
            Some(first) if first.is_positive() => {}
            _ => continue,
        }
        let q = quadratic_form(s, &z);
        let q = if want_negative { q } else { -q };
        if q.is_negative() && best.as_ref().is_none_or(|(b, _)| q < *b) {
            best = Some((q, z));
        }
    }
    best.map(|(_, z)| z)
}

fn witness(s: &QMatrix, basis: &[(QVector, Rational)], want_negative: bool) -> Option<QVector> {
    small_witness(s, want_negative).or_else(|| {
        basis
            .iter()
            .find(|(_, d)| if want_negative { d.is_negative() } else { d.is_positive() })
            .map(|(v, _)| v.clone())
    })
}

/// Leading-principal-minor certificate for a symmetric matrix. Singular
/// matrices are split into semidefinite and indefinite by diagonalising.
pub fn definiteness(s: &QMatrix) -> Result<DefinitenessCertificate, Error> {
    if !s.is_square() {
        return Err(Error::Dimension(format!(
            "definiteness of non-square {}x{} matrix",
            s.rows(),
            s.cols()
        )));
    }
    if !s.is_symmetric() {
        return Err(Error::Precondition("matrix is not symmetric".into()));
    }
    let n = s.rows();
    let minors: Vec<Rational> = (1..=n)
        .map(|k| determinant(&s.leading(k)).expect("leading block is square"))
        .collect();
    // sign required of d_k by the positive / negative pattern
    let pos_ok = |_: usize, d: &Rational| sign(d) > 0;
    let neg_ok = |k: usize, d: &Rational| {
        let want = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
        sign(d) == want
    };
    let all_pos = minors.iter().enumerate().all(|(k, d)| pos_ok(k, d));
    let all_neg = minors.iter().enumerate().all(|(k, d)| neg_ok(k, d));
    let singular = minors.last().is_some_and(Zero::is_zero);
    let verdict = if all_pos {
        Verdict::PositiveDefinite
    } else if all_neg {
        Verdict::NegativeDefinite
    } else if singular {
        // minors alone cannot tell a semidefinite matrix from an indefinite
        // one once they vanish; the diagonal of a congruent form can
        let diag = diagonalize(s);
        let has_pos = diag.iter().any(|(_, d)| d.is_positive());
        let has_neg = diag.iter().any(|(_, d)| d.is_negative());
        if has_pos && has_neg {
            Verdict::Indefinite
        } else {
            Verdict::Degenerate
        }
    } else {
        Verdict::Indefinite
    };
    let (negative_witness, positive_witness) = if verdict == Verdict::Indefinite {
        let basis = diagonalize(s);
        (witness(s, &basis, true), witness(s, &basis, false))
    } else {
        (None, None)
    };
    Ok(DefinitenessCertificate { verdict, minors, negative_witness, positive_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ints;

    #[test]
    fn tridiagonal_positive() {
        let s = QMatrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let c = definiteness(&s).unwrap();
        assert_eq!(c.verdict, Verdict::PositiveDefinite);
        assert_eq!(c.minors, ints(&[2, 3]));
        assert!(c.negative_witness.is_none());
    }

    #[test]
    fn tridiagonal_negative() {
        let s = QMatrix::from_i64(&[&[-2, 1], &[1, -2]]);
        let c = definiteness(&s).unwrap();
        assert_eq!(c.verdict, Verdict::NegativeDefinite);
        assert_eq!(c.minors, ints(&[-2, 3]));
    }

    #[test]
    fn four_region_pairing_is_indefinite_with_witness() {
        let s = QMatrix::from_i64(&[
            &[3, -2, 1, 1],
            &[-2, 3, 1, 1],
            &[1, 1, 3, -2],
            &[1, 1, -2, 3],
        ]);
        let c = definiteness(&s).unwrap();
        assert_eq!(c.verdict, Verdict::Indefinite);
        let z = c.negative_witness.unwrap();
        assert_eq!(z, ints(&[1, 1, -1, -1]));
        assert_eq!(quadratic_form(&s, &z), int(-4));
        assert!(quadratic_form(&s, &c.positive_witness.unwrap()).is_positive());
    }

    #[test]
    fn degenerate_and_indefinite_singular() {
        let psd = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(definiteness(&psd).unwrap().verdict, Verdict::Degenerate);
        let z = QMatrix::zeros(3, 3);
        assert_eq!(definiteness(&z).unwrap().verdict, Verdict::Degenerate);
        // minors 1, 0, 0 look semidefinite but the form takes both signs
        let split = QMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]);
        let c = definiteness(&split).unwrap();
        assert_eq!(c.verdict, Verdict::Indefinite);
        assert!(quadratic_form(&split, &c.negative_witness.unwrap()).is_negative());
        let mixed = QMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        assert_eq!(definiteness(&mixed).unwrap().verdict, Verdict::Indefinite);
        let hyperbolic = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(definiteness(&hyperbolic).unwrap().verdict, Verdict::Indefinite);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            definiteness(&QMatrix::from_i64(&[&[1, 2], &[3, 4]])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(definiteness(&QMatrix::zeros(2, 3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn lagrange_basis_is_orthogonal() {
        let s = QMatrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        let basis = diagonalize(&s);
        for (i, (u, du)) in basis.iter().enumerate() {
            assert_eq!(quadratic_form(&s, u), *du);
            for (v, _) in &basis[i + 1..] {
                assert!(bilinear(&s, u, v).is_zero());
            }
        }
    }
}
