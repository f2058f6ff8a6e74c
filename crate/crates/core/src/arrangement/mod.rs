//! Rational affine hyperplane arrangements and their bounded complexes.

mod faces;
mod gale;
mod lp;

pub use faces::{
    bounded_complex, closure_intersection, feasible, is_bounded, is_coloop_free, is_simple,
    vertices, BoundedComplex, ClosureIntersection, Face, Region, RegionOrder, Vertex,
};
pub use gale::{gale_arrangement, gale_arrangement_with_lift, gale_normals};

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{dot, int, rank, sign, QMatrix, QVector, Rational};

/// The hyperplane `{x : ⟨normal, x⟩ + offset = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: QVector,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: QVector, offset: Rational) -> Result<Self, Error> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::Degenerate("zero normal".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `⟨normal, x⟩ + offset`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x) + &self.offset
    }

    pub fn side(&self, x: &[Rational]) -> i8 {
        sign(&self.eval(x))
    }

    /// Same hyperplane with the opposite reference normal.
    pub fn flipped(&self) -> Hyperplane {
        Hyperplane {
            normal: self.normal.iter().map(|v| -v).collect(),
            offset: -self.offset.clone(),
        }
    }

    /// Same hyperplane with normal and offset multiplied by `factor` (nonzero).
    pub fn scaled(&self, factor: &Rational) -> Hyperplane {
        assert!(!factor.is_zero(), "scale factor must be nonzero");
        Hyperplane {
            normal: self.normal.iter().map(|v| v * factor).collect(),
            offset: &self.offset * factor,
        }
    }
}

/// An ordered list of `s ≥ 1` hyperplanes in `R^m`. The index order is part
/// of the identity: simplex orientations and region ordering depend on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, Error> {
        if hyperplanes.is_empty() {
            return Err(Error::Precondition("arrangement needs at least one hyperplane".into()));
        }
        if ambient_dim == 0 {
            return Err(Error::Precondition("ambient dimension must be positive".into()));
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != ambient_dim {
                return Err(Error::Dimension(format!(
                    "hyperplane {} has normal of length {}, expected {ambient_dim}",
                    i + 1,
                    h.normal.len()
                )));
            }
        }
        Ok(Arrangement { ambient_dim, hyperplanes })
    }

    /// Integer data: each entry is `(normal, offset)`.
    pub fn from_i64(ambient_dim: usize, data: &[(&[i64], i64)]) -> Result<Self, Error> {
        let hs = data
            .iter()
            .enumerate()
            .map(|(i, (n, o))| {
                Hyperplane::new(n.iter().map(|&v| int(v)).collect(), int(*o)).map_err(|_| {
                    Error::Degenerate(format!("zero normal at index {}", i + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Arrangement::new(ambient_dim, hs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    /// The `s × m` matrix with the normals as rows.
    pub fn normal_matrix(&self) -> QMatrix {
        self.normals_of(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Normals of the selected hyperplanes as rows.
    pub fn normals_of(&self, indices: &[usize]) -> QMatrix {
        let rows = indices.iter().map(|&i| self.hyperplanes[i].normal.clone()).collect();
        QMatrix::from_rows(self.ambient_dim, rows).expect("normals have ambient length")
    }

    /// Rank of the normals of the selected hyperplanes.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        rank(&self.normals_of(indices))
    }

    pub fn sign_vector_of(&self, x: &[Rational]) -> SignVector {
        SignVector(self.hyperplanes.iter().map(|h| h.side(x)).collect())
    }

    /// Copy with hyperplane `i` replaced.
    pub fn with_hyperplane(&self, i: usize, h: Hyperplane) -> Result<Arrangement, Error> {
        let mut hs = self.hyperplanes.clone();
        hs[i] = h;
        Arrangement::new(self.ambient_dim, hs)
    }

    /// Image under `x ↦ x + shift`: offsets become `ψ_i − ⟨b_i, shift⟩`.
    pub fn translated(&self, shift: &[Rational]) -> Arrangement {
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane { normal: h.normal.clone(), offset: &h.offset - dot(&h.normal, shift) })
            .collect();
        Arrangement { ambient_dim: self.ambient_dim, hyperplanes: hs }
    }
}

/// Position relative to each hyperplane: -1, 0 or +1 per index.
/// Ordered lexicographically with `- < 0 < +`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|s| (-1..=1).contains(s)), "signs must be -1, 0 or 1");
        SignVector(signs)
    }

    pub fn parse(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| match c {
                '+' => Some(1),
                '-' => Some(-1),
                '0' => Some(0),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == 0).collect()
    }

    /// `self ≤ other` in the face order: every entry is 0 or agrees.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || a == b)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}
