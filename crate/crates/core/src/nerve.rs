//! Independence complex of the normals' matroid, the nerve of the
//! hyperplanes, simplicial boundary matrices and reduced homology ranks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::arrangement::Arrangement;
use crate::error::Error;
use crate::rational::{int, rank, solve_affine, QMatrix, QVector, Rational};

/// A nonempty, strictly increasing set of hyperplane indices (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut indices: Vec<usize>) -> Result<Self, Error> {
        if indices.is_empty() {
            return Err(Error::Precondition("simplex needs at least one vertex".into()));
        }
        let n = indices.len();
        indices.sort_unstable();
        indices.dedup();
        if indices.len() != n {
            return Err(Error::Precondition("simplex has a repeated vertex".into()));
        }
        Ok(Simplex(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The facet with the `j`-th vertex removed; `None` for a vertex.
    pub fn facet(&self, j: usize) -> Option<Simplex> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(j);
        Some(Simplex(v))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", labels.join(","))
    }
}

/// A finite downward-closed family of simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: Vec<BTreeSet<Simplex>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` (all subsets are added).
    pub fn from_faces(faces: impl IntoIterator<Item = Simplex>) -> Self {
        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        let mut stack: Vec<Simplex> = faces.into_iter().collect();
        while let Some(s) = stack.pop() {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            if by_dim[d].insert(s.clone()) {
                stack.extend((0..=d).filter_map(|j| s.facet(j)));
            }
        }
        SimplicialComplex { faces: by_dim }
    }

    /// Dimension of the largest face, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, k: usize) -> impl Iterator<Item = &Simplex> {
        self.faces.get(k).into_iter().flatten()
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces.get(s.dim()).is_some_and(|set| set.contains(s))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(BTreeSet::len).collect()
    }

    pub fn vertex_set(&self) -> Vec<usize> {
        self.faces(0).map(|s| s.0[0]).collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.all_faces()
            .all(|s| (0..=s.dim()).filter_map(|j| s.facet(j)).all(|f| self.contains(&f)))
    }

    /// Reduced Euler characteristic `−1 + f_0 − f_1 + …`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .fold(-1, |acc, (k, fs)| if k % 2 == 0 { acc + fs.len() as i64 } else { acc - fs.len() as i64 })
    }

    /// Symmetric difference with another complex, sorted.
    pub fn difference(&self, other: &SimplicialComplex) -> Vec<Simplex> {
        let a: BTreeSet<&Simplex> = self.all_faces().collect();
        let b: BTreeSet<&Simplex> = other.all_faces().collect();
        a.symmetric_difference(&b).map(|s| (*s).clone()).collect()
    }
}

/// A formal rational combination of `degree`-simplices; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Simplex, Rational>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, s: Simplex, coeff: Rational) -> Result<(), Error> {
        if s.dim() != self.degree {
            return Err(Error::Dimension(format!(
                "simplex {s} has dimension {}, chain has degree {}",
                s.dim(),
                self.degree
            )));
        }
        let entry = self.terms.entry(s).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn coefficient(&self, s: &Simplex) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Inner product in the orthonormal simplex basis.
    pub fn inner(&self, other: &Chain) -> Rational {
        if self.degree != other.degree {
            return Rational::zero();
        }
        self.terms
            .iter()
            .filter_map(|(s, a)| other.terms.get(s).map(|b| a * b))
            .sum()
    }

    /// Boundary in the augmented complex. A degree-0 chain maps to its
    /// coefficient sum on the empty simplex, returned as the scalar.
    pub fn boundary(&self) -> Boundary {
        if self.degree == 0 {
            return Boundary::Augmented(self.terms.values().sum());
        }
        let mut out = Chain::zero(self.degree - 1);
        for (s, c) in &self.terms {
            for j in 0..=s.dim() {
                let f = s.facet(j).expect("positive dimension");
                let coeff = if j % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(f, coeff).expect("facet degree");
            }
        }
        Boundary::Chain(out)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let coeff = if mag == int(1) { String::new() } else { format!("{} ", crate::rational::format_rational(&mag)) };
            match (i, neg) {
                (0, false) => write!(f, "{coeff}{s}")?,
                (0, true) => write!(f, "-{coeff}{s}")?,
                (_, false) => write!(f, " + {coeff}{s}")?,
                (_, true) => write!(f, " - {coeff}{s}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Boundary {
    Chain(Chain),
    Augmented(Rational),
}

impl Boundary {
    pub fn is_zero(&self) -> bool {
        match self {
            Boundary::Chain(c) => c.is_zero(),
            Boundary::Augmented(v) => v.is_zero(),
        }
    }
}

/// Whether the normals of `set` are linearly independent.
pub fn independent(arr: &Arrangement, set: &[usize]) -> Result<bool, Error> {
    if let Some(&bad) = set.iter().find(|&&i| i >= arr.len()) {
        return Err(Error::IndexOutOfRange(format!("hyperplane {bad} (have {})", arr.len())));
    }
    Ok(arr.rank_of(set) == set.len())
}

fn hyperplanes_meet(arr: &Arrangement, set: &[usize]) -> bool {
    let rhs: QVector = set.iter().map(|&i| -arr.hyperplane(i).offset().clone()).collect();
    solve_affine(&arr.normals_of(set), &rhs).expect("shapes agree").is_some()
}

/// Grows faces one vertex at a time; `accept` must be hereditary.
fn hereditary_complex(s: usize, accept: impl Fn(&[usize]) -> bool) -> SimplicialComplex {
    let mut layers: Vec<BTreeSet<Simplex>> = Vec::new();
    let mut current: Vec<Vec<usize>> = (0..s).map(|i| vec![i]).filter(|v| accept(v)).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for face in &current {
            let last = *face.last().expect("nonempty");
            for i in last + 1..s {
                let mut grown = face.clone();
                grown.push(i);
                // every facet must already be a face
                let closed = (0..grown.len() - 1).all(|j| {
                    let mut f = grown.clone();
                    f.remove(j);
                    current.binary_search(&f).is_ok()
                });
                if closed && accept(&grown) {
                    next.push(grown);
                }
            }
        }
        layers.push(current.into_iter().map(Simplex).collect());
        next.sort();
        current = next;
    }
    SimplicialComplex { faces: layers }
}

/// Faces are the independent sets of normals.
pub fn independence_complex(arr: &Arrangement) -> SimplicialComplex {
    hereditary_complex(arr.len(), |set| arr.rank_of(set) == set.len())
}

/// Faces are the sets of hyperplanes with a common point.
pub fn nerve_complex(arr: &Arrangement) -> SimplicialComplex {
    hereditary_complex(arr.len(), |set| hyperplanes_meet(arr, set))
}

/// Matrix of `∂_k` from `k`-chains to `(k−1)`-chains in the sorted simplex
/// bases; `k = 0` gives the augmentation row of ones.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> Result<QMatrix, Error> {
    let top = complex.dim().ok_or_else(|| Error::Precondition("empty complex".into()))?;
    if k > top {
        return Err(Error::IndexOutOfRange(format!("degree {k} above top dimension {top}")));
    }
    let cols: Vec<&Simplex> = complex.faces(k).collect();
    if k == 0 {
        let mut m = QMatrix::zeros(1, cols.len());
        for j in 0..cols.len() {
            m.set(0, j, int(1));
        }
        return Ok(m);
    }
    let rows: BTreeMap<&Simplex, usize> =
        complex.faces(k - 1).enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = QMatrix::zeros(rows.len(), cols.len());
    for (c, s) in cols.iter().enumerate() {
        for j in 0..=k {
            let f = s.facet(j).expect("k > 0");
            let r = rows[&f];
            m.set(r, c, int(if j % 2 == 0 { 1 } else { -1 }));
        }
    }
    Ok(m)
}

/// `rank H̃_k` over the rationals for `k = 0..=dim`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Vec<usize> {
    let Some(top) = complex.dim() else {
        return Vec::new();
    };
    let ranks: Vec<usize> = (0..=top)
        .map(|k| rank(&boundary_matrix(complex, k).expect("degree in range")))
        .collect();
    (0..=top)
        .map(|k| {
            let nullity = complex.faces(k).count() - ranks[k];
            let image = if k < top { ranks[k + 1] } else { 0 };
            nullity - image
        })
        .collect()
}
