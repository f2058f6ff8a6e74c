//! The combinatorial intersection pairing of bounded regions and the
//! signed cycle map into the independence complex.
//!
//! For regions `F_i`, `F_j` with `σ = closure(F_i) ∩ closure(F_j)`:
//!
//! ```text
//! Φ(F_i, F_j) = (−1)^{dim σ} · #vertices(σ)      (0 if σ is empty)
//! ```
//!
//! On a simple arrangement each vertex `v` of a region `F` lies on exactly
//! `m` hyperplanes `i_1 < … < i_m`. With reference normals `b_i`, the vertex
//! contributes the simplex `{i_1..i_m}` with coefficient
//! `o(v) · ε_{i_1}(F) ⋯ ε_{i_m}(F)`, where `o(v)` is the sign of
//! `det(b_{i_1}, …, b_{i_m})` and `ε_i(F)` is the side of `H_i` containing
//! `F`. The sum over vertices is `Ψ(F)`.

mod verify;

pub use verify::{verify, verify_with_order, TheoremVerdict, VerificationReport};

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::{
    closure_intersection, Arrangement, BoundedComplex, Face, Region, SignVector, Vertex,
};
use crate::error::Error;
use crate::nerve::{Chain, Simplex, SimplicialComplex};
use crate::rational::{det_sign, int, QMatrix};

/// `o(v)`: orientation of a simple vertex under the reference normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrientation {
    pub vertex: Vertex,
    pub reference_sign: i8,
}

impl VertexOrientation {
    pub fn new(arr: &Arrangement, vertex: &Vertex) -> Result<Self, Error> {
        let m = arr.ambient_dim();
        if vertex.incident.len() != m {
            return Err(Error::Unsupported(format!(
                "vertex {:?} lies on {} hyperplanes, expected {m}",
                vertex.point.iter().map(crate::rational::format_rational).collect::<Vec<_>>(),
                vertex.incident.len()
            )));
        }
        let cols: Vec<&[_]> = vertex.incident.iter().map(|&i| arr.hyperplane(i).normal()).collect();
        let reference_sign = det_sign(&QMatrix::from_columns(m, &cols))?;
        if reference_sign == 0 {
            return Err(Error::Unsupported("incident normals are dependent".into()));
        }
        Ok(VertexOrientation { vertex: vertex.clone(), reference_sign })
    }
}

/// Square integer matrix indexed by regions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl RegionMatrix {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        RegionMatrix { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Dimension("region matrix must be square".into()));
        }
        Ok(RegionMatrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[i64]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn scaled(&self, factor: i64) -> RegionMatrix {
        RegionMatrix { size: self.size, entries: self.entries.iter().map(|v| v * factor).collect() }
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        let mut q = QMatrix::zeros(self.size, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                q.set(i, j, int(self.get(i, j)));
            }
        }
        q
    }

    /// `zᵀ M z` for an integer vector.
    pub fn quadratic_form(&self, z: &[i64]) -> i64 {
        (0..self.size)
            .flat_map(|i| (0..self.size).map(move |j| (i, j)))
            .map(|(i, j)| z[i] * self.get(i, j) * z[j])
            .sum()
    }
}

impl fmt::Display for RegionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `Φ` in the region basis.
pub type PhiMatrix = RegionMatrix;
/// `⟨Ψ(F_i), Ψ(F_j)⟩` in the orthonormal simplex basis.
pub type GramMatrix = RegionMatrix;

/// `Ψ(F)` for one region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiChain {
    pub region: usize,
    pub chain: Chain,
}

fn sign_power(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Φ(F_i, F_j)`; defined for any arrangement.
pub fn phi(arr: &Arrangement, complex: &BoundedComplex, i: usize, j: usize) -> Result<i64, Error> {
    let a = complex.region(i)?;
    let b = complex.region(j)?;
    Ok(phi_regions(arr, a, b))
}

fn phi_regions(arr: &Arrangement, a: &Region, b: &Region) -> i64 {
    match closure_intersection(arr, a, b) {
        None => 0,
        Some(sigma) => sign_power(sigma.dim) * sigma.vertices.len() as i64,
    }
}

pub fn phi_matrix(arr: &Arrangement, complex: &BoundedComplex) -> Result<PhiMatrix, Error> {
    let regions = complex.regions();
    if regions.is_empty() {
        return Err(Error::NoBoundedRegions);
    }
    let n = regions.len();
    let mut upper = vec![0i64; n * n];
    for i in 0..n {
        for j in i..n {
            let v = phi_regions(arr, &regions[i], &regions[j]);
            upper[i * n + j] = v;
            upper[j * n + i] = v;
        }
    }
    Ok(RegionMatrix { size: n, entries: upper })
}

/// `c(F, v) = o(v) · Π ε_i(F)` over the hyperplanes through `v`.
pub fn vertex_coefficient(arr: &Arrangement, region: &Region, vertex: &Vertex) -> Result<i8, Error> {
    let o = VertexOrientation::new(arr, vertex)?.reference_sign;
    Ok(vertex.incident.iter().fold(o, |acc, &i| acc * region.inward_sign(i)))
}

/// `Ψ(F) = Σ_v c(F, v)·[incident(v)]`, a chain of degree `m − 1`.
pub fn psi(arr: &Arrangement, complex: &BoundedComplex, index: usize) -> Result<PsiChain, Error> {
    let region = complex.region(index)?;
    let mut chain = Chain::zero(arr.ambient_dim() - 1);
    for v in region.vertices() {
        let c = vertex_coefficient(arr, region, v)?;
        chain.add_term(Simplex::new(v.incident.clone())?, int(c as i64))?;
    }
    Ok(PsiChain { region: index, chain })
}

pub fn psi_chains(arr: &Arrangement, complex: &BoundedComplex) -> Result<Vec<PsiChain>, Error> {
    (0..complex.regions().len()).map(|i| psi(arr, complex, i)).collect()
}

/// Whether `chain` has zero (augmented) boundary; every simplex must lie in `complex`.
pub fn is_cycle(complex: &SimplicialComplex, chain: &Chain) -> Result<bool, Error> {
    if let Some((s, _)) = chain.terms().find(|(s, _)| !complex.contains(s)) {
        return Err(Error::Precondition(format!("simplex {s} is not in the complex")));
    }
    Ok(chain.boundary().is_zero())
}

pub fn gram_from_chains(chains: &[PsiChain]) -> GramMatrix {
    RegionMatrix::from_fn(chains.len(), |i, j| {
        let v = chains[i].chain.inner(&chains[j].chain);
        i64::try_from(v.to_integer()).expect("gram entry fits in i64")
    })
}

/// Requires every region vertex to be simple.
pub fn gram_matrix(arr: &Arrangement, complex: &BoundedComplex) -> Result<GramMatrix, Error> {
    if complex.regions().is_empty() {
        return Err(Error::NoBoundedRegions);
    }
    Ok(gram_from_chains(&psi_chains(arr, complex)?))
}

/// An `(m−1)`-face of a region's closure, oriented by the inward normal of
/// its supporting hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFacet {
    pub face: Face,
    pub hyperplane: usize,
    /// `ε_i` of the region: +1 when the reference normal already points inward.
    pub sign: i8,
}

/// The facets of `closure(F)` making up the cycle `[F]` of Γ.
pub fn region_boundary_cycle(
    arr: &Arrangement,
    complex: &BoundedComplex,
    index: usize,
) -> Result<Vec<OrientedFacet>, Error> {
    let region = complex.region(index)?;
    for v in region.vertices() {
        VertexOrientation::new(arr, v)?;
    }
    let m = arr.ambient_dim();
    complex
        .faces(m - 1)
        .iter()
        .filter(|f| f.signs.conforms_to(&region.face.signs))
        .map(|f| {
            let zeros = f.signs.zero_set();
            let [i] = zeros[..] else {
                return Err(Error::Unsupported(format!(
                    "facet {} lies on {} hyperplanes",
                    f.signs,
                    zeros.len()
                )));
            };
            Ok(OrientedFacet { face: f.clone(), hyperplane: i, sign: region.inward_sign(i) })
        })
        .collect()
}

/// For each `(m−2)`-face of `closure(F)` (the empty face when `m = 1`), the
/// number of returned facets containing it. A closed boundary has every
/// count equal to 2.
pub fn ridge_incidences(
    complex: &BoundedComplex,
    index: usize,
    facets: &[OrientedFacet],
) -> Result<BTreeMap<Option<SignVector>, usize>, Error> {
    let region = complex.region(index)?;
    let m = complex.ambient_dim();
    let mut out = BTreeMap::new();
    if m == 1 {
        out.insert(None, facets.len());
        return Ok(out);
    }
    for ridge in complex.faces(m - 2).iter().filter(|f| f.signs.conforms_to(&region.face.signs)) {
        let count = facets.iter().filter(|f| ridge.signs.conforms_to(&f.face.signs)).count();
        out.insert(Some(ridge.signs.clone()), count);
    }
    Ok(out)
}
