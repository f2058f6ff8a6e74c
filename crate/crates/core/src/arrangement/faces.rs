use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::lp::{find_point, Constraint, Relation};
use super::{Arrangement, SignVector};
use crate::error::Error;
use crate::rational::{dot, int, kernel_basis, rank, sign, solve_affine, QMatrix, QVector, Rational};

/// A 0-face of the arrangement: a point on at least `m` hyperplanes whose
/// normals span `R^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub point: QVector,
    /// Sorted indices of every hyperplane through `point`.
    pub incident: Vec<usize>,
}

/// A bounded face of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub signs: SignVector,
    pub dim: usize,
    /// The 0-faces of the closure, sorted by coordinates.
    pub vertices: Vec<Vertex>,
    /// A point in the relative interior realising `signs`.
    pub sample: QVector,
}

impl Face {
    /// Whether `x` lies in the closure: zero-set equalities and weak sides.
    pub fn closure_contains(&self, arr: &Arrangement, x: &[Rational]) -> bool {
        arr.hyperplanes()
            .iter()
            .zip(self.signs.as_slice())
            .all(|(h, &s)| {
                let side = h.side(x);
                if s == 0 {
                    side == 0
                } else {
                    side == 0 || side == s
                }
            })
    }
}

/// A top-dimensional bounded face `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub face: Face,
}

impl Region {
    /// `ε_i = sign(⟨b_i, x⟩ + ψ_i)` on the interior; `ε_i·b_i` points into the region.
    pub fn inward_sign(&self, i: usize) -> i8 {
        self.face.signs.get(i)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.face.vertices
    }

    /// Sorted indices of hyperplanes passing through some vertex of the closure.
    pub fn incident_hyperplanes(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.face.vertices.iter().flat_map(|v| v.incident.iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RegionOrder {
    /// Lexicographic on sign vectors with `- < 0 < +`.
    #[default]
    Lex,
    /// By the sorted list of hyperplane indices meeting the closure, ties
    /// broken lexicographically.
    Input,
}

/// All bounded faces, grouped by dimension, with the regions `F_1..F_r`.
#[derive(Clone, Debug)]
pub struct BoundedComplex {
    ambient_dim: usize,
    faces: Vec<Vec<Face>>,
    regions: Vec<Region>,
}

impl BoundedComplex {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Faces of dimension `k`, sorted by sign vector.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, i: usize) -> Result<&Region, Error> {
        self.regions.get(i).ok_or_else(|| {
            Error::IndexOutOfRange(format!("region {i} (have {})", self.regions.len()))
        })
    }

    /// The subcomplex Γ: every bounded face of dimension below `m`.
    pub fn gamma_view(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().take(self.ambient_dim).flatten()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, fs)| if k % 2 == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.iter().all(Vec::is_empty)
    }

    pub fn reorder(&mut self, order: RegionOrder) {
        match order {
            RegionOrder::Lex => self.regions.sort_by(|a, b| a.face.signs.cmp(&b.face.signs)),
            RegionOrder::Input => self.regions.sort_by(|a, b| {
                (a.incident_hyperplanes(), &a.face.signs)
                    .cmp(&(b.incident_hyperplanes(), &b.face.signs))
            }),
        }
    }
}

fn closure_constraints(arr: &Arrangement, sv: &SignVector, strict: bool) -> Vec<Constraint> {
    arr.hyperplanes()
        .iter()
        .zip(sv.as_slice())
        .map(|(h, &s)| {
            // s·(⟨b,x⟩ + ψ) ≥ 0  ⇔  ⟨s·b, x⟩ ≥ −s·ψ; the zero set gives ⟨b,x⟩ = −ψ
            let factor = int(if s == 0 { 1 } else { s as i64 });
            let coeffs: QVector = h.normal().iter().map(|v| v * &factor).collect();
            let rhs = -(h.offset() * &factor);
            let relation = match (s, strict) {
                (0, _) => Relation::Eq,
                (_, true) => Relation::Gt,
                (_, false) => Relation::Ge,
            };
            Constraint::new(coeffs, relation, rhs)
        })
        .collect()
}

/// A point realising `sv` exactly, or `None` if the sign vector is not a face.
pub fn feasible(arr: &Arrangement, sv: &SignVector) -> Option<QVector> {
    if sv.len() != arr.len() {
        return None;
    }
    let m = arr.ambient_dim();
    let zeros = sv.zero_set();
    if !zeros.is_empty() {
        let eqs = arr.normals_of(&zeros);
        let rhs: QVector = zeros.iter().map(|&i| -arr.hyperplane(i).offset().clone()).collect();
        let point = solve_affine(&eqs, &rhs).expect("shapes agree")?;
        if rank(&eqs) == m {
            // the flat is a single point
            return (arr.sign_vector_of(&point) == *sv).then_some(point);
        }
    }
    let x = find_point(m, &closure_constraints(arr, sv, true))?;
    debug_assert_eq!(arr.sign_vector_of(&x), *sv);
    Some(x)
}

/// Whether the closure of the face `sv` has trivial recession cone.
pub fn is_bounded(arr: &Arrangement, sv: &SignVector) -> Result<bool, Error> {
    if feasible(arr, sv).is_none() {
        return Err(Error::Precondition(format!("sign vector {sv} is not realisable")));
    }
    let m = arr.ambient_dim();
    if arr.rank_of(&(0..arr.len()).collect::<Vec<_>>()) < m {
        // a common direction parallel to every hyperplane
        return Ok(false);
    }
    // recession cone: b_i·y = 0 on the zero set, s_i·b_i·y ≥ 0 elsewhere;
    // it is nonzero iff some y in it has Σ s_i·b_i·y = 1
    let mut cone: Vec<Constraint> = Vec::with_capacity(arr.len() + 1);
    let mut total = vec![Rational::zero(); m];
    for (h, &s) in arr.hyperplanes().iter().zip(sv.as_slice()) {
        let scaled: QVector = h.normal().iter().map(|v| v * int(s as i64)).collect();
        if s == 0 {
            cone.push(Constraint::new(h.normal().to_vec(), Relation::Eq, Rational::zero()));
        } else {
            for (t, v) in total.iter_mut().zip(&scaled) {
                *t += v;
            }
            cone.push(Constraint::new(scaled, Relation::Ge, Rational::zero()));
        }
    }
    cone.push(Constraint::new(total, Relation::Eq, int(1)));
    Ok(find_point(m, &cone).is_none())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every vertex of the arrangement, sorted by coordinates.
pub fn vertices(arr: &Arrangement) -> Vec<Vertex> {
    let m = arr.ambient_dim();
    let mut found: BTreeMap<QVector, Vec<usize>> = BTreeMap::new();
    for subset in combinations(arr.len(), m) {
        let eqs = arr.normals_of(&subset);
        if rank(&eqs) < m {
            continue;
        }
        let rhs: QVector = subset.iter().map(|&i| -arr.hyperplane(i).offset().clone()).collect();
        let point = solve_affine(&eqs, &rhs).expect("shapes agree").expect("independent system");
        found.entry(point).or_insert_with_key(|p| {
            (0..arr.len()).filter(|&i| arr.hyperplane(i).eval(p).is_zero()).collect()
        });
    }
    found.into_iter().map(|(point, incident)| Vertex { point, incident }).collect()
}

/// Cocircuits of the homogenised configuration `(b_i, ψ_i)` together with
/// `g = (0, …, 0, 1)`, as sign vectors of length `s + 1` (last entry for `g`).
/// Each comes from an `m`-subset spanning a hyperplane of `Q^{m+1}`.
fn cocircuits(arr: &Arrangement) -> BTreeSet<Vec<i8>> {
    let m = arr.ambient_dim();
    let s = arr.len();
    let lifted: Vec<QVector> = arr
        .hyperplanes()
        .iter()
        .map(|h| h.normal().iter().chain(std::iter::once(h.offset())).cloned().collect())
        .chain(std::iter::once((0..=m).map(|k| int(if k == m { 1 } else { 0 })).collect()))
        .collect();
    let mut out = BTreeSet::new();
    for subset in combinations(s + 1, m) {
        let rows = subset.iter().map(|&i| lifted[i].clone()).collect();
        let mat = QMatrix::from_rows(m + 1, rows).expect("lifted vectors have length m + 1");
        if rank(&mat) < m {
            continue;
        }
        let y = kernel_basis(&mat).pop().expect("corank one");
        let signs: Vec<i8> = lifted.iter().map(|v| sign(&dot(v, &y))).collect();
        out.insert(signs.iter().map(|x| -x).collect());
        out.insert(signs);
    }
    out
}

fn compose(x: &[i8], y: &[i8]) -> Vec<i8> {
    x.iter().zip(y).map(|(&a, &b)| if a == 0 { b } else { a }).collect()
}

/// The bounded complex: every realisable sign vector whose face is bounded.
///
/// Faces are the covectors of the homogenised configuration that are
/// positive on `g`, generated by composing cocircuits. A face is bounded when
/// no direction of its recession cone exists, i.e. no cocircuit vanishing on
/// `g` conforms to it. The sample point is the centroid of the face's vertices.
pub fn bounded_complex(arr: &Arrangement) -> BoundedComplex {
    let m = arr.ambient_dim();
    let s = arr.len();
    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); m + 1];
    let all_vertices = vertices(arr);
    if all_vertices.is_empty() {
        // no vertex, so every face contains a line
        return BoundedComplex { ambient_dim: m, faces, regions: Vec::new() };
    }
    let cocs = cocircuits(arr);
    let rays: Vec<&[i8]> = cocs.iter().filter(|c| c[s] == 0).map(|c| &c[..s]).collect();
    let generators: Vec<&[i8]> = cocs.iter().filter(|c| c[s] >= 0).map(|c| &c[..s]).collect();
    let mut covectors: BTreeSet<Vec<i8>> = cocs.iter().filter(|c| c[s] > 0).map(|c| c[..s].to_vec()).collect();
    let mut frontier: Vec<Vec<i8>> = covectors.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for c in &generators {
                let y = compose(x, c);
                if !covectors.contains(&y) {
                    covectors.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }

    for signs in covectors {
        let bounded = !rays.iter().any(|r| r.iter().zip(&signs).all(|(&a, &b)| a == 0 || a == b));
        if !bounded {
            continue;
        }
        let sv = SignVector(signs);
        let dim = m - arr.rank_of(&sv.zero_set());
        let mut face = Face { signs: sv, dim, vertices: Vec::new(), sample: Vec::new() };
        face.vertices = all_vertices
            .iter()
            .filter(|v| face.closure_contains(arr, &v.point))
            .cloned()
            .collect();
        let count = int(face.vertices.len() as i64);
        face.sample = (0..m)
            .map(|k| face.vertices.iter().map(|v| v.point[k].clone()).sum::<Rational>() / &count)
            .collect();
        debug_assert_eq!(arr.sign_vector_of(&face.sample), face.signs);
        faces[dim].push(face);
    }
    let regions = faces[m].iter().cloned().map(|face| Region { face }).collect();
    BoundedComplex { ambient_dim: m, faces, regions }
}

/// `closure(F_i) ∩ closure(F_j)`: dimension of its affine hull and its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureIntersection {
    pub dim: usize,
    pub vertices: Vec<Vertex>,
}

/// The common closed face of two regions, or `None` when the closures are
/// disjoint. Both closures are bounded, so the intersection is the convex
/// hull of the arrangement vertices lying in both.
pub fn closure_intersection(
    arr: &Arrangement,
    a: &Region,
    b: &Region,
) -> Option<ClosureIntersection> {
    let common: Vec<Vertex> = a
        .vertices()
        .iter()
        .filter(|v| b.face.closure_contains(arr, &v.point))
        .cloned()
        .collect();
    let first = common.first()?;
    let diffs: Vec<QVector> = common[1..]
        .iter()
        .map(|v| v.point.iter().zip(&first.point).map(|(p, q)| p - q).collect())
        .collect();
    let dim = if diffs.is_empty() {
        0
    } else {
        rank(&QMatrix::from_rows(arr.ambient_dim(), diffs).expect("points have ambient length"))
    };
    Some(ClosureIntersection { dim, vertices: common })
}

/// Every vertex lies on exactly `m` hyperplanes.
pub fn is_simple(arr: &Arrangement) -> bool {
    let m = arr.ambient_dim();
    vertices(arr).iter().all(|v| v.incident.len() == m)
}

/// No normal is a coloop of the row matroid of `B`.
pub fn is_coloop_free(arr: &Arrangement) -> bool {
    let all: Vec<usize> = (0..arr.len()).collect();
    let full = arr.rank_of(&all);
    (0..arr.len()).all(|i| {
        let rest: Vec<usize> = all.iter().copied().filter(|&j| j != i).collect();
        arr.rank_of(&rest) == full
    })
}
