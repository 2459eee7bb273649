//! Simplicial and relative simplicial complexes, their f-vectors, and the
//! h-vector transform with an explicit dimension parameter.
//!
//! The Cayley complex of a collection (mixed faces of the Cayley polytope,
//! closed under subfaces) and the relative Cayley complex (boundary of the
//! Cayley polytope relative to the union of its pure faces) are extracted
//! here from the polytope geometry.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::polytope::cayley::CayleyPolytope;
use crate::polytope::FaceLattice;
use crate::Result;

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 1..=k {
        acc = acc * (n - k + j) / j;
    }
    acc
}

/// Face counts by dimension, with `f_{-1}` counting the empty face.
#[derive(Debug, Clone, Default)]
pub struct FVector {
    entries: BTreeMap<i64, i64>,
}

impl FVector {
    pub fn new() -> Self {
        FVector::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let mut f = FVector::new();
        for (i, v) in entries {
            f.set(i, v)?;
        }
        Ok(f)
    }

    pub fn set(&mut self, dim: i64, count: i64) -> Result<()> {
        if dim < -1 {
            return Err(Error::InvalidParameter(format!("face dimension {dim} < -1")));
        }
        if count < 0 || (dim == -1 && count > 1) {
            return Err(Error::InvalidParameter(format!(
                "invalid face count f_{dim} = {count}"
            )));
        }
        if count == 0 {
            self.entries.remove(&dim);
        } else {
            self.entries.insert(dim, count);
        }
        Ok(())
    }

    pub fn get(&self, dim: i64) -> i64 {
        self.entries.get(&dim).copied().unwrap_or(0)
    }

    /// Largest dimension with a nonzero count, or `None` for the void
    /// complex.
    pub fn max_dim(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.iter().map(|(&d, &c)| (d, c))
    }

    /// Counts as a plain vector over `start..=end` (inclusive).
    pub fn slice(&self, start: i64, end: i64) -> Vec<i64> {
        (start..=end).map(|i| self.get(i)).collect()
    }
}

impl PartialEq for FVector {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}
impl Eq for FVector {}

/// The h-vector `h_0 ... h_D` computed at an explicit dimension parameter
/// `D`. Entries may be negative for relative or Cayley data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    d: usize,
    entries: Vec<i64>,
}

impl HVector {
    pub fn new(d: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), d + 1, "h-vector must have D+1 entries");
        HVector { d, entries }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `h_k`, with out-of-range indices read as zero.
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 || k as usize > self.d {
            0
        } else {
            self.entries[k as usize]
        }
    }
}

/// `h_k = sum_{i=0..k} (-1)^{k-i} C(D-i, k-i) f_{i-1}` for `k = 0..D`.
///
/// Fails when the f-vector has faces of dimension `>= D`.
pub fn h_from_f(f: &FVector, d: usize) -> Result<HVector> {
    if let Some(top) = f.max_dim() {
        if top >= d as i64 {
            return Err(Error::DimensionOverflow {
                found: top,
                limit: d,
            });
        }
    }
    let d_i = d as i64;
    let entries = (0..=d_i)
        .map(|k| {
            let mut acc = 0i64;
            for i in 0..=k {
                let term = binomial(d_i - i, k - i) * f.get(i - 1);
                if (k - i) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    Ok(HVector::new(d, entries))
}

/// Inverse transform: `f_{i-1} = sum_{k=0..i} C(D-k, i-k) h_k`.
pub fn f_from_h(h: &HVector) -> FVector {
    let d = h.d() as i64;
    let mut f = FVector::new();
    for i in 0..=d {
        let mut acc = 0i64;
        for k in 0..=i {
            acc += binomial(d - k, i - k) * h.get(k);
        }
        f.set(i - 1, acc).expect("inverse transform yields valid face counts");
    }
    f
}

/// An abstract simplicial complex on `vertex_count` labelled vertices,
/// stored by its inclusion-maximal faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    contains_empty: bool,
}

impl SimplicialComplex {
    /// Closure of the given generating faces. Non-maximal generators are
    /// pruned; every nonvoid complex contains the empty face.
    pub fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted: Vec<Vec<usize>> = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&max) = f.last() {
                if max >= vertex_count {
                    return Err(Error::Malformed(format!(
                        "vertex index {max} out of range (vertex_count {vertex_count})"
                    )));
                }
            }
            sorted.push(f);
        }
        sorted.sort();
        sorted.dedup();
        let facets: Vec<Vec<usize>> = sorted
            .iter()
            .filter(|f| {
                !sorted
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            facets,
            contains_empty: true,
        })
    }

    /// The void complex: no faces at all, not even the empty face.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
            contains_empty: false,
        }
    }

    /// The complex whose only face is the empty face.
    pub fn empty_complex(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
            contains_empty: true,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains_empty(&self) -> bool {
        self.contains_empty
    }

    /// Dimension (largest face size minus one); `None` for the void
    /// complex, `Some(-1)` for the empty complex.
    pub fn dim(&self) -> Option<i64> {
        if !self.contains_empty && self.facets.is_empty() {
            return None;
        }
        Some(
            self.facets
                .iter()
                .map(|f| f.len() as i64 - 1)
                .max()
                .unwrap_or(-1),
        )
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        if face.is_empty() {
            return self.contains_empty || !self.facets.is_empty();
        }
        let mut face = face.to_vec();
        face.sort_unstable();
        self.facets.iter().any(|f| is_subset(&face, f))
    }

    /// All faces, including the empty face when present.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        if self.contains_empty || !self.facets.is_empty() {
            out.insert(Vec::new());
        }
        for f in &self.facets {
            for sub in subsets(f) {
                out.insert(sub);
            }
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = FVector::new();
        for face in self.faces() {
            let d = face.len() as i64 - 1;
            f.set(d, f.get(d) + 1).expect("face counts are nonnegative");
        }
        f
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => {}
            }
        }
        return false;
    }
    true
}

fn subsets(face: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << face.len());
    out.push(Vec::new());
    for &v in face {
        let len = out.len();
        for i in 0..len {
            let mut s = out[i].clone();
            s.push(v);
            out.push(s);
        }
    }
    out
}

/// A pair (ambient, removed): its faces are the faces of `ambient` that
/// are not faces of `removed`.
#[derive(Debug, Clone)]
pub struct RelativeComplex {
    ambient: SimplicialComplex,
    removed: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(ambient: SimplicialComplex, removed: SimplicialComplex) -> Result<Self> {
        for f in removed.facets() {
            if !ambient.contains_face(f) {
                return Err(Error::Malformed(format!(
                    "removed face {f:?} is not a face of the ambient complex"
                )));
            }
        }
        if removed.contains_empty() && !ambient.contains_empty() {
            return Err(Error::Malformed(
                "removed complex contains the empty face but the ambient does not".into(),
            ));
        }
        Ok(RelativeComplex { ambient, removed })
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn removed(&self) -> &SimplicialComplex {
        &self.removed
    }

    /// Counts faces of the ambient complex that are not removed.
    pub fn f_vector(&self) -> FVector {
        let removed = self.removed.faces();
        let mut f = FVector::new();
        for face in self.ambient.faces() {
            if !removed.contains(&face) {
                let d = face.len() as i64 - 1;
                f.set(d, f.get(d) + 1).expect("face counts are nonnegative");
            }
        }
        f
    }
}

/// Lattice-derived combinatorics of a Cayley polytope, computed once and
/// shared by the complex extractions below.
pub struct CayleyCombinatorics {
    cayley: CayleyPolytope,
    lattice: FaceLattice,
}

impl CayleyCombinatorics {
    pub fn new(cayley: &CayleyPolytope) -> Result<Self> {
        let lattice = cayley.face_lattice()?;
        Ok(CayleyCombinatorics {
            cayley: cayley.clone(),
            lattice,
        })
    }

    pub fn d(&self) -> usize {
        self.cayley.d()
    }

    pub fn m(&self) -> usize {
        self.cayley.m()
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// Dimension parameter used for all h-vectors on the Cayley side.
    pub fn h_dim(&self) -> usize {
        self.cayley.d() + self.cayley.m() - 1
    }

    /// First mixed face that is not a simplex, scanning dimensions
    /// bottom-up; `None` when the Cayley complex is simplicial.
    pub fn first_nonsimplex_mixed_face(&self) -> Option<(Vec<usize>, i64)> {
        self.cayley.first_nonsimplex_mixed_face(&self.lattice)
    }

    fn require_simplicial(&self) -> Result<()> {
        match self.first_nonsimplex_mixed_face() {
            None => Ok(()),
            Some((face, dim)) => Err(Error::NotSimplicial { face, dim }),
        }
    }

    /// The Cayley complex: subface closure of the mixed facets.
    pub fn cayley_complex(&self) -> Result<SimplicialComplex> {
        self.require_simplicial()?;
        let top = self.lattice.dim();
        let facets: Vec<Vec<usize>> = self
            .lattice
            .faces_of_dim(top - 1)
            .filter(|f| self.cayley.is_mixed_face(f))
            .cloned()
            .collect();
        SimplicialComplex::new(self.cayley.vertices().len(), facets)
    }

    /// The relative Cayley complex: the boundary of the Cayley polytope
    /// relative to the union of the faces spanned by proper sub-collections
    /// (for a single summand, relative to the empty complex alone).
    pub fn relative_complex(&self) -> Result<RelativeComplex> {
        self.require_simplicial()?;
        let n = self.cayley.vertices().len();
        let top = self.lattice.dim();
        let ambient_facets: Vec<Vec<usize>> = self.lattice.faces_of_dim(top - 1).cloned().collect();
        let ambient = SimplicialComplex::new(n, ambient_facets)?;
        let m = self.cayley.m();
        let removed = if m == 1 {
            SimplicialComplex::empty_complex(n)
        } else {
            let mut pure_facets = Vec::new();
            for omit in 0..m {
                pure_facets.push(
                    (0..n)
                        .filter(|&v| self.cayley.summand_of(v) != omit)
                        .collect(),
                );
            }
            SimplicialComplex::new(n, pure_facets)?
        };
        RelativeComplex::new(ambient, removed)
    }

    /// Predicted boundary f-vector of the Minkowski sum: entry `i` is
    /// `f_{i+m-1}` of the relative Cayley complex, for `i = 0..d-1`.
    pub fn minkowski_f_prediction(&self) -> Result<FVector> {
        let relative = self.relative_complex()?.f_vector();
        let shift = self.m() as i64 - 1;
        let mut f = FVector::new();
        for i in 0..self.d() as i64 {
            f.set(i, relative.get(i + shift))?;
        }
        Ok(f)
    }
}

/// Spec-level wrapper: the Cayley complex of a Cayley polytope.
pub fn cayley_complex(cayley: &CayleyPolytope) -> Result<SimplicialComplex> {
    CayleyCombinatorics::new(cayley)?.cayley_complex()
}

/// Spec-level wrapper: the relative Cayley complex.
pub fn relative_cayley_complex(cayley: &CayleyPolytope) -> Result<RelativeComplex> {
    CayleyCombinatorics::new(cayley)?.relative_complex()
}

/// Spec-level wrapper: predicted f-vector of the Minkowski sum.
pub fn minkowski_f_via_cayley(cayley: &CayleyPolytope) -> Result<FVector> {
    CayleyCombinatorics::new(cayley)?.minkowski_f_prediction()
}
