//! Face lattices of polytopes, computed as the intersection closure of the
//! facet vertex sets. Face dimensions are affine ranks, never inferred
//! from cardinality.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{sub, Polytope};
use crate::complexes::FVector;
use crate::linalg::EchelonSpace;
use crate::Result;

/// All faces of a polytope, keyed by dimension.
///
/// Dimension `-1` holds the empty face and dimension `dim()` the improper
/// full face; both are stored but excluded from boundary f-vectors.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: i64,
    faces_by_dim: BTreeMap<i64, BTreeSet<Vec<usize>>>,
}

impl FaceLattice {
    /// Dimension of the polytope (the improper face).
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn faces_of_dim(&self, dim: i64) -> impl Iterator<Item = &Vec<usize>> {
        self.faces_by_dim.get(&dim).into_iter().flatten()
    }

    /// Proper nonempty faces, ascending by dimension.
    pub fn proper_faces(&self) -> impl Iterator<Item = (i64, &Vec<usize>)> {
        self.faces_by_dim
            .range(0..self.dim)
            .flat_map(|(&d, faces)| faces.iter().map(move |f| (d, f)))
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        self.faces_by_dim
            .values()
            .any(|faces| faces.contains(&sorted))
    }

    /// Face counts `f_0 .. f_{dim-1}` of the boundary.
    pub fn boundary_f_vector(&self) -> FVector {
        let mut f = FVector::new();
        for (&d, faces) in self.faces_by_dim.range(0..self.dim) {
            f.set(d, faces.len() as i64).expect("face counts are valid");
        }
        f
    }
}

/// Compute the full face lattice of a polytope.
pub fn face_lattice(polytope: &Polytope) -> Result<FaceLattice> {
    let facets = polytope.facets()?;
    let facet_sets: Vec<BTreeSet<usize>> = facets
        .iter()
        .map(|f| f.incident_vertices.iter().copied().collect())
        .collect();

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
    for fs in &facet_sets {
        if seen.insert(fs.iter().copied().collect()) {
            queue.push_back(fs.clone());
        }
    }
    while let Some(face) = queue.pop_front() {
        for fs in &facet_sets {
            let inter: BTreeSet<usize> = face.intersection(fs).copied().collect();
            if seen.insert(inter.iter().copied().collect()) {
                queue.push_back(inter);
            }
        }
    }
    seen.insert(Vec::new());

    let dim = polytope.dim() as i64;
    let mut faces_by_dim: BTreeMap<i64, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for face in seen {
        let d = affine_dim(polytope, &face);
        faces_by_dim.entry(d).or_default().insert(face);
    }
    // The improper full face.
    faces_by_dim
        .entry(dim)
        .or_default()
        .insert((0..polytope.vertex_count()).collect());

    Ok(FaceLattice { dim, faces_by_dim })
}

fn affine_dim(polytope: &Polytope, face: &[usize]) -> i64 {
    if face.is_empty() {
        return -1;
    }
    let base = &polytope.vertices()[face[0]];
    let mut space = EchelonSpace::new();
    for &v in &face[1..] {
        space.insert(&sub(&polytope.vertices()[v], base));
    }
    space.rank() as i64
}
