//! The Cayley embedding: the summands of a collection placed on affinely
//! independent heights in `R^d x R^m`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{FaceLattice, Point, Polytope, PureCollection};
use crate::linalg::Rational;
use crate::Result;

/// The Cayley polytope of a collection: vertex `(v, e_i)` for each vertex
/// `v` of the i-th summand, with per-vertex provenance `(summand index,
/// vertex index within the summand)`.
#[derive(Debug, Clone)]
pub struct CayleyPolytope {
    d: usize,
    m: usize,
    vertices: Vec<Point>,
    provenance: Vec<(usize, usize)>,
}

/// Outcome of the simpliciality check: either every mixed proper face is a
/// simplex, or the first violation (bottom-up by dimension).
#[derive(Debug, Clone)]
pub struct SimplicialityReport {
    pub simplicial: bool,
    pub offending_face: Option<Vec<usize>>,
    pub offending_dim: Option<i64>,
}

/// Build the Cayley polytope of a collection.
pub fn cayley_polytope(collection: &PureCollection) -> CayleyPolytope {
    let d = collection.d();
    let m = collection.m();
    let mut vertices = Vec::new();
    let mut provenance = Vec::new();
    for (i, p) in collection.polytopes().iter().enumerate() {
        for (j, v) in p.vertices().iter().enumerate() {
            let mut coords = v.clone();
            coords.extend((0..m).map(|t| {
                if t == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            vertices.push(coords);
            provenance.push((i, j));
        }
    }
    CayleyPolytope {
        d,
        m,
        vertices,
        provenance,
    }
}

impl CayleyPolytope {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Ambient dimension `d + m`.
    pub fn ambient_dim(&self) -> usize {
        self.d + self.m
    }

    /// Dimension of the polytope itself, `d + m - 1`.
    pub fn dim(&self) -> usize {
        self.d + self.m - 1
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn provenance(&self) -> &[(usize, usize)] {
        &self.provenance
    }

    pub fn summand_of(&self, vertex: usize) -> usize {
        self.provenance[vertex].0
    }

    /// Summand indices appearing among the face's vertices.
    pub fn summands_of_face(&self, face: &[usize]) -> BTreeSet<usize> {
        face.iter().map(|&v| self.summand_of(v)).collect()
    }

    /// A face is mixed when it has vertices from every summand.
    pub fn is_mixed_face(&self, face: &[usize]) -> bool {
        self.summands_of_face(face).len() == self.m
    }

    /// Vertex indices of the face spanned by a sub-collection.
    pub fn vertices_of_summands(&self, summands: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| summands.contains(&self.summand_of(v)))
            .collect()
    }

    /// The underlying polytope value (validates the embedding).
    pub fn as_polytope(&self) -> Result<Polytope> {
        Polytope::from_vertices(self.ambient_dim(), self.vertices.clone())
    }

    pub fn face_lattice(&self) -> Result<FaceLattice> {
        self.as_polytope()?.face_lattice()
    }

    /// First mixed proper face that is not a simplex, given a precomputed
    /// lattice.
    pub fn first_nonsimplex_mixed_face(&self, lattice: &FaceLattice) -> Option<(Vec<usize>, i64)> {
        for dim in 0..lattice.dim() {
            for face in lattice.faces_of_dim(dim) {
                if face.len() as i64 != dim + 1 && self.is_mixed_face(face) {
                    return Some((face.clone(), dim));
                }
            }
        }
        None
    }
}

/// True exactly when every proper face of the Cayley polytope not lying in
/// a proper sub-collection's face is a simplex; reports the first
/// violation otherwise.
pub fn check_cayley_simplicial(cayley: &CayleyPolytope) -> Result<SimplicialityReport> {
    let lattice = cayley.face_lattice()?;
    Ok(match cayley.first_nonsimplex_mixed_face(&lattice) {
        None => SimplicialityReport {
            simplicial: true,
            offending_face: None,
            offending_dim: None,
        },
        Some((face, dim)) => SimplicialityReport {
            simplicial: false,
            offending_face: Some(face),
            offending_dim: Some(dim),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;
    use crate::polytope::generators::{cyclic_polytope, simplex_polytope};

    fn pt(vals: &[i64]) -> Point {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    fn generic_triangles() -> PureCollection {
        PureCollection::new(
            2,
            vec![
                Polytope::from_vertices(2, vec![pt(&[0, 0]), pt(&[4, 1]), pt(&[1, 3])]).unwrap(),
                Polytope::from_vertices(2, vec![pt(&[0, 1]), pt(&[3, 0]), pt(&[5, 4])]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_summand_embeds_at_height_one() {
        let c = PureCollection::new(3, vec![simplex_polytope(3).unwrap()]).unwrap();
        let k = cayley_polytope(&c);
        assert_eq!(k.ambient_dim(), 4);
        assert_eq!(k.dim(), 3);
        let p = k.as_polytope().unwrap();
        assert_eq!(p.dim(), 3);
        assert!(check_cayley_simplicial(&k).unwrap().simplicial);
    }

    #[test]
    fn two_segments_give_a_quadrilateral() {
        let c = PureCollection::new(
            1,
            vec![
                Polytope::from_vertices(1, vec![pt(&[0]), pt(&[2])]).unwrap(),
                Polytope::from_vertices(1, vec![pt(&[1]), pt(&[4])]).unwrap(),
            ],
        )
        .unwrap();
        let k = cayley_polytope(&c);
        assert_eq!(k.dim(), 2);
        let p = k.as_polytope().unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.facets().unwrap().len(), 4);
        assert!(check_cayley_simplicial(&k).unwrap().simplicial);
    }

    #[test]
    fn generic_triangles_yield_simplicial_cayley() {
        let k = cayley_polytope(&generic_triangles());
        let p = k.as_polytope().unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.vertex_count(), 6);
        let lat = p.face_lattice().unwrap();
        let f = lat.boundary_f_vector();
        assert_eq!(f.slice(0, 2), vec![6, 12, 8]);
        // 2 pure triangle facets + 6 mixed.
        let mixed = lat
            .faces_of_dim(2)
            .filter(|face| k.is_mixed_face(face))
            .count();
        assert_eq!(mixed, 6);
        assert!(check_cayley_simplicial(&k).unwrap().simplicial);
    }

    #[test]
    fn translated_squares_are_not_simplicial() {
        let square =
            Polytope::from_vertices(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])])
                .unwrap();
        let shifted = square.translate(&[rat_int(3), rat_int(0)]);
        let c = PureCollection::new(2, vec![square, shifted]).unwrap();
        let k = cayley_polytope(&c);
        let report = check_cayley_simplicial(&k).unwrap();
        assert!(!report.simplicial);
        let face = report.offending_face.unwrap();
        assert!(k.is_mixed_face(&face));
        assert!(face.len() as i64 > report.offending_dim.unwrap() + 1);
    }

    #[test]
    fn sub_collections_span_faces() {
        let k = cayley_polytope(&generic_triangles());
        let lat = k.face_lattice().unwrap();
        for s in 0..2usize {
            let set: BTreeSet<usize> = [s].into_iter().collect();
            let face = k.vertices_of_summands(&set);
            assert!(lat.contains(&face), "pure face {face:?} missing");
        }
    }

    #[test]
    fn cayley_dim_is_d_plus_m_minus_1() {
        for (d, n1, n2) in [(2usize, 4usize, 5usize), (3, 4, 5)] {
            let c = PureCollection::new(
                d,
                vec![cyclic_polytope(d, n1).unwrap(), cyclic_polytope(d, n2).unwrap()],
            )
            .unwrap();
            let k = cayley_polytope(&c);
            assert_eq!(k.as_polytope().unwrap().dim(), d + 1);
        }
    }
}
