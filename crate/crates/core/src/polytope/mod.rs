//! Exact V-representation polytopes: hulls, face lattices, generators,
//! Minkowski sums, and the Cayley embedding of a collection.

pub mod cayley;
pub mod generators;
pub mod hull;
pub mod lattice;
pub mod minkowski;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::Rational;
use crate::Result;

pub use cayley::{cayley_polytope, check_cayley_simplicial, CayleyPolytope, SimplicialityReport};
pub use generators::{cyclic_polytope, perturb, simplex_polytope, stacked_polytope};
pub use hull::{convex_hull_facets, Hull};
pub use lattice::{face_lattice, FaceLattice};
pub use minkowski::minkowski_sum;

/// A point with exact rational coordinates.
pub type Point = Vec<Rational>;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// One facet of a polytope: supporting inequality `normal · x <= offset`,
/// with equality exactly on the incident vertices.
#[derive(Debug, Clone)]
pub struct FacetDescription {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    /// Indices into the polytope's vertex list, sorted.
    pub incident_vertices: Vec<usize>,
}

/// A polytope given by its vertex set in an ambient rational space.
///
/// Construction validates that the listed points are pairwise distinct and
/// that each is a vertex of the hull (no point lies in the convex hull of
/// the others).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Point>,
}

impl Polytope {
    /// Build from a vertex list, keeping the given order.
    pub fn from_vertices(ambient_dim: usize, vertices: Vec<Point>) -> Result<Self> {
        for v in &vertices {
            if v.len() != ambient_dim {
                return Err(Error::Malformed(format!(
                    "point has {} coordinates, expected {}",
                    v.len(),
                    ambient_dim
                )));
            }
        }
        let h = hull::convex_hull(&vertices)?;
        if h.vertices.len() != vertices.len() {
            return Err(Error::Malformed(
                "vertex list contains duplicate or non-extreme points".into(),
            ));
        }
        Ok(Polytope {
            ambient_dim,
            dim: h.dim,
            vertices,
        })
    }

    /// Convex hull of an arbitrary point set; redundant points are dropped
    /// and the surviving vertices are sorted lexicographically.
    pub fn hull_of(ambient_dim: usize, points: &[Point]) -> Result<Self> {
        let h = hull::convex_hull(points)?;
        let mut verts: Vec<Point> = h.vertices.iter().map(|&i| points[i].clone()).collect();
        verts.sort();
        Ok(Polytope {
            ambient_dim,
            dim: h.dim,
            vertices: verts,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope (affine dimension of its vertex set).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Complete irredundant facet list, computed in the affine span.
    pub fn facets(&self) -> Result<Vec<FacetDescription>> {
        convex_hull_facets(&self.vertices)
    }

    /// The full face lattice, from the empty face up to the improper face.
    pub fn face_lattice(&self) -> Result<FaceLattice> {
        face_lattice(self)
    }

    /// Translate by a vector.
    pub fn translate(&self, shift: &[Rational]) -> Polytope {
        Polytope {
            ambient_dim: self.ambient_dim,
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| add(v, shift)).collect(),
        }
    }
}

/// A collection of `m >= 1` full-dimensional polytopes in a common
/// d-dimensional space.
#[derive(Debug, Clone)]
pub struct PureCollection {
    d: usize,
    polytopes: Vec<Polytope>,
}

impl PureCollection {
    pub fn new(d: usize, polytopes: Vec<Polytope>) -> Result<Self> {
        if polytopes.is_empty() {
            return Err(Error::InvalidParameter("collection must be nonempty".into()));
        }
        for (i, p) in polytopes.iter().enumerate() {
            if p.ambient_dim() != d {
                return Err(Error::InvalidParameter(format!(
                    "summand {i} lives in dimension {}, expected {d}",
                    p.ambient_dim()
                )));
            }
            if p.dim() != d {
                return Err(Error::InvalidParameter(format!(
                    "summand {i} has dimension {}, but the collection requires full-dimensional summands in dimension {d}",
                    p.dim()
                )));
            }
        }
        Ok(PureCollection { d, polytopes })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.polytopes.len()
    }

    pub fn polytopes(&self) -> &[Polytope] {
        &self.polytopes
    }
}
