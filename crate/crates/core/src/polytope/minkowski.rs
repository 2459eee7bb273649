//! Minkowski sums by direct hull of the pointwise vertex sums.

use num_traits::Zero;

use super::{add, Point, Polytope, PureCollection};
use crate::linalg::Rational;
use crate::Result;

/// Minkowski sum of the collection: the hull of all m-fold vertex sums,
/// with redundant points removed.
pub fn minkowski_sum(collection: &PureCollection) -> Result<Polytope> {
    let d = collection.d();
    let mut sums: Vec<Point> = vec![vec![Rational::zero(); d]];
    for p in collection.polytopes() {
        let mut next = Vec::with_capacity(sums.len() * p.vertex_count());
        for s in &sums {
            for v in p.vertices() {
                next.push(add(s, v));
            }
        }
        sums = next;
    }
    Polytope::hull_of(d, &sums)
}
