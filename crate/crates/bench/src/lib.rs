//! Shared fixtures for the benchmarks.

use caylex::linalg::{rat, rat_int};
use caylex::polytope::generators::{cyclic_polytope, perturb};
use caylex::polytope::{Point, Polytope, PureCollection};

fn pt(vals: &[i64]) -> Point {
    vals.iter().map(|&v| rat_int(v)).collect()
}

/// Two fixed generic triangles in the plane.
pub fn two_triangles() -> PureCollection {
    PureCollection::new(
        2,
        vec![
            Polytope::from_vertices(2, vec![pt(&[0, 0]), pt(&[4, 1]), pt(&[1, 3])]).unwrap(),
            Polytope::from_vertices(2, vec![pt(&[0, 1]), pt(&[3, 0]), pt(&[5, 4])]).unwrap(),
        ],
    )
    .unwrap()
}

/// Three perturbed pentagons: the largest planar sum in the test sweep.
pub fn three_pentagons() -> PureCollection {
    let base = PureCollection::new(
        2,
        vec![
            cyclic_polytope(2, 5).unwrap(),
            cyclic_polytope(2, 5).unwrap(),
            cyclic_polytope(2, 5).unwrap(),
        ],
    )
    .unwrap();
    perturb(&base, &rat(1, 50), 8).unwrap()
}

/// A single cyclic 4-polytope, the heaviest ring instance.
pub fn cyclic_4_7() -> PureCollection {
    PureCollection::new(4, vec![cyclic_polytope(4, 7).unwrap()]).unwrap()
}
