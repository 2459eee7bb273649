//! Shared fixtures for the integration tests.
//!
//! Each test binary uses its own subset of these.
#![allow(dead_code)]

use caylex::linalg::{rat, rat_int, Rational};
use caylex::polytope::generators::{cyclic_polytope, perturb, simplex_polytope, stacked_polytope};
use caylex::polytope::{Point, Polytope, PureCollection};

pub fn pt(vals: &[i64]) -> Point {
    vals.iter().map(|&v| rat_int(v)).collect()
}

/// Two fixed triangles in general position (no parallel cross edges).
pub fn generic_triangles() -> PureCollection {
    PureCollection::new(
        2,
        vec![
            Polytope::from_vertices(2, vec![pt(&[0, 0]), pt(&[4, 1]), pt(&[1, 3])]).unwrap(),
            Polytope::from_vertices(2, vec![pt(&[0, 1]), pt(&[3, 0]), pt(&[5, 4])]).unwrap(),
        ],
    )
    .unwrap()
}

/// Three perturbed triangles in the plane.
pub fn three_triangles(seed: u64) -> PureCollection {
    let base = PureCollection::new(
        2,
        vec![
            simplex_polytope(2).unwrap(),
            simplex_polytope(2).unwrap(),
            simplex_polytope(2).unwrap(),
        ],
    )
    .unwrap();
    perturb(&base, &rat(1, 16), seed).unwrap()
}

/// Two segments on the line.
pub fn two_segments() -> PureCollection {
    PureCollection::new(
        1,
        vec![
            Polytope::from_vertices(1, vec![pt(&[0]), pt(&[2])]).unwrap(),
            Polytope::from_vertices(1, vec![pt(&[1]), pt(&[4])]).unwrap(),
        ],
    )
    .unwrap()
}

fn perturbed(base: PureCollection, magnitude: Rational, seed: u64) -> PureCollection {
    perturb(&base, &magnitude, seed).unwrap()
}

/// The seeded general-position collections used by the acceptance sweep:
/// at least 20 instances spanning (d, m) in {(1,2), (2,2), (2,3), (3,2)},
/// all summand vertex counts at most 7.
pub fn acceptance_collections() -> Vec<(String, PureCollection)> {
    let mut out = Vec::new();
    for seed in [101u64, 102, 103, 104, 105] {
        let base = PureCollection::new(
            1,
            vec![simplex_polytope(1).unwrap(), simplex_polytope(1).unwrap()],
        )
        .unwrap();
        out.push((
            format!("segments d=1 m=2 seed={seed}"),
            perturbed(base, rat(1, 8), seed),
        ));
    }
    for seed in [201u64, 202, 203] {
        let base = PureCollection::new(
            2,
            vec![cyclic_polytope(2, 5).unwrap(), cyclic_polytope(2, 6).unwrap()],
        )
        .unwrap();
        out.push((
            format!("polygons d=2 m=2 n=[5,6] seed={seed}"),
            perturbed(base, rat(1, 50), seed),
        ));
    }
    for seed in [204u64, 205] {
        let base = PureCollection::new(
            2,
            vec![cyclic_polytope(2, 7).unwrap(), cyclic_polytope(2, 7).unwrap()],
        )
        .unwrap();
        out.push((
            format!("polygons d=2 m=2 n=[7,7] seed={seed}"),
            perturbed(base, rat(1, 50), seed),
        ));
    }
    out.push(("triangles d=2 m=2 fixed".into(), generic_triangles()));
    for seed in [301u64, 302, 303] {
        let base = PureCollection::new(
            2,
            vec![
                cyclic_polytope(2, 3).unwrap(),
                cyclic_polytope(2, 4).unwrap(),
                cyclic_polytope(2, 5).unwrap(),
            ],
        )
        .unwrap();
        out.push((
            format!("polygons d=2 m=3 n=[3,4,5] seed={seed}"),
            perturbed(base, rat(1, 50), seed),
        ));
    }
    for seed in [304u64, 305] {
        out.push((
            format!("triangles d=2 m=3 seed={seed}"),
            three_triangles(seed),
        ));
    }
    {
        // The (2,3) family at the vertex-count ceiling.
        let base = PureCollection::new(
            2,
            vec![
                cyclic_polytope(2, 5).unwrap(),
                cyclic_polytope(2, 6).unwrap(),
                cyclic_polytope(2, 7).unwrap(),
            ],
        )
        .unwrap();
        out.push((
            "polygons d=2 m=3 n=[5,6,7] seed=306".into(),
            perturbed(base, rat(1, 50), 306),
        ));
    }
    for seed in [401u64, 402, 403] {
        let base = PureCollection::new(
            3,
            vec![cyclic_polytope(3, 5).unwrap(), cyclic_polytope(3, 6).unwrap()],
        )
        .unwrap();
        out.push((
            format!("cyclic d=3 m=2 n=[5,6] seed={seed}"),
            perturbed(base, rat(1, 50), seed),
        ));
    }
    for seed in [404u64, 405] {
        let base = PureCollection::new(
            3,
            vec![simplex_polytope(3).unwrap(), simplex_polytope(3).unwrap()],
        )
        .unwrap();
        out.push((
            format!("simplices d=3 m=2 seed={seed}"),
            perturbed(base, rat(1, 16), seed),
        ));
    }
    out
}

/// Single-summand instances: cyclic, stacked, and a simplex.
pub fn single_summand_collections() -> Vec<(String, PureCollection)> {
    let mut out = Vec::new();
    for n in 5..=8 {
        out.push((
            format!("cyclic d=3 n={n}"),
            PureCollection::new(3, vec![cyclic_polytope(3, n).unwrap()]).unwrap(),
        ));
    }
    for n in 6..=8 {
        out.push((
            format!("cyclic d=4 n={n}"),
            PureCollection::new(4, vec![cyclic_polytope(4, n).unwrap()]).unwrap(),
        ));
    }
    for (n, seed) in [(5, 1u64), (6, 2), (7, 3), (8, 4)] {
        out.push((
            format!("stacked d=3 n={n} seed={seed}"),
            PureCollection::new(3, vec![stacked_polytope(3, n, seed).unwrap()]).unwrap(),
        ));
    }
    out.push((
        "stacked d=4 n=8 seed=9".into(),
        PureCollection::new(4, vec![stacked_polytope(4, 8, 9).unwrap()]).unwrap(),
    ));
    out.push((
        "simplex d=3".into(),
        PureCollection::new(3, vec![simplex_polytope(3).unwrap()]).unwrap(),
    ));
    out
}
