//! Cross-checks of the Cayley-side combinatorics against independent
//! enumeration paths: complex face counts against direct lattice
//! filtering, frozen small cases, and the structural invariants of the
//! embedding.

mod common;

use std::collections::BTreeSet;

use caylex::complexes::{h_from_f, CayleyCombinatorics, FVector};
use caylex::linalg::Rational;
use caylex::polytope::cayley::cayley_polytope;
use caylex::polytope::minkowski::minkowski_sum;
use caylex::verify::{check_face_correspondence, check_schenzel_tail};
use common::{generic_triangles, three_triangles, two_segments};
use num_traits::Zero;

/// Oracle: f-vector of the Cayley complex by filtering the mixed faces
/// straight out of the geometric face lattice (no subset closure).
fn mixed_face_counts_from_lattice(comb: &CayleyCombinatorics, cayley_is_mixed: impl Fn(&[usize]) -> bool) -> FVector {
    let mut f = FVector::new();
    f.set(-1, 1).unwrap();
    for (dim, face) in comb.lattice().proper_faces() {
        if cayley_is_mixed(face) {
            f.set(dim, f.get(dim) + 1).unwrap();
        }
    }
    f
}

#[test]
fn two_triangle_complex_counts_match_lattice_enumeration() {
    let c = generic_triangles();
    let k = cayley_polytope(&c);
    let comb = CayleyCombinatorics::new(&k).unwrap();

    let t = comb.cayley_complex().unwrap();
    assert_eq!(t.f_vector().slice(-1, 2), vec![1, 6, 12, 6]);

    // Independent path: every face of T is a face of the Cayley polytope
    // lying in the closure of the mixed part. The closure of the mixed
    // facets adds exactly the pure faces they contain.
    let from_closure = t.f_vector();
    let mut from_lattice = FVector::new();
    from_lattice.set(-1, 1).unwrap();
    for (dim, face) in comb.lattice().proper_faces() {
        let in_t = t.contains_face(face);
        if in_t {
            from_lattice.set(dim, from_lattice.get(dim) + 1).unwrap();
        }
    }
    assert_eq!(from_closure, from_lattice);

    let relative = comb.relative_complex().unwrap().f_vector();
    assert_eq!(relative.slice(-1, 2), vec![0, 0, 6, 6]);
    // Oracle: the relative faces are exactly the mixed lattice faces.
    let oracle = mixed_face_counts_from_lattice(&comb, |face| k.is_mixed_face(face));
    assert_eq!(relative.slice(0, 2), oracle.slice(0, 2));
    assert_eq!(relative.get(-1), 0);
}

#[test]
fn two_segment_cayley_frozen_values() {
    let c = two_segments();
    let k = cayley_polytope(&c);
    let comb = CayleyCombinatorics::new(&k).unwrap();
    let t = comb.cayley_complex().unwrap();
    assert_eq!(t.f_vector().slice(-1, 1), vec![1, 4, 2]);
    let relative = comb.relative_complex().unwrap().f_vector();
    assert_eq!(relative.slice(-1, 1), vec![0, 0, 2]);

    // h-vectors at D = d + m - 1 = 2.
    let h_t = h_from_f(&t.f_vector(), 2).unwrap();
    assert_eq!(h_t.entries(), &[1, 2, -1]);
    let h_rel = h_from_f(&relative, 2).unwrap();
    assert_eq!(h_rel.entries(), &[0, 0, 2]);

    // The sum is a segment: 2 vertices, predicted by the shifted count.
    let predicted = comb.minkowski_f_prediction().unwrap();
    assert_eq!(predicted.slice(0, 0), vec![2]);
    let sum = minkowski_sum(&c).unwrap();
    assert_eq!(sum.vertex_count(), 2);
}

#[test]
fn three_triangle_tail_values() {
    // d = 2, m = 3: h_{d+1}(T) = -C(4,3) = -4 and h_{d+2}(T) = C(4,4) = 1.
    let c = three_triangles(7);
    let report = check_schenzel_tail(&c);
    assert!(!report.skipped, "{report:?}");
    assert!(report.passed, "{report:?}");
    assert_eq!(report.lhs(), vec![-4, 1]);
    assert_eq!(report.rhs(), vec![-4, 1]);

    let fc = check_face_correspondence(&c);
    assert!(fc.passed, "{fc:?}");
}

#[test]
fn relative_h_vanishes_below_m() {
    // Mixed faces have at least m vertices, so h_k(T°) = 0 for k <= m-1.
    for (name, c) in [
        ("two triangles", generic_triangles()),
        ("three triangles", three_triangles(13)),
        ("two segments", two_segments()),
    ] {
        let comb = CayleyCombinatorics::new(&cayley_polytope(&c)).unwrap();
        let h = h_from_f(&comb.relative_complex().unwrap().f_vector(), comb.h_dim()).unwrap();
        for k in 0..c.m() as i64 {
            assert_eq!(h.get(k), 0, "{name}: h_{k} of the relative complex");
        }
    }
}

#[test]
fn sub_collection_faces_are_supported_by_height_functionals() {
    let c = three_triangles(19);
    let k = cayley_polytope(&c);
    let lattice = k.face_lattice().unwrap();
    let d = k.d();
    let m = k.m();
    // For every proper S, the functional summing the S-heights attains
    // its maximum 1 exactly on the vertices with provenance in S, and
    // those vertices form a face.
    for bits in 1u32..(1 << m) - 1 {
        let s: BTreeSet<usize> = (0..m).filter(|&i| bits & (1 << i) != 0).collect();
        for (v, point) in k.vertices().iter().enumerate() {
            let height: Rational = s.iter().map(|&i| point[d + i].clone()).sum();
            if s.contains(&k.summand_of(v)) {
                assert_eq!(height, Rational::from_integer(1.into()));
            } else {
                assert!(height.is_zero());
            }
        }
        let face = k.vertices_of_summands(&s);
        assert!(
            lattice.contains(&face),
            "Cay(P_S) for S={s:?} is not a face"
        );
    }
}

#[test]
fn cayley_complex_closure_is_generated_by_mixed_facets() {
    // T contains the relative faces and is exactly their subface closure.
    let c = generic_triangles();
    let k = cayley_polytope(&c);
    let comb = CayleyCombinatorics::new(&k).unwrap();
    let t = comb.cayley_complex().unwrap();
    for (_, face) in comb.lattice().proper_faces() {
        if k.is_mixed_face(face) {
            assert!(t.contains_face(face));
        }
    }
    // Every facet of T is itself mixed.
    for facet in t.facets() {
        assert!(k.is_mixed_face(facet));
    }
}

#[test]
fn non_simplicial_input_errors_with_offending_face() {
    use caylex::polytope::Polytope;
    use caylex::polytope::PureCollection;
    use caylex::Error;
    let square = Polytope::from_vertices(
        2,
        vec![pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(1, 1)],
    )
    .unwrap();
    let shifted = square.translate(&[Rational::from_integer(3.into()), Rational::zero()]);
    let c = PureCollection::new(2, vec![square, shifted]).unwrap();
    let k = cayley_polytope(&c);
    match caylex::complexes::cayley_complex(&k) {
        Err(Error::NotSimplicial { face, dim }) => {
            assert!(face.len() as i64 > dim + 1);
            assert!(k.is_mixed_face(&face));
        }
        other => panic!("expected a non-simplicial error, got {other:?}"),
    }
}

fn pt2(x: i64, y: i64) -> Vec<Rational> {
    vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())]
}

#[test]
fn single_summand_complex_is_the_boundary_complex() {
    use caylex::polytope::generators::cyclic_polytope;
    use caylex::polytope::PureCollection;
    let p = cyclic_polytope(3, 6).unwrap();
    let c = PureCollection::new(3, vec![p.clone()]).unwrap();
    let comb = CayleyCombinatorics::new(&cayley_polytope(&c)).unwrap();
    let t = comb.cayley_complex().unwrap();
    let boundary = p.face_lattice().unwrap().boundary_f_vector();
    assert_eq!(t.f_vector().slice(0, 2), boundary.slice(0, 2));
    assert_eq!(t.f_vector().get(-1), 1);
    // Relative complex drops only the empty face.
    let rel = comb.relative_complex().unwrap().f_vector();
    assert_eq!(rel.get(-1), 0);
    assert_eq!(rel.slice(0, 2), boundary.slice(0, 2));
}
