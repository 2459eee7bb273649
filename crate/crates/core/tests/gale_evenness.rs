//! Facets of cyclic polytopes against Gale's evenness condition, which is
//! an independent combinatorial description of them: a d-subset S of the
//! moment-curve parameters spans a facet exactly when any two parameters
//! outside S have an even number of elements of S between them.

use std::collections::BTreeSet;

use caylex::complexes::FVector;
use caylex::polytope::generators::cyclic_polytope;

/// All facets of the cyclic polytope C(d, n) by Gale evenness, as sorted
/// vertex-index sets (vertex i corresponds to parameter t = i + 1).
fn gale_facets(d: usize, n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut subset = Vec::new();
    gale_rec(d, n, 0, &mut subset, &mut out);
    out
}

fn gale_rec(
    d: usize,
    n: usize,
    start: usize,
    subset: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if subset.len() == d {
        if satisfies_evenness(subset, n) {
            out.insert(subset.clone());
        }
        return;
    }
    for v in start..n {
        subset.push(v);
        gale_rec(d, n, v + 1, subset, out);
        subset.pop();
    }
}

fn satisfies_evenness(subset: &[usize], n: usize) -> bool {
    let members: BTreeSet<usize> = subset.iter().copied().collect();
    let outside: Vec<usize> = (0..n).filter(|v| !members.contains(v)).collect();
    for (a, &i) in outside.iter().enumerate() {
        for &j in &outside[a + 1..] {
            let between = subset.iter().filter(|&&k| i < k && k < j).count();
            if between % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// Face counts from an abstract simplicial facet list (subset closure),
/// an enumeration path independent of the geometric lattice.
fn closure_f_vector(facets: &BTreeSet<Vec<usize>>) -> FVector {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in facets {
        let mut stack = vec![Vec::new()];
        for &v in facet {
            let len = stack.len();
            for i in 0..len {
                let mut s = stack[i].clone();
                s.push(v);
                stack.push(s);
            }
        }
        faces.extend(stack.into_iter().filter(|s| !s.is_empty()));
    }
    let mut f = FVector::new();
    for face in faces {
        let d = face.len() as i64 - 1;
        f.set(d, f.get(d) + 1).unwrap();
    }
    f
}

#[test]
fn hull_facets_match_gale_evenness() {
    for (d, n) in [(2usize, 5usize), (3, 5), (3, 6), (3, 8), (4, 6), (4, 7), (4, 8)] {
        let p = cyclic_polytope(d, n).unwrap();
        let computed: BTreeSet<Vec<usize>> = p
            .facets()
            .unwrap()
            .into_iter()
            .map(|f| f.incident_vertices)
            .collect();
        let expected = gale_facets(d, n);
        assert_eq!(computed, expected, "facets of C({d},{n})");
    }
}

#[test]
fn cyclic_3_6_has_eight_triangles() {
    let facets = gale_facets(3, 6);
    assert_eq!(facets.len(), 8);
    let p = cyclic_polytope(3, 6).unwrap();
    assert_eq!(p.facets().unwrap().len(), 8);
}

#[test]
fn face_lattice_agrees_with_gale_closure() {
    for (d, n) in [(3usize, 6usize), (3, 7), (4, 7), (4, 8)] {
        let p = cyclic_polytope(d, n).unwrap();
        let lattice_f = p.face_lattice().unwrap().boundary_f_vector();
        let oracle_f = closure_f_vector(&gale_facets(d, n));
        assert_eq!(
            lattice_f.slice(0, d as i64 - 1),
            oracle_f.slice(0, d as i64 - 1),
            "f-vector of C({d},{n})"
        );
    }
}

#[test]
fn even_dimensional_cyclic_polytopes_are_neighborly() {
    let f = cyclic_polytope(4, 7)
        .unwrap()
        .face_lattice()
        .unwrap()
        .boundary_f_vector();
    assert_eq!(f.get(1), 21); // C(7, 2)
}

#[test]
fn boundary_h_vectors_of_standard_families() {
    use caylex::complexes::{h_from_f, FVector};
    use caylex::polytope::generators::stacked_polytope;

    let h_of = |f: &FVector, d: usize| {
        let mut with_empty = f.clone();
        with_empty.set(-1, 1).unwrap();
        h_from_f(&with_empty, d).unwrap()
    };

    // Cyclic 4-polytope on 7 vertices.
    let f = cyclic_polytope(4, 7).unwrap().face_lattice().unwrap().boundary_f_vector();
    assert_eq!(h_of(&f, 4).entries(), &[1, 3, 6, 3, 1]);

    // Stacked polytopes: h = (1, n-d, ..., n-d, 1).
    let f = stacked_polytope(4, 8, 5).unwrap().face_lattice().unwrap().boundary_f_vector();
    assert_eq!(h_of(&f, 4).entries(), &[1, 4, 4, 4, 1]);
    let f = stacked_polytope(3, 8, 5).unwrap().face_lattice().unwrap().boundary_f_vector();
    assert_eq!(h_of(&f, 3).entries(), &[1, 5, 5, 1]);
}
