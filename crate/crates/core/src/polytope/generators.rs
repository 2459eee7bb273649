//! Instance generators: cyclic and stacked polytopes, standard simplices,
//! and seeded rational perturbation into general position.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{add, dot, sub, Point, Polytope, PureCollection};
use crate::error::Error;
use crate::linalg::{QMatrix, Rational};
use crate::Result;

/// Cyclic polytope: moment-curve points `(t, t^2, ..., t^d)` at
/// `t = 1..=n`.
pub fn cyclic_polytope(d: usize, n: usize) -> Result<Polytope> {
    if d == 0 || n < d + 1 {
        return Err(Error::InvalidParameter(format!(
            "cyclic polytope needs n >= d+1 >= 2, got d={d}, n={n}"
        )));
    }
    if d == 1 && n > 2 {
        return Err(Error::InvalidParameter(
            "a 1-dimensional polytope has exactly 2 vertices".into(),
        ));
    }
    let vertices: Vec<Point> = (1..=n as i64)
        .map(|t| {
            let mut coord = BigInt::one();
            (0..d)
                .map(|_| {
                    coord *= t;
                    Rational::from_integer(coord.clone())
                })
                .collect()
        })
        .collect();
    Polytope::from_vertices(d, vertices)
}

/// Standard d-simplex: the origin and the unit coordinate points.
pub fn simplex_polytope(d: usize) -> Result<Polytope> {
    if d == 0 {
        return Err(Error::InvalidParameter("simplex needs d >= 1".into()));
    }
    let mut vertices = vec![vec![Rational::zero(); d]];
    for i in 0..d {
        let mut v = vec![Rational::zero(); d];
        v[i] = Rational::one();
        vertices.push(v);
    }
    Polytope::from_vertices(d, vertices)
}

/// Stacked polytope: a d-simplex with `n - d - 1` vertices stacked onto
/// uniformly chosen facets, each placed just beyond the facet's centroid.
pub fn stacked_polytope(d: usize, n: usize, seed: u64) -> Result<Polytope> {
    if d == 0 || n < d + 1 {
        return Err(Error::InvalidParameter(format!(
            "stacked polytope needs n >= d+1 >= 2, got d={d}, n={n}"
        )));
    }
    if d == 1 && n > 2 {
        return Err(Error::InvalidParameter(
            "a 1-dimensional polytope has exactly 2 vertices".into(),
        ));
    }
    let base = simplex_polytope(d)?;
    if n == d + 1 {
        return Ok(base);
    }
    let mut vertices: Vec<Point> = base.vertices().to_vec();
    let interior = centroid(&vertices);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Facets as (vertex indices, outward normal, offset); the starting
    // simplex is simplicial and each stacking step keeps it so.
    let mut facets: Vec<(Vec<usize>, Vec<Rational>, Rational)> = Vec::new();
    for omit in 0..=d {
        let verts: Vec<usize> = (0..=d).filter(|&v| v != omit).collect();
        facets.push(oriented_facet(&vertices, &verts, &interior)?);
    }

    while vertices.len() < n {
        let pick = rng.gen_range(0..facets.len());
        let (verts, normal, _) = facets[pick].clone();
        let face_centroid = centroid(
            &verts
                .iter()
                .map(|&v| vertices[v].clone())
                .collect::<Vec<_>>(),
        );
        // Halve epsilon until the new point is beyond the chosen facet
        // only; it always is beyond that facet, so only the others are
        // checked.
        let mut eps = Rational::one();
        let new_point = loop {
            let candidate: Point = face_centroid
                .iter()
                .zip(&normal)
                .map(|(c, n)| c + &eps * n)
                .collect();
            let beneath_rest = facets.iter().enumerate().all(|(fid, (_, ng, og))| {
                fid == pick || dot(ng, &candidate) < *og
            });
            if beneath_rest {
                break candidate;
            }
            eps /= Rational::from_integer(BigInt::from(2));
        };
        let new_idx = vertices.len();
        vertices.push(new_point);
        facets.swap_remove(pick);
        for omit in 0..verts.len() {
            let mut ridge: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != omit)
                .map(|(_, &v)| v)
                .collect();
            ridge.push(new_idx);
            facets.push(oriented_facet(&vertices, &ridge, &interior)?);
        }
    }

    Polytope::from_vertices(d, vertices)
}

fn centroid(points: &[Point]) -> Point {
    let n = Rational::from_integer(BigInt::from(points.len() as i64));
    (0..points[0].len())
        .map(|j| {
            let mut acc = Rational::zero();
            for p in points {
                acc += &p[j];
            }
            acc / &n
        })
        .collect()
}

fn oriented_facet(
    vertices: &[Point],
    facet: &[usize],
    interior: &Point,
) -> Result<(Vec<usize>, Vec<Rational>, Rational)> {
    let pts: Vec<&Point> = facet.iter().map(|&v| &vertices[v]).collect();
    let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let kernel = QMatrix::from_rows(diffs).kernel_basis();
    if kernel.cols() != 1 {
        return Err(Error::DegenerateInput(
            "stacking produced an affinely dependent facet".into(),
        ));
    }
    let mut normal: Vec<Rational> = (0..kernel.rows()).map(|i| kernel[(i, 0)].clone()).collect();
    let mut offset = dot(&normal, pts[0]);
    if dot(&normal, interior) > offset {
        for x in normal.iter_mut() {
            *x = -x.clone();
        }
        offset = -offset;
    }
    let mut facet = facet.to_vec();
    facet.sort_unstable();
    Ok((facet, normal, offset))
}

/// Displace every vertex of every summand by an independent rational of
/// size at most `magnitude`, deterministically from the seed. Vertex
/// counts are re-verified; on failure the magnitude is halved and the
/// perturbation redrawn, a bounded number of times.
pub fn perturb(
    collection: &PureCollection,
    magnitude: &Rational,
    seed: u64,
) -> Result<PureCollection> {
    if magnitude <= &Rational::zero() {
        return Err(Error::InvalidParameter(
            "perturbation magnitude must be positive".into(),
        ));
    }
    const DENOM: i64 = 1 << 16;
    const MAX_ATTEMPTS: u32 = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = collection.d();
    let mut scale = magnitude.clone();
    for _ in 0..MAX_ATTEMPTS {
        let mut summands = Vec::with_capacity(collection.m());
        let mut ok = true;
        for p in collection.polytopes() {
            let moved: Vec<Point> = p
                .vertices()
                .iter()
                .map(|v| {
                    let jitter: Point = (0..d)
                        .map(|_| {
                            let num = rng.gen_range(-DENOM..=DENOM);
                            &scale * Rational::new(BigInt::from(num), BigInt::from(DENOM))
                        })
                        .collect();
                    add(v, &jitter)
                })
                .collect();
            match Polytope::from_vertices(d, moved) {
                Ok(q) if q.dim() == d && q.vertex_count() == p.vertex_count() => {
                    summands.push(q)
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return PureCollection::new(d, summands);
        }
        scale /= Rational::from_integer(BigInt::from(2));
    }
    Err(Error::PerturbationFailed(format!(
        "vertex counts not preserved after {MAX_ATTEMPTS} attempts"
    )))
}
