//! Incremental beneath-beyond convex hull over exact rationals.
//!
//! Points are processed in lexicographic order. The working boundary is a
//! triangulation (simplicial facets); a point coplanar with a facet keeps
//! that facet and the extension is triangulated by coning the horizon
//! ridges, which stays exact for arbitrarily degenerate inputs. Coplanar
//! simplices are merged into true facets at the end, and vertexhood is
//! decided by the rank of the incident facet normals.
//!
//! Lower-dimensional point sets are handled by charting the affine span
//! onto `R^k` first; reported facet normals are lifted back to ambient
//! coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{dot, sub, FacetDescription, Point};
use crate::error::Error;
use crate::linalg::{EchelonSpace, QMatrix, Rational};
use crate::Result;

/// Convex hull of a point set.
#[derive(Debug, Clone)]
pub struct Hull {
    /// Affine dimension of the point set.
    pub dim: usize,
    /// Indices of the extreme points in the input list, ascending.
    pub vertices: Vec<usize>,
    /// Facets of the hull within its affine span.
    pub facets: Vec<HullFacet>,
}

/// One facet: `normal · x <= offset` supports the hull, with equality
/// exactly on `vertices` (indices into the input list).
#[derive(Debug, Clone)]
pub struct HullFacet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub vertices: Vec<usize>,
}

/// Spec-level facet enumeration: complete irredundant facet list of
/// `conv(points)` within its affine span.
pub fn convex_hull_facets(points: &[Point]) -> Result<Vec<FacetDescription>> {
    let hull = convex_hull(points)?;
    Ok(hull
        .facets
        .into_iter()
        .map(|f| FacetDescription {
            normal: f.normal,
            offset: f.offset,
            incident_vertices: f.vertices,
        })
        .collect())
}

pub fn convex_hull(points: &[Point]) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::DegenerateInput("no points".into()));
    }
    let ambient = points[0].len();
    for p in points {
        if p.len() != ambient {
            return Err(Error::Malformed("points of mixed dimension".into()));
        }
    }

    // Deduplicate, remembering the first input index of each point, then
    // sort lexicographically for a deterministic insertion order.
    let mut seen: BTreeMap<&Point, usize> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        seen.entry(p).or_insert(i);
    }
    let unique: Vec<(Point, usize)> = seen.into_iter().map(|(p, i)| (p.clone(), i)).collect();
    if unique.len() < 2 {
        return Err(Error::DegenerateInput(
            "fewer than 2 distinct points".into(),
        ));
    }

    let chart = Chart::build(&unique, ambient);
    let k = chart.dim;

    if k == 1 {
        return Ok(hull_on_line(&chart, &unique));
    }

    let local: Vec<Vec<Rational>> = (0..unique.len()).map(|i| chart.to_chart(&unique[i].0)).collect();
    let interior = centroid(&chart.frame.iter().map(|&i| local[i].clone()).collect::<Vec<_>>());

    // Initial simplex from the affinely independent frame.
    let mut facets: Vec<SimplexFacet> = Vec::new();
    for omit in 0..chart.frame.len() {
        let verts: Vec<usize> = chart
            .frame
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != omit)
            .map(|(_, &v)| v)
            .collect();
        facets.push(SimplexFacet::through(&verts, &local, &interior)?);
    }

    let frame_set: BTreeSet<usize> = chart.frame.iter().copied().collect();
    for p in 0..unique.len() {
        if frame_set.contains(&p) {
            continue;
        }
        insert_point(&mut facets, p, &local, &interior)?;
    }

    finish(&chart, &unique, &local, &facets)
}

/// Affine chart of the point set's span: `x -> (x - origin)_J * inv`,
/// an exact affine isomorphism of the span onto `R^k`.
struct Chart {
    dim: usize,
    origin: Point,
    /// Coordinate positions where the span's difference vectors have
    /// full rank.
    j_cols: Vec<usize>,
    /// Inverse of the frame difference vectors restricted to `j_cols`.
    inv: QMatrix,
    /// Local indices (into the unique list) of an affine frame: first
    /// point plus `dim` more spanning points.
    frame: Vec<usize>,
}

impl Chart {
    fn build(unique: &[(Point, usize)], ambient: usize) -> Chart {
        let origin = unique[0].0.clone();
        let mut space = EchelonSpace::new();
        let mut frame = vec![0usize];
        for (i, (p, _)) in unique.iter().enumerate().skip(1) {
            if space.insert(&sub(p, &origin)) {
                frame.push(i);
                if space.rank() == ambient {
                    break;
                }
            }
        }
        let k = space.rank();
        let j_cols = space.pivot_cols();
        let rows: Vec<Vec<Rational>> = frame[1..]
            .iter()
            .map(|&i| {
                let d = sub(&unique[i].0, &origin);
                j_cols.iter().map(|&c| d[c].clone()).collect()
            })
            .collect();
        let inv = invert(&QMatrix::from_rows(rows));
        Chart {
            dim: k,
            origin,
            j_cols,
            inv,
            frame,
        }
    }

    fn to_chart(&self, x: &Point) -> Vec<Rational> {
        let d = sub(x, &self.origin);
        let y: Vec<Rational> = self.j_cols.iter().map(|&c| d[c].clone()).collect();
        (0..self.dim)
            .map(|t| {
                let mut acc = Rational::zero();
                for (s, ys) in y.iter().enumerate() {
                    if !ys.is_zero() {
                        acc += ys * &self.inv[(s, t)];
                    }
                }
                acc
            })
            .collect()
    }

    /// Lift a chart-space inequality `n · y <= c` back to ambient
    /// coordinates.
    fn lift(&self, normal: &[Rational], offset: &Rational) -> (Vec<Rational>, Rational) {
        let k = self.dim;
        let mut w = vec![Rational::zero(); k];
        for (s, ws) in w.iter_mut().enumerate() {
            for (t, nt) in normal.iter().enumerate() {
                if !nt.is_zero() {
                    *ws += &self.inv[(s, t)] * nt;
                }
            }
        }
        let mut ambient_normal = vec![Rational::zero(); self.origin.len()];
        let mut shift = Rational::zero();
        for (s, &c) in self.j_cols.iter().enumerate() {
            ambient_normal[c] = w[s].clone();
            shift += &self.origin[c] * &w[s];
        }
        (ambient_normal, offset + shift)
    }
}

fn invert(m: &QMatrix) -> QMatrix {
    let n = m.rows();
    let mut aug = QMatrix::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = Rational::one();
    }
    let (r, pivots) = aug.row_reduce();
    assert_eq!(pivots.len(), n, "chart frame must be invertible");
    let mut out = QMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = r[(i, n + j)].clone();
        }
    }
    out
}

fn centroid(points: &[Vec<Rational>]) -> Vec<Rational> {
    let n = Rational::from_integer(BigInt::from(points.len() as i64));
    let k = points[0].len();
    (0..k)
        .map(|j| {
            let mut acc = Rational::zero();
            for p in points {
                acc += &p[j];
            }
            acc / &n
        })
        .collect()
}

#[derive(Debug, Clone)]
struct SimplexFacet {
    /// Local point indices, sorted.
    verts: Vec<usize>,
    /// Outward `normal · y <= offset` in chart coordinates.
    normal: Vec<Rational>,
    offset: Rational,
}

impl SimplexFacet {
    fn through(verts: &[usize], local: &[Vec<Rational>], interior: &[Rational]) -> Result<Self> {
        let pts: Vec<&Vec<Rational>> = verts.iter().map(|&v| &local[v]).collect();
        let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
        let kernel = QMatrix::from_rows(diffs).kernel_basis();
        if kernel.cols() != 1 {
            return Err(Error::DegenerateInput(
                "affinely dependent facet points".into(),
            ));
        }
        let mut normal: Vec<Rational> = (0..kernel.rows()).map(|i| kernel[(i, 0)].clone()).collect();
        let mut offset = dot(&normal, pts[0]);
        let side = dot(&normal, interior);
        match side.cmp(&offset) {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Greater => {
                for x in normal.iter_mut() {
                    *x = -x.clone();
                }
                offset = -offset;
            }
            std::cmp::Ordering::Equal => {
                return Err(Error::DegenerateInput(
                    "interior point lies on a facet hyperplane".into(),
                ))
            }
        }
        let mut verts = verts.to_vec();
        verts.sort_unstable();
        Ok(SimplexFacet {
            verts,
            normal,
            offset,
        })
    }

    fn ridges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.verts.len()).map(move |omit| {
            self.verts
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != omit)
                .map(|(_, &v)| v)
                .collect()
        })
    }
}

fn insert_point(
    facets: &mut Vec<SimplexFacet>,
    p: usize,
    local: &[Vec<Rational>],
    interior: &[Rational],
) -> Result<()> {
    let q = &local[p];
    let visible: Vec<bool> = facets
        .iter()
        .map(|f| dot(&f.normal, q) > f.offset)
        .collect();
    if !visible.iter().any(|&v| v) {
        return Ok(()); // inside or on the current hull
    }

    // A horizon ridge separates a strictly visible facet from a kept one.
    let mut ridge_visibility: HashMap<Vec<usize>, Vec<bool>> = HashMap::new();
    for (fid, f) in facets.iter().enumerate() {
        for ridge in f.ridges() {
            ridge_visibility.entry(ridge).or_default().push(visible[fid]);
        }
    }
    let mut horizon: Vec<Vec<usize>> = ridge_visibility
        .into_iter()
        .filter_map(|(ridge, vis)| {
            debug_assert_eq!(vis.len(), 2, "boundary triangulation must be closed");
            (vis.iter().filter(|&&v| v).count() == 1).then_some(ridge)
        })
        .collect();
    horizon.sort_unstable();

    let mut kept: Vec<SimplexFacet> = facets
        .iter()
        .zip(&visible)
        .filter(|&(_, &v)| !v)
        .map(|(f, _)| f.clone())
        .collect();
    for ridge in horizon {
        let mut verts = ridge;
        verts.push(p);
        kept.push(SimplexFacet::through(&verts, local, interior)?);
    }
    *facets = kept;
    Ok(())
}

/// Merge coplanar simplices into true facets, decide vertexhood, and lift
/// everything back to ambient coordinates.
fn finish(
    chart: &Chart,
    unique: &[(Point, usize)],
    local: &[Vec<Rational>],
    facets: &[SimplexFacet],
) -> Result<Hull> {
    let k = chart.dim;
    let mut groups: BTreeMap<Vec<BigInt>, BTreeSet<usize>> = BTreeMap::new();
    for f in facets {
        let key = primitive_key(&f.normal, &f.offset);
        groups.entry(key).or_default().extend(f.verts.iter().copied());
    }

    // Hyperplanes in canonical primitive-integer form.
    let planes: Vec<(Vec<Rational>, Rational)> = groups
        .keys()
        .map(|key| {
            let normal: Vec<Rational> = key[..k]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            (normal, Rational::from_integer(key[k].clone()))
        })
        .collect();

    let candidates: BTreeSet<usize> = facets.iter().flat_map(|f| f.verts.iter().copied()).collect();
    let mut vertex_local: Vec<usize> = Vec::new();
    for &c in &candidates {
        let mut space = EchelonSpace::new();
        for (normal, offset) in &planes {
            if dot(normal, &local[c]) == *offset {
                space.insert(normal);
                if space.rank() == k {
                    break;
                }
            }
        }
        if space.rank() == k {
            vertex_local.push(c);
        }
    }

    let mut hull_facets = Vec::with_capacity(planes.len());
    for (normal, offset) in &planes {
        let incident: Vec<usize> = vertex_local
            .iter()
            .copied()
            .filter(|&v| dot(normal, &local[v]) == *offset)
            .map(|v| unique[v].1)
            .collect();
        let mut incident = incident;
        incident.sort_unstable();
        let (ambient_normal, ambient_offset) = chart.lift(normal, offset);
        hull_facets.push(HullFacet {
            normal: ambient_normal,
            offset: ambient_offset,
            vertices: incident,
        });
    }

    let mut vertices: Vec<usize> = vertex_local.iter().map(|&v| unique[v].1).collect();
    vertices.sort_unstable();
    Ok(Hull {
        dim: k,
        vertices,
        facets: hull_facets,
    })
}

fn hull_on_line(chart: &Chart, unique: &[(Point, usize)]) -> Hull {
    let coords: Vec<Rational> = unique.iter().map(|(p, _)| chart.to_chart(p)[0].clone()).collect();
    let (mut lo, mut hi) = (0usize, 0usize);
    for (i, c) in coords.iter().enumerate() {
        if c < &coords[lo] {
            lo = i;
        }
        if c > &coords[hi] {
            hi = i;
        }
    }
    let facets = vec![
        {
            let (n, o) = chart.lift(&[Rational::one()], &coords[hi]);
            HullFacet {
                normal: n,
                offset: o,
                vertices: vec![unique[hi].1],
            }
        },
        {
            let (n, o) = chart.lift(&[-Rational::one()], &(-coords[lo].clone()));
            HullFacet {
                normal: n,
                offset: o,
                vertices: vec![unique[lo].1],
            }
        },
    ];
    let mut vertices = vec![unique[lo].1, unique[hi].1];
    vertices.sort_unstable();
    Hull {
        dim: 1,
        vertices,
        facets,
    }
}

/// Scale `(normal, offset)` to a primitive integer vector, preserving
/// orientation, so coplanar facets hash to the same key.
fn primitive_key(normal: &[Rational], offset: &Rational) -> Vec<BigInt> {
    let mut all: Vec<&Rational> = normal.iter().collect();
    all.push(offset);
    let mut lcm = BigInt::one();
    for x in &all {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> = all.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    fn pts(vals: &[&[i64]]) -> Vec<Point> {
        vals.iter()
            .map(|row| row.iter().map(|&v| rat_int(v)).collect())
            .collect()
    }

    #[test]
    fn triangle_has_three_edge_facets() {
        let hull = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(hull.dim, 2);
        assert_eq!(hull.vertices, vec![0, 1, 2]);
        assert_eq!(hull.facets.len(), 3);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn simplex_has_four_facets() {
        let hull = convex_hull(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(hull.dim, 3);
        assert_eq!(hull.facets.len(), 4);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(convex_hull(&pts(&[&[1, 2]])).is_err());
        assert!(convex_hull(&pts(&[&[1, 2], &[1, 2]])).is_err());
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn interior_and_boundary_points_are_dropped() {
        // Unit square plus its center and an edge midpoint.
        let hull = convex_hull(&pts(&[
            &[0, 0],
            &[2, 0],
            &[0, 2],
            &[2, 2],
            &[1, 1],
            &[1, 0],
        ]))
        .unwrap();
        assert_eq!(hull.vertices, vec![0, 1, 2, 3]);
        assert_eq!(hull.facets.len(), 4);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn cube_facets_are_merged_squares() {
        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(vec![rat_int(x), rat_int(y), rat_int(z)]);
                }
            }
        }
        let hull = convex_hull(&cube).unwrap();
        assert_eq!(hull.dim, 3);
        assert_eq!(hull.vertices.len(), 8);
        assert_eq!(hull.facets.len(), 6);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 4);
        }
    }

    #[test]
    fn octahedron_has_eight_triangles() {
        let octa = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let hull = convex_hull(&octa).unwrap();
        assert_eq!(hull.facets.len(), 8);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 3);
        }
    }

    #[test]
    fn lower_dimensional_hull_lives_in_affine_span() {
        // A triangle embedded in a plane of R^3.
        let hull = convex_hull(&pts(&[&[0, 0, 1], &[2, 0, 1], &[0, 2, 1], &[1, 1, 1]])).unwrap();
        assert_eq!(hull.dim, 2);
        assert_eq!(hull.vertices, vec![0, 1, 2]);
        assert_eq!(hull.facets.len(), 3);
    }

    #[test]
    fn collinear_points_give_a_segment() {
        let hull = convex_hull(&pts(&[&[0, 0], &[1, 1], &[3, 3], &[2, 2]])).unwrap();
        assert_eq!(hull.dim, 1);
        assert_eq!(hull.vertices, vec![0, 2]);
        assert_eq!(hull.facets.len(), 2);
    }

    #[test]
    fn facet_inequalities_support_the_hull() {
        let points = pts(&[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[3, 3, 3], &[1, 1, 0]]);
        let hull = convex_hull(&points).unwrap();
        for f in &hull.facets {
            for (i, p) in points.iter().enumerate() {
                let v = dot(&f.normal, p);
                if f.vertices.contains(&i) {
                    assert_eq!(v, f.offset);
                } else if hull.vertices.contains(&i) {
                    assert!(v < f.offset);
                } else {
                    assert!(v <= f.offset);
                }
            }
        }
    }

    #[test]
    fn rational_coordinates_are_exact() {
        let points = vec![
            vec![rat(1, 3), rat(1, 7)],
            vec![rat(2, 3), rat(1, 7)],
            vec![rat(1, 3), rat(8, 7)],
            vec![rat(1, 2), rat(1, 2)],
        ];
        let hull = convex_hull(&points).unwrap();
        assert_eq!(hull.vertices, vec![0, 1, 2]);
    }
}
