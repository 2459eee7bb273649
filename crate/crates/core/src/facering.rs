//! The graded quotient A* of the Stanley–Reisner ring of a simplicial
//! complex by the linear system coming from the coordinates of its
//! geometric realization, and rank certificates for multiplication by
//! powers of the vertex-sum element.
//!
//! Degree-i elements are represented over the face-supported monomials of
//! degree i (monomials whose support is a face; all others vanish in the
//! ring). The degree-i relation space is spanned by the products of the
//! linear forms with the face-supported monomials of degree i-1; a
//! complement of it is spanned by the non-pivot monomials of the reduced
//! relation basis.
//!
//! The coordinate covectors of a Cayley embedding are centered at the
//! vertex centroid before they act: the centered family has exactly one
//! linear dependency (the summand-indicator block sums to zero), spans the
//! functionals of the hyperplane carrying the vertices, and leaves the
//! vertex-sum element independent of the relations, which is what the
//! multiplication maps are measured against.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complexes::SimplicialComplex;
use crate::error::Error;
use crate::linalg::{EchelonSpace, QMatrix, Rational};
use crate::polytope::cayley::CayleyPolytope;
use crate::Result;

/// Exponent vector over the complex's vertices.
pub type Monomial = Vec<u8>;

/// The monomial basis chosen for one graded component.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
}

/// Outcome of one injectivity check for `x omega^j : A^i -> A^{i+j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzCertificate {
    pub i: usize,
    pub j: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    #[serde(rename = "rank")]
    pub map_rank: usize,
    pub injective: bool,
}

/// The raw coordinate covectors of a Cayley embedding: covector `j` sends
/// the variable of vertex `v` to the j-th coordinate of `v`. There are
/// exactly `d + m` of them, and the last `m` sum to the all-ones covector.
pub fn coordinate_linear_forms(cayley: &CayleyPolytope) -> Vec<Vec<Rational>> {
    let n = cayley.vertices().len();
    (0..cayley.ambient_dim())
        .map(|j| (0..n).map(|v| cayley.vertices()[v][j].clone()).collect())
        .collect()
}

/// All inclusion-minimal non-faces of the complex (the supports of the
/// generators of the Stanley–Reisner ideal).
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> Vec<Vec<usize>> {
    let n = complex.vertex_count();
    let max_size = match complex.dim() {
        None => return vec![vec![]], // void complex: the empty set is a non-face
        Some(d) => (d + 2) as usize,
    };
    let mut out = Vec::new();
    let mut subset = Vec::new();
    collect_minimal_nonfaces(complex, n, max_size, 0, &mut subset, &mut out);
    out
}

fn collect_minimal_nonfaces(
    complex: &SimplicialComplex,
    n: usize,
    max_size: usize,
    start: usize,
    subset: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !subset.is_empty() && !complex.contains_face(subset) {
        let minimal = (0..subset.len()).all(|omit| {
            let sub: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != omit)
                .map(|(_, &v)| v)
                .collect();
            complex.contains_face(&sub)
        });
        if minimal {
            out.push(subset.clone());
        }
        return; // supersets of a non-face are not minimal
    }
    if subset.len() == max_size {
        return;
    }
    for v in start..n {
        subset.push(v);
        collect_minimal_nonfaces(complex, n, max_size, v + 1, subset, out);
        subset.pop();
    }
}

struct DegreeComponent {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: EchelonSpace,
    /// Non-pivot monomial positions: a basis of the quotient component.
    basis_cols: Vec<usize>,
}

/// Degree-graded components of the Stanley–Reisner ring modulo the linear
/// system, with multiplication-map matrices.
pub struct GradedQuotient {
    complex: SimplicialComplex,
    linear_forms: Vec<Vec<Rational>>,
    reduced_forms: Vec<Vec<Rational>>,
    faces: HashSet<Vec<usize>>,
    degrees: Vec<DegreeComponent>,
}

impl GradedQuotient {
    /// Build components of degree `0..=max_degree`. `linear_forms` are the
    /// raw covectors; they are centered (each covector minus its mean over
    /// the vertices) before generating relations.
    pub fn build(
        complex: &SimplicialComplex,
        linear_forms: &[Vec<Rational>],
        max_degree: usize,
    ) -> Result<Self> {
        Self::build_with_order(complex, linear_forms, max_degree, None)
    }

    /// Same, with an optional seeded shuffle of the monomial enumeration
    /// order; the computed dimensions and map ranks must not depend on the
    /// order, which the tests exercise through this entry point.
    pub fn build_with_order(
        complex: &SimplicialComplex,
        linear_forms: &[Vec<Rational>],
        max_degree: usize,
        shuffle_seed: Option<u64>,
    ) -> Result<Self> {
        let n = complex.vertex_count();
        for (j, form) in linear_forms.iter().enumerate() {
            if form.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "covector {j} has {} coefficients, expected {n}",
                    form.len()
                )));
            }
        }
        let reduced_forms = center_forms(linear_forms, n);
        let faces: HashSet<Vec<usize>> = complex.faces().into_iter().collect();

        let mut quotient = GradedQuotient {
            complex: complex.clone(),
            linear_forms: linear_forms.to_vec(),
            reduced_forms,
            faces,
            degrees: Vec::new(),
        };
        let mut rng = shuffle_seed.map(ChaCha8Rng::seed_from_u64);
        for degree in 0..=max_degree {
            let mut monomials = enumerate_monomials(&quotient.complex, &quotient.faces, degree);
            if let Some(rng) = rng.as_mut() {
                monomials.shuffle(rng);
            }
            let index: HashMap<Monomial, usize> = monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let mut relations = EchelonSpace::new();
            if degree > 0 {
                let below = &quotient.degrees[degree - 1];
                for mu in &below.monomials {
                    for form in &quotient.reduced_forms {
                        let mut row = vec![Rational::zero(); monomials.len()];
                        let mut nonzero = false;
                        for (v, coef) in form.iter().enumerate() {
                            if coef.is_zero() {
                                continue;
                            }
                            if let Some(col) = bump(mu, v, &quotient.faces, &index) {
                                row[col] += coef;
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            relations.insert(&row);
                        }
                    }
                }
            }
            let basis_cols: Vec<usize> = (0..monomials.len())
                .filter(|&c| !relations.is_pivot(c))
                .collect();
            quotient.degrees.push(DegreeComponent {
                monomials,
                index,
                relations,
                basis_cols,
            });
        }
        Ok(quotient)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn linear_forms(&self) -> &[Vec<Rational>] {
        &self.linear_forms
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    fn component(&self, degree: usize) -> Result<&DegreeComponent> {
        self.degrees.get(degree).ok_or_else(|| {
            Error::DegreeCapExceeded(format!(
                "component of degree {degree} requested, built up to {}",
                self.max_degree()
            ))
        })
    }

    /// Dimension of the degree-i component.
    pub fn dim(&self, degree: usize) -> Result<usize> {
        let c = self.component(degree)?;
        Ok(c.basis_cols.len())
    }

    /// Dimensions of all built components.
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|c| c.basis_cols.len()).collect()
    }

    /// The chosen monomial basis of the degree-i component.
    pub fn graded_component(&self, degree: usize) -> Result<MonomialBasis> {
        let c = self.component(degree)?;
        Ok(MonomialBasis {
            degree,
            monomials: c.basis_cols.iter().map(|&col| c.monomials[col].clone()).collect(),
        })
    }

    /// Matrix of multiplication by the j-th power of the vertex-sum
    /// element, from the basis of the degree-i component to the basis of
    /// the degree-(i+j) component.
    pub fn omega_power_matrix(&self, i: usize, j: usize) -> Result<QMatrix> {
        let source = self.component(i)?;
        let target = self.component(i + j)?;
        let mut out = QMatrix::zero(target.basis_cols.len(), source.basis_cols.len());
        for (col, &mono_col) in source.basis_cols.iter().enumerate() {
            let mut vec = vec![Rational::zero(); source.monomials.len()];
            vec[mono_col] = Rational::from_integer(1.into());
            let mut degree = i;
            for _ in 0..j {
                vec = self.multiply_by_omega(degree, &vec)?;
                degree += 1;
                self.degrees[degree].relations.reduce(&mut vec);
            }
            for (row, &target_col) in target.basis_cols.iter().enumerate() {
                if !vec[target_col].is_zero() {
                    out[(row, col)] = vec[target_col].clone();
                }
            }
        }
        Ok(out)
    }

    fn multiply_by_omega(&self, degree: usize, vec: &[Rational]) -> Result<Vec<Rational>> {
        let source = self.component(degree)?;
        let target = self.component(degree + 1)?;
        let n = self.complex.vertex_count();
        let mut out = vec![Rational::zero(); target.monomials.len()];
        for (pos, coef) in vec.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mu = &source.monomials[pos];
            for v in 0..n {
                if let Some(col) = bump(mu, v, &self.faces, &target.index) {
                    out[col] += coef;
                }
            }
        }
        Ok(out)
    }

    /// Injectivity certificate for `x omega^j : A^i -> A^{i+j}` within the
    /// admissible range `2i <= d`, `0 <= j <= d - 2i`.
    pub fn lefschetz_certificate(&self, d: usize, i: usize, j: usize) -> Result<LefschetzCertificate> {
        if 2 * i > d || j > d - 2 * i {
            return Err(Error::OutOfTheoremRange { i, j, d });
        }
        let matrix = self.omega_power_matrix(i, j)?;
        let dim_source = self.dim(i)?;
        let dim_target = self.dim(i + j)?;
        let map_rank = matrix.rank();
        Ok(LefschetzCertificate {
            i,
            j,
            dim_source,
            dim_target,
            map_rank,
            injective: map_rank == dim_source,
        })
    }

    /// Certificates for every admissible `(i, j)` pair, i ascending then j.
    pub fn all_certificates(&self, d: usize) -> Result<Vec<LefschetzCertificate>> {
        let mut out = Vec::new();
        for i in 0..=(d / 2) {
            for j in 0..=(d - 2 * i) {
                out.push(self.lefschetz_certificate(d, i, j)?);
            }
        }
        Ok(out)
    }
}

/// Multiply monomial `mu` by the variable of vertex `v`; `None` when the
/// product's support is a non-face (so the product is zero in the ring).
fn bump(
    mu: &Monomial,
    v: usize,
    faces: &HashSet<Vec<usize>>,
    index: &HashMap<Monomial, usize>,
) -> Option<usize> {
    let mut exp = mu.clone();
    exp[v] += 1;
    let support: Vec<usize> = exp
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(v, _)| v)
        .collect();
    if !faces.contains(&support) {
        return None;
    }
    Some(index[&exp])
}

fn center_forms(forms: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let count = Rational::from_integer((n as i64).into());
    forms
        .iter()
        .map(|form| {
            let mean: Rational = form.iter().sum::<Rational>() / &count;
            form.iter().map(|c| c - &mean).collect()
        })
        .collect()
}

/// Face-supported monomials of the given degree, in lexicographic order of
/// their exponent vectors.
fn enumerate_monomials(
    complex: &SimplicialComplex,
    faces: &HashSet<Vec<usize>>,
    degree: usize,
) -> Vec<Monomial> {
    let n = complex.vertex_count();
    let mut out = Vec::new();
    if degree == 0 {
        if complex.contains_empty() || !complex.facets().is_empty() {
            out.push(vec![0u8; n]);
        }
        return out;
    }
    for face in faces {
        if face.is_empty() || face.len() > degree {
            continue;
        }
        let mut exps = vec![0u8; face.len()];
        compositions(degree, 0, &mut exps, &mut |exps| {
            let mut mono = vec![0u8; n];
            for (slot, &v) in face.iter().enumerate() {
                mono[v] = exps[slot];
            }
            out.push(mono);
        });
    }
    out.sort();
    out
}

/// All ways to write `total` as positive parts filling `exps[at..]`.
fn compositions(total: usize, at: usize, exps: &mut Vec<u8>, emit: &mut impl FnMut(&[u8])) {
    let slots = exps.len() - at;
    if slots == 0 {
        if total == 0 {
            emit(exps);
        }
        return;
    }
    for first in 1..=(total - (slots - 1)) {
        exps[at] = first as u8;
        compositions(total - first, at + 1, exps, emit);
    }
}
