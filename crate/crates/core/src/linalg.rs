//! Exact rational scalars, dense matrices, and row reduction.
//!
//! All arithmetic is over arbitrary-precision rationals; nothing in this
//! module (or the crate) ever rounds. Matrices are dense and row-major,
//! which is the right trade-off at the problem sizes handled here (at most
//! a few thousand columns).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. Serialized as `"p/q"`, with `/q` omitted when the
/// denominator is 1.
pub type Rational = num_rational::BigRational;

/// Rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parse the `"p/q"` (or plain `"p"`) string form.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Malformed(format!("bad rational {s:?}: {e}")))
}

/// Dense matrix over [`Rational`], row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            entries.extend(row);
        }
        QMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    /// Build from integer rows, mostly for tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Reduced row-echelon form together with the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry per column, so the
    /// result is deterministic; pivot columns are strictly increasing and
    /// their count is the rank.
    pub fn row_reduce(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].recip();
            for j in col..m.cols {
                let v = m[(pivot_row, j)].clone() * &inv;
                m[(pivot_row, j)] = v;
            }
            for r in 0..m.rows {
                if r == pivot_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let delta = &factor * &m[(pivot_row, j)];
                    m[(r, j)] -= delta;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        (m, pivot_cols)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Columns form a basis of the right null space `{x : Mx = 0}`.
    ///
    /// The returned matrix has `cols() - rank()` columns; it is empty
    /// (zero columns) for injective matrices.
    pub fn kernel_basis(&self) -> QMatrix {
        let (rref, pivots) = self.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = QMatrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = Rational::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -rref[(prow, fc)].clone();
            }
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

/// Incrementally maintained row space in reduced echelon form.
///
/// Rows are stored as primitive integer vectors (content 1, positive
/// pivot), and every insertion keeps the set fully reduced: each pivot
/// column has a single nonzero entry. This keeps the entries small enough
/// for the relation-space eliminations in the face ring, which is the one
/// hot path in the crate.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpace {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl EchelonSpace {
    pub fn new() -> Self {
        EchelonSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains(&col)
    }

    /// Insert a row; returns true when it enlarged the space.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        let mut v = row.to_vec();
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let int_row = to_primitive_int(&v);
        // Back-eliminate the new pivot from existing rows to stay in RREF.
        for r in 0..self.rows.len() {
            if self.rows[r][pivot].is_zero() {
                continue;
            }
            let scale = int_row[pivot].clone();
            let factor = self.rows[r][pivot].clone();
            for (entry, incoming) in self.rows[r].iter_mut().zip(&int_row) {
                *entry = &*entry * &scale - &factor * incoming;
            }
            normalize_int_row(&mut self.rows[r], self.pivots[r]);
        }
        self.rows.push(int_row);
        self.pivots.push(pivot);
        true
    }

    /// Canonical residue of `v` modulo the row space, in place.
    ///
    /// All pivot coordinates end up zero, so two vectors agree modulo the
    /// space exactly when their residues are equal.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let coef = &v[p] / Rational::from_integer(row[p].clone());
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &coef * Rational::from_integer(r.clone());
                }
            }
        }
    }
}

/// Scale a rational vector to a primitive integer vector (same span):
/// multiply out denominators, divide by the content, make the leading
/// nonzero entry positive.
fn to_primitive_int(v: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let lead = out.iter().position(|x| !x.is_zero());
    if let Some(lead) = lead {
        normalize_int_row(&mut out, lead);
    }
    out
}

fn normalize_int_row(row: &mut [BigInt], pivot: usize) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g.is_zero() {
        return;
    }
    if row[pivot].is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}
