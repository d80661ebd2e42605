//! Dense exact linear algebra over [`Scalar`].
//!
//! Everything downstream reduces to reduced row echelon form: the RREF of a
//! spanning set is the canonical representation of a subspace, so two
//! subspaces are equal iff their stored bases are syntactically equal.

use crate::scalar::Scalar;
use thiserror::Error;

/// Shape errors raised by matrix and subspace operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("row {index} has length {got}, expected {expected}")]
    RowLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("shape mismatch: {left_rows}x{left_cols} incompatible with {right_rows}x{right_cols} for {op}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("vector length {got} does not match expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` makes the zero-row case unambiguous.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RowLength {
                    index,
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(|r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "matmul",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone() + a * b;
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::VectorLength {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    out[r] += &(a * &v[c]);
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "vstack",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "hstack",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    pub fn to_row_vecs(&self) -> Vec<Vec<Scalar>> {
        self.iter_rows().map(|r| r.to_vec()).collect()
    }

    /// Reduced row echelon form and rank. Pivots are the first nonzero entry
    /// scanning rows top-down, so the result is unique and deterministic.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows = self.to_row_vecs();
        let nrows = rows.len();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut next = 0usize;
        for col in 0..self.cols {
            if next == nrows {
                break;
            }
            let Some(sel) = (next..nrows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, sel);
            let inv = rows[next][col].recip();
            if !rows[next][col].is_one() {
                for c in col..self.cols {
                    if !rows[next][c].is_zero() {
                        rows[next][c] = &rows[next][c] * &inv;
                    }
                }
            }
            for r in next + 1..nrows {
                if !rows[r][col].is_zero() {
                    let f = std::mem::replace(&mut rows[r][col], Scalar::zero());
                    for c in col + 1..self.cols {
                        if !rows[next][c].is_zero() {
                            let delta = &f * &rows[next][c];
                            rows[r][c] -= &delta;
                        }
                    }
                }
            }
            pivots.push((next, col));
            next += 1;
        }
        // back-substitution to clear entries above each pivot
        for &(prow, pcol) in pivots.iter().rev() {
            for r in 0..prow {
                if !rows[r][pcol].is_zero() {
                    let f = std::mem::replace(&mut rows[r][pcol], Scalar::zero());
                    for c in pcol + 1..self.cols {
                        if !rows[prow][c].is_zero() {
                            let delta = &f * &rows[prow][c];
                            rows[r][c] -= &delta;
                        }
                    }
                }
            }
        }
        let rank = pivots.len();
        (
            Matrix::from_rows(self.cols, rows).expect("rref preserves shape"),
            rank,
        )
    }

    fn pivot_cols(rref: &Matrix, rank: usize) -> Vec<usize> {
        (0..rank)
            .map(|r| {
                (0..rref.cols)
                    .find(|&c| !rref.get(r, c).is_zero())
                    .expect("nonzero row in rref has a pivot")
            })
            .collect()
    }

    /// Canonical basis of `{ x : self * x = 0 }`.
    pub fn nullspace(&self) -> Subspace {
        let (red, rank) = self.rref();
        let pivots = Matrix::pivot_cols(&red, rank);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f);
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis).expect("nullspace vectors have ambient length")
    }

    /// Full solution set of `self * x = rhs` as particular point plus nullspace.
    /// The particular solution sets every free variable to zero.
    pub fn solve_affine(&self, rhs: &[Scalar]) -> Result<AffineSet, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::VectorLength {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let rhs_col = Matrix::from_rows(1, rhs.iter().map(|x| vec![x.clone()]).collect())?;
        let aug = self.hstack(&rhs_col)?;
        let (red, rank) = aug.rref();
        let pivots = Matrix::pivot_cols(&red, rank);
        let directions = self.nullspace();
        if pivots.contains(&self.cols) {
            // a pivot in the augmented column means the system is inconsistent
            return Ok(AffineSet {
                particular: None,
                directions,
            });
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Ok(AffineSet {
            particular: Some(x),
            directions,
        })
    }
}

/// A linear subspace of `Q^ambient` stored as an RREF basis with zero rows
/// dropped; equality of subspaces is equality of these matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Canonicalizes a spanning set: RREF, zero rows dropped.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(ambient, rows)?;
        Ok(Self::from_spanning_matrix(&m))
    }

    pub fn from_spanning_matrix(m: &Matrix) -> Self {
        let (red, rank) = m.rref();
        let rows = red.to_row_vecs().into_iter().take(rank).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows).expect("rref rows keep width"),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::VectorLength {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut v = v.to_vec();
        for r in 0..self.basis.rows() {
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.get(r, c).is_zero())
                .expect("basis rows are nonzero");
            if !v[pivot].is_zero() {
                let f = std::mem::replace(&mut v[pivot], Scalar::zero());
                for c in pivot + 1..self.ambient {
                    if !self.basis.get(r, c).is_zero() {
                        let delta = &f * self.basis.get(r, c);
                        v[c] -= &delta;
                    }
                }
            }
        }
        Ok(v)
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Whether `other` is contained in `self`: appending `other`'s basis rows
    /// must leave the rank unchanged.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for r in other.basis.iter_rows() {
            if !self.contains_vec(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_spanning_matrix(&stacked))
    }

    /// Intersection via orthogonal complements, which are exact over Q:
    /// `U ∩ V = (U^perp + V^perp)^perp`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let stacked = self.complement_rows().vstack(&other.complement_rows())?;
        Ok(stacked.nullspace())
    }

    /// Rows `K` such that `v` lies in the subspace iff `K v = 0`.
    pub fn complement_rows(&self) -> Matrix {
        self.basis.nullspace().basis.clone()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

/// Solution set of a linear system: a particular point (absent iff the system
/// is inconsistent) plus the direction subspace of the homogeneous part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSet {
    pub particular: Option<Vec<Scalar>>,
    pub directions: Subspace,
}

impl AffineSet {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    /// The particular point plus up to `extra` deterministic offsets along the
    /// direction space; empty when inconsistent.
    pub fn samples(&self, extra: usize) -> Vec<Vec<Scalar>> {
        let Some(p) = &self.particular else {
            return Vec::new();
        };
        let mut out = vec![p.clone()];
        let dim = self.directions.dim();
        if dim == 0 {
            return out;
        }
        const COEFFS: [i64; 6] = [1, -1, 2, -3, 5, -7];
        for j in 0..extra {
            let dir = self.directions.basis().row(j % dim);
            let c = Scalar::from_int(COEFFS[j % COEFFS.len()]);
            let v: Vec<Scalar> = p
                .iter()
                .zip(dir.iter())
                .map(|(a, b)| a + &(&c * b))
                .collect();
            out.push(v);
        }
        out
    }
}

/// Componentwise helpers for plain coordinate vectors.
pub mod vecops {
    use super::Scalar;

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    pub fn display(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}
