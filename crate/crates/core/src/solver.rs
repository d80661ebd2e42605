//! Derivation spaces as exact nullspaces.
//!
//! A linear map on an `n`-dimensional algebra is an `n x n` matrix (columns
//! are images of basis vectors), flattened row-major into `Q^(n^2)`. Each
//! derivation-style identity contributes one linear constraint row per
//! (input, output-coordinate) instance, emitted in lexicographic order, and
//! the space of solutions is the nullspace, canonicalized by RREF.
//!
//! Quadratic identities are polarized first: in characteristic zero the
//! one-variable identity on all of the algebra is equivalent to its symmetric
//! two-variable form on basis pairs `i <= j`, which keeps the system linear
//! and finite.

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::lau::{LauContext, LauError};
use crate::linalg::{LinalgError, Matrix, Subspace};
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("map matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("map acts on dimension {got}, expected {expected}")]
    DimMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lau(#[from] LauError),
}

/// A linear endomorphism of an algebra's underlying space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self, SolverError> {
        if matrix.rows() != matrix.cols() {
            return Err(SolverError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::from_coords(
            self.matrix
                .mul_vec(&x.coords)
                .expect("map and element dimensions agree"),
        )
    }

    /// Row-major flattening into `Q^(n^2)`.
    pub fn flatten(&self) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            out.extend(self.matrix.row(r).iter().cloned());
        }
        out
    }

    pub fn from_flat(dim: usize, flat: &[Scalar]) -> Result<Self, SolverError> {
        if flat.len() != dim * dim {
            return Err(SolverError::DimMismatch {
                expected: dim * dim,
                got: flat.len(),
            });
        }
        let rows = (0..dim).map(|r| flat[r * dim..(r + 1) * dim].to_vec()).collect();
        Ok(LinearMap {
            matrix: Matrix::from_rows(dim, rows)?,
        })
    }

    /// The square sub-block with rows and columns in `[start, start+len)`.
    pub fn block(&self, start: usize, len: usize) -> LinearMap {
        let mut m = Matrix::zeros(len, len);
        for r in 0..len {
            for c in 0..len {
                m.set(r, c, self.matrix.get(start + r, start + c).clone());
            }
        }
        LinearMap { matrix: m }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, self.matrix.get(r, c) + other.matrix.get(r, c));
            }
        }
        LinearMap { matrix: m }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for col in 0..n {
                m.set(r, col, c * self.matrix.get(r, col));
            }
        }
        LinearMap { matrix: m }
    }
}

/// A subspace of linear maps in canonical (RREF of flattenings) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    map_dim: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn zero(map_dim: usize) -> Self {
        MapSpace {
            map_dim,
            space: Subspace::zero(map_dim * map_dim),
        }
    }

    pub fn from_subspace(map_dim: usize, space: Subspace) -> Result<Self, SolverError> {
        if space.ambient() != map_dim * map_dim {
            return Err(SolverError::DimMismatch {
                expected: map_dim * map_dim,
                got: space.ambient(),
            });
        }
        Ok(MapSpace { map_dim, space })
    }

    pub fn from_maps(map_dim: usize, maps: &[LinearMap]) -> Result<Self, SolverError> {
        let mut rows = Vec::with_capacity(maps.len());
        for m in maps {
            if m.dim() != map_dim {
                return Err(SolverError::DimMismatch {
                    expected: map_dim,
                    got: m.dim(),
                });
            }
            rows.push(m.flatten());
        }
        Ok(MapSpace {
            map_dim,
            space: Subspace::from_rows(map_dim * map_dim, rows)?,
        })
    }

    pub fn map_dim(&self) -> usize {
        self.map_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<LinearMap> {
        self.space
            .basis()
            .iter_rows()
            .map(|row| LinearMap::from_flat(self.map_dim, row).expect("basis rows have map size"))
            .collect()
    }

    pub fn contains(&self, map: &LinearMap) -> Result<bool, SolverError> {
        if map.dim() != self.map_dim {
            return Err(SolverError::DimMismatch {
                expected: self.map_dim,
                got: map.dim(),
            });
        }
        Ok(self.space.contains_vec(&map.flatten())?)
    }

    pub fn equal(&self, other: &MapSpace) -> Result<bool, SolverError> {
        Ok(self.space.equal(&other.space)?)
    }

    pub fn contains_space(&self, other: &MapSpace) -> Result<bool, SolverError> {
        Ok(self.space.contains(&other.space)?)
    }
}

/// Basis products `table[i][j] = e_i * e_j` for a bilinear law.
type ProductTable = Vec<Vec<Element>>;

fn algebra_table(alg: &Algebra) -> ProductTable {
    let n = alg.dim();
    (0..n)
        .map(|i| (0..n).map(|j| Element::from_coords(alg.sc()[i][j].clone())).collect())
        .collect()
}

fn lau_table(ctx: &LauContext, chi: &crate::algebra::Character) -> ProductTable {
    let n = ctx.dim();
    let prod = ctx.product();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    ctx.mul_with(chi, &prod.basis_element(i), &prod.basis_element(j))
                        .expect("basis elements fit the context")
                })
                .collect()
        })
        .collect()
}

/// Constraint row over flattened unknowns `D[p][q]` (index `p*n + q`) for
/// output coordinate `r` of
/// `d(e_i * e_j) - d(e_i) *' e_j - e_i *'' d(e_j)`,
/// where the three bilinear laws are given by product tables.
fn leibniz_row(
    inner: &ProductTable,
    left: &ProductTable,
    right: &ProductTable,
    n: usize,
    i: usize,
    j: usize,
    r: usize,
) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); n * n];
    // d applied to the inner product: + (e_i * e_j)_q at D[r][q]
    for q in 0..n {
        let c = &inner[i][j].coords[q];
        if !c.is_zero() {
            row[r * n + q] += c;
        }
    }
    // - d(e_i) *' e_j: coefficient of D[p][i] is -(e_p *' e_j)_r
    for p in 0..n {
        let c = &left[p][j].coords[r];
        if !c.is_zero() {
            row[p * n + i] -= c;
        }
    }
    // - e_i *'' d(e_j): coefficient of D[p][j] is -(e_i *'' e_p)_r
    for p in 0..n {
        let c = &right[i][p].coords[r];
        if !c.is_zero() {
            row[p * n + j] -= c;
        }
    }
    row
}

fn two_sided_rows(
    inner: &ProductTable,
    left: &ProductTable,
    right: &ProductTable,
    n: usize,
) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                rows.push(leibniz_row(inner, left, right, n, i, j, r));
            }
        }
    }
    rows
}

fn polarized_rows(
    inner: &ProductTable,
    left: &ProductTable,
    right: &ProductTable,
    n: usize,
) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::with_capacity(n * (n + 1) / 2 * n);
    for i in 0..n {
        for j in i..n {
            for r in 0..n {
                let a = leibniz_row(inner, left, right, n, i, j, r);
                let b = leibniz_row(inner, left, right, n, j, i, r);
                rows.push(a.iter().zip(&b).map(|(x, y)| x + y).collect());
            }
        }
    }
    rows
}

fn nullspace_of_rows(n: usize, rows: Vec<Vec<Scalar>>) -> MapSpace {
    let system = Matrix::from_rows(n * n, rows).expect("constraint rows have n^2 entries");
    MapSpace {
        map_dim: n,
        space: system.nullspace(),
    }
}

/// All maps with `d(xy) = d(x)y + x d(y)`.
pub fn derivation_space(alg: &Algebra) -> MapSpace {
    let t = algebra_table(alg);
    nullspace_of_rows(alg.dim(), two_sided_rows(&t, &t, &t, alg.dim()))
}

/// All maps with `d(x^2) = d(x)x + x d(x)`, via the polarized system.
pub fn jordan_derivation_space(alg: &Algebra) -> MapSpace {
    let t = algebra_table(alg);
    nullspace_of_rows(alg.dim(), polarized_rows(&t, &t, &t, alg.dim()))
}

/// All maps on the product with
/// `d(X *_theta Y) = d(X) *_phi Y + X *_gamma d(Y)`.
pub fn generalized_derivation_space(ctx: &LauContext) -> MapSpace {
    let inner = algebra_table(ctx.product());
    let left = lau_table(ctx, ctx.phi());
    let right = lau_table(ctx, ctx.gamma());
    nullspace_of_rows(ctx.dim(), two_sided_rows(&inner, &left, &right, ctx.dim()))
}

/// All maps on the product with
/// `d(X *_theta X) = d(X) *_phi X + X *_gamma d(X)`, polarized.
pub fn generalized_jordan_space(ctx: &LauContext) -> MapSpace {
    let inner = algebra_table(ctx.product());
    let left = lau_table(ctx, ctx.phi());
    let right = lau_table(ctx, ctx.gamma());
    nullspace_of_rows(ctx.dim(), polarized_rows(&inner, &left, &right, ctx.dim()))
}

/// The inner derivation `x -> a x - x a`.
pub fn inner_derivation(alg: &Algebra, a: &Element) -> Result<LinearMap, SolverError> {
    let l = alg.left_mult_matrix(a)?;
    let r = alg.right_mult_matrix(a)?;
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, l.get(i, j) - r.get(i, j));
        }
    }
    LinearMap::new(m)
}

/// The residual `d(X *_theta X) - d(X) *_phi X - X *_gamma d(X)`; zero for
/// every X exactly when `d` lies in the generalized Jordan space.
pub fn quadratic_defect(
    ctx: &LauContext,
    d: &LinearMap,
    x: &Element,
) -> Result<Element, SolverError> {
    if d.dim() != ctx.dim() {
        return Err(SolverError::DimMismatch {
            expected: ctx.dim(),
            got: d.dim(),
        });
    }
    let dx = d.apply(x);
    let term1 = d.apply(&ctx.mul_theta(x, x)?);
    let term2 = ctx.mul_phi(&dx, x)?;
    let term3 = ctx.mul_gamma(x, &dx)?;
    Ok(term1.sub(&term2).sub(&term3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::PointSampler;
    use crate::zoo;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn alg(name: &str) -> Algebra {
        zoo::zoo_get(name).unwrap().algebra
    }

    #[test]
    fn flatten_round_trip_is_row_major() {
        let m = Matrix::from_rows(2, vec![vec![s(1), s(2)], vec![s(3), s(4)]]).unwrap();
        let d = LinearMap::new(m).unwrap();
        assert_eq!(d.flatten(), vec![s(1), s(2), s(3), s(4)]);
        assert_eq!(LinearMap::from_flat(2, &d.flatten()).unwrap(), d);
    }

    #[test]
    fn classic_derivation_dimensions_match_known_values() {
        assert_eq!(derivation_space(&alg("M2")).dim(), 3);
        assert_eq!(derivation_space(&alg("Q2")).dim(), 0);
        assert_eq!(derivation_space(&alg("Qdual")).dim(), 1);
        assert_eq!(derivation_space(&alg("T2")).dim(), 2);
        assert_eq!(derivation_space(&alg("colalg2")).dim(), 2);
        assert_eq!(derivation_space(&alg("Q2M2")).dim(), 3);
    }

    #[test]
    fn jordan_space_contains_derivations() {
        for name in ["M2", "Q2", "Qdual", "T2", "colalg2", "Q2M2", "zero1"] {
            let a = alg(name);
            let der = derivation_space(&a);
            let jor = jordan_derivation_space(&a);
            assert!(jor.contains_space(&der).unwrap(), "{name}");
        }
        // on these algebras the two spaces coincide
        for name in ["M2", "T2", "Qdual", "colalg2"] {
            let a = alg(name);
            assert!(
                derivation_space(&a).equal(&jordan_derivation_space(&a)).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn derivations_of_m2_are_spanned_by_inner_ones() {
        let m2 = alg("M2");
        let der = derivation_space(&m2);
        let inner: Vec<LinearMap> = (0..4)
            .map(|i| inner_derivation(&m2, &m2.basis_element(i)).unwrap())
            .collect();
        let inner_space = MapSpace::from_maps(4, &inner).unwrap();
        assert!(der.equal(&inner_space).unwrap());
        for d in &inner {
            assert!(der.contains(d).unwrap());
        }
    }

    #[test]
    fn derivation_of_dual_numbers_is_t_ddt() {
        let qd = alg("Qdual");
        let der = derivation_space(&qd);
        assert_eq!(der.dim(), 1);
        // d(1) = 0, d(t) = t
        let gen = &der.basis()[0];
        assert!(gen.apply(&qd.basis_element(0)).is_zero());
        let dt = gen.apply(&qd.basis_element(1));
        assert!(!dt.is_zero());
        assert!(dt.coords[0].is_zero());
    }

    #[test]
    fn zero_product_algebra_has_all_maps_as_derivations() {
        let z = alg("zero1");
        assert_eq!(derivation_space(&z).dim(), 1);
        assert_eq!(jordan_derivation_space(&z).dim(), 1);
    }

    #[test]
    fn generalized_spaces_on_unitization_context() {
        let ctx = zoo::zoo_context("unitization-M2").unwrap();
        let der = generalized_derivation_space(&ctx);
        let jor = generalized_jordan_space(&ctx);
        assert_eq!(der.dim(), 3);
        assert!(jor.equal(&der).unwrap());
        assert!(jor.contains_space(&der).unwrap());
    }

    #[test]
    fn defect_vanishes_exactly_on_jordan_space_members() {
        let ctx = zoo::zoo_context("gammatheta-colalg2-Q2").unwrap();
        let jor = generalized_jordan_space(&ctx);
        assert_eq!(jor.dim(), 1);
        let mut sampler = PointSampler::with_seed(5);
        for d in jor.basis() {
            for _ in 0..100 {
                let x = sampler.element(ctx.dim());
                assert!(quadratic_defect(&ctx, &d, &x).unwrap().is_zero());
            }
        }
        // the identity map is not in the space and has nonzero defect somewhere
        let id = LinearMap::identity(ctx.dim());
        assert!(!jor.contains(&id).unwrap());
        let mut found = false;
        for _ in 0..100 {
            let x = sampler.element(ctx.dim());
            if !quadratic_defect(&ctx, &id, &x).unwrap().is_zero() {
                found = true;
                break;
            }
        }
        assert!(found, "defect spot check failed to discriminate");
    }

    #[test]
    fn generalized_derivations_are_contained_in_jordan_space() {
        for (name, ctx) in zoo::zoo_contexts() {
            let der = generalized_derivation_space(&ctx);
            let jor = generalized_jordan_space(&ctx);
            assert!(jor.contains_space(&der).unwrap(), "{name}");
        }
    }

    #[test]
    fn strict_containment_on_the_gamma_equals_theta_context() {
        let ctx = zoo::zoo_context("gammatheta-colalg2-Q2").unwrap();
        assert_eq!(generalized_derivation_space(&ctx).dim(), 0);
        assert_eq!(generalized_jordan_space(&ctx).dim(), 1);
    }
}
