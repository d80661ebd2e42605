//! Finite-dimensional associative algebras given by structure constants.
//!
//! An algebra of dimension `n` is the tensor `sc` with
//! `e_i * e_j = sum_k sc[i][j][k] e_k`. Loading validates the shape and, for
//! the checked constructor, associativity on every basis triple. Structural
//! invariants (identities, annihilators, center, radical) are computed as
//! exact nullspaces or affine solution sets.

use crate::linalg::{vecops, AffineSet, LinalgError, Matrix, Subspace};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An element written in the algebra basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Scalar::zero(); dim],
        }
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        vecops::is_zero(&self.coords)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::from_coords(vecops::add(&self.coords, &other.coords))
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element::from_coords(vecops::sub(&self.coords, &other.coords))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::from_coords(vecops::scale(c, &self.coords))
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", vecops::display(&self.coords))
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", vecops::display(&self.coords))
    }
}

/// A linear functional on an algebra, intended to be multiplicative and
/// nonzero; run [`Algebra::verify_character`] to confirm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    pub fn new(values: Vec<Scalar>) -> Self {
        Character { values }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        vecops::is_zero(&self.values)
    }

    /// Evaluates the functional; panics on a dimension mismatch, which is an
    /// internal error everywhere this is called.
    pub fn eval(&self, x: &Element) -> Scalar {
        assert_eq!(self.values.len(), x.dim(), "character/element dimension");
        vecops::dot(&self.values, &x.coords)
    }
}

/// One failed associativity instance `(e_i e_j) e_k != e_i (e_j e_k)`.
#[derive(Clone, Debug)]
pub struct AssocViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: Element,
    pub rhs: Element,
}

impl std::fmt::Display for AssocViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(e{} e{}) e{} = {} but e{} (e{} e{}) = {}",
            self.i, self.j, self.k, self.lhs, self.i, self.j, self.k, self.rhs
        )
    }
}

/// One way a candidate character fails to be one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterViolation {
    /// The zero functional is excluded by definition.
    Zero,
    /// `values` has the wrong length for the algebra.
    WrongDim { expected: usize, got: usize },
    /// `chi(e_i e_j) != chi(e_i) chi(e_j)`.
    NotMultiplicative {
        i: usize,
        j: usize,
        lhs: Scalar,
        rhs: Scalar,
    },
}

impl std::fmt::Display for CharacterViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CharacterViolation::Zero => write!(f, "functional is identically zero"),
            CharacterViolation::WrongDim { expected, got } => {
                write!(f, "functional has {got} values, algebra has dimension {expected}")
            }
            CharacterViolation::NotMultiplicative { i, j, lhs, rhs } => write!(
                f,
                "chi(e{i} e{j}) = {lhs} but chi(e{i}) chi(e{j}) = {rhs}"
            ),
        }
    }
}

/// Errors from constructing or operating on algebras.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("algebra dimension must be at least 1")]
    ZeroDim,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("structure tensor is not {dim}x{dim}x{dim}: {detail}")]
    TensorShape { dim: usize, detail: String },
    #[error("multiplication is not associative ({} violations); first: {}", .0.len(), .0[0])]
    NotAssociative(Vec<AssocViolation>),
    #[error("element has dimension {got}, algebra has dimension {expected}")]
    DimMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite-dimensional algebra over the exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    sc: Vec<Vec<Vec<Scalar>>>,
}

/// Wire form of [`Algebra`]; conversion validates.
#[derive(Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub sc: Vec<Vec<Vec<Scalar>>>,
}

impl Algebra {
    /// Checked constructor: validates shape and associativity.
    pub fn new(labels: Vec<String>, sc: Vec<Vec<Vec<Scalar>>>) -> Result<Self, AlgebraError> {
        let alg = Self::new_unvalidated(labels, sc)?;
        let violations = alg.check_associativity();
        if !violations.is_empty() {
            return Err(AlgebraError::NotAssociative(violations));
        }
        Ok(alg)
    }

    /// Shape-checked constructor that skips the associativity check, for
    /// callers that want to inspect violations themselves.
    pub fn new_unvalidated(
        labels: Vec<String>,
        sc: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, AlgebraError> {
        let dim = sc.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDim);
        }
        if labels.len() != dim {
            return Err(AlgebraError::LabelCount {
                expected: dim,
                got: labels.len(),
            });
        }
        for (i, plane) in sc.iter().enumerate() {
            if plane.len() != dim {
                return Err(AlgebraError::TensorShape {
                    dim,
                    detail: format!("sc[{i}] has {} rows", plane.len()),
                });
            }
            for (j, fiber) in plane.iter().enumerate() {
                if fiber.len() != dim {
                    return Err(AlgebraError::TensorShape {
                        dim,
                        detail: format!("sc[{i}][{j}] has {} entries", fiber.len()),
                    });
                }
            }
        }
        Ok(Algebra { dim, labels, sc })
    }

    pub fn from_json(raw: AlgebraJson) -> Result<Self, AlgebraError> {
        if raw.dim != raw.sc.len() {
            return Err(AlgebraError::TensorShape {
                dim: raw.dim,
                detail: format!("declared dim {} but sc has {} planes", raw.dim, raw.sc.len()),
            });
        }
        Self::new_unvalidated(raw.labels, raw.sc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sc(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.sc
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = Element::zero(self.dim);
        e.coords[i] = Scalar::one();
        e
    }

    /// Product of two elements through the structure tensor.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = Element::zero(self.dim);
        for i in 0..self.dim {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.coords[j].is_zero() {
                    continue;
                }
                let c = &x.coords[i] * &y.coords[j];
                for k in 0..self.dim {
                    if !self.sc[i][j][k].is_zero() {
                        out.coords[k] += &(&c * &self.sc[i][j][k]);
                    }
                }
            }
        }
        Ok(out)
    }

    fn basis_product(&self, i: usize, j: usize) -> Element {
        Element::from_coords(self.sc[i][j].clone())
    }

    /// All basis triples where associativity fails; empty for a valid algebra.
    pub fn check_associativity(&self) -> Vec<AssocViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let lhs = self
                        .multiply(&ij, &self.basis_element(k))
                        .expect("basis dims agree");
                    let rhs = self
                        .multiply(&self.basis_element(i), &jk)
                        .expect("basis dims agree");
                    if lhs != rhs {
                        out.push(AssocViolation { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult_matrix(&self, x: &Element) -> Result<Matrix, AlgebraError> {
        self.check_dim(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(x, &self.basis_element(j))?;
            for k in 0..self.dim {
                m.set(k, j, col.coords[k].clone());
            }
        }
        Ok(m)
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult_matrix(&self, x: &Element) -> Result<Matrix, AlgebraError> {
        self.check_dim(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(&self.basis_element(j), x)?;
            for k in 0..self.dim {
                m.set(k, j, col.coords[k].clone());
            }
        }
        Ok(m)
    }

    /// The affine set `{ u : e_i u = e_i for all i }` of right identities.
    pub fn right_identities(&self) -> AffineSet {
        let mut system = Matrix::zeros(0, self.dim);
        let mut rhs = Vec::new();
        for i in 0..self.dim {
            let li = self
                .left_mult_matrix(&self.basis_element(i))
                .expect("basis dims agree");
            system = system.vstack(&li).expect("widths agree");
            rhs.extend(self.basis_element(i).coords);
        }
        system.solve_affine(&rhs).expect("rhs length matches")
    }

    /// The unique two-sided identity, if one exists.
    pub fn two_sided_identity(&self) -> Option<Element> {
        let mut system = Matrix::zeros(0, self.dim);
        let mut rhs = Vec::new();
        for i in 0..self.dim {
            let e = self.basis_element(i);
            let li = self.left_mult_matrix(&e).expect("basis dims agree");
            let ri = self.right_mult_matrix(&e).expect("basis dims agree");
            system = system.vstack(&li).expect("widths agree");
            rhs.extend(e.coords.clone());
            system = system.vstack(&ri).expect("widths agree");
            rhs.extend(e.coords);
        }
        let sol = system.solve_affine(&rhs).expect("rhs length matches");
        sol.particular.map(Element::from_coords)
    }

    pub fn is_unital(&self) -> bool {
        self.two_sided_identity().is_some()
    }

    /// `ran(A) = { z : a z = 0 for all a }`, the nullspace of the stacked
    /// left-multiplication matrices.
    pub fn right_annihilator(&self) -> Subspace {
        let mut system = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let li = self
                .left_mult_matrix(&self.basis_element(i))
                .expect("basis dims agree");
            system = system.vstack(&li).expect("widths agree");
        }
        system.nullspace()
    }

    /// `Z(A) = { z : a z = z a for all a }`.
    pub fn center(&self) -> Subspace {
        let mut system = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let e = self.basis_element(i);
            let li = self.left_mult_matrix(&e).expect("basis dims agree");
            let ri = self.right_mult_matrix(&e).expect("basis dims agree");
            let mut diff = Matrix::zeros(self.dim, self.dim);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    diff.set(r, c, li.get(r, c) - ri.get(r, c));
                }
            }
            system = system.vstack(&diff).expect("widths agree");
        }
        system.nullspace()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.sc[i][j] != self.sc[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Adjoins a two-sided unit as the last basis vector.
    pub fn unitization(&self) -> Algebra {
        let n = self.dim;
        let mut sc = vec![vec![vec![Scalar::zero(); n + 1]; n + 1]; n + 1];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sc[i][j][k] = self.sc[i][j][k].clone();
                }
            }
        }
        for i in 0..n {
            sc[i][n][i] = Scalar::one();
            sc[n][i][i] = Scalar::one();
        }
        sc[n][n][n] = Scalar::one();
        let mut labels = self.labels.clone();
        labels.push("unit".to_owned());
        Algebra::new_unvalidated(labels, sc).expect("unitization preserves shape")
    }

    /// The Jacobson radical, exact over a field of characteristic zero.
    ///
    /// On the unitization the radical is the kernel of the trace form of the
    /// left regular representation, `{ x : tr(L_x L_a) = 0 for all a }`; the
    /// radical of the original algebra is its intersection with the
    /// non-augmented coordinates.
    pub fn radical(&self) -> Subspace {
        let unit = self.unitization();
        let n = unit.dim();
        let left: Vec<Matrix> = (0..n)
            .map(|i| {
                unit.left_mult_matrix(&unit.basis_element(i))
                    .expect("basis dims agree")
            })
            .collect();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let t = left[i]
                    .matmul(&left[j])
                    .expect("square matrices")
                    .trace()
                    .expect("square matrix");
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        let rad_unit = gram.nullspace();
        // keep only vectors with no component on the adjoined unit
        let mut last = vec![Scalar::zero(); n];
        last[n - 1] = Scalar::one();
        let interior = Matrix::from_rows(n, vec![last]).expect("row built to width");
        let cut = rad_unit
            .complement_rows()
            .vstack(&interior)
            .expect("widths agree")
            .nullspace();
        let rows: Vec<Vec<Scalar>> = cut
            .basis()
            .iter_rows()
            .map(|r| r[..self.dim].to_vec())
            .collect();
        Subspace::from_rows(self.dim, rows).expect("projection keeps width")
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().dim() == 0
    }

    /// All the ways `chi` fails to be a character; empty means valid.
    pub fn verify_character(&self, chi: &Character) -> Vec<CharacterViolation> {
        if chi.dim() != self.dim {
            return vec![CharacterViolation::WrongDim {
                expected: self.dim,
                got: chi.dim(),
            }];
        }
        let mut out = Vec::new();
        if chi.is_zero() {
            out.push(CharacterViolation::Zero);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = chi.eval(&self.basis_product(i, j));
                let rhs = &chi.values[i] * &chi.values[j];
                if lhs != rhs {
                    out.push(CharacterViolation::NotMultiplicative { i, j, lhs, rhs });
                }
            }
        }
        out
    }

    fn check_dim(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::DimMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(())
    }
}
