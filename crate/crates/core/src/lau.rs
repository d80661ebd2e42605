//! The theta-Lau product of two algebras.
//!
//! Given algebras `A`, `B` and a character `theta` on `B`, the product lives
//! on `A (+) B` with multiplication
//!
//! ```text
//! (a, b) *_theta (x, y) = (a x + theta(y) a + theta(b) x, b y).
//! ```
//!
//! A context carries two further characters `phi` and `gamma` so the same
//! carrier can be multiplied under substituted functionals: the tensor for
//! `*_theta` is materialized once as an [`Algebra`], while `*_phi` and
//! `*_gamma` are evaluated on the fly.

use crate::algebra::{Algebra, AlgebraError, Character, CharacterViolation, Element};
use crate::scalar::Scalar;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LauError {
    #[error("the {side} factor is not associative: {detail}")]
    FactorNotAssociative { side: &'static str, detail: String },
    #[error("{which} is not a valid character on B: {}", .violations[0])]
    InvalidCharacter {
        which: &'static str,
        violations: Vec<CharacterViolation>,
    },
    #[error("functional has {got} values, B has dimension {expected}")]
    FunctionalDim { expected: usize, got: usize },
    #[error("element has dimension {got}, product has dimension {expected}")]
    DimMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A theta-Lau product together with the two substitution characters.
#[derive(Clone, Debug)]
pub struct LauContext {
    a: Algebra,
    b: Algebra,
    theta: Character,
    phi: Character,
    gamma: Character,
    product: Algebra,
}

impl LauContext {
    /// Builds the product; all three functionals must be valid characters on
    /// `B` (nonzero and multiplicative), and both factors associative.
    pub fn new(
        a: Algebra,
        b: Algebra,
        theta: Character,
        phi: Character,
        gamma: Character,
    ) -> Result<Self, LauError> {
        for (side, alg) in [("A", &a), ("B", &b)] {
            let violations = alg.check_associativity();
            if !violations.is_empty() {
                return Err(LauError::FactorNotAssociative {
                    side,
                    detail: violations[0].to_string(),
                });
            }
        }
        for (which, chi) in [("theta", &theta), ("phi", &phi), ("gamma", &gamma)] {
            let violations = b.verify_character(chi);
            if !violations.is_empty() {
                return Err(LauError::InvalidCharacter {
                    which,
                    violations,
                });
            }
        }
        let product = Self::build_product(&a, &b, &theta);
        Ok(LauContext {
            a,
            b,
            theta,
            phi,
            gamma,
            product,
        })
    }

    fn build_product(a: &Algebra, b: &Algebra, theta: &Character) -> Algebra {
        let m = a.dim();
        let k = b.dim();
        let dim = m + k;
        let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for i in 0..m {
            for j in 0..m {
                for t in 0..m {
                    sc[i][j][t] = a.sc()[i][j][t].clone();
                }
            }
            // (e_i, 0) * (0, f_j) = (theta(f_j) e_i, 0)
            for j in 0..k {
                sc[i][m + j][i] = theta.values[j].clone();
            }
        }
        for i in 0..k {
            // (0, f_i) * (e_j, 0) = (theta(f_i) e_j, 0)
            for j in 0..m {
                sc[m + i][j][j] = theta.values[i].clone();
            }
            for j in 0..k {
                for t in 0..k {
                    sc[m + i][m + j][m + t] = b.sc()[i][j][t].clone();
                }
            }
        }
        let mut labels: Vec<String> = a.labels().iter().map(|l| format!("A.{l}")).collect();
        labels.extend(b.labels().iter().map(|l| format!("B.{l}")));
        // associativity of the product follows from associativity of the
        // factors and multiplicativity of theta, all established above
        Algebra::new(labels, sc).expect("Lau product of valid inputs is associative")
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn theta(&self) -> &Character {
        &self.theta
    }

    pub fn phi(&self) -> &Character {
        &self.phi
    }

    pub fn gamma(&self) -> &Character {
        &self.gamma
    }

    /// The materialized `*_theta` algebra on `A (+) B`.
    pub fn product(&self) -> &Algebra {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.a.dim() + self.b.dim()
    }

    pub fn embed_a(&self, x: &Element) -> Element {
        let mut coords = x.coords.clone();
        coords.resize(self.dim(), Scalar::zero());
        Element::from_coords(coords)
    }

    pub fn embed_b(&self, y: &Element) -> Element {
        let mut coords = vec![Scalar::zero(); self.a.dim()];
        coords.extend(y.coords.iter().cloned());
        Element::from_coords(coords)
    }

    pub fn proj_a(&self, x: &Element) -> Element {
        Element::from_coords(x.coords[..self.a.dim()].to_vec())
    }

    pub fn proj_b(&self, x: &Element) -> Element {
        Element::from_coords(x.coords[self.a.dim()..].to_vec())
    }

    pub fn split(&self, x: &Element) -> (Element, Element) {
        (self.proj_a(x), self.proj_b(x))
    }

    pub fn join(&self, a_part: &Element, b_part: &Element) -> Element {
        let mut coords = a_part.coords.clone();
        coords.extend(b_part.coords.iter().cloned());
        Element::from_coords(coords)
    }

    /// Product under `*_theta` via the materialized tensor.
    pub fn mul_theta(&self, x: &Element, y: &Element) -> Result<Element, LauError> {
        Ok(self.product.multiply(x, y)?)
    }

    /// Product under the Lau law with an arbitrary functional substituted for
    /// theta; `chi` only needs the right length, not multiplicativity.
    pub fn mul_with(&self, chi: &Character, x: &Element, y: &Element) -> Result<Element, LauError> {
        if chi.dim() != self.b.dim() {
            return Err(LauError::FunctionalDim {
                expected: self.b.dim(),
                got: chi.dim(),
            });
        }
        for v in [x, y] {
            if v.dim() != self.dim() {
                return Err(LauError::DimMismatch {
                    expected: self.dim(),
                    got: v.dim(),
                });
            }
        }
        let (a1, b1) = self.split(x);
        let (a2, b2) = self.split(y);
        let mut a_part = self.a.multiply(&a1, &a2)?;
        a_part = a_part.add(&a1.scale(&chi.eval(&b2)));
        a_part = a_part.add(&a2.scale(&chi.eval(&b1)));
        let b_part = self.b.multiply(&b1, &b2)?;
        Ok(self.join(&a_part, &b_part))
    }

    pub fn mul_phi(&self, x: &Element, y: &Element) -> Result<Element, LauError> {
        self.mul_with(&self.phi, x, y)
    }

    pub fn mul_gamma(&self, x: &Element, y: &Element) -> Result<Element, LauError> {
        self.mul_with(&self.gamma, x, y)
    }

    /// Stable hex digest of the context (factors and functionals), used to
    /// stamp verification reports.
    pub fn digest(&self) -> String {
        #[derive(Serialize)]
        struct Canonical<'a> {
            a: &'a Algebra,
            b: &'a Algebra,
            theta: &'a [Scalar],
            phi: &'a [Scalar],
            gamma: &'a [Scalar],
        }
        let bytes = serde_json::to_vec(&Canonical {
            a: &self.a,
            b: &self.b,
            theta: &self.theta.values,
            phi: &self.phi.values,
            gamma: &self.gamma.values,
        })
        .expect("context serializes");
        let digest = Sha256::digest(&bytes);
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// The plain direct product `A x B` (block-diagonal tensor, no character), as
/// an independent cross-check target; it is not a Lau product.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
    let m = a.dim();
    let k = b.dim();
    let dim = m + k;
    let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for i in 0..m {
        for j in 0..m {
            for t in 0..m {
                sc[i][j][t] = a.sc()[i][j][t].clone();
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            for t in 0..k {
                sc[m + i][m + j][m + t] = b.sc()[i][j][t].clone();
            }
        }
    }
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("A.{l}")).collect();
    labels.extend(b.labels().iter().map(|l| format!("B.{l}")));
    Algebra::new(labels, sc).expect("direct product of associative algebras is associative")
}
