//! Independent oracles for the integration suites.
//!
//! Everything here deliberately avoids the library's own constraint assembly
//! and elimination code.  Systems are built directly from the raw
//! structure-constant tensor with *column-major* unknown ordering, reduced by
//! a self-contained Gauss–Jordan routine, and converted to the library's
//! row-major convention only at the boundary — so agreement with the main
//! solver is a genuine cross-check, not a tautology.

#![allow(dead_code)]

use lauder_core::algebra::Algebra;
use lauder_core::scalar::Scalar;

/// A space of linear maps produced by the oracle: its dimension and a basis
/// of row-major flattened matrices.
pub struct OracleSpace {
    pub dim: usize,
    pub basis_row_major: Vec<Vec<Scalar>>,
}

/// In-place Gauss–Jordan over the rationals.  Returns the pivot columns;
/// afterwards `rows` holds the reduced echelon form (zero rows at the end).
fn gauss_jordan(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..width {
        let Some(src) = (next_row..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, src);
        let inv_lead = {
            let lead = rows[next_row][col].clone();
            &Scalar::one() / &lead
        };
        for v in rows[next_row].iter_mut() {
            *v = &*v * &inv_lead;
        }
        for r in 0..height {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[next_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == height {
            break;
        }
    }
    pivots
}

/// Nullspace basis of the homogeneous system given by `rows` over `width`
/// unknowns, one vector per free column.
fn nullspace_basis(mut rows: Vec<Vec<Scalar>>, width: usize) -> Vec<Vec<Scalar>> {
    for row in &rows {
        assert_eq!(row.len(), width, "constraint row width mismatch");
    }
    let pivots = gauss_jordan(&mut rows);
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); width];
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&rows[r][free];
        }
        basis.push(v);
    }
    basis
}

/// One constraint row (output coordinate `r` of the product-rule residual at
/// the basis pair `(i, j)`) over column-major unknowns `X[out][in]` at index
/// `in * n + out`, assembled straight from the structure constants.
fn product_rule_row(sc: &[Vec<Vec<Scalar>>], n: usize, i: usize, j: usize, r: usize) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); n * n];
    for q in 0..n {
        // + d applied to (e_i e_j): coefficient (e_i e_j)_q on X[r][q].
        let c = &sc[i][j][q];
        if !c.is_zero() {
            row[q * n + r] = &row[q * n + r] + c;
        }
    }
    for p in 0..n {
        // − d(e_i) e_j: coefficient (e_p e_j)_r on X[p][i].
        let c = &sc[p][j][r];
        if !c.is_zero() {
            row[i * n + p] = &row[i * n + p] - c;
        }
        // − e_i d(e_j): coefficient (e_i e_p)_r on X[p][j].
        let c = &sc[i][p][r];
        if !c.is_zero() {
            row[j * n + p] = &row[j * n + p] - c;
        }
    }
    row
}

fn column_major_to_row_major(n: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n * n];
    for input in 0..n {
        for output in 0..n {
            out[output * n + input] = v[input * n + output].clone();
        }
    }
    out
}

fn solve_product_rule_system(alg: &Algebra, polarized: bool) -> OracleSpace {
    let n = alg.dim();
    let sc = alg.sc();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if polarized && j < i {
                continue;
            }
            for r in 0..n {
                let row = if polarized {
                    let a = product_rule_row(sc, n, i, j, r);
                    let b = product_rule_row(sc, n, j, i, r);
                    a.iter().zip(&b).map(|(x, y)| x + y).collect()
                } else {
                    product_rule_row(sc, n, i, j, r)
                };
                rows.push(row);
            }
        }
    }
    let basis_row_major: Vec<Vec<Scalar>> = nullspace_basis(rows, n * n)
        .iter()
        .map(|v| column_major_to_row_major(n, v))
        .collect();
    OracleSpace {
        dim: basis_row_major.len(),
        basis_row_major,
    }
}

/// All maps satisfying the two-variable product rule, computed independently.
pub fn oracle_derivation_space(alg: &Algebra) -> OracleSpace {
    solve_product_rule_system(alg, false)
}

/// All maps satisfying the squared product rule (via its symmetrized form on
/// basis pairs), computed independently.
pub fn oracle_jordan_derivation_space(alg: &Algebra) -> OracleSpace {
    solve_product_rule_system(alg, true)
}

/// The structure constants of `alg` with a two-sided identity adjoined as a
/// final basis vector, written out by hand.
pub fn hand_unitization(alg: &Algebra) -> Algebra {
    let m = alg.dim();
    let n = m + 1;
    let mut sc = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                sc[i][j][k] = alg.sc()[i][j][k].clone();
            }
        }
        // e_i · 1 = e_i and 1 · e_i = e_i.
        sc[i][m][i] = Scalar::one();
        sc[m][i][i] = Scalar::one();
    }
    sc[m][m][m] = Scalar::one();
    let mut labels: Vec<String> = alg.labels().to_vec();
    labels.push("one".to_string());
    Algebra::new(labels, sc).expect("adjoining an identity preserves associativity")
}

/// Product in the concrete matrix model of the rank-one column algebra: the
/// span of `[[a, 0], [b, 0]]` inside the 2x2 matrices, multiplied as actual
/// matrices.
pub fn column_model_product(x: &[Scalar; 2], y: &[Scalar; 2]) -> [Scalar; 2] {
    let mx = [
        [x[0].clone(), Scalar::zero()],
        [x[1].clone(), Scalar::zero()],
    ];
    let my = [
        [y[0].clone(), Scalar::zero()],
        [y[1].clone(), Scalar::zero()],
    ];
    let mut prod = [
        [Scalar::zero(), Scalar::zero()],
        [Scalar::zero(), Scalar::zero()],
    ];
    for r in 0..2 {
        for c in 0..2 {
            for k in 0..2 {
                let term = &mx[r][k] * &my[k][c];
                prod[r][c] = &prod[r][c] + &term;
            }
        }
    }
    assert!(prod[0][1].is_zero() && prod[1][1].is_zero(), "model not closed");
    [prod[0][0].clone(), prod[1][0].clone()]
}
