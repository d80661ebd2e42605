//! Mechanical verification of the structure claims for generalized Jordan
//! derivation spaces on weighted products.
//!
//! Every claim is an exact statement about the spaces computed by
//! [`crate::solver`]; all checks run in rational arithmetic with zero
//! tolerance.  Quantifiers over "all elements" reduce to finitely many basis
//! checks: linear conditions are checked on basis vectors, bilinear conditions
//! on basis pairs, and quadratic conditions on symmetrized basis pairs
//! (polarization, valid in characteristic zero).
//!
//! # Claim catalog
//!
//! Claims carry stable string ids, reported in the fixed order below.
//! Throughout, `u` is a right identity of the A factor, `d_A` and `d_B` are
//! the block projections `a -> proj_A(d(a, 0))` and `b -> proj_B(d(0, b))`,
//! and `ran(A)` is the right annihilator of A.
//!
//! | id                  | statement |
//! |---------------------|-----------|
//! | `Closure`           | every basis map of the Jordan space has zero quadratic defect at seeded random points |
//! | `Lem2.1`            | members map the A block into itself, and `d(u, 0)` lies in `ran(A) × {0}` |
//! | `Thm2.2.i`          | `d(a, b) = (d_A(a) + (2θ−φ−γ)(b)·d_A(u) − ½(φ+γ)(d_B(b))·u, d_B(b))`, with `d_A`, `d_B` Jordan derivations |
//! | `Thm2.2.ii`         | `(2θ−φ−γ)(b)·(d_A(a) − d_A(u)a) = ½(φ+γ)(d_B(b))·(a − ua)` |
//! | `Thm2.2.iii`        | `(θ−φ)(b)(θ−γ)(b)·d_A(u) = 0` and `(γ−φ)(b)(γ−φ)(d_B(b))·u = 0` |
//! | `Thm2.2.uniqueness` | the reconstruction identity pins `(d_A, d_B)` uniquely |
//! | `Thm2.2.converse`   | the space of admissible pairs `(d_A, d_B)` bijects with the Jordan space under the reconstruction formula |
//! | `Cor2.3.i`          | either `θ = φ = γ` or members map the A block into `ran(A) × {0}` |
//! | `Cor2.3.ii`         | if additionally A is unital or semisimple: either `θ = φ = γ` or members vanish on the A block |
//! | `Thm2.4.forward`    | members of the derivation space satisfy conditions (i)–(iv) below |
//! | `Thm2.4.backward`   | the subspace of the Jordan space cut out by (i)–(iv) equals the derivation space |
//! | `Thm2.4.formula`    | when A has no two-sided identity, `d(a, b) = (d_A(a) + (θ−γ)(b)·d_A(u), d_B(b))` on the derivation space |
//! | `Cor2.5`            | A unital, B semisimple, `θ ≠ φ`, `γ = φ`: Jordan space = derivation space, and `d -> d_B` bijects onto `Der(B)` |
//! | `Thm2.6`            | B semisimple and `θ ≠ φ`: the only `(η₁, η₂)`-centralizing member of the Jordan space is zero |
//!
//! Conditions (i)–(iv) referenced by the `Thm2.4.*` claims are:
//! (i) `d_A` and `d_B` are derivations; (ii) `(θ−φ)(b)·d_A(a) = 0` and
//! `(θ−γ)(b)·(d_A(a) − d_A(u)a) = 0`; (iii) `φ(d_B(b))·(φ−γ)(y)·u = 0` and
//! `φ(d_B(b))·(a − ua) = 0`; (iv) `γ∘d_B = φ∘d_B`.
//!
//! # Statuses
//!
//! A claim whose hypotheses are not satisfied by the context reports
//! `hypothesis-not-met` rather than a vacuous pass, so misconfigured contexts
//! cannot hide behind empty quantifiers.  A `fail` always carries at least one
//! witness recording the evaluated input and both sides of the violated
//! identity.  Reports are deterministic: the same context and options produce
//! byte-identical JSON.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Character, Element};
use crate::lau::{LauContext, LauError};
use crate::linalg::{vecops, LinalgError, Matrix, Subspace};
use crate::sampling::{PointSampler, DEFAULT_SEED};
use crate::scalar::Scalar;
use crate::solver::{
    derivation_space, generalized_derivation_space, generalized_jordan_space,
    jordan_derivation_space, quadratic_defect, LinearMap, MapSpace, SolverError,
};

/// All claim ids, in the order they appear in reports.
pub const CLAIM_IDS: [&str; 14] = [
    "Closure",
    "Lem2.1",
    "Thm2.2.i",
    "Thm2.2.ii",
    "Thm2.2.iii",
    "Thm2.2.uniqueness",
    "Thm2.2.converse",
    "Cor2.3.i",
    "Cor2.3.ii",
    "Thm2.4.forward",
    "Thm2.4.backward",
    "Thm2.4.formula",
    "Cor2.5",
    "Thm2.6",
];

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("u = {u} is not a right identity of the A factor")]
    NotRightIdentity { u: String },
    #[error(
        "map is not a member of the Jordan space: symmetrized defect at basis pair \
         ({i}, {j}) is {defect}"
    )]
    NotJordanMember { i: usize, j: usize, defect: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dim { expected: usize, got: usize },
    #[error("functional is not a verified character on the B factor: {0}")]
    BadFunctional(String),
    #[error("unknown claim selector `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lau(#[from] LauError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Outcome of a single claim check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "hypothesis-not-met")]
    HypothesisNotMet,
}

/// A concrete counterexample: the evaluated input and the two sides that
/// should have agreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(
        input: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Witness {
            input: input.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// The result of checking one claim.  A failing report always carries at
/// least one witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub status: ClaimStatus,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

impl VerificationReport {
    pub fn pass(claim_id: impl Into<String>, notes: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            status: ClaimStatus::Pass,
            witnesses: Vec::new(),
            notes: notes.into(),
        }
    }

    pub fn fail(
        claim_id: impl Into<String>,
        witnesses: Vec<Witness>,
        notes: impl Into<String>,
    ) -> Self {
        assert!(
            !witnesses.is_empty(),
            "a failing report must carry at least one witness"
        );
        VerificationReport {
            claim_id: claim_id.into(),
            status: ClaimStatus::Fail,
            witnesses,
            notes: notes.into(),
        }
    }

    pub fn vacuous(claim_id: impl Into<String>, notes: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            status: ClaimStatus::HypothesisNotMet,
            witnesses: Vec::new(),
            notes: notes.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == ClaimStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == ClaimStatus::Fail
    }
}

/// Pass when no witnesses were collected, fail otherwise.
fn outcome(claim_id: &str, witnesses: Vec<Witness>, pass_notes: String) -> VerificationReport {
    if witnesses.is_empty() {
        VerificationReport::pass(claim_id, pass_notes)
    } else {
        let n = witnesses.len();
        VerificationReport::fail(claim_id, witnesses, format!("{n} failing check(s)"))
    }
}

/// The block projections of a product self-map, together with the right
/// identity they were taken against.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub d_a: LinearMap,
    pub d_b: LinearMap,
    pub u: Element,
}

fn ensure_right_identity(ctx: &LauContext, u: &Element) -> Result<(), TheoremError> {
    let a = ctx.a();
    if u.dim() != a.dim() {
        return Err(TheoremError::Dim {
            expected: a.dim(),
            got: u.dim(),
        });
    }
    for i in 0..a.dim() {
        let ei = a.basis_element(i);
        if a.multiply(&ei, u)? != ei {
            return Err(TheoremError::NotRightIdentity { u: u.to_string() });
        }
    }
    Ok(())
}

fn ensure_product_map(ctx: &LauContext, d: &LinearMap) -> Result<(), TheoremError> {
    if d.dim() != ctx.dim() {
        return Err(TheoremError::Dim {
            expected: ctx.dim(),
            got: d.dim(),
        });
    }
    Ok(())
}

/// Symmetrized defect of `d` at the product basis pair `(i, j)`.  Vanishing
/// for all `i <= j` is equivalent to membership in the Jordan space.
fn polarized_defect(
    ctx: &LauContext,
    d: &LinearMap,
    i: usize,
    j: usize,
) -> Result<Element, TheoremError> {
    let ei = ctx.product().basis_element(i);
    let ej = ctx.product().basis_element(j);
    let sym = ctx.mul_theta(&ei, &ej)?.add(&ctx.mul_theta(&ej, &ei)?);
    let dei = d.apply(&ei);
    let dej = d.apply(&ej);
    let rhs = ctx
        .mul_phi(&dei, &ej)?
        .add(&ctx.mul_gamma(&ei, &dej)?)
        .add(&ctx.mul_phi(&dej, &ei)?)
        .add(&ctx.mul_gamma(&ej, &dei)?);
    Ok(d.apply(&sym).sub(&rhs))
}

fn first_defect_pair(
    ctx: &LauContext,
    d: &LinearMap,
) -> Result<Option<(usize, usize, Element)>, TheoremError> {
    let n = ctx.dim();
    for i in 0..n {
        for j in i..n {
            let defect = polarized_defect(ctx, d, i, j)?;
            if !defect.is_zero() {
                return Ok(Some((i, j, defect)));
            }
        }
    }
    Ok(None)
}

/// `None` when `d` is a member of the Jordan space, otherwise a witness
/// naming the first basis pair where the symmetrized defining identity fails.
pub fn jordan_membership_witness(
    ctx: &LauContext,
    d: &LinearMap,
) -> Result<Option<Witness>, TheoremError> {
    ensure_product_map(ctx, d)?;
    Ok(first_defect_pair(ctx, d)?.map(|(i, j, defect)| {
        let labels = ctx.product().labels();
        Witness::new(
            format!("symmetrized defect at basis pair ({}, {})", labels[i], labels[j]),
            defect.to_string(),
            Element::zero(ctx.dim()).to_string(),
        )
    }))
}

/// The block projections `π_A ∘ d ∘ ι_A` and `π_B ∘ d ∘ ι_B` as matrices.
fn project_blocks(ctx: &LauContext, d: &LinearMap) -> (LinearMap, LinearMap) {
    let m = ctx.a().dim();
    let n = ctx.b().dim();
    let mut da = Matrix::zeros(m, m);
    let mut db = Matrix::zeros(n, n);
    for i in 0..m {
        let img = d.apply(&ctx.embed_a(&ctx.a().basis_element(i)));
        let (pa, _) = ctx.split(&img);
        for r in 0..m {
            da.set(r, i, pa.coords[r].clone());
        }
    }
    for j in 0..n {
        let img = d.apply(&ctx.embed_b(&ctx.b().basis_element(j)));
        let (_, pb) = ctx.split(&img);
        for r in 0..n {
            db.set(r, j, pb.coords[r].clone());
        }
    }
    (
        LinearMap::new(da).expect("projection matrices are square"),
        LinearMap::new(db).expect("projection matrices are square"),
    )
}

/// Extracts the block components `d_A`, `d_B` of a product self-map.
///
/// `u` must be a right identity of the A factor.  With `strict` set, `d` is
/// additionally required to be a member of the Jordan space (checked via the
/// symmetrized defect on all basis pairs), which guarantees the projections
/// determine `d` on embedded elements.
pub fn decompose(
    ctx: &LauContext,
    d: &LinearMap,
    u: &Element,
    strict: bool,
) -> Result<Decomposition, TheoremError> {
    ensure_right_identity(ctx, u)?;
    ensure_product_map(ctx, d)?;
    if strict {
        if let Some((i, j, defect)) = first_defect_pair(ctx, d)? {
            return Err(TheoremError::NotJordanMember {
                i,
                j,
                defect: defect.to_string(),
            });
        }
    }
    let (d_a, d_b) = project_blocks(ctx, d);
    Ok(Decomposition {
        d_a,
        d_b,
        u: u.clone(),
    })
}

/// `(2θ − φ − γ)` evaluated at an element of B.
fn weight_s(ctx: &LauContext, v: &Element) -> Scalar {
    ctx.theta().eval(v) * Scalar::from_int(2) - ctx.phi().eval(v) - ctx.gamma().eval(v)
}

/// `½(φ + γ)` evaluated at an element of B.
fn half_phi_gamma(ctx: &LauContext, v: &Element) -> Scalar {
    (ctx.phi().eval(v) + ctx.gamma().eval(v)) * Scalar::ratio(1, 2)
}

/// `(chi1 − chi2)` evaluated at an element of B.
fn diff_eval(chi1: &Character, chi2: &Character, v: &Element) -> Scalar {
    chi1.eval(v) - chi2.eval(v)
}

/// The map `(a, b) -> (d_A(a) + (2θ−φ−γ)(b)·d_A(u) − ½(φ+γ)(d_B(b))·u, d_B(b))`
/// as a matrix on the product.
pub fn formula_map(ctx: &LauContext, dec: &Decomposition) -> Result<LinearMap, TheoremError> {
    let m = ctx.a().dim();
    let n = ctx.b().dim();
    let total = m + n;
    let mut mat = Matrix::zeros(total, total);
    let dau = dec.d_a.apply(&dec.u);
    for i in 0..m {
        let img = dec.d_a.apply(&ctx.a().basis_element(i));
        for r in 0..m {
            mat.set(r, i, img.coords[r].clone());
        }
    }
    for j in 0..n {
        let fj = ctx.b().basis_element(j);
        let dbf = dec.d_b.apply(&fj);
        let a_part = dau
            .scale(&weight_s(ctx, &fj))
            .sub(&dec.u.scale(&half_phi_gamma(ctx, &dbf)));
        for r in 0..m {
            mat.set(r, m + j, a_part.coords[r].clone());
        }
        for r in 0..n {
            mat.set(m + r, m + j, dbf.coords[r].clone());
        }
    }
    Ok(LinearMap::new(mat)?)
}

/// The identity-free variant `(a, b) -> (d_A(a) + (θ−γ)(b)·d_A(u), d_B(b))`.
pub fn simplified_formula_map(
    ctx: &LauContext,
    dec: &Decomposition,
) -> Result<LinearMap, TheoremError> {
    let m = ctx.a().dim();
    let n = ctx.b().dim();
    let total = m + n;
    let mut mat = Matrix::zeros(total, total);
    let dau = dec.d_a.apply(&dec.u);
    for i in 0..m {
        let img = dec.d_a.apply(&ctx.a().basis_element(i));
        for r in 0..m {
            mat.set(r, i, img.coords[r].clone());
        }
    }
    for j in 0..n {
        let fj = ctx.b().basis_element(j);
        let dbf = dec.d_b.apply(&fj);
        let a_part = dau.scale(&diff_eval(ctx.theta(), ctx.gamma(), &fj));
        for r in 0..m {
            mat.set(r, m + j, a_part.coords[r].clone());
        }
        for r in 0..n {
            mat.set(m + r, m + j, dbf.coords[r].clone());
        }
    }
    Ok(LinearMap::new(mat)?)
}

/// Claim `Lem2.1` for a single map: `d` sends every embedded A basis vector
/// back into the A block, and `d(u, 0)` lies in `ran(A) × {0}`.
pub fn check_lemma_2_1(
    ctx: &LauContext,
    d: &LinearMap,
    u: &Element,
) -> Result<VerificationReport, TheoremError> {
    ensure_right_identity(ctx, u)?;
    ensure_product_map(ctx, d)?;
    let a = ctx.a();
    let m = a.dim();
    let zero_b = Element::zero(ctx.b().dim());
    let mut witnesses = Vec::new();
    for i in 0..m {
        let img = d.apply(&ctx.embed_a(&a.basis_element(i)));
        let (_, ib) = ctx.split(&img);
        if !ib.is_zero() {
            witnesses.push(Witness::new(
                format!("B component of d(({}, 0))", a.labels()[i]),
                ib.to_string(),
                zero_b.to_string(),
            ));
        }
    }
    let ran = a.right_annihilator();
    let img_u = d.apply(&ctx.embed_a(u));
    let (z, w) = ctx.split(&img_u);
    if !w.is_zero() {
        witnesses.push(Witness::new(
            format!("B component of d((u, 0)), u = {u}"),
            w.to_string(),
            zero_b.to_string(),
        ));
    }
    if !ran.contains_vec(&z.coords)? {
        witnesses.push(Witness::new(
            format!("A component of d((u, 0)), u = {u}"),
            z.to_string(),
            format!("a member of ran(A) = {}", subspace_brief(&ran)),
        ));
    }
    Ok(outcome(
        "Lem2.1",
        witnesses,
        format!(
            "A block preserved at all {m} basis vectors; d(u, 0) lies in ran(A) × {{0}} for u = {u}"
        ),
    ))
}

fn subspace_brief(s: &Subspace) -> String {
    let rows: Vec<String> = s.basis().iter_rows().map(vecops::display).collect();
    format!("dim {} span [{}]", s.dim(), rows.join("; "))
}

/// The four per-map decomposition claims (`Thm2.2.i` … `Thm2.2.uniqueness`)
/// for a single member `d` of the Jordan space and right identity `u`.
pub fn check_theorem_2_2(
    ctx: &LauContext,
    d: &LinearMap,
    u: &Element,
) -> Result<Vec<VerificationReport>, TheoremError> {
    let dec = decompose(ctx, d, u, false)?;
    let a = ctx.a();
    let b = ctx.b();
    let m = a.dim();
    let n = b.dim();
    let mut reports = Vec::new();

    // (i): the reconstruction formula reproduces d on every product basis
    // vector, and the extracted blocks are Jordan derivations.
    let mut w1 = Vec::new();
    let fm = formula_map(ctx, &dec)?;
    for r in 0..ctx.dim() {
        let x = ctx.product().basis_element(r);
        let got = d.apply(&x);
        let want = fm.apply(&x);
        if got != want {
            w1.push(Witness::new(
                format!("d at basis vector {}", ctx.product().labels()[r]),
                got.to_string(),
                want.to_string(),
            ));
        }
    }
    if !jordan_derivation_space(a).contains(&dec.d_a)? {
        w1.push(Witness::new(
            "d_A as a candidate Jordan derivation of A",
            flatten_brief(&dec.d_a),
            "a member of the Jordan derivation space of A".to_string(),
        ));
    }
    if !jordan_derivation_space(b).contains(&dec.d_b)? {
        w1.push(Witness::new(
            "d_B as a candidate Jordan derivation of B",
            flatten_brief(&dec.d_b),
            "a member of the Jordan derivation space of B".to_string(),
        ));
    }
    reports.push(outcome(
        "Thm2.2.i",
        w1,
        format!(
            "reconstruction formula reproduces d on all {} basis vectors, with Jordan blocks, for u = {u}",
            ctx.dim()
        ),
    ));

    // (ii): bilinear identity on all (A basis, B basis) pairs.
    let mut w2 = Vec::new();
    let dau = dec.d_a.apply(u);
    for p in 0..m {
        let ep = a.basis_element(p);
        let left_core = dec.d_a.apply(&ep).sub(&a.multiply(&dau, &ep)?);
        let right_core = ep.sub(&a.multiply(u, &ep)?);
        for q in 0..n {
            let fq = b.basis_element(q);
            let lhs = left_core.scale(&weight_s(ctx, &fq));
            let rhs = right_core.scale(&half_phi_gamma(ctx, &dec.d_b.apply(&fq)));
            if lhs != rhs {
                w2.push(Witness::new(
                    format!(
                        "(a, b) = ({}, {}), u = {u}",
                        a.labels()[p],
                        b.labels()[q]
                    ),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
            }
        }
    }
    reports.push(outcome(
        "Thm2.2.ii",
        w2,
        format!("identity holds on all {m}×{n} basis pairs for u = {u}"),
    ));

    // (iii): two quadratic-in-b identities, checked symmetrized on pairs.
    let mut w3 = Vec::new();
    let zero_a = Element::zero(m);
    for p in 0..n {
        let fp = b.basis_element(p);
        for q in p..n {
            let fq = b.basis_element(q);
            let c1 = diff_eval(ctx.theta(), ctx.phi(), &fp)
                * diff_eval(ctx.theta(), ctx.gamma(), &fq)
                + diff_eval(ctx.theta(), ctx.phi(), &fq)
                    * diff_eval(ctx.theta(), ctx.gamma(), &fp);
            let t1 = dau.scale(&c1);
            if !t1.is_zero() {
                w3.push(Witness::new(
                    format!(
                        "(θ−φ)(b)(θ−γ)(b)·d_A(u) symmetrized at (b, b') = ({}, {})",
                        b.labels()[p],
                        b.labels()[q]
                    ),
                    t1.to_string(),
                    zero_a.to_string(),
                ));
            }
            let c2 = diff_eval(ctx.gamma(), ctx.phi(), &fp)
                * diff_eval(ctx.gamma(), ctx.phi(), &dec.d_b.apply(&fq))
                + diff_eval(ctx.gamma(), ctx.phi(), &fq)
                    * diff_eval(ctx.gamma(), ctx.phi(), &dec.d_b.apply(&fp));
            let t2 = u.scale(&c2);
            if !t2.is_zero() {
                w3.push(Witness::new(
                    format!(
                        "(γ−φ)(b)(γ−φ)(d_B(b))·u symmetrized at (b, b') = ({}, {})",
                        b.labels()[p],
                        b.labels()[q]
                    ),
                    t2.to_string(),
                    zero_a.to_string(),
                ));
            }
        }
    }
    reports.push(outcome(
        "Thm2.2.iii",
        w3,
        format!(
            "both weighted terms vanish on all {} symmetrized B pairs for u = {u}",
            n * (n + 1) / 2
        ),
    ));

    // Uniqueness: the linear system "reconstruction formula reproduces d"
    // in the unknown pair (d_A', d_B') has exactly one solution, namely the
    // block projections.
    reports.push(outcome(
        "Thm2.2.uniqueness",
        uniqueness_witnesses(ctx, d, &dec)?,
        format!("the reconstruction identity pins (d_A, d_B) uniquely for u = {u}"),
    ));

    Ok(reports)
}

fn flatten_brief(map: &LinearMap) -> String {
    vecops::display(&map.flatten())
}

/// Sets up the reconstruction identity as an affine system in the unknown
/// pair and demands a unique solution equal to the projected blocks.
fn uniqueness_witnesses(
    ctx: &LauContext,
    d: &LinearMap,
    dec: &Decomposition,
) -> Result<Vec<Witness>, TheoremError> {
    let a = ctx.a();
    let b = ctx.b();
    let m = a.dim();
    let n = b.dim();
    let unknowns = m * m + n * n;
    let da_idx = |r: usize, c: usize| r * m + c;
    let db_idx = |r: usize, c: usize| m * m + r * n + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();

    // Images of embedded A basis vectors: (d_A'(e_i), 0) = d(e_i, 0).
    for i in 0..m {
        let img = d.apply(&ctx.embed_a(&a.basis_element(i)));
        for r in 0..m {
            let mut row = vec![Scalar::zero(); unknowns];
            row[da_idx(r, i)] = Scalar::one();
            rows.push(row);
            rhs.push(img.coords[r].clone());
        }
        for r in 0..n {
            rows.push(vec![Scalar::zero(); unknowns]);
            rhs.push(img.coords[m + r].clone());
        }
    }
    // Images of embedded B basis vectors:
    // ((2θ−φ−γ)(f_j)·d_A'(u) − ½(φ+γ)(d_B'(f_j))·u, d_B'(f_j)) = d(0, f_j).
    let phi = &ctx.phi().values;
    let gamma = &ctx.gamma().values;
    let half = Scalar::ratio(1, 2);
    for j in 0..n {
        let fj = b.basis_element(j);
        let s = weight_s(ctx, &fj);
        let img = d.apply(&ctx.embed_b(&fj));
        for r in 0..m {
            let mut row = vec![Scalar::zero(); unknowns];
            for c in 0..m {
                if !dec.u.coords[c].is_zero() {
                    row[da_idx(r, c)] = &s * &dec.u.coords[c];
                }
            }
            for t in 0..n {
                let coeff = &(&(&phi[t] + &gamma[t]) * &half) * &dec.u.coords[r];
                if !coeff.is_zero() {
                    row[db_idx(t, j)] = -coeff;
                }
            }
            rows.push(row);
            rhs.push(img.coords[r].clone());
        }
        for r in 0..n {
            let mut row = vec![Scalar::zero(); unknowns];
            row[db_idx(r, j)] = Scalar::one();
            rows.push(row);
            rhs.push(img.coords[m + r].clone());
        }
    }

    let system = Matrix::from_rows(unknowns, rows)?;
    let solutions = system.solve_affine(&rhs)?;
    let mut witnesses = Vec::new();
    match solutions.particular {
        None => witnesses.push(Witness::new(
            "solution set of the reconstruction identity",
            "inconsistent (no pair reproduces d)".to_string(),
            "exactly one pair (d_A, d_B)".to_string(),
        )),
        Some(point) => {
            if solutions.directions.dim() != 0 {
                witnesses.push(Witness::new(
                    "solution set of the reconstruction identity",
                    format!("affine family of dimension {}", solutions.directions.dim()),
                    "a single point".to_string(),
                ));
            }
            let mut expected = dec.d_a.flatten();
            expected.extend(dec.d_b.flatten());
            if point != expected {
                witnesses.push(Witness::new(
                    "unique solution of the reconstruction identity",
                    vecops::display(&point),
                    vecops::display(&expected),
                ));
            }
        }
    }
    Ok(witnesses)
}

/// Intersects `space` with the kernel of a linear residual map, by solving
/// for the coefficient combinations of the basis rows whose stacked residual
/// vanishes.
fn cut_subspace<F>(space: &Subspace, residual: F) -> Result<Subspace, LinalgError>
where
    F: Fn(&[Scalar]) -> Vec<Scalar>,
{
    let t = space.dim();
    if t == 0 {
        return Ok(Subspace::zero(space.ambient()));
    }
    let cols: Vec<Vec<Scalar>> = space.basis().iter_rows().map(residual).collect();
    let len = cols[0].len();
    debug_assert!(cols.iter().all(|c| c.len() == len));
    if len == 0 {
        return Ok(space.clone());
    }
    let mut system = Matrix::zeros(len, t);
    for (k, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            system.set(r, k, v.clone());
        }
    }
    let coeffs = system.nullspace();
    let mut rows = Vec::new();
    for c in coeffs.basis().iter_rows() {
        let mut row = vec![Scalar::zero(); space.ambient()];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (j, bv) in space.basis().row(k).iter().enumerate() {
                if !bv.is_zero() {
                    let delta = ck * bv;
                    row[j] += &delta;
                }
            }
        }
        rows.push(row);
    }
    Subspace::from_rows(space.ambient(), rows)
}

fn split_pair_row(m: usize, n: usize, row: &[Scalar]) -> (LinearMap, LinearMap) {
    let da = LinearMap::from_flat(m, &row[..m * m]).expect("pair row has block length m²");
    let db = LinearMap::from_flat(n, &row[m * m..]).expect("pair row has block length n²");
    (da, db)
}

/// Claim `Thm2.2.converse`: the space of pairs `(d_A, d_B)` of Jordan
/// derivations satisfying the bilinear and symmetrized quadratic identities
/// has the same dimension as the Jordan space, and the reconstruction
/// formula maps it bijectively into the Jordan space.
pub fn check_theorem_2_2_converse(
    ctx: &LauContext,
    u: &Element,
    jordan: &MapSpace,
) -> Result<VerificationReport, TheoremError> {
    ensure_right_identity(ctx, u)?;
    let a = ctx.a();
    let b = ctx.b();
    let m = a.dim();
    let n = b.dim();
    let pair_ambient = m * m + n * n;

    // Base space: pairs of Jordan derivations of the factors.
    let ja = jordan_derivation_space(a);
    let jb = jordan_derivation_space(b);
    let mut rows = Vec::new();
    for r in ja.subspace().basis().iter_rows() {
        let mut v = r.to_vec();
        v.extend(std::iter::repeat_with(Scalar::zero).take(n * n));
        rows.push(v);
    }
    for r in jb.subspace().basis().iter_rows() {
        let mut v: Vec<Scalar> = std::iter::repeat_with(Scalar::zero).take(m * m).collect();
        v.extend(r.to_vec());
        rows.push(v);
    }
    let base = Subspace::from_rows(pair_ambient, rows)?;

    let pair_space = cut_subspace(&base, |row| {
        let (da, db) = split_pair_row(m, n, row);
        let dau = da.apply(u);
        let mut out = Vec::new();
        // Bilinear identity residuals on all (A basis, B basis) pairs.
        for p in 0..m {
            let ep = a.basis_element(p);
            let left_core = da
                .apply(&ep)
                .sub(&a.multiply(&dau, &ep).expect("dims agree"));
            let right_core = ep.sub(&a.multiply(u, &ep).expect("dims agree"));
            for q in 0..n {
                let fq = b.basis_element(q);
                let res = left_core
                    .scale(&weight_s(ctx, &fq))
                    .sub(&right_core.scale(&half_phi_gamma(ctx, &db.apply(&fq))));
                out.extend(res.coords);
            }
        }
        // Symmetrized quadratic residuals on B pairs.
        for p in 0..n {
            let fp = b.basis_element(p);
            for q in p..n {
                let fq = b.basis_element(q);
                let c1 = diff_eval(ctx.theta(), ctx.phi(), &fp)
                    * diff_eval(ctx.theta(), ctx.gamma(), &fq)
                    + diff_eval(ctx.theta(), ctx.phi(), &fq)
                        * diff_eval(ctx.theta(), ctx.gamma(), &fp);
                out.extend(dau.scale(&c1).coords);
                let c2 = diff_eval(ctx.gamma(), ctx.phi(), &fp)
                    * diff_eval(ctx.gamma(), ctx.phi(), &db.apply(&fq))
                    + diff_eval(ctx.gamma(), ctx.phi(), &fq)
                        * diff_eval(ctx.gamma(), ctx.phi(), &db.apply(&fp));
                out.extend(u.scale(&c2).coords);
            }
        }
        out
    })?;

    let mut witnesses = Vec::new();
    if pair_space.dim() != jordan.dim() {
        witnesses.push(Witness::new(
            "dimension of the admissible pair space vs the Jordan space",
            format!("{}", pair_space.dim()),
            format!("{}", jordan.dim()),
        ));
    }
    let mut image_rows = Vec::new();
    for (k, row) in pair_space.basis().iter_rows().enumerate() {
        let (d_a, d_b) = split_pair_row(m, n, row);
        let dec = Decomposition {
            d_a,
            d_b,
            u: u.clone(),
        };
        let image = formula_map(ctx, &dec)?;
        if !jordan.contains(&image)? {
            witnesses.push(Witness::new(
                format!("reconstruction image of pair basis [{k}]"),
                flatten_brief(&image),
                "a member of the Jordan space".to_string(),
            ));
        }
        image_rows.push(image.flatten());
    }
    let total = ctx.dim();
    let rank = Matrix::from_rows(total * total, image_rows)?.rref().1;
    if rank != pair_space.dim() {
        witnesses.push(Witness::new(
            "rank of the reconstruction images",
            format!("{rank}"),
            format!("{}", pair_space.dim()),
        ));
    }
    Ok(outcome(
        "Thm2.2.converse",
        witnesses,
        format!(
            "admissible pair space has dimension {}, matching the Jordan space, and the reconstruction formula is a bijection (u = {u})",
            pair_space.dim()
        ),
    ))
}

/// Claims `Cor2.3.i` and `Cor2.3.ii` for the whole space.
pub fn check_corollary_2_3(
    ctx: &LauContext,
    space: &MapSpace,
    u: &Element,
) -> Result<Vec<VerificationReport>, TheoremError> {
    ensure_right_identity(ctx, u)?;
    let a = ctx.a();
    let m = a.dim();
    let chars_equal = ctx.theta().values == ctx.phi().values
        && ctx.phi().values == ctx.gamma().values;
    let basis = space.basis();
    let mut reports = Vec::new();

    if chars_equal {
        reports.push(VerificationReport::pass(
            "Cor2.3.i",
            "θ = φ = γ: the left branch of the dichotomy holds".to_string(),
        ));
    } else {
        let ran = a.right_annihilator();
        let mut witnesses = Vec::new();
        for (k, d) in basis.iter().enumerate() {
            for i in 0..m {
                let img = d.apply(&ctx.embed_a(&a.basis_element(i)));
                let (z, w) = ctx.split(&img);
                if !w.is_zero() || !ran.contains_vec(&z.coords)? {
                    witnesses.push(Witness::new(
                        format!("Jordan basis [{k}] at ({}, 0)", a.labels()[i]),
                        img.to_string(),
                        format!("a member of ran(A) × {{0}}, ran(A) = {}", subspace_brief(&ran)),
                    ));
                }
            }
        }
        reports.push(outcome(
            "Cor2.3.i",
            witnesses,
            format!(
                "characters differ: all {} basis maps send the A block into ran(A) × {{0}}",
                basis.len()
            ),
        ));
    }

    if !(a.is_unital() || a.is_semisimple()) {
        reports.push(VerificationReport::vacuous(
            "Cor2.3.ii",
            "A is neither unital nor semisimple; the strengthened dichotomy does not apply"
                .to_string(),
        ));
    } else if chars_equal {
        reports.push(VerificationReport::pass(
            "Cor2.3.ii",
            "θ = φ = γ: the left branch of the dichotomy holds".to_string(),
        ));
    } else {
        let zero = Element::zero(ctx.dim());
        let mut witnesses = Vec::new();
        for (k, d) in basis.iter().enumerate() {
            for i in 0..m {
                let img = d.apply(&ctx.embed_a(&a.basis_element(i)));
                if !img.is_zero() {
                    witnesses.push(Witness::new(
                        format!("Jordan basis [{k}] at ({}, 0)", a.labels()[i]),
                        img.to_string(),
                        zero.to_string(),
                    ));
                }
            }
        }
        reports.push(outcome(
            "Cor2.3.ii",
            witnesses,
            format!(
                "characters differ and A is unital or semisimple: all {} basis maps vanish on the A block",
                basis.len()
            ),
        ));
    }
    Ok(reports)
}

/// Witnesses violating conditions (i)–(iv) for a single map (empty when all
/// four hold on every basis instance).
pub fn derivation_condition_witnesses(
    ctx: &LauContext,
    d: &LinearMap,
    u: &Element,
) -> Result<Vec<Witness>, TheoremError> {
    ensure_right_identity(ctx, u)?;
    ensure_product_map(ctx, d)?;
    let a = ctx.a();
    let b = ctx.b();
    let m = a.dim();
    let n = b.dim();
    let (da, db) = project_blocks(ctx, d);
    let dau = da.apply(u);
    let zero_a = Element::zero(m);
    let zero_b = Element::zero(n);
    let mut witnesses = Vec::new();

    // (i): both blocks satisfy the two-variable product rule.
    for p in 0..m {
        for q in 0..m {
            let ep = a.basis_element(p);
            let eq = a.basis_element(q);
            let res = da
                .apply(&a.multiply(&ep, &eq)?)
                .sub(&a.multiply(&da.apply(&ep), &eq)?)
                .sub(&a.multiply(&ep, &da.apply(&eq))?);
            if !res.is_zero() {
                witnesses.push(Witness::new(
                    format!("(i): product-rule residual of d_A at ({}, {})", a.labels()[p], a.labels()[q]),
                    res.to_string(),
                    zero_a.to_string(),
                ));
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            let fp = b.basis_element(p);
            let fq = b.basis_element(q);
            let res = db
                .apply(&b.multiply(&fp, &fq)?)
                .sub(&b.multiply(&db.apply(&fp), &fq)?)
                .sub(&b.multiply(&fp, &db.apply(&fq))?);
            if !res.is_zero() {
                witnesses.push(Witness::new(
                    format!("(i): product-rule residual of d_B at ({}, {})", b.labels()[p], b.labels()[q]),
                    res.to_string(),
                    zero_b.to_string(),
                ));
            }
        }
    }
    // (ii): two weighted A-valued identities on (A basis, B basis) pairs.
    for p in 0..m {
        let ep = a.basis_element(p);
        let dap = da.apply(&ep);
        let shifted = dap.sub(&a.multiply(&dau, &ep)?);
        for q in 0..n {
            let fq = b.basis_element(q);
            let t1 = dap.scale(&diff_eval(ctx.theta(), ctx.phi(), &fq));
            if !t1.is_zero() {
                witnesses.push(Witness::new(
                    format!("(ii): (θ−φ)(b)·d_A(a) at (a, b) = ({}, {})", a.labels()[p], b.labels()[q]),
                    t1.to_string(),
                    zero_a.to_string(),
                ));
            }
            let t2 = shifted.scale(&diff_eval(ctx.theta(), ctx.gamma(), &fq));
            if !t2.is_zero() {
                witnesses.push(Witness::new(
                    format!(
                        "(ii): (θ−γ)(b)·(d_A(a) − d_A(u)a) at (a, b) = ({}, {}), u = {u}",
                        a.labels()[p],
                        b.labels()[q]
                    ),
                    t2.to_string(),
                    zero_a.to_string(),
                ));
            }
        }
    }
    // (iii): φ(d_B(b))·(φ−γ)(y)·u and φ(d_B(b))·(a − ua).
    for q in 0..n {
        let fq = b.basis_element(q);
        let weight = ctx.phi().eval(&db.apply(&fq));
        for r in 0..n {
            let fr = b.basis_element(r);
            let t = u.scale(&(&weight * &diff_eval(ctx.phi(), ctx.gamma(), &fr)));
            if !t.is_zero() {
                witnesses.push(Witness::new(
                    format!(
                        "(iii): φ(d_B(b))·(φ−γ)(y)·u at (b, y) = ({}, {}), u = {u}",
                        b.labels()[q],
                        b.labels()[r]
                    ),
                    t.to_string(),
                    zero_a.to_string(),
                ));
            }
        }
        for p in 0..m {
            let ep = a.basis_element(p);
            let t = ep.sub(&a.multiply(u, &ep)?).scale(&weight);
            if !t.is_zero() {
                witnesses.push(Witness::new(
                    format!(
                        "(iii): φ(d_B(b))·(a − ua) at (b, a) = ({}, {}), u = {u}",
                        b.labels()[q],
                        a.labels()[p]
                    ),
                    t.to_string(),
                    zero_a.to_string(),
                ));
            }
        }
    }
    // (iv): γ∘d_B = φ∘d_B.
    for q in 0..n {
        let img = db.apply(&b.basis_element(q));
        let lhs = ctx.gamma().eval(&img);
        let rhs = ctx.phi().eval(&img);
        if lhs != rhs {
            witnesses.push(Witness::new(
                format!("(iv): γ(d_B(b)) vs φ(d_B(b)) at b = {}", b.labels()[q]),
                lhs.to_string(),
                rhs.to_string(),
            ));
        }
    }
    Ok(witnesses)
}

/// Stacked residual vector of conditions (i)–(iv) for one flattened product
/// map; linear in the map, used to carve the derivation space out of the
/// Jordan space.
fn derivation_condition_residuals(ctx: &LauContext, u: &Element, row: &[Scalar]) -> Vec<Scalar> {
    let a = ctx.a();
    let b = ctx.b();
    let m = a.dim();
    let n = b.dim();
    let d = LinearMap::from_flat(ctx.dim(), row).expect("basis row has product length");
    let (da, db) = project_blocks(ctx, &d);
    let dau = da.apply(u);
    let mut out = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let ep = a.basis_element(p);
            let eq = a.basis_element(q);
            let res = da
                .apply(&a.multiply(&ep, &eq).expect("dims agree"))
                .sub(&a.multiply(&da.apply(&ep), &eq).expect("dims agree"))
                .sub(&a.multiply(&ep, &da.apply(&eq)).expect("dims agree"));
            out.extend(res.coords);
        }
    }
    for p in 0..n {
        for q in 0..n {
            let fp = b.basis_element(p);
            let fq = b.basis_element(q);
            let res = db
                .apply(&b.multiply(&fp, &fq).expect("dims agree"))
                .sub(&b.multiply(&db.apply(&fp), &fq).expect("dims agree"))
                .sub(&b.multiply(&fp, &db.apply(&fq)).expect("dims agree"));
            out.extend(res.coords);
        }
    }
    for p in 0..m {
        let ep = a.basis_element(p);
        let dap = da.apply(&ep);
        let shifted = dap.sub(&a.multiply(&dau, &ep).expect("dims agree"));
        for q in 0..n {
            let fq = b.basis_element(q);
            out.extend(dap.scale(&diff_eval(ctx.theta(), ctx.phi(), &fq)).coords);
            out.extend(
                shifted
                    .scale(&diff_eval(ctx.theta(), ctx.gamma(), &fq))
                    .coords,
            );
        }
    }
    for q in 0..n {
        let weight = ctx.phi().eval(&db.apply(&b.basis_element(q)));
        for r in 0..n {
            let fr = b.basis_element(r);
            out.extend(
                u.scale(&(&weight * &diff_eval(ctx.phi(), ctx.gamma(), &fr)))
                    .coords,
            );
        }
        for p in 0..m {
            let ep = a.basis_element(p);
            out.extend(
                ep.sub(&a.multiply(u, &ep).expect("dims agree"))
                    .scale(&weight)
                    .coords,
            );
        }
    }
    for q in 0..n {
        let img = db.apply(&b.basis_element(q));
        out.push(ctx.gamma().eval(&img) - ctx.phi().eval(&img));
    }
    out
}

/// Claims `Thm2.4.forward`, `Thm2.4.backward` and `Thm2.4.formula`.
pub fn check_theorem_2_4(
    ctx: &LauContext,
    u: &Element,
    jordan: &MapSpace,
    der: &MapSpace,
) -> Result<Vec<VerificationReport>, TheoremError> {
    ensure_right_identity(ctx, u)?;
    let mut reports = Vec::new();

    // Forward: every derivation-space basis map lies in the Jordan space and
    // satisfies conditions (i)–(iv).
    let der_basis = der.basis();
    let mut wf = Vec::new();
    for (k, d) in der_basis.iter().enumerate() {
        if !jordan.contains(d)? {
            wf.push(Witness::new(
                format!("derivation basis [{k}] as a Jordan-space member"),
                flatten_brief(d),
                "a member of the Jordan space".to_string(),
            ));
        }
        for mut w in derivation_condition_witnesses(ctx, d, u)? {
            w.input = format!("derivation basis [{k}]: {}", w.input);
            wf.push(w);
        }
    }
    reports.push(outcome(
        "Thm2.4.forward",
        wf,
        format!(
            "all {} derivation basis maps satisfy conditions (i)–(iv) for u = {u}",
            der_basis.len()
        ),
    ));

    // Backward: the subspace of the Jordan space satisfying (i)–(iv) is the
    // derivation space, as canonical subspaces.
    let cut = cut_subspace(jordan.subspace(), |row| {
        derivation_condition_residuals(ctx, u, row)
    })?;
    let mut wb = Vec::new();
    if !cut.equal(der.subspace())? {
        wb.push(Witness::new(
            "Jordan space cut by conditions (i)–(iv) vs the derivation space",
            subspace_brief(&cut),
            subspace_brief(der.subspace()),
        ));
    }
    reports.push(outcome(
        "Thm2.4.backward",
        wb,
        format!(
            "conditions (i)–(iv) carve exactly the derivation space (dim {}) out of the Jordan space (dim {})",
            der.dim(),
            jordan.dim()
        ),
    ));

    // Identity-free display formula.
    if ctx.a().two_sided_identity().is_some() {
        reports.push(VerificationReport::vacuous(
            "Thm2.4.formula",
            "A has a two-sided identity; the identity-free display formula does not apply"
                .to_string(),
        ));
    } else {
        let mut wform = Vec::new();
        for (k, d) in der_basis.iter().enumerate() {
            let dec = decompose(ctx, d, u, false)?;
            let simplified = simplified_formula_map(ctx, &dec)?;
            for r in 0..ctx.dim() {
                let x = ctx.product().basis_element(r);
                let got = d.apply(&x);
                let want = simplified.apply(&x);
                if got != want {
                    wform.push(Witness::new(
                        format!(
                            "derivation basis [{k}] at basis vector {}",
                            ctx.product().labels()[r]
                        ),
                        got.to_string(),
                        want.to_string(),
                    ));
                }
            }
        }
        reports.push(outcome(
            "Thm2.4.formula",
            wform,
            format!(
                "A has no two-sided identity: the display formula reproduces all {} derivation basis maps for u = {u}",
                der_basis.len()
            ),
        ));
    }
    Ok(reports)
}

/// Claim `Cor2.5`: under the hypotheses (A unital, B semisimple, `θ ≠ φ`,
/// `γ = φ`) the Jordan and derivation spaces coincide and `d -> d_B` is a
/// linear bijection onto the derivation space of B.
pub fn check_corollary_2_5(
    ctx: &LauContext,
    jordan: &MapSpace,
    der: &MapSpace,
) -> Result<VerificationReport, TheoremError> {
    let mut missing = Vec::new();
    if ctx.a().two_sided_identity().is_none() {
        missing.push("A has a two-sided identity");
    }
    if !ctx.b().is_semisimple() {
        missing.push("B is semisimple");
    }
    if ctx.theta().values == ctx.phi().values {
        missing.push("θ ≠ φ");
    }
    if ctx.phi().values != ctx.gamma().values {
        missing.push("γ = φ");
    }
    if !missing.is_empty() {
        return Ok(VerificationReport::vacuous(
            "Cor2.5",
            format!("unmet hypotheses: {}", missing.join(", ")),
        ));
    }

    let n = ctx.b().dim();
    let der_b = derivation_space(ctx.b());
    let mut witnesses = Vec::new();
    if !jordan.equal(der)? {
        witnesses.push(Witness::new(
            "Jordan space vs derivation space",
            subspace_brief(jordan.subspace()),
            subspace_brief(der.subspace()),
        ));
    }
    let mut rows = Vec::new();
    for (k, d) in jordan.basis().iter().enumerate() {
        let (_, db) = project_blocks(ctx, d);
        if !der_b.contains(&db)? {
            witnesses.push(Witness::new(
                format!("d_B of Jordan basis [{k}]"),
                flatten_brief(&db),
                "a member of the derivation space of B".to_string(),
            ));
        }
        rows.push(db.flatten());
    }
    let rank = Matrix::from_rows(n * n, rows)?.rref().1;
    if rank != jordan.dim() {
        witnesses.push(Witness::new(
            "rank of d -> d_B on the Jordan basis",
            format!("{rank}"),
            format!("{}", jordan.dim()),
        ));
    }
    if jordan.dim() != der_b.dim() {
        witnesses.push(Witness::new(
            "dim of the Jordan space vs dim of the derivation space of B",
            format!("{}", jordan.dim()),
            format!("{}", der_b.dim()),
        ));
    }
    Ok(outcome(
        "Cor2.5",
        witnesses,
        format!(
            "Jordan space = derivation space (dim {}), and d -> d_B bijects onto the derivation space of B",
            jordan.dim()
        ),
    ))
}

/// The subspace of `space` whose members `d` have all symmetrized brackets
/// `d(X)·_{η₁}Y + d(Y)·_{η₁}X − X·_{η₂}d(Y) − Y·_{η₂}d(X)` inside
/// `Z(A) × Z(B)` — equivalently, `d(X)·_{η₁}X − X·_{η₂}d(X) ∈ Z(A) × Z(B)`
/// for every `X` (polarization in characteristic zero).
pub fn centralizing_subspace(
    ctx: &LauContext,
    space: &MapSpace,
    eta1: &Character,
    eta2: &Character,
) -> Result<MapSpace, TheoremError> {
    for eta in [eta1, eta2] {
        let violations = ctx.b().verify_character(eta);
        if let Some(v) = violations.first() {
            return Err(TheoremError::BadFunctional(v.to_string()));
        }
    }
    let total = ctx.dim();
    let mut z_rows = Vec::new();
    for r in ctx.a().center().basis().iter_rows() {
        let mut v = r.to_vec();
        v.extend(std::iter::repeat_with(Scalar::zero).take(ctx.b().dim()));
        z_rows.push(v);
    }
    for r in ctx.b().center().basis().iter_rows() {
        let mut v: Vec<Scalar> = std::iter::repeat_with(Scalar::zero)
            .take(ctx.a().dim())
            .collect();
        v.extend(r.to_vec());
        z_rows.push(v);
    }
    let z = Subspace::from_rows(total, z_rows)?;
    let kz = z.complement_rows();

    let cut = cut_subspace(space.subspace(), |row| {
        let d = LinearMap::from_flat(total, row).expect("basis row has product length");
        let mut out = Vec::new();
        for i in 0..total {
            let ei = ctx.product().basis_element(i);
            let dei = d.apply(&ei);
            for j in i..total {
                let ej = ctx.product().basis_element(j);
                let dej = d.apply(&ej);
                let bracket = ctx
                    .mul_with(eta1, &dei, &ej)
                    .expect("dims agree")
                    .add(&ctx.mul_with(eta1, &dej, &ei).expect("dims agree"))
                    .sub(&ctx.mul_with(eta2, &ei, &dej).expect("dims agree"))
                    .sub(&ctx.mul_with(eta2, &ej, &dei).expect("dims agree"));
                out.extend(kz.mul_vec(&bracket.coords).expect("dims agree"));
            }
        }
        out
    })?;
    Ok(MapSpace::from_subspace(total, cut)?)
}

/// Claim `Thm2.6` for one `(η₁, η₂)` pair: under B semisimple and `θ ≠ φ`
/// (with the standing right-identity hypothesis on A), the centralizing
/// subspace of the Jordan space is zero.
pub fn check_theorem_2_6(
    ctx: &LauContext,
    eta1: &Character,
    eta2: &Character,
    jordan: &MapSpace,
) -> Result<VerificationReport, TheoremError> {
    let mut missing = Vec::new();
    if !ctx.a().right_identities().is_consistent() {
        missing.push("A has a right identity");
    }
    if !ctx.b().is_semisimple() {
        missing.push("B is semisimple");
    }
    if ctx.theta().values == ctx.phi().values {
        missing.push("θ ≠ φ");
    }
    if !missing.is_empty() {
        return Ok(VerificationReport::vacuous(
            "Thm2.6",
            format!("unmet hypotheses: {}", missing.join(", ")),
        ));
    }
    let central = centralizing_subspace(ctx, jordan, eta1, eta2)?;
    let eta_desc = format!(
        "η₁ = {}, η₂ = {}",
        vecops::display(&eta1.values),
        vecops::display(&eta2.values)
    );
    if central.dim() == 0 {
        Ok(VerificationReport::pass(
            "Thm2.6",
            format!("only the zero map is centralizing for {eta_desc}"),
        ))
    } else {
        let first = &central.basis()[0];
        Ok(VerificationReport::fail(
            "Thm2.6",
            vec![Witness::new(
                format!("centralizing subspace for {eta_desc}"),
                format!("dimension {}, e.g. {}", central.dim(), flatten_brief(first)),
                "the zero space".to_string(),
            )],
            "1 failing check(s)".to_string(),
        ))
    }
}

/// Options for [`run_claims`].
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Claim selectors; `None` runs the whole catalog.  A selector matches a
    /// claim id exactly or as a dotted prefix (`"Thm2.2"` selects all
    /// `Thm2.2.*` claims).
    pub claims: Option<Vec<String>>,
    /// Seed for the random points used by the `Closure` claim.
    pub seed: u64,
    /// Number of random points per Jordan basis map for `Closure`.
    pub closure_points: usize,
    /// Named functional pool for `Thm2.6`; when empty, the distinct context
    /// functionals θ, φ, γ are used.
    pub etas: Vec<(String, Character)>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            claims: None,
            seed: DEFAULT_SEED,
            closure_points: 200,
            etas: Vec::new(),
        }
    }
}

/// A full claim run over one context: reports in catalog order plus the
/// context digest, both stable across runs and platforms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRun {
    pub claims: Vec<VerificationReport>,
    pub context_digest: String,
}

fn resolve_claims(filter: Option<&[String]>) -> Result<Vec<&'static str>, TheoremError> {
    let Some(entries) = filter else {
        return Ok(CLAIM_IDS.to_vec());
    };
    let mut chosen = [false; CLAIM_IDS.len()];
    for entry in entries {
        let mut hit = false;
        for (k, id) in CLAIM_IDS.iter().enumerate() {
            if *id == entry.as_str() || id.starts_with(&format!("{entry}.")) {
                chosen[k] = true;
                hit = true;
            }
        }
        if !hit {
            return Err(TheoremError::UnknownClaim(entry.clone()));
        }
    }
    Ok(CLAIM_IDS
        .iter()
        .enumerate()
        .filter_map(|(k, id)| chosen[k].then_some(*id))
        .collect())
}

/// Runs the selected claims against a context and collects deterministic
/// reports.  Claims whose standing hypotheses fail (most need a right
/// identity in A) report `hypothesis-not-met` instead of passing vacuously.
pub fn run_claims(ctx: &LauContext, opts: &RunOptions) -> Result<ClaimRun, TheoremError> {
    let selected = resolve_claims(opts.claims.as_deref())?;
    let jordan = generalized_jordan_space(ctx);
    let basis = jordan.basis();
    let need_der = selected
        .iter()
        .any(|id| id.starts_with("Thm2.4") || *id == "Cor2.5");
    let der = if need_der {
        Some(generalized_derivation_space(ctx))
    } else {
        None
    };
    let u_samples: Vec<Element> = ctx
        .a()
        .right_identities()
        .samples(4)
        .into_iter()
        .map(Element::from_coords)
        .collect();
    let no_u_note = "A has no right identity; the standing hypothesis fails".to_string();

    // The four per-map decomposition claims share one sweep over
    // (right identity, basis map) pairs.
    let thm22_ids = ["Thm2.2.i", "Thm2.2.ii", "Thm2.2.iii", "Thm2.2.uniqueness"];
    let need_thm22 = selected.iter().any(|id| thm22_ids.contains(id));
    let mut thm22_witnesses: Vec<Vec<Witness>> = vec![Vec::new(); thm22_ids.len()];
    if need_thm22 && !u_samples.is_empty() {
        for u in &u_samples {
            for (k, d) in basis.iter().enumerate() {
                for (slot, report) in check_theorem_2_2(ctx, d, u)?.into_iter().enumerate() {
                    for mut w in report.witnesses {
                        w.input = format!("Jordan basis [{k}], u = {u}: {}", w.input);
                        thm22_witnesses[slot].push(w);
                    }
                }
            }
        }
    }
    let thm22_note = |stmt: &str| {
        format!(
            "{stmt} for all {} Jordan basis maps × {} right identities",
            basis.len(),
            u_samples.len()
        )
    };

    let mut claims = Vec::new();
    for id in &selected {
        match *id {
            "Closure" => {
                let mut sampler = PointSampler::with_seed(opts.seed);
                let zero = Element::zero(ctx.dim());
                let mut witnesses = Vec::new();
                for (k, d) in basis.iter().enumerate() {
                    for _ in 0..opts.closure_points {
                        let x = sampler.element(ctx.dim());
                        let defect = quadratic_defect(ctx, d, &x)?;
                        if !defect.is_zero() {
                            witnesses.push(Witness::new(
                                format!("Jordan basis [{k}] at X = {x}"),
                                defect.to_string(),
                                zero.to_string(),
                            ));
                        }
                    }
                }
                claims.push(outcome(
                    "Closure",
                    witnesses,
                    format!(
                        "defining identity holds exactly at {} seeded points for each of {} basis maps",
                        opts.closure_points,
                        basis.len()
                    ),
                ));
            }
            "Lem2.1" => {
                if u_samples.is_empty() {
                    claims.push(VerificationReport::vacuous("Lem2.1", no_u_note.clone()));
                } else {
                    let mut witnesses = Vec::new();
                    for u in &u_samples {
                        for (k, d) in basis.iter().enumerate() {
                            for mut w in check_lemma_2_1(ctx, d, u)?.witnesses {
                                w.input = format!("Jordan basis [{k}]: {}", w.input);
                                witnesses.push(w);
                            }
                        }
                    }
                    claims.push(outcome(
                        "Lem2.1",
                        witnesses,
                        format!(
                            "A block preserved and d(u, 0) ∈ ran(A) × {{0}} for all {} Jordan basis maps × {} right identities",
                            basis.len(),
                            u_samples.len()
                        ),
                    ));
                }
            }
            "Thm2.2.i" | "Thm2.2.ii" | "Thm2.2.iii" | "Thm2.2.uniqueness" => {
                if u_samples.is_empty() {
                    claims.push(VerificationReport::vacuous(*id, no_u_note.clone()));
                } else {
                    let slot = thm22_ids.iter().position(|t| t == id).expect("known id");
                    let stmt = match slot {
                        0 => "reconstruction formula reproduces d with Jordan blocks",
                        1 => "bilinear identity holds on all basis pairs",
                        2 => "symmetrized quadratic identities vanish",
                        _ => "the reconstruction identity pins (d_A, d_B) uniquely",
                    };
                    claims.push(outcome(
                        id,
                        std::mem::take(&mut thm22_witnesses[slot]),
                        thm22_note(stmt),
                    ));
                }
            }
            "Thm2.2.converse" => {
                if u_samples.is_empty() {
                    claims.push(VerificationReport::vacuous(*id, no_u_note.clone()));
                } else {
                    claims.push(check_theorem_2_2_converse(ctx, &u_samples[0], &jordan)?);
                }
            }
            "Cor2.3.i" | "Cor2.3.ii" => {
                if u_samples.is_empty() {
                    claims.push(VerificationReport::vacuous(*id, no_u_note.clone()));
                } else {
                    let pair = check_corollary_2_3(ctx, &jordan, &u_samples[0])?;
                    let want = *id;
                    claims.extend(pair.into_iter().filter(|r| r.claim_id == want));
                }
            }
            "Thm2.4.forward" | "Thm2.4.backward" | "Thm2.4.formula" => {
                if u_samples.is_empty() {
                    claims.push(VerificationReport::vacuous(*id, no_u_note.clone()));
                } else {
                    let all = check_theorem_2_4(
                        ctx,
                        &u_samples[0],
                        &jordan,
                        der.as_ref().expect("derivation space computed"),
                    )?;
                    let want = *id;
                    claims.extend(all.into_iter().filter(|r| r.claim_id == want));
                }
            }
            "Cor2.5" => {
                claims.push(check_corollary_2_5(
                    ctx,
                    &jordan,
                    der.as_ref().expect("derivation space computed"),
                )?);
            }
            "Thm2.6" => {
                claims.push(run_thm_2_6(ctx, opts, &jordan, &u_samples)?);
            }
            other => unreachable!("unhandled claim id {other}"),
        }
    }
    Ok(ClaimRun {
        claims,
        context_digest: ctx.digest(),
    })
}

/// Aggregates `Thm2.6` over every ordered `(η₁, η₂)` pair from the pool.
fn run_thm_2_6(
    ctx: &LauContext,
    opts: &RunOptions,
    jordan: &MapSpace,
    u_samples: &[Element],
) -> Result<VerificationReport, TheoremError> {
    let mut missing = Vec::new();
    if u_samples.is_empty() {
        missing.push("A has a right identity");
    }
    if !ctx.b().is_semisimple() {
        missing.push("B is semisimple");
    }
    if ctx.theta().values == ctx.phi().values {
        missing.push("θ ≠ φ");
    }
    if !missing.is_empty() {
        return Ok(VerificationReport::vacuous(
            "Thm2.6",
            format!("unmet hypotheses: {}", missing.join(", ")),
        ));
    }
    let pool: Vec<(String, Character)> = if opts.etas.is_empty() {
        let mut pool: Vec<(String, Character)> = Vec::new();
        for (name, chi) in [
            ("theta", ctx.theta()),
            ("phi", ctx.phi()),
            ("gamma", ctx.gamma()),
        ] {
            if !pool.iter().any(|(_, c)| c.values == chi.values) {
                pool.push((name.to_string(), chi.clone()));
            }
        }
        pool
    } else {
        opts.etas.clone()
    };
    let mut witnesses = Vec::new();
    for (name1, eta1) in &pool {
        for (name2, eta2) in &pool {
            let report = check_theorem_2_6(ctx, eta1, eta2, jordan)?;
            for mut w in report.witnesses {
                w.input = format!("(η₁, η₂) = ({name1}, {name2}): {}", w.input);
                witnesses.push(w);
            }
        }
    }
    Ok(outcome(
        "Thm2.6",
        witnesses,
        format!(
            "centralizing subspace of the {}-dim Jordan space is zero for all {} (η₁, η₂) pairs",
            jordan.dim(),
            pool.len() * pool.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::inner_derivation;
    use crate::zoo;

    fn ctx(name: &str) -> LauContext {
        zoo::zoo_context(name).unwrap()
    }

    fn canonical_u(ctx: &LauContext) -> Element {
        Element::from_coords(
            ctx.a()
                .right_identities()
                .samples(0)
                .into_iter()
                .next()
                .expect("A has a right identity"),
        )
    }

    /// Extends a self-map of A to the product by zero on the B block.
    fn extend_by_zero(ctx: &LauContext, da: &LinearMap) -> LinearMap {
        let m = ctx.a().dim();
        let total = ctx.dim();
        let mut mat = Matrix::zeros(total, total);
        for r in 0..m {
            for c in 0..m {
                mat.set(r, c, da.matrix().get(r, c).clone());
            }
        }
        LinearMap::new(mat).unwrap()
    }

    #[test]
    fn decompose_recovers_transported_inner_derivation() {
        let c = ctx("unitization-M2");
        let m2 = c.a().clone();
        let delta = inner_derivation(&m2, &m2.basis_element(1)).unwrap();
        let d = extend_by_zero(&c, &delta);
        let u = canonical_u(&c);
        let dec = decompose(&c, &d, &u, true).unwrap();
        assert_eq!(dec.d_a, delta);
        assert!(dec.d_b.matrix().is_zero());
    }

    #[test]
    fn decompose_strict_rejects_outsiders() {
        let c = ctx("gammatheta-colalg2-Q2");
        let u = canonical_u(&c);
        let err = decompose(&c, &LinearMap::identity(c.dim()), &u, false);
        assert!(err.is_ok(), "non-strict mode only projects");
        let err = decompose(&c, &LinearMap::identity(c.dim()), &u, true);
        assert!(matches!(err, Err(TheoremError::NotJordanMember { .. })));
    }

    #[test]
    fn decompose_rejects_bad_right_identity() {
        let c = ctx("unitization-M2");
        let bad = Element::zero(c.a().dim());
        let err = decompose(&c, &LinearMap::zero(c.dim()), &bad, false);
        assert!(matches!(err, Err(TheoremError::NotRightIdentity { .. })));
    }

    #[test]
    fn lemma_2_1_passes_on_jordan_basis_for_all_right_identities() {
        let c = ctx("thm26-colalg2-Q2");
        let jordan = generalized_jordan_space(&c);
        let u_samples: Vec<Element> = c
            .a()
            .right_identities()
            .samples(4)
            .into_iter()
            .map(Element::from_coords)
            .collect();
        assert_eq!(u_samples.len(), 5, "colalg2 has a line of right identities");
        for u in &u_samples {
            for d in jordan.basis() {
                let report = check_lemma_2_1(&c, &d, u).unwrap();
                assert!(report.is_pass(), "unexpected: {:?}", report.witnesses);
            }
        }
    }

    #[test]
    fn lemma_2_1_flags_a_block_leak() {
        let c = ctx("thm26-colalg2-Q2");
        let u = canonical_u(&c);
        // Send the first A basis vector to a B basis vector.
        let mut mat = Matrix::zeros(c.dim(), c.dim());
        mat.set(c.a().dim(), 0, Scalar::one());
        let leak = LinearMap::new(mat).unwrap();
        let report = check_lemma_2_1(&c, &leak, &u).unwrap();
        assert!(report.is_fail());
        assert!(report.witnesses[0].input.contains("B component"));
        assert_ne!(report.witnesses[0].lhs, report.witnesses[0].rhs);
    }

    #[test]
    fn theorem_2_2_all_subclaims_pass_on_unitization() {
        let c = ctx("unitization-T2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        assert!(jordan.dim() > 0, "need a nontrivial space for this test");
        for d in jordan.basis() {
            for report in check_theorem_2_2(&c, &d, &u).unwrap() {
                assert!(
                    report.is_pass(),
                    "{} failed: {:?}",
                    report.claim_id,
                    report.witnesses
                );
            }
        }
    }

    #[test]
    fn theorem_2_2_subclaims_pass_across_u_choices_on_colalg2() {
        let c = ctx("gammatheta-colalg2-Q2");
        let jordan = generalized_jordan_space(&c);
        assert_eq!(jordan.dim(), 1);
        for u in c.a().right_identities().samples(4) {
            let u = Element::from_coords(u);
            for d in jordan.basis() {
                for report in check_theorem_2_2(&c, &d, &u).unwrap() {
                    assert!(
                        report.is_pass(),
                        "{} failed for u = {u}: {:?}",
                        report.claim_id,
                        report.witnesses
                    );
                }
            }
        }
    }

    #[test]
    fn converse_pair_space_matches_jordan_dimension() {
        for name in ["gammatheta-colalg2-Q2", "cor25-M2-Q2", "unitization-T2"] {
            let c = ctx(name);
            let u = canonical_u(&c);
            let jordan = generalized_jordan_space(&c);
            let report = check_theorem_2_2_converse(&c, &u, &jordan).unwrap();
            assert!(
                report.is_pass(),
                "{name} converse failed: {:?}",
                report.witnesses
            );
        }
    }

    #[test]
    fn corollary_2_3_left_branch_and_annihilator_branch() {
        // All characters equal: left branch.
        let c = ctx("unitization-M2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        let reports = check_corollary_2_3(&c, &jordan, &u).unwrap();
        assert!(reports.iter().all(VerificationReport::is_pass));
        assert!(reports[0].notes.contains("left branch"));

        // Characters differ over colalg2: images land in ran(A) × {0}; the
        // strengthened claim does not apply.
        let c = ctx("thm26-colalg2-Q2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        let reports = check_corollary_2_3(&c, &jordan, &u).unwrap();
        assert!(reports[0].is_pass());
        assert_eq!(reports[1].status, ClaimStatus::HypothesisNotMet);

        // Characters differ over unital A with a nonzero space: maps vanish
        // on the A block.
        let c = ctx("cor25-M2-Q2M2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        assert!(jordan.dim() > 0);
        let reports = check_corollary_2_3(&c, &jordan, &u).unwrap();
        assert!(reports.iter().all(VerificationReport::is_pass));
    }

    #[test]
    fn theorem_2_4_cuts_jordan_space_to_derivation_space() {
        // Strict containment context: the 1-dim Jordan space must be cut to
        // the 0-dim derivation space by conditions (i)–(iv).
        let c = ctx("gammatheta-colalg2-Q2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        assert_eq!((jordan.dim(), der.dim()), (1, 0));
        let reports = check_theorem_2_4(&c, &u, &jordan, &der).unwrap();
        for report in &reports {
            assert!(
                report.is_pass(),
                "{} failed: {:?}",
                report.claim_id,
                report.witnesses
            );
        }

        // Equality context with nontrivial forward checks.
        let c = ctx("unitization-T2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        assert!(der.dim() > 0);
        let reports = check_theorem_2_4(&c, &u, &jordan, &der).unwrap();
        assert!(reports[0].is_pass());
        assert!(reports[1].is_pass());
        assert_eq!(reports[2].status, ClaimStatus::HypothesisNotMet); // T2~ has a unit
    }

    #[test]
    fn theorem_2_4_formula_applies_on_identity_free_contexts() {
        let c = ctx("thm26-colalg2-Q2");
        let u = canonical_u(&c);
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        let reports = check_theorem_2_4(&c, &u, &jordan, &der).unwrap();
        let formula = reports.iter().find(|r| r.claim_id == "Thm2.4.formula").unwrap();
        assert!(formula.is_pass(), "{:?}", formula.witnesses);
        assert!(formula.notes.contains("no two-sided identity"));
    }

    #[test]
    fn corollary_2_5_bijection_and_vacuous_paths() {
        // Nontrivial: dim 3 on both sides via the 2x2 matrix block in B.
        let c = ctx("cor25-M2-Q2M2");
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        assert_eq!(jordan.dim(), 3);
        let report = check_corollary_2_5(&c, &jordan, &der).unwrap();
        assert!(report.is_pass(), "{:?}", report.witnesses);

        // Trivial: both sides zero.
        let c = ctx("cor25-M2-Q2");
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        assert_eq!(jordan.dim(), 0);
        assert!(check_corollary_2_5(&c, &jordan, &der).unwrap().is_pass());

        // θ = φ: hypotheses unmet.
        let c = ctx("unitization-M2");
        let jordan = generalized_jordan_space(&c);
        let der = generalized_derivation_space(&c);
        let report = check_corollary_2_5(&c, &jordan, &der).unwrap();
        assert_eq!(report.status, ClaimStatus::HypothesisNotMet);
        assert!(report.notes.contains("θ ≠ φ"));
    }

    #[test]
    fn centralizing_subspace_is_everything_on_commutative_factors() {
        let c = ctx("comm-Q2-Q2");
        let jordan = generalized_jordan_space(&c);
        let eta = c.theta().clone();
        let central = centralizing_subspace(&c, &jordan, &eta, &eta).unwrap();
        assert!(central.equal(&jordan).unwrap());
    }

    #[test]
    fn centralizing_subspace_rejects_non_character() {
        let c = ctx("thm26-colalg2-Q2");
        let jordan = generalized_jordan_space(&c);
        let bad = Character::new(vec![Scalar::one(), Scalar::one()]);
        let err = centralizing_subspace(&c, &jordan, &bad, &bad);
        assert!(matches!(err, Err(TheoremError::BadFunctional(_))));
    }

    #[test]
    fn theorem_2_6_zero_subspace_and_vacuous_paths() {
        let c = ctx("thm26-colalg2-Q2");
        let jordan = generalized_jordan_space(&c);
        let chi1 = zoo::zoo_character(&zoo::zoo_get("Q2").unwrap(), "chi1").unwrap();
        let chi2 = zoo::zoo_character(&zoo::zoo_get("Q2").unwrap(), "chi2").unwrap();
        for eta1 in [&chi1, &chi2] {
            for eta2 in [&chi1, &chi2] {
                let report = check_theorem_2_6(&c, eta1, eta2, &jordan).unwrap();
                assert!(report.is_pass(), "{:?}", report.witnesses);
            }
        }

        let c = ctx("nonss-colalg2-Qdual");
        let jordan = generalized_jordan_space(&c);
        let chi = c.theta().clone();
        let report = check_theorem_2_6(&c, &chi, &chi, &jordan).unwrap();
        assert_eq!(report.status, ClaimStatus::HypothesisNotMet);
        assert!(report.notes.contains("B is semisimple"));
        assert!(report.notes.contains("θ ≠ φ"));
    }

    #[test]
    fn run_claims_unitization_m2_statuses() {
        let c = ctx("unitization-M2");
        let opts = RunOptions {
            closure_points: 10,
            ..RunOptions::default()
        };
        let run = run_claims(&c, &opts).unwrap();
        assert_eq!(run.claims.len(), CLAIM_IDS.len());
        assert_eq!(run.context_digest.len(), 64);
        for report in &run.claims {
            let expected = match report.claim_id.as_str() {
                // θ = φ = γ and A is unital, so these three do not apply.
                "Thm2.4.formula" | "Cor2.5" | "Thm2.6" => ClaimStatus::HypothesisNotMet,
                _ => ClaimStatus::Pass,
            };
            assert_eq!(
                report.status, expected,
                "{}: {:?} {:?}",
                report.claim_id, report.notes, report.witnesses
            );
        }
    }

    #[test]
    fn run_claims_no_right_identity_context() {
        let c = ctx("nohyp-zero1-Q");
        let opts = RunOptions {
            closure_points: 10,
            ..RunOptions::default()
        };
        let run = run_claims(&c, &opts).unwrap();
        for report in &run.claims {
            match report.claim_id.as_str() {
                "Closure" => assert!(report.is_pass()),
                _ => assert_eq!(
                    report.status,
                    ClaimStatus::HypothesisNotMet,
                    "{} should be vacuous without a right identity",
                    report.claim_id
                ),
            }
        }
    }

    #[test]
    fn run_claims_filters_and_rejects_unknown_ids() {
        let c = ctx("unitization-M2");
        let opts = RunOptions {
            claims: Some(vec!["Thm2.2".into()]),
            closure_points: 5,
            ..RunOptions::default()
        };
        let run = run_claims(&c, &opts).unwrap();
        let ids: Vec<&str> = run.claims.iter().map(|r| r.claim_id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "Thm2.2.i",
                "Thm2.2.ii",
                "Thm2.2.iii",
                "Thm2.2.uniqueness",
                "Thm2.2.converse"
            ]
        );

        let opts = RunOptions {
            claims: Some(vec!["Thm9.9".into()]),
            ..RunOptions::default()
        };
        assert!(matches!(
            run_claims(&c, &opts),
            Err(TheoremError::UnknownClaim(_))
        ));
    }

    #[test]
    fn run_claims_reports_are_byte_deterministic() {
        let c = ctx("thm26-colalg2-Q2");
        let entry = zoo::zoo_get("Q2").unwrap();
        let opts = RunOptions {
            closure_points: 25,
            etas: entry.characters.clone(),
            ..RunOptions::default()
        };
        let first = serde_json::to_string(&run_claims(&c, &opts).unwrap()).unwrap();
        let second = serde_json::to_string(&run_claims(&c, &opts).unwrap()).unwrap();
        assert_eq!(first, second);
        assert!(first.contains("\"context_digest\""));
    }

    #[test]
    fn claim_catalog_resolution() {
        assert_eq!(resolve_claims(None).unwrap(), CLAIM_IDS.to_vec());
        let picked = resolve_claims(Some(&["Cor2.3".to_string(), "Closure".to_string()]))
            .unwrap();
        assert_eq!(picked, ["Closure", "Cor2.3.i", "Cor2.3.ii"]);
    }
}
