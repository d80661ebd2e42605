//! Acceptance suite: one test per release criterion, each printing a single
//! `[criterion N] PASS` line (visible with `--nocapture`).  All checks are
//! exact; there are no tolerances anywhere.

mod common;

use std::time::Instant;

use lauder_core::algebra::Element;
use lauder_core::lau::LauContext;
use lauder_core::linalg::Subspace;
use lauder_core::sampling::PointSampler;
use lauder_core::solver::{
    derivation_space, generalized_derivation_space, generalized_jordan_space,
    jordan_derivation_space, quadratic_defect,
};
use lauder_core::theorems::{
    centralizing_subspace, check_corollary_2_3, check_corollary_2_5, check_lemma_2_1,
    check_theorem_2_2, check_theorem_2_2_converse, check_theorem_2_4, run_claims, ClaimStatus,
    RunOptions,
};
use lauder_core::zoo::{zoo_contexts, zoo_get, zoo_list, ZooEntry};

use common::{
    hand_unitization, oracle_derivation_space, oracle_jordan_derivation_space, OracleSpace,
};

const CLOSURE_POINTS: usize = 200;

fn right_identity_samples(ctx: &LauContext, extra: usize) -> Vec<Element> {
    ctx.a()
        .right_identities()
        .samples(extra)
        .into_iter()
        .map(Element::from_coords)
        .collect()
}

fn canonical_u(ctx: &LauContext) -> Option<Element> {
    right_identity_samples(ctx, 0).into_iter().next()
}

/// The zoo entry whose algebra is the B factor of `ctx` (matched by exact
/// structure-constant equality).
fn b_entry(ctx: &LauContext) -> Option<ZooEntry> {
    zoo_list()
        .into_iter()
        .map(|name| zoo_get(&name).expect("listed entries resolve"))
        .find(|entry| entry.algebra == *ctx.b())
}

fn oracle_subspace(ambient_dim: usize, space: &OracleSpace) -> Subspace {
    Subspace::from_rows(ambient_dim * ambient_dim, space.basis_row_major.clone())
        .expect("oracle basis rows are well-formed")
}

#[test]
fn criterion_01_closure() {
    let start = Instant::now();
    let contexts = zoo_contexts();
    assert!(
        contexts.len() >= 10,
        "need at least 10 contexts, have {}",
        contexts.len()
    );
    let mut maps_checked = 0usize;
    for (name, ctx) in &contexts {
        let jordan = generalized_jordan_space(ctx);
        let mut sampler = PointSampler::from_env();
        for d in jordan.basis() {
            maps_checked += 1;
            for k in 0..CLOSURE_POINTS {
                let x = sampler.element(ctx.dim());
                let defect = quadratic_defect(ctx, &d, &x).expect("dimensions agree");
                assert!(
                    defect.is_zero(),
                    "[criterion 1] FAIL — nonzero defect in {name} at point {k}: {defect}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "[criterion 1] FAIL — closure sweep took {elapsed:?}, budget is 10 s"
    );
    println!(
        "[criterion 1] PASS — zero defect at {CLOSURE_POINTS} seeded points for {maps_checked} \
         basis maps across {} contexts in {elapsed:?}",
        contexts.len()
    );
}

#[test]
fn criterion_02_lemma_2_1() {
    let mut covered = 0usize;
    for (name, ctx) in zoo_contexts() {
        let u_samples = right_identity_samples(&ctx, 4);
        if u_samples.is_empty() {
            continue;
        }
        covered += 1;
        let jordan = generalized_jordan_space(&ctx);
        for u in &u_samples {
            for d in jordan.basis() {
                let report = check_lemma_2_1(&ctx, &d, u).expect("inputs are valid");
                assert!(
                    report.is_pass(),
                    "[criterion 2] FAIL — {name}, u = {u}: {:?}",
                    report.witnesses
                );
            }
        }
    }
    assert!(covered >= 10, "only {covered} contexts have a right identity");
    println!(
        "[criterion 2] PASS — A-block preservation and d(u, 0) ∈ ran(A) × {{0}} on {covered} \
         contexts, canonical u plus alternates"
    );
}

#[test]
fn criterion_03_theorem_2_2() {
    let mut covered = 0usize;
    for (name, ctx) in zoo_contexts() {
        let Some(u) = canonical_u(&ctx) else { continue };
        covered += 1;
        let jordan = generalized_jordan_space(&ctx);
        for d in jordan.basis() {
            for report in check_theorem_2_2(&ctx, &d, &u).expect("inputs are valid") {
                assert!(
                    report.is_pass(),
                    "[criterion 3] FAIL — {name} {}: {:?}",
                    report.claim_id,
                    report.witnesses
                );
            }
        }
        let converse = check_theorem_2_2_converse(&ctx, &u, &jordan).expect("inputs are valid");
        assert!(
            converse.is_pass(),
            "[criterion 3] FAIL — {name} converse: {:?}",
            converse.witnesses
        );
    }
    assert!(covered >= 10);
    println!(
        "[criterion 3] PASS — reconstruction formula, side conditions, uniqueness, and \
         pair-space tightness on {covered} contexts"
    );
}

#[test]
fn criterion_04_corollary_2_3() {
    let mut unequal = 0usize;
    let mut strengthened = 0usize;
    for (name, ctx) in zoo_contexts() {
        let Some(u) = canonical_u(&ctx) else { continue };
        let chars_all_equal = ctx.theta().values == ctx.phi().values
            && ctx.phi().values == ctx.gamma().values;
        if chars_all_equal {
            continue;
        }
        unequal += 1;
        let jordan = generalized_jordan_space(&ctx);
        let reports = check_corollary_2_3(&ctx, &jordan, &u).expect("inputs are valid");
        assert!(
            reports[0].is_pass(),
            "[criterion 4] FAIL — {name} annihilator branch: {:?}",
            reports[0].witnesses
        );
        if ctx.a().is_unital() || ctx.a().is_semisimple() {
            strengthened += 1;
            assert_eq!(
                reports[1].status,
                ClaimStatus::Pass,
                "[criterion 4] FAIL — {name} strengthened branch: {:?}",
                reports[1].witnesses
            );
        } else {
            assert_eq!(reports[1].status, ClaimStatus::HypothesisNotMet);
        }
    }
    assert!(unequal >= 4, "only {unequal} contexts with unequal characters");
    assert!(strengthened >= 2, "need unital/semisimple A coverage");
    println!(
        "[criterion 4] PASS — dichotomy on {unequal} unequal-character contexts \
         ({strengthened} with the strengthened zero conclusion)"
    );
}

#[test]
fn criterion_05_theorem_2_4() {
    let mut covered = 0usize;
    let mut formula_contexts = 0usize;
    for (name, ctx) in zoo_contexts() {
        let Some(u) = canonical_u(&ctx) else { continue };
        covered += 1;
        let jordan = generalized_jordan_space(&ctx);
        let der = generalized_derivation_space(&ctx);
        let reports = check_theorem_2_4(&ctx, &u, &jordan, &der).expect("inputs are valid");
        for report in &reports[..2] {
            assert!(
                report.is_pass(),
                "[criterion 5] FAIL — {name} {}: {:?}",
                report.claim_id,
                report.witnesses
            );
        }
        let formula = &reports[2];
        if name.contains("colalg2") {
            formula_contexts += 1;
            assert!(
                formula.is_pass(),
                "[criterion 5] FAIL — {name} display formula: {:?}",
                formula.witnesses
            );
        } else {
            assert_eq!(
                formula.status,
                ClaimStatus::HypothesisNotMet,
                "[criterion 5] FAIL — {name}: unital A should skip the display formula"
            );
        }
    }
    assert!(covered >= 10);
    assert!(formula_contexts >= 4, "need identity-free A coverage");
    println!(
        "[criterion 5] PASS — conditions (i)–(iv) carve the derivation space on {covered} \
         contexts; display formula verified on {formula_contexts} identity-free contexts"
    );
}

#[test]
fn criterion_06_corollary_2_5() {
    for name in ["cor25-M2-Q2", "cor25-M2-Q3"] {
        let ctx = lauder_core::zoo::zoo_context(name).expect("zoo context exists");
        let jordan = generalized_jordan_space(&ctx);
        let der = generalized_derivation_space(&ctx);
        let report = check_corollary_2_5(&ctx, &jordan, &der).expect("inputs are valid");
        assert!(
            report.is_pass(),
            "[criterion 6] FAIL — {name}: {:?} ({})",
            report.witnesses,
            report.notes
        );
        assert!(jordan.equal(&der).expect("same ambient"));
        let oracle_b = oracle_derivation_space(ctx.b());
        assert_eq!(
            oracle_b.dim, 0,
            "[criterion 6] FAIL — independent oracle disagrees on Der(B) for {name}"
        );
        assert_eq!(jordan.dim(), 0);
    }
    // A richer B factor with a nonzero derivation space exercises the
    // bijection nontrivially.
    let ctx = lauder_core::zoo::zoo_context("cor25-M2-Q2M2").expect("zoo context exists");
    let jordan = generalized_jordan_space(&ctx);
    let der = generalized_derivation_space(&ctx);
    let report = check_corollary_2_5(&ctx, &jordan, &der).expect("inputs are valid");
    assert!(report.is_pass(), "{:?}", report.witnesses);
    assert_eq!(jordan.dim(), 3);
    assert_eq!(oracle_derivation_space(ctx.b()).dim, 3);
    println!(
        "[criterion 6] PASS — Jordan space = derivation space with the d ↦ d_B bijection onto \
         Der(B), at dim 0 (Q², Q³) and dim 3 (Q² ⊕ M2), oracle-confirmed"
    );
}

#[test]
fn criterion_07_theorem_2_6() {
    let mut covered = 0usize;
    let mut pairs_checked = 0usize;
    for (name, ctx) in zoo_contexts() {
        if canonical_u(&ctx).is_none()
            || !ctx.b().is_semisimple()
            || ctx.theta().values == ctx.phi().values
        {
            continue;
        }
        covered += 1;
        let jordan = generalized_jordan_space(&ctx);
        let entry = b_entry(&ctx).expect("B factor comes from the zoo");
        for (n1, eta1) in &entry.characters {
            for (n2, eta2) in &entry.characters {
                pairs_checked += 1;
                let central = centralizing_subspace(&ctx, &jordan, eta1, eta2)
                    .expect("characters verify");
                assert_eq!(
                    central.dim(),
                    0,
                    "[criterion 7] FAIL — {name} has a nonzero ({n1}, {n2})-centralizing map"
                );
            }
        }
    }
    assert!(covered >= 5, "only {covered} contexts meet the hypotheses");
    println!(
        "[criterion 7] PASS — zero centralizing subspace on {covered} contexts, \
         {pairs_checked} (η₁, η₂) pairs"
    );
}

#[test]
fn criterion_08_unitization_cross_check() {
    for a_name in ["M2", "T2", "colalg2"] {
        let ctx = lauder_core::zoo::zoo_context(&format!("unitization-{a_name}"))
            .expect("zoo context exists");
        let hand = hand_unitization(&zoo_get(a_name).expect("entry exists").algebra);
        assert_eq!(
            ctx.product().sc(),
            hand.sc(),
            "[criterion 8] FAIL — {a_name}: weighted product tensor differs from the \
             hand-built identity adjunction"
        );

        let der_gen = generalized_derivation_space(&ctx);
        let jder_gen = generalized_jordan_space(&ctx);
        // Classic path: plain solvers on the product algebra.
        let der_classic = derivation_space(ctx.product());
        let jder_classic = jordan_derivation_space(ctx.product());
        assert!(der_gen.equal(&der_classic).expect("same ambient"));
        assert!(jder_gen.equal(&jder_classic).expect("same ambient"));
        // Fully independent path: raw-tensor assembly + local elimination.
        let n = hand.dim();
        let oracle_der = oracle_subspace(n, &oracle_derivation_space(&hand));
        let oracle_jder = oracle_subspace(n, &oracle_jordan_derivation_space(&hand));
        assert!(
            der_gen.subspace().equal(&oracle_der).expect("same ambient"),
            "[criterion 8] FAIL — {a_name}: derivation spaces disagree with the oracle"
        );
        assert!(
            jder_gen.subspace().equal(&oracle_jder).expect("same ambient"),
            "[criterion 8] FAIL — {a_name}: squared-rule spaces disagree with the oracle"
        );
    }
    println!(
        "[criterion 8] PASS — weighted-product and classic identity-adjunction spaces coincide \
         for M2, T2, and the column algebra, against an independent oracle"
    );
}

#[test]
fn criterion_09_frozen_golden_dimensions() {
    let golden: [(&str, usize); 4] = [("M2", 3), ("Q2", 0), ("Qdual", 1), ("T2", 2)];
    for (name, expected) in golden {
        let alg = zoo_get(name).expect("entry exists").algebra;
        let main_dim = derivation_space(&alg).dim();
        let oracle_dim = oracle_derivation_space(&alg).dim;
        assert_eq!(
            main_dim, expected,
            "[criterion 9] FAIL — derivation dimension of {name}"
        );
        assert_eq!(
            oracle_dim, expected,
            "[criterion 9] FAIL — oracle derivation dimension of {name}"
        );
    }
    let m2 = zoo_get("M2").expect("entry exists").algebra;
    let der = derivation_space(&m2);
    let jder = jordan_derivation_space(&m2);
    assert!(der.equal(&jder).expect("same ambient"));
    assert_eq!(oracle_jordan_derivation_space(&m2).dim, 3);
    println!(
        "[criterion 9] PASS — frozen dimensions match on both code paths: \
         der(M2)=3, der(Q2)=0, der(Qdual)=1, der(T2)=2, squared rule = product rule on M2"
    );
}

#[test]
fn criterion_10_determinism() {
    let start = Instant::now();
    let opts = RunOptions::default();
    for (name, ctx) in zoo_contexts() {
        let first = serde_json::to_string(&run_claims(&ctx, &opts).expect("claims run"))
            .expect("reports serialize");
        let second = serde_json::to_string(&run_claims(&ctx, &opts).expect("claims run"))
            .expect("reports serialize");
        assert_eq!(
            first, second,
            "[criterion 10] FAIL — report bytes differ between runs on {name}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "[criterion 10] FAIL — double verification sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "[criterion 10] PASS — byte-identical reports on every context, double sweep in \
         {elapsed:?}"
    );
}
