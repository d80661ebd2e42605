//! A fixed registry of small algebras and named product contexts used by the
//! verification harness and the CLI. Every entry is rebuilt and revalidated
//! on access: associativity, character validity, and the structural tags are
//! all rederived rather than trusted.

use crate::algebra::{Algebra, Character};
use crate::lau::{LauContext, LauError};
use crate::scalar::Scalar;
use std::collections::BTreeSet;
use thiserror::Error;

/// Structural facts about a zoo algebra, rederivable from the algebra itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    Unital,
    RightIdentityOnly,
    NoRightIdentity,
    Semisimple,
    Commutative,
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Tag::Unital => "unital",
            Tag::RightIdentityOnly => "right-identity-only",
            Tag::NoRightIdentity => "no-right-identity",
            Tag::Semisimple => "semisimple",
            Tag::Commutative => "commutative",
        };
        f.write_str(s)
    }
}

/// A named algebra with its valid characters and tags.
#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub algebra: Algebra,
    pub characters: Vec<(String, Character)>,
    pub tags: BTreeSet<Tag>,
}

/// A named recipe for building a product context out of zoo entries.
#[derive(Clone, Copy, Debug)]
pub struct ContextSpec {
    pub name: &'static str,
    pub a: &'static str,
    pub b: &'static str,
    pub theta: &'static str,
    pub phi: &'static str,
    pub gamma: &'static str,
}

#[derive(Debug, Error)]
pub enum ZooError {
    #[error("unknown zoo algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("unknown zoo context {0:?}")]
    UnknownContext(String),
    #[error("algebra {name:?} has no character named {character:?}")]
    UnknownCharacter { name: String, character: String },
    #[error("zoo entry {name:?} failed validation: {detail}")]
    Invalid { name: String, detail: String },
    #[error(transparent)]
    Lau(#[from] LauError),
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn chi(values: &[i64]) -> Character {
    Character::new(values.iter().map(|&v| s(v)).collect())
}

fn sc_from_triples(dim: usize, triples: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<Scalar>>> {
    let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for &(i, j, k, v) in triples {
        sc[i][j][k] = s(v);
    }
    sc
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|&n| n.to_owned()).collect()
}

/// `n x n` matrix units: `E_ab E_cd = delta_bc E_ad`, flattened row-major.
fn matrix_units_sc(n: usize) -> Vec<Vec<Vec<Scalar>>> {
    let dim = n * n;
    let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b == c {
                        sc[a * n + b][c * n + d][a * n + d] = Scalar::one();
                    }
                }
            }
        }
    }
    sc
}

fn build_algebra(name: &str) -> Option<(Algebra, Vec<(String, Character)>)> {
    let named = |alg: Result<Algebra, _>, chars: Vec<(&str, Character)>| {
        let alg = alg.expect("zoo tensors are associative");
        let chars = chars
            .into_iter()
            .map(|(n, c)| (n.to_owned(), c))
            .collect();
        Some((alg, chars))
    };
    match name {
        // the rationals as a one-dimensional algebra; "id" is the identity functional
        "Q" => named(
            Algebra::new(labels(&["1"]), sc_from_triples(1, &[(0, 0, 0, 1)])),
            vec![("id", chi(&[1]))],
        ),
        // product of two copies of Q: two orthogonal idempotents
        "Q2" => named(
            Algebra::new(
                labels(&["p1", "p2"]),
                sc_from_triples(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
            ),
            vec![("chi1", chi(&[1, 0])), ("chi2", chi(&[0, 1]))],
        ),
        "Q3" => named(
            Algebra::new(
                labels(&["p1", "p2", "p3"]),
                sc_from_triples(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]),
            ),
            vec![
                ("chi1", chi(&[1, 0, 0])),
                ("chi2", chi(&[0, 1, 0])),
                ("chi3", chi(&[0, 0, 1])),
            ],
        ),
        // dual numbers Q[t]/(t^2): unital, non-semisimple
        "Qdual" => named(
            Algebra::new(
                labels(&["1", "t"]),
                sc_from_triples(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            ),
            vec![("chi", chi(&[1, 0]))],
        ),
        // upper triangular 2x2 matrices
        "T2" => named(
            Algebra::new(
                labels(&["E11", "E12", "E22"]),
                sc_from_triples(
                    3,
                    &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
                ),
            ),
            vec![("chi1", chi(&[1, 0, 0])), ("chi2", chi(&[0, 0, 1]))],
        ),
        // full 2x2 matrix algebra; no characters exist
        "M2" => named(
            Algebra::new(labels(&["E11", "E12", "E21", "E22"]), matrix_units_sc(2)),
            vec![],
        ),
        // first-column 2x2 matrices: a right identity but no two-sided one
        "colalg2" => named(
            Algebra::new(
                labels(&["e1", "e2"]),
                sc_from_triples(2, &[(0, 0, 0, 1), (1, 0, 1, 1)]),
            ),
            vec![("chi", chi(&[1, 0]))],
        ),
        // one-dimensional algebra with zero multiplication
        "zero1" => named(
            Algebra::new(labels(&["z"]), sc_from_triples(1, &[])),
            vec![],
        ),
        // Q x Q x M2: semisimple with two characters and a nonzero derivation space
        "Q2M2" => {
            let dim = 6;
            let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
            sc[0][0][0] = Scalar::one();
            sc[1][1][1] = Scalar::one();
            let m2 = matrix_units_sc(2);
            for i in 0..4 {
                for j in 0..4 {
                    for k in 0..4 {
                        sc[2 + i][2 + j][2 + k] = m2[i][j][k].clone();
                    }
                }
            }
            named(
                Algebra::new(labels(&["q1", "q2", "E11", "E12", "E21", "E22"]), sc),
                vec![
                    ("chi1", chi(&[1, 0, 0, 0, 0, 0])),
                    ("chi2", chi(&[0, 1, 0, 0, 0, 0])),
                ],
            )
        }
        _ => None,
    }
}

fn derive_tags(alg: &Algebra) -> BTreeSet<Tag> {
    let mut tags = BTreeSet::new();
    if alg.is_unital() {
        tags.insert(Tag::Unital);
    } else if alg.right_identities().is_consistent() {
        tags.insert(Tag::RightIdentityOnly);
    } else {
        tags.insert(Tag::NoRightIdentity);
    }
    if alg.is_semisimple() {
        tags.insert(Tag::Semisimple);
    }
    if alg.is_commutative() {
        tags.insert(Tag::Commutative);
    }
    tags
}

/// Names of every zoo algebra, in presentation order.
pub fn zoo_list() -> Vec<&'static str> {
    vec![
        "Q", "Q2", "Q3", "Qdual", "T2", "M2", "colalg2", "zero1", "Q2M2",
    ]
}

/// Builds and validates a zoo algebra by name.
pub fn zoo_get(name: &str) -> Result<ZooEntry, ZooError> {
    let (algebra, characters) =
        build_algebra(name).ok_or_else(|| ZooError::UnknownAlgebra(name.to_owned()))?;
    for (cname, c) in &characters {
        let violations = algebra.verify_character(c);
        if !violations.is_empty() {
            return Err(ZooError::Invalid {
                name: name.to_owned(),
                detail: format!("character {cname:?}: {}", violations[0]),
            });
        }
    }
    Ok(ZooEntry {
        name: name.to_owned(),
        algebra: algebra.clone(),
        characters,
        tags: derive_tags(&algebra),
    })
}

/// The named product contexts exercised by the verification harness. The set
/// covers: all three functionals equal; theta distinct with gamma = phi;
/// gamma = theta distinct from phi; all three distinct; semisimple and
/// non-semisimple B; and A unital, with only a right identity, and with none.
pub fn zoo_context_specs() -> Vec<ContextSpec> {
    const SPECS: &[ContextSpec] = &[
        ContextSpec { name: "unitization-M2", a: "M2", b: "Q", theta: "id", phi: "id", gamma: "id" },
        ContextSpec { name: "unitization-T2", a: "T2", b: "Q", theta: "id", phi: "id", gamma: "id" },
        ContextSpec { name: "unitization-colalg2", a: "colalg2", b: "Q", theta: "id", phi: "id", gamma: "id" },
        ContextSpec { name: "cor25-M2-Q2", a: "M2", b: "Q2", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "cor25-M2-Q3", a: "M2", b: "Q3", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "cor25-M2-Q2M2", a: "M2", b: "Q2M2", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "thm26-colalg2-Q2", a: "colalg2", b: "Q2", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "gammatheta-colalg2-Q2", a: "colalg2", b: "Q2", theta: "chi1", phi: "chi2", gamma: "chi1" },
        ContextSpec { name: "alldistinct-M2-Q3", a: "M2", b: "Q3", theta: "chi1", phi: "chi2", gamma: "chi3" },
        ContextSpec { name: "alldistinct-colalg2-Q3", a: "colalg2", b: "Q3", theta: "chi1", phi: "chi2", gamma: "chi3" },
        ContextSpec { name: "nonss-colalg2-Qdual", a: "colalg2", b: "Qdual", theta: "chi", phi: "chi", gamma: "chi" },
        ContextSpec { name: "nonss-M2-T2", a: "M2", b: "T2", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "nonss-colalg2-T2", a: "colalg2", b: "T2", theta: "chi1", phi: "chi2", gamma: "chi2" },
        ContextSpec { name: "comm-Q2-Q2", a: "Q2", b: "Q2", theta: "chi1", phi: "chi1", gamma: "chi1" },
        ContextSpec { name: "nohyp-zero1-Q", a: "zero1", b: "Q", theta: "id", phi: "id", gamma: "id" },
    ];
    SPECS.to_vec()
}

/// Looks up a character of a zoo entry by name.
pub fn zoo_character(entry: &ZooEntry, name: &str) -> Result<Character, ZooError> {
    entry
        .characters
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, c)| c.clone())
        .ok_or_else(|| ZooError::UnknownCharacter {
            name: entry.name.clone(),
            character: name.to_owned(),
        })
}

/// Builds the named product context.
pub fn zoo_context(name: &str) -> Result<LauContext, ZooError> {
    let spec = zoo_context_specs()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| ZooError::UnknownContext(name.to_owned()))?;
    build_context(&spec)
}

pub fn build_context(spec: &ContextSpec) -> Result<LauContext, ZooError> {
    let a = zoo_get(spec.a)?;
    let b = zoo_get(spec.b)?;
    let theta = zoo_character(&b, spec.theta)?;
    let phi = zoo_character(&b, spec.phi)?;
    let gamma = zoo_character(&b, spec.gamma)?;
    Ok(LauContext::new(
        a.algebra, b.algebra, theta, phi, gamma,
    )?)
}

/// Builds every named context.
pub fn zoo_contexts() -> Vec<(String, LauContext)> {
    zoo_context_specs()
        .iter()
        .map(|spec| {
            (
                spec.name.to_owned(),
                build_context(spec).expect("zoo contexts are valid"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates_and_tags_match() {
        use Tag::*;
        let expect: &[(&str, &[Tag])] = &[
            ("Q", &[Unital, Semisimple, Commutative]),
            ("Q2", &[Unital, Semisimple, Commutative]),
            ("Q3", &[Unital, Semisimple, Commutative]),
            ("Qdual", &[Unital, Commutative]),
            ("T2", &[Unital]),
            ("M2", &[Unital, Semisimple]),
            ("colalg2", &[RightIdentityOnly]),
            ("zero1", &[NoRightIdentity, Commutative]),
            ("Q2M2", &[Unital, Semisimple]),
        ];
        assert_eq!(zoo_list().len(), expect.len());
        for &(name, tags) in expect {
            let entry = zoo_get(name).unwrap();
            let want: BTreeSet<Tag> = tags.iter().copied().collect();
            assert_eq!(entry.tags, want, "{name}");
            assert!(entry.algebra.check_associativity().is_empty(), "{name}");
        }
    }

    #[test]
    fn unknown_names_error() {
        assert!(matches!(zoo_get("nope"), Err(ZooError::UnknownAlgebra(_))));
        assert!(matches!(
            zoo_context("nope"),
            Err(ZooError::UnknownContext(_))
        ));
        let q2 = zoo_get("Q2").unwrap();
        assert!(matches!(
            zoo_character(&q2, "chi9"),
            Err(ZooError::UnknownCharacter { .. })
        ));
    }

    #[test]
    fn m2_has_no_characters() {
        assert!(zoo_get("M2").unwrap().characters.is_empty());
        assert!(zoo_get("zero1").unwrap().characters.is_empty());
    }

    #[test]
    fn all_contexts_build() {
        let contexts = zoo_contexts();
        assert!(contexts.len() >= 10);
        for (name, ctx) in &contexts {
            assert_eq!(
                ctx.dim(),
                ctx.a().dim() + ctx.b().dim(),
                "{name}"
            );
        }
    }

    #[test]
    fn context_grid_covers_hypothesis_combinations() {
        let specs = zoo_context_specs();
        let has = |f: &dyn Fn(&ContextSpec) -> bool| specs.iter().any(|c| f(c));
        // all functionals equal
        assert!(has(&|c| c.theta == c.phi && c.phi == c.gamma));
        // theta distinct, gamma = phi
        assert!(has(&|c| c.theta != c.phi && c.phi == c.gamma));
        // all three distinct
        assert!(has(&|c| c.theta != c.phi && c.phi != c.gamma && c.theta != c.gamma));
        // non-semisimple B
        assert!(has(&|c| c.b == "Qdual" || c.b == "T2"));
        // A with only a right identity, and A with none
        assert!(has(&|c| c.a == "colalg2"));
        assert!(has(&|c| c.a == "zero1"));
    }
}
