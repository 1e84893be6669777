//! Claim registry and adjudication.
//!
//! Each claim ties a stable id to a family, a parameter range, and the
//! values a closed form asserts there. Adjudication computes ground
//! truth with the oracle wherever the edge budget allows, falls back to
//! the engine, and otherwise reports UNTESTED — resource trouble is
//! never allowed to fake a verdict. Five claims are expected to come
//! out REFUTED; the suite treats a flip in either direction as a bug.

pub mod fixtures;
mod report;

pub use report::{emit_report, render_scan, ReportFormat};

use crate::engine::{spanning_tree_count, Engine, EngineConfig};
use crate::families::{generate, turan_parts, Family, FamilySpec};
use crate::formulas;
use crate::graph::Graph;
use crate::oracle::{cec_poly_oracle, ec_poly_oracle, OracleConfig};
use crate::poly::{binomial, Poly};
use num_bigint::BigUint;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Confirmed,
    Refuted,
    Untested,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Refuted => "REFUTED",
            Verdict::Untested => "UNTESTED",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MethodUsed {
    Oracle,
    Engine,
}

impl MethodUsed {
    pub fn as_str(&self) -> &'static str {
        match self {
            MethodUsed::Oracle => "oracle",
            MethodUsed::Engine => "engine",
        }
    }
}

/// A polynomial and/or an integer, as asserted or as computed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Value {
    pub poly: Option<Poly>,
    pub total: Option<BigUint>,
}

impl Value {
    fn poly(p: Poly) -> Value {
        Value {
            poly: Some(p),
            total: None,
        }
    }

    fn total(t: BigUint) -> Value {
        Value {
            poly: None,
            total: Some(t),
        }
    }

    pub fn render(&self) -> String {
        match (&self.poly, &self.total) {
            (Some(p), _) => p.to_string(),
            (None, Some(t)) => t.to_string(),
            (None, None) => "-".into(),
        }
    }
}

/// Verdict plus the evidence for it.
#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub id: String,
    pub verdict: Verdict,
    /// First parameters where the asserted and computed values diverge.
    pub witness_params: Option<Vec<usize>>,
    /// Asserted value at the witness (REFUTED) or at the last tested
    /// parameters (CONFIRMED).
    pub asserted: Value,
    pub ground_truth: Value,
    pub method: Option<MethodUsed>,
    pub runtime_ms: u128,
    /// Extra context rendered in text reports only.
    pub note: Option<String>,
}

enum ClaimBody {
    /// Asserted E_c polynomial per instance, vs the cec ground truth.
    CecPoly(Vec<(FamilySpec, Poly)>),
    /// Asserted total count per instance, vs the cec ground truth total.
    CecTotal(Vec<(FamilySpec, BigUint)>),
    /// Asserted edge cover polynomial per instance, vs the ec oracle.
    EcPoly(Vec<(FamilySpec, Poly)>),
    /// Asserted edge cover total per instance, vs the ec oracle total.
    EcTotal(Vec<(FamilySpec, BigUint)>),
    /// Asserted spanning tree count per instance, vs the matrix-tree
    /// theorem.
    TreeCount(Vec<(FamilySpec, BigUint)>),
    /// Asserted minimal (spanning tree) coefficient of E_c, vs the
    /// matrix-tree theorem.
    LeadingCoeff(FamilySpec, BigUint),
    /// E_c(L(m,n)) = x^n E_c(K_m): both sides computed from ground
    /// truth, so this adjudicates the shift identity itself.
    LollipopShift(Vec<(usize, usize)>),
    /// Internal consistency of a claimed (total, coefficient list)
    /// pair: the stated total must equal the stated polynomial's value
    /// at x = 1. Needs no enumeration at all.
    SelfConsistency {
        spec: FamilySpec,
        asserted_total: BigUint,
        claimed_poly: Poly,
    },
}

pub struct Claim {
    pub id: &'static str,
    /// Source anchor for the asserted values.
    pub source: &'static str,
    /// Verdict this suite expects; `cmd verify` exits nonzero when an
    /// adjudicated verdict differs.
    pub expected: Verdict,
    body: ClaimBody,
    note: Option<&'static str>,
}

/// Claim ids expected to come out REFUTED.
///
/// The first five were known divergences going in; the wheel recurrence
/// joined them after enumeration: its initial values 38, 134, 462 are
/// right, but the extrapolated totals diverge from ground truth at
/// n = 7 (claimed 1526 vs enumerated 1582, then 4878 vs 5406, 15254 vs
/// 18462). Three independent routes (bitmask oracle, deletion-
/// contraction engine, direct subset walk) agree on the enumerated
/// values.
pub const EXPECTED_REFUTED: [&str; 6] = [
    "table-hypercube-d4-leading",
    "thm-cocktail-n3-coeffs",
    "thm-cocktail-n3-total",
    "thm-cocktail-n4-zero",
    "thm-fan",
    "thm-wheel-recurrence",
];

/// The full claim registry.
pub fn registry() -> Vec<Claim> {
    let mut claims = Vec::new();

    claims.push(Claim {
        id: "prop-tree",
        source: "claimed: every tree on n vertices has E_c = x^(n-1)",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (2..=6)
                .map(|n| (FamilySpec::new(Family::Path, [n]), formulas::cec_tree(n)))
                .chain((1..=5).map(|n| {
                    (
                        FamilySpec::new(Family::Star, [n]),
                        formulas::cec_tree(n + 1),
                    )
                }))
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-path",
        source: "claimed: E_c(P_n,x) = x^(n-1)",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (2..=10)
                .map(|n| (FamilySpec::new(Family::Path, [n]), formulas::cec_path(n)))
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-star",
        source: "claimed: E_c(S_n,x) = x^n",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (1..=10)
                .map(|n| (FamilySpec::new(Family::Star, [n]), formulas::cec_star(n)))
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-cycle",
        source: "claimed: E_c(C_n,x) = n x^(n-1) + x^n",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (3..=12)
                .map(|n| (FamilySpec::new(Family::Cycle, [n]), formulas::cec_cycle(n)))
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-complete-total",
        source: "claimed: E_c(K_n,1) = 2^C(n,2) - sum C(n-1,k-1) E_c(K_k,1) 2^C(n-k,2)",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecTotal(
            (1..=8)
                .map(|n| {
                    (
                        FamilySpec::new(Family::Complete, [n]),
                        formulas::cec_complete_total(n),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    for row in &fixtures::KN_ROWS {
        claims.push(Claim {
            id: match row.params[0] {
                2 => "table-Kn-row-2",
                3 => "table-Kn-row-3",
                4 => "table-Kn-row-4",
                5 => "table-Kn-row-5",
                _ => "table-Kn-row-6",
            },
            source: row.source,
            expected: Verdict::Confirmed,
            body: ClaimBody::CecPoly(vec![(
                FamilySpec::new(Family::Complete, row.params),
                Poly::from_u64s(row.dense_coeffs),
            )]),
            note: None,
        });
    }

    claims.push(Claim {
        id: "thm-k2n",
        source: "claimed: E_c(K_{2,n},x) = sum C(n,k) 2^(n-k) x^(n+k) + x^(2n), total 3^n - 2^n",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (2..=6)
                .map(|n| {
                    (
                        FamilySpec::new(Family::CompleteBipartite, [2, n]),
                        formulas::cec_k2n(n),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-friendship",
        source: "claimed: E_c(F_k,x) = x^(2k)(3+x)^k, total 4^k",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(
            (1..=4)
                .map(|k| {
                    (
                        FamilySpec::new(Family::Friendship, [k]),
                        formulas::cec_friendship(k),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-lollipop",
        source: "claimed: E_c(L(m,n),x) = x^n E_c(K_m,x)",
        expected: Verdict::Confirmed,
        body: ClaimBody::LollipopShift(
            (2..=4).flat_map(|m| (1..=3).map(move |n| (m, n))).collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-fan",
        source: "claimed: e_c(F(n),n-1+k) = C(n-2,k) 2^k, total 3^(n-2)",
        expected: Verdict::Refuted,
        body: ClaimBody::CecPoly(
            (4..=8)
                .map(|n| {
                    (
                        FamilySpec::new(Family::Fan, [n]),
                        formulas::cec_fan_claimed(n),
                    )
                })
                .collect(),
        ),
        note: Some("the claimed minimal cover (the full star) is not unique; ground truth for F(4) is 8x^3+5x^4+x^5"),
    });

    claims.push(Claim {
        id: "thm-cocktail-n2",
        source: "claimed: E_c(CP(2),x) = 4x^3 + x^4",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecPoly(vec![(
            FamilySpec::new(Family::CocktailParty, [2]),
            formulas::cec_cocktail_claimed(2),
        )]),
        note: None,
    });

    claims.push(Claim {
        id: "thm-cocktail-n3-coeffs",
        source: fixtures::COCKTAIL_3_SOURCE,
        expected: Verdict::Refuted,
        body: ClaimBody::CecPoly(vec![(
            FamilySpec::new(Family::CocktailParty, [3]),
            formulas::cec_cocktail_claimed(3),
        )]),
        note: Some(
            "the claimed e_c = 90 at size 10 exceeds C(12,2) = 66, the number of 10-edge subsets",
        ),
    });

    claims.push(Claim {
        id: "thm-cocktail-n3-total",
        source: fixtures::COCKTAIL_3_TOTAL_SOURCE,
        expected: Verdict::Refuted,
        body: ClaimBody::SelfConsistency {
            spec: FamilySpec::new(Family::CocktailParty, [3]),
            asserted_total: BigUint::from(formulas::COCKTAIL_3_CLAIMED_TOTAL),
            claimed_poly: formulas::cec_cocktail_claimed(3),
        },
        note: Some(
            "the claimed coefficient list sums to 2712, not the claimed 2656; enumeration \
             agrees with 2656, so the error sits in the coefficient list",
        ),
    });

    claims.push(Claim {
        id: "thm-cocktail-n4-zero",
        source: "claimed: CP(n) has no connected edge cover for n >= 4",
        expected: Verdict::Refuted,
        body: ClaimBody::CecPoly(vec![(
            FamilySpec::new(Family::CocktailParty, [4]),
            Poly::zero(),
        )]),
        note: Some("CP(4) is connected, so each of its spanning trees is a connected edge cover"),
    });

    claims.push(Claim {
        id: "thm-wheel-initial",
        source: "claimed: wheel initial totals E_4 = 38, E_5 = 134, E_6 = 462",
        expected: Verdict::Confirmed,
        body: ClaimBody::CecTotal(
            fixtures::WHEEL_TOTALS[..3]
                .iter()
                .map(|row| {
                    (
                        FamilySpec::new(Family::Wheel, row.params),
                        BigUint::from(row.total),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-wheel-recurrence",
        source: "claimed: E_n = 6E_{n-1} - 11E_{n-2} + 6E_{n-3} for n >= 7 \
                 (equivalently E_n = 10 - 40*2^(n-4) + 68*3^(n-4))",
        expected: Verdict::Refuted,
        body: ClaimBody::CecTotal(
            (7..=9)
                .map(|n| {
                    (
                        FamilySpec::new(Family::Wheel, [n]),
                        formulas::wheel_total(n, formulas::WheelMode::Recurrence),
                    )
                })
                .collect(),
        ),
        note: Some(
            "the recurrence and its closed form agree with each other but not with \
             enumeration: ground truth is 1582, 5406, 18462 for n = 7, 8, 9, \
             while the recurrence extrapolates 1526, 4878, 15254 from correct \
             initial values",
        ),
    });

    for row in &fixtures::HYPERCUBE_ROWS {
        claims.push(Claim {
            id: match row.params[0] {
                1 => "table-hypercube-d1",
                2 => "table-hypercube-d2",
                _ => "table-hypercube-d3",
            },
            source: row.source,
            expected: Verdict::Confirmed,
            body: ClaimBody::CecPoly(vec![(
                FamilySpec::new(Family::Hypercube, row.params),
                Poly::from_u64s(row.dense_coeffs),
            )]),
            note: None,
        });
    }

    claims.push(Claim {
        id: "table-hypercube-d4-leading",
        source: fixtures::HYPERCUBE_D4_LEADING.source,
        expected: Verdict::Refuted,
        body: ClaimBody::LeadingCoeff(
            FamilySpec::new(Family::Hypercube, fixtures::HYPERCUBE_D4_LEADING.params),
            BigUint::from(fixtures::HYPERCUBE_D4_LEADING.total),
        ),
        note: Some("the claimed product formula itself gives 2^11 * 2^6 * 3^4 * 4 = 42467328, matching the matrix-tree count"),
    });

    claims.push(Claim {
        id: "thm-hypercube-trees",
        source: "claimed: t(Q_d) = 2^(2^d-d-1) prod k^C(d,k)",
        expected: Verdict::Confirmed,
        body: ClaimBody::TreeCount(
            (1..=4)
                .map(|d| {
                    (
                        FamilySpec::new(Family::Hypercube, [d]),
                        formulas::hypercube_spanning_trees(d),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    claims.push(Claim {
        id: "thm-turan-trees",
        source: "claimed: t(T(n,k)) = n^(k-2) prod (n-a_i)^(a_i-1)",
        expected: Verdict::Confirmed,
        body: ClaimBody::TreeCount(
            (3..=9)
                .flat_map(|n| (2..n).map(move |k| (n, k)))
                .map(|(n, k)| {
                    (
                        FamilySpec::new(Family::Turan, [n, k]),
                        formulas::turan_spanning_trees(n, k),
                    )
                })
                .collect(),
        ),
        note: None,
    });

    for row in &fixtures::TURAN_ROWS {
        claims.push(Claim {
            id: match (row.params[0], row.params[1]) {
                (3, 2) => "table-turan-3-2",
                (4, 2) => "table-turan-4-2",
                (4, 3) => "table-turan-4-3",
                (5, 2) => "table-turan-5-2",
                (5, 3) => "table-turan-5-3",
                _ => "table-turan-5-4",
            },
            source: row.source,
            expected: Verdict::Confirmed,
            body: ClaimBody::CecPoly(vec![(
                FamilySpec::new(Family::Turan, row.params),
                Poly::from_u64s(row.dense_coeffs),
            )]),
            note: None,
        });
    }

    claims.push(Claim {
        id: "thm-multipartite-count",
        source: "claimed: EC(K_{n_1..n_k}) by inclusion-exclusion over isolated vertex sets",
        expected: Verdict::Confirmed,
        body: ClaimBody::EcTotal(
            multipartite_part_lists()
                .into_iter()
                .map(|parts| {
                    let total = formulas::ec_count_multipartite(&parts);
                    (FamilySpec::new(Family::CompleteMultipartite, parts), total)
                })
                .collect(),
        ),
        note: Some("the formula counts all edge covers; connectivity is never enforced"),
    });

    claims.push(Claim {
        id: "thm-multipartite-poly",
        source: "claimed: edge cover polynomial of K_{n_1..n_k} via (1+x)^E_allowed inclusion-exclusion",
        expected: Verdict::Confirmed,
        body: ClaimBody::EcPoly(
            multipartite_part_lists()
                .into_iter()
                .map(|parts| {
                    let poly = formulas::ec_poly_multipartite(&parts);
                    (FamilySpec::new(Family::CompleteMultipartite, parts), poly)
                })
                .collect(),
        ),
        note: Some("the formula counts all edge covers; connectivity is never enforced"),
    });

    claims.push(Claim {
        id: "remark-turan-ie",
        source: "claimed: inclusion-exclusion over uncovered vertex subsets with exponent m - sum|I_i|(n-a_i) + sum|I_i||I_j|",
        expected: Verdict::Confirmed,
        body: ClaimBody::EcPoly(
            (3..=6)
                .flat_map(|n| (2..n).map(move |k| (n, k)))
                .map(|(n, k)| {
                    (
                        FamilySpec::new(Family::Turan, [n, k]),
                        formulas::turan_ie_poly(n, k),
                    )
                })
                .collect(),
        ),
        note: Some("announced as the connected edge cover polynomial, but it computes the plain edge cover polynomial; adjudicated against the latter"),
    });

    claims.sort_by(|a, b| a.id.cmp(b.id));
    claims
}

/// Part lists adjudicated against the edge-subset oracle: at most four
/// parts of size at most three, restricted to graphs inside the default
/// 26-edge oracle budget.
fn multipartite_part_lists() -> Vec<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = vec![vec![1, 1, 1], vec![2, 2], vec![1, 1, 2]];
    for k in 2..=4usize {
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == k {
                if !lists.contains(&prefix) && edge_count_of_parts(&prefix) <= 26 {
                    lists.push(prefix);
                }
                continue;
            }
            let lo = prefix.last().copied().unwrap_or(1);
            for size in lo..=3 {
                let mut next = prefix.clone();
                next.push(size);
                stack.push(next);
            }
        }
    }
    lists
}

fn edge_count_of_parts(parts: &[usize]) -> usize {
    let total: usize = parts.iter().sum();
    let squares: usize = parts.iter().map(|&p| p * p).sum();
    (total * total - squares) / 2
}

/// Runs the selected claims (all of them when `filter` is `None`) and
/// returns one report per claim, ordered by id.
pub fn run_claims(
    filter: Option<&[String]>,
    budget: &OracleConfig,
) -> Result<Vec<ClaimReport>, VerifyError> {
    let claims = registry();
    if let Some(ids) = filter {
        for id in ids {
            if !claims.iter().any(|c| c.id == id) {
                return Err(VerifyError::UnknownClaim(id.clone()));
            }
        }
    }
    let mut engine = Engine::default();
    let mut reports: Vec<ClaimReport> = claims
        .iter()
        .filter(|c| filter.is_none_or(|ids| ids.iter().any(|id| id == c.id)))
        .map(|c| adjudicate(c, budget, &mut engine))
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

/// Ground-truth E_c: oracle inside the edge budget, engine past it,
/// `None` when both are unavailable.
fn ground_truth_cec(
    g: &Graph,
    budget: &OracleConfig,
    engine: &mut Engine,
) -> Option<(Poly, MethodUsed)> {
    if g.edge_count() <= budget.max_edges {
        cec_poly_oracle(g, budget)
            .ok()
            .map(|p| (p, MethodUsed::Oracle))
    } else {
        engine.cec_poly(g).ok().map(|p| (p, MethodUsed::Engine))
    }
}

fn adjudicate(claim: &Claim, budget: &OracleConfig, engine: &mut Engine) -> ClaimReport {
    let start = Instant::now();
    let mut report = match &claim.body {
        ClaimBody::CecPoly(cases) => adjudicate_cases(
            cases,
            |spec| {
                let g = generate(spec).expect("registry specs are valid");
                ground_truth_cec(&g, budget, engine).map(|(p, m)| (Value::poly(p), m))
            },
            |asserted, spec| {
                let g = generate(spec).expect("registry specs are valid");
                sanity_violation(asserted, &g)
            },
        ),
        ClaimBody::CecTotal(cases) => {
            let cases: Vec<(FamilySpec, Value)> = cases
                .iter()
                .map(|(s, t)| (s.clone(), Value::total(t.clone())))
                .collect();
            adjudicate_value_cases(&cases, |spec| {
                let g = generate(spec).expect("registry specs are valid");
                ground_truth_cec(&g, budget, engine).map(|(p, m)| (Value::total(p.total()), m))
            })
        }
        ClaimBody::EcPoly(cases) => adjudicate_cases(
            cases,
            |spec| {
                let g = generate(spec).expect("registry specs are valid");
                ec_poly_oracle(&g, budget)
                    .ok()
                    .map(|p| (Value::poly(p), MethodUsed::Oracle))
            },
            |asserted, spec| {
                let g = generate(spec).expect("registry specs are valid");
                sanity_violation(asserted, &g)
            },
        ),
        ClaimBody::EcTotal(cases) => {
            let cases: Vec<(FamilySpec, Value)> = cases
                .iter()
                .map(|(s, t)| (s.clone(), Value::total(t.clone())))
                .collect();
            adjudicate_value_cases(&cases, |spec| {
                let g = generate(spec).expect("registry specs are valid");
                ec_poly_oracle(&g, budget)
                    .ok()
                    .map(|p| (Value::total(p.total()), MethodUsed::Oracle))
            })
        }
        ClaimBody::TreeCount(cases) => {
            let cases: Vec<(FamilySpec, Value)> = cases
                .iter()
                .map(|(s, t)| (s.clone(), Value::total(t.clone())))
                .collect();
            adjudicate_value_cases(&cases, |spec| {
                let g = generate(spec).expect("registry specs are valid");
                Some((Value::total(spanning_tree_count(&g)), MethodUsed::Engine))
            })
        }
        ClaimBody::LeadingCoeff(spec, asserted) => {
            let g = generate(spec).expect("registry specs are valid");
            let truth = spanning_tree_count(&g);
            let verdict = if truth == *asserted {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            ClaimReport {
                id: String::new(),
                verdict,
                witness_params: (verdict == Verdict::Refuted).then(|| spec.params.clone()),
                asserted: Value::total(asserted.clone()),
                ground_truth: Value::total(truth),
                method: Some(MethodUsed::Engine),
                runtime_ms: 0,
                note: None,
            }
        }
        ClaimBody::SelfConsistency {
            spec,
            asserted_total,
            claimed_poly,
        } => {
            let sum = claimed_poly.total();
            let consistent = sum == *asserted_total;
            ClaimReport {
                id: String::new(),
                verdict: if consistent {
                    Verdict::Confirmed
                } else {
                    Verdict::Refuted
                },
                witness_params: (!consistent).then(|| spec.params.clone()),
                asserted: Value::total(asserted_total.clone()),
                ground_truth: Value::total(sum),
                method: None,
                runtime_ms: 0,
                note: None,
            }
        }
        ClaimBody::LollipopShift(cases) => {
            let cases: Vec<(FamilySpec, Value)> = cases
                .iter()
                .map(|&(m, n)| {
                    let km = generate(&FamilySpec::new(Family::Complete, [m]))
                        .expect("registry specs are valid");
                    let asserted = ground_truth_cec(&km, budget, engine)
                        .map(|(p, _)| Value::poly(formulas::cec_lollipop(m, n, &p)))
                        .unwrap_or_default();
                    (FamilySpec::new(Family::Lollipop, [m, n]), asserted)
                })
                .collect();
            adjudicate_value_cases(&cases, |spec| {
                let g = generate(spec).expect("registry specs are valid");
                ground_truth_cec(&g, budget, engine).map(|(p, m)| (Value::poly(p), m))
            })
        }
    };
    report.id = claim.id.to_string();
    report.runtime_ms = start.elapsed().as_millis();
    if report.note.is_none() {
        report.note = claim.note.map(str::to_string);
    }
    report
}

/// Universal sanity bound on asserted polynomials: the coefficient at
/// size s can never exceed C(m, s), the number of s-edge subsets.
fn sanity_violation(p: &Poly, g: &Graph) -> Option<String> {
    let m = g.edge_count();
    for s in 0..=p.degree().unwrap_or(0) {
        let cap = binomial(m as u64, s as u64);
        if p.coeff(s) > cap {
            return Some(format!(
                "coefficient {} at size {s} exceeds C({m},{s}) = {cap}",
                p.coeff(s)
            ));
        }
    }
    None
}

fn adjudicate_cases(
    cases: &[(FamilySpec, Poly)],
    mut truth: impl FnMut(&FamilySpec) -> Option<(Value, MethodUsed)>,
    mut sanity: impl FnMut(&Poly, &FamilySpec) -> Option<String>,
) -> ClaimReport {
    let mut last: Option<(Value, Value, MethodUsed)> = None;
    for (spec, asserted) in cases {
        let counting_violation = sanity(asserted, spec);
        match truth(spec) {
            None => {
                // even without ground truth, an impossible coefficient refutes
                if let Some(msg) = counting_violation {
                    return refuted_report(
                        spec,
                        Value::poly(asserted.clone()),
                        Value::default(),
                        None,
                        Some(msg),
                    );
                }
                return untested_report(spec, Value::poly(asserted.clone()));
            }
            Some((truth_value, method)) => {
                let equal = truth_value.poly.as_ref() == Some(asserted);
                if !equal {
                    return refuted_report(
                        spec,
                        Value::poly(asserted.clone()),
                        truth_value,
                        Some(method),
                        counting_violation,
                    );
                }
                last = Some((Value::poly(asserted.clone()), truth_value, method));
            }
        }
    }
    confirmed_report(last)
}

fn adjudicate_value_cases(
    cases: &[(FamilySpec, Value)],
    mut truth: impl FnMut(&FamilySpec) -> Option<(Value, MethodUsed)>,
) -> ClaimReport {
    let mut last: Option<(Value, Value, MethodUsed)> = None;
    for (spec, asserted) in cases {
        match truth(spec) {
            None => return untested_report(spec, asserted.clone()),
            Some((truth_value, method)) => {
                if *asserted != truth_value {
                    return refuted_report(spec, asserted.clone(), truth_value, Some(method), None);
                }
                last = Some((asserted.clone(), truth_value, method));
            }
        }
    }
    confirmed_report(last)
}

fn refuted_report(
    spec: &FamilySpec,
    asserted: Value,
    truth: Value,
    method: Option<MethodUsed>,
    note: Option<String>,
) -> ClaimReport {
    ClaimReport {
        id: String::new(),
        verdict: Verdict::Refuted,
        witness_params: Some(spec.params.clone()),
        asserted,
        ground_truth: truth,
        method,
        runtime_ms: 0,
        note,
    }
}

fn untested_report(spec: &FamilySpec, asserted: Value) -> ClaimReport {
    ClaimReport {
        id: String::new(),
        verdict: Verdict::Untested,
        witness_params: Some(spec.params.clone()),
        asserted,
        ground_truth: Value::default(),
        method: None,
        runtime_ms: 0,
        note: Some("resource limits prevented adjudication".into()),
    }
}

fn confirmed_report(last: Option<(Value, Value, MethodUsed)>) -> ClaimReport {
    let (asserted, ground_truth, method) = last.expect("claims have at least one case");
    ClaimReport {
        id: String::new(),
        verdict: Verdict::Confirmed,
        witness_params: None,
        asserted,
        ground_truth,
        method: Some(method),
        runtime_ms: 0,
        note: None,
    }
}

/// One scanned corpus entry.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub spec: FamilySpec,
    pub vertices: usize,
    pub edges: usize,
    /// `None` when resource limits prevented computing the polynomial.
    pub unimodal: Option<bool>,
    pub internal_zero: bool,
    pub poly: Option<Poly>,
    pub method: Option<MethodUsed>,
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.unimodal == Some(false))
    }

    pub fn anomalies(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.internal_zero)
    }

    pub fn classified(&self) -> usize {
        self.entries.iter().filter(|e| e.unimodal.is_some()).count()
    }
}

/// Computes ground-truth E_c for every corpus graph and tests
/// unimodality. A counterexample is reported with its full coefficient
/// list, never swallowed.
pub fn scan_unimodality(corpus: &[FamilySpec], budget: &OracleConfig) -> ScanReport {
    let mut engine = Engine::new(EngineConfig::default());
    let entries = corpus
        .iter()
        .map(|spec| {
            let g = generate(spec).expect("corpus specs are valid");
            match ground_truth_cec(&g, budget, &mut engine) {
                None => ScanEntry {
                    spec: spec.clone(),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    unimodal: None,
                    internal_zero: false,
                    poly: None,
                    method: None,
                },
                Some((poly, method)) => ScanEntry {
                    spec: spec.clone(),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    unimodal: Some(poly.is_unimodal()),
                    internal_zero: poly.has_internal_zero(),
                    poly: Some(poly),
                    method: Some(method),
                },
            }
        })
        .collect();
    ScanReport { entries }
}

/// Check used by Turán claims and tests: the turan_ie exponent grouping
/// must coincide with the multipartite product exponent on balanced
/// parts; a mismatch would be an erratum worth reporting, not
/// normalizing away.
pub fn turan_routes_agree(n: usize, k: usize) -> bool {
    formulas::turan_ie_poly(n, k) == formulas::ec_poly_multipartite(&turan_parts(n, k))
}
