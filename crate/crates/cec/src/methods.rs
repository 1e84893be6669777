//! Method selection shared by the CLI and the examples: oracle, engine,
//! closed form, or automatic.
//!
//! `Auto` uses a closed form only for families whose formula is
//! confirmed by the verification suite; the refuted fan and cocktail
//! party forms are never used silently, those families route to the
//! engine with a notice. Families with total-only or edge-cover-only
//! closed forms also route to the engine.

use crate::engine::{Engine, EngineConfig, EngineError};
use crate::families::{generate, Family, FamilySpec};
use crate::formulas;
use crate::graph::{Graph, GraphError};
use crate::oracle::{cec_poly_oracle, OracleConfig, OracleError};
use crate::poly::Poly;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Method {
    #[default]
    Auto,
    Oracle,
    Engine,
    Formula,
}

#[derive(Debug, Error)]
pub enum MethodError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Unsupported(String),
}

/// A computed polynomial plus any notices worth surfacing (for example
/// that a requested closed form is refuted).
#[derive(Clone, Debug)]
pub struct Computation {
    pub poly: Poly,
    pub notices: Vec<String>,
}

enum FormulaRoute {
    Confirmed(fn(&FamilySpec) -> Poly),
    LollipopShift,
    Refuted(fn(&FamilySpec) -> Poly),
    TotalOnly,
    None,
}

fn formula_route(family: Family) -> FormulaRoute {
    match family {
        Family::Path => FormulaRoute::Confirmed(|s| formulas::cec_path(s.params[0])),
        Family::Star => FormulaRoute::Confirmed(|s| formulas::cec_star(s.params[0])),
        Family::Cycle => FormulaRoute::Confirmed(|s| formulas::cec_cycle(s.params[0])),
        Family::Friendship => FormulaRoute::Confirmed(|s| formulas::cec_friendship(s.params[0])),
        Family::CompleteBipartite => FormulaRoute::None, // K_{2,n} handled below
        Family::Lollipop => FormulaRoute::LollipopShift,
        Family::Fan => FormulaRoute::Refuted(|s| formulas::cec_fan_claimed(s.params[0])),
        Family::CocktailParty => {
            FormulaRoute::Refuted(|s| formulas::cec_cocktail_claimed(s.params[0]))
        }
        Family::Complete => FormulaRoute::TotalOnly,
        // the claimed wheel total formula is refuted at n >= 7, and
        // there is no claimed wheel polynomial at all
        Family::Wheel => FormulaRoute::None,
        _ => FormulaRoute::None,
    }
}

/// K_{2,n} parameter view of a complete-bipartite spec, if one part has
/// size 2 and the formula's n >= 2 precondition holds.
fn as_k2n(spec: &FamilySpec) -> Option<usize> {
    if spec.family != Family::CompleteBipartite {
        return None;
    }
    match spec.params[..] {
        [2, n] | [n, 2] if n >= 2 => Some(n),
        _ => None,
    }
}

/// Computes E_c for a family instance with the requested method.
pub fn cec_for_spec(
    spec: &FamilySpec,
    method: Method,
    ocfg: &OracleConfig,
    ecfg: &EngineConfig,
) -> Result<Computation, MethodError> {
    spec.validate()?;
    let mut notices = Vec::new();
    match method {
        Method::Oracle => {
            let g = generate(spec)?;
            Ok(Computation {
                poly: cec_poly_oracle(&g, ocfg)?,
                notices,
            })
        }
        Method::Engine => {
            let g = generate(spec)?;
            Ok(Computation {
                poly: Engine::new(ecfg.clone()).cec_poly(&g)?,
                notices,
            })
        }
        Method::Formula => match formula_route(spec.family) {
            FormulaRoute::Confirmed(f) => Ok(Computation {
                poly: f(spec),
                notices,
            }),
            _ if as_k2n(spec).is_some() => Ok(Computation {
                poly: formulas::cec_k2n(as_k2n(spec).unwrap()),
                notices,
            }),
            FormulaRoute::LollipopShift => {
                let (m, n) = (spec.params[0], spec.params[1]);
                let km = generate(&FamilySpec::new(Family::Complete, [m]))?;
                let km_poly = Engine::new(ecfg.clone()).cec_poly(&km)?;
                Ok(Computation {
                    poly: formulas::cec_lollipop(m, n, &km_poly),
                    notices,
                })
            }
            FormulaRoute::Refuted(f) => {
                notices.push(format!(
                    "the closed form for {} is refuted by enumeration; printing it as claimed \
                     (use --method engine for ground truth)",
                    spec.family
                ));
                Ok(Computation {
                    poly: f(spec),
                    notices,
                })
            }
            FormulaRoute::TotalOnly => Err(MethodError::Unsupported(format!(
                "no closed-form polynomial for {}; only the total count has a formula \
                 (use --method engine)",
                spec.family
            ))),
            FormulaRoute::None => Err(MethodError::Unsupported(format!(
                "no confirmed closed-form polynomial for {} (use --method engine)",
                spec.family
            ))),
        },
        Method::Auto => {
            match formula_route(spec.family) {
                FormulaRoute::Confirmed(f) => {
                    return Ok(Computation {
                        poly: f(spec),
                        notices,
                    })
                }
                FormulaRoute::Refuted(_) => notices.push(format!(
                    "closed form for {} is refuted; using the engine instead",
                    spec.family
                )),
                _ => {}
            }
            if let Some(n) = as_k2n(spec) {
                return Ok(Computation {
                    poly: formulas::cec_k2n(n),
                    notices,
                });
            }
            if spec.family == Family::Lollipop {
                return cec_for_spec(spec, Method::Formula, ocfg, ecfg);
            }
            let g = generate(spec)?;
            engine_then_oracle(&g, ocfg, ecfg, notices)
        }
    }
}

/// Computes E_c for an explicit graph. Closed forms need a family, so
/// `Formula` is not available here.
pub fn cec_for_graph(
    g: &Graph,
    method: Method,
    ocfg: &OracleConfig,
    ecfg: &EngineConfig,
) -> Result<Computation, MethodError> {
    match method {
        Method::Oracle => Ok(Computation {
            poly: cec_poly_oracle(g, ocfg)?,
            notices: Vec::new(),
        }),
        Method::Engine => Ok(Computation {
            poly: Engine::new(ecfg.clone()).cec_poly(g)?,
            notices: Vec::new(),
        }),
        Method::Formula => Err(MethodError::Unsupported(
            "closed forms apply to named families, not edge-list files".into(),
        )),
        Method::Auto => engine_then_oracle(g, ocfg, ecfg, Vec::new()),
    }
}

fn engine_then_oracle(
    g: &Graph,
    ocfg: &OracleConfig,
    ecfg: &EngineConfig,
    mut notices: Vec<String>,
) -> Result<Computation, MethodError> {
    match Engine::new(ecfg.clone()).cec_poly(g) {
        Ok(poly) => Ok(Computation { poly, notices }),
        Err(engine_err) => {
            if g.edge_count() <= ocfg.max_edges {
                notices.push(format!(
                    "engine gave up ({engine_err}); falling back to the oracle"
                ));
                Ok(Computation {
                    poly: cec_poly_oracle(g, ocfg)?,
                    notices,
                })
            } else {
                Err(engine_err.into())
            }
        }
    }
}
