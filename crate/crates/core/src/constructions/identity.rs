//! Executable polynomial identities.
//!
//! Every identity computes its left side from one graph with the engine and
//! its right side from other graphs combined through polynomial algebra, so
//! a single engine or construction bug cannot make both sides agree by
//! accident.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use super::cover::{CliqueCover, CycleCover};
use super::rules::{h_n_family, rule1, rule2, rule3};
use super::ConstructionError;
use crate::engine::{independence_polynomial, matching_polynomial, ComputeBudget};
use crate::graph::{named_graph, write_graph6, Graph, VertexSet};
use crate::poly::Polynomial;

/// Outcome of checking one identity: both sides, and for divisibility
/// identities the exact quotient of the left side by the known factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub inputs: Vec<String>,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub quotient: Option<Polynomial>,
    pub holds: bool,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl IdentityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Graph fingerprint for reports: graph6 when it fits, otherwise the
/// adjacency-list text.
pub fn fingerprint(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| g.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    UnionProduct,
    JoinSum,
    VertexRecurrence,
    CliqueCoronaLemma,
    CliqueCorona2K1,
    CliqueCoverThm,
    CycleCoronaLemma,
    CycleCoverThm,
    MatchingLineGraph,
    HnRecurrence,
    AntiregularFormula,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::UnionProduct,
        IdentityId::JoinSum,
        IdentityId::VertexRecurrence,
        IdentityId::CliqueCoronaLemma,
        IdentityId::CliqueCorona2K1,
        IdentityId::CliqueCoverThm,
        IdentityId::CycleCoronaLemma,
        IdentityId::CycleCoverThm,
        IdentityId::MatchingLineGraph,
        IdentityId::HnRecurrence,
        IdentityId::AntiregularFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::UnionProduct => "union_product",
            IdentityId::JoinSum => "join_sum",
            IdentityId::VertexRecurrence => "vertex_recurrence",
            IdentityId::CliqueCoronaLemma => "clique_corona_lemma",
            IdentityId::CliqueCorona2K1 => "clique_corona_2k1",
            IdentityId::CliqueCoverThm => "clique_cover_thm",
            IdentityId::CycleCoronaLemma => "cycle_corona_lemma",
            IdentityId::CycleCoverThm => "cycle_cover_thm",
            IdentityId::MatchingLineGraph => "matching_line_graph",
            IdentityId::HnRecurrence => "hn_recurrence",
            IdentityId::AntiregularFormula => "antiregular_formula",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| ConstructionError::InvalidInput(format!("unknown identity {s:?}")))
    }
}

/// An identity together with its arguments.
#[derive(Debug, Clone)]
pub enum Identity {
    /// `I(G1 ∪ G2) = I(G1) I(G2)`.
    UnionProduct { g1: Graph, g2: Graph },
    /// `I(G1 + G2) = I(G1) + I(G2) - 1`.
    JoinSum { g1: Graph, g2: Graph },
    /// `I(G) = I(G - v) + x I(G - N[v])`.
    VertexRecurrence { g: Graph, v: usize },
    /// `I((G,A) ∘ H) = I(H)^{|A|-1} I((G,A) + H)` for a clique `A`.
    CliqueCoronaLemma {
        g: Graph,
        clique: VertexSet,
        h: Graph,
    },
    /// The previous identity with `H = 2K1`.
    CliqueCorona2K1 { g: Graph, clique: VertexSet },
    /// `I(G ∘ 2K1) = (1+x)^{2n - 2|Φ|} I(Φ(G))`.
    CliqueCoverThm { g: Graph, cover: CliqueCover },
    /// `I((G,C) ∘ 2H) = I(H)^{|C|} I((G,C) △ H)` for a cycle `C`.
    CycleCoronaLemma {
        g: Graph,
        cycle: Vec<usize>,
        h: Graph,
    },
    /// `I(G ∘ 2K1) = (1+x)^{n-k} I(Γ(G))`, `k` the number of vertex-cycles.
    CycleCoverThm { g: Graph, cover: CycleCover },
    /// `M(G) = I(L(G))`.
    MatchingLineGraph { g: Graph },
    /// `J_n` against its two-step recurrence (`J_1 = 1 + 3x + x^2`).
    HnRecurrence { n: usize },
    /// `I(A_n)` against the closed forms in `k = ceil(n/2)`.
    AntiregularFormula { n: usize },
}

impl Identity {
    pub fn id(&self) -> IdentityId {
        match self {
            Identity::UnionProduct { .. } => IdentityId::UnionProduct,
            Identity::JoinSum { .. } => IdentityId::JoinSum,
            Identity::VertexRecurrence { .. } => IdentityId::VertexRecurrence,
            Identity::CliqueCoronaLemma { .. } => IdentityId::CliqueCoronaLemma,
            Identity::CliqueCorona2K1 { .. } => IdentityId::CliqueCorona2K1,
            Identity::CliqueCoverThm { .. } => IdentityId::CliqueCoverThm,
            Identity::CycleCoronaLemma { .. } => IdentityId::CycleCoronaLemma,
            Identity::CycleCoverThm { .. } => IdentityId::CycleCoverThm,
            Identity::MatchingLineGraph { .. } => IdentityId::MatchingLineGraph,
            Identity::HnRecurrence { .. } => IdentityId::HnRecurrence,
            Identity::AntiregularFormula { .. } => IdentityId::AntiregularFormula,
        }
    }

    fn inputs(&self) -> Vec<String> {
        let list = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Identity::UnionProduct { g1, g2 } | Identity::JoinSum { g1, g2 } => {
                vec![fingerprint(g1), fingerprint(g2)]
            }
            Identity::VertexRecurrence { g, v } => vec![fingerprint(g), format!("v={v}")],
            Identity::CliqueCoronaLemma { g, clique, h } => vec![
                fingerprint(g),
                format!("clique={}", list(clique.as_slice())),
                fingerprint(h),
            ],
            Identity::CliqueCorona2K1 { g, clique } => {
                vec![
                    fingerprint(g),
                    format!("clique={}", list(clique.as_slice())),
                ]
            }
            Identity::CliqueCoverThm { g, cover } => {
                vec![fingerprint(g), format!("cover={cover}")]
            }
            Identity::CycleCoronaLemma { g, cycle, h } => {
                vec![
                    fingerprint(g),
                    format!("cycle={}", list(cycle)),
                    fingerprint(h),
                ]
            }
            Identity::CycleCoverThm { g, cover } => {
                vec![fingerprint(g), format!("cover={cover}")]
            }
            Identity::MatchingLineGraph { g } => vec![fingerprint(g)],
            Identity::HnRecurrence { n } | Identity::AntiregularFormula { n } => {
                vec![format!("n={n}")]
            }
        }
    }
}

fn one_plus_x() -> Polynomial {
    Polynomial::one_plus(1)
}

fn exponent(e: usize) -> Result<u32, ConstructionError> {
    u32::try_from(e).map_err(|_| ConstructionError::InvalidInput(format!("exponent {e} too large")))
}

/// Computes both sides of `identity`.
pub fn verify_identity(
    identity: &Identity,
    budget: &ComputeBudget,
) -> Result<IdentityReport, ConstructionError> {
    let start = Instant::now();
    let ip = |g: &Graph| independence_polynomial(g, budget);
    // (lhs, rhs, known factor of lhs for divisibility forms)
    let (lhs, rhs, factor): (Polynomial, Polynomial, Option<Polynomial>) = match identity {
        Identity::UnionProduct { g1, g2 } => {
            (ip(&g1.disjoint_union(g2))?, &ip(g1)? * &ip(g2)?, None)
        }
        Identity::JoinSum { g1, g2 } => (
            ip(&g1.join(g2))?,
            &(&ip(g1)? + &ip(g2)?) - &Polynomial::one(),
            None,
        ),
        Identity::VertexRecurrence { g, v } => {
            let (minus_v, _) = g.remove_vertices(&VertexSet::from([*v]))?;
            let minus_closed = g.closed_neighborhood_minus(*v)?;
            (ip(g)?, &ip(&minus_v)? + &ip(&minus_closed)?.shift(1), None)
        }
        Identity::CliqueCoronaLemma { g, clique, h } => {
            check_clique(g, clique)?;
            let f = ip(h)?.pow(exponent(clique.len() - 1)?);
            let sum = g.zykov_sum(clique, h, &VertexSet::all(h.n()))?;
            (ip(&g.corona(clique, h)?)?, &f * &ip(&sum)?, Some(f))
        }
        Identity::CliqueCorona2K1 { g, clique } => {
            check_clique(g, clique)?;
            let two_k1 = Graph::empty(2);
            let f = one_plus_x().pow(exponent(2 * clique.len() - 2)?);
            let sum = g.zykov_sum(clique, &two_k1, &VertexSet::all(2))?;
            (ip(&g.corona(clique, &two_k1)?)?, &f * &ip(&sum)?, Some(f))
        }
        Identity::CliqueCoverThm { g, cover } => {
            let f = one_plus_x().pow(exponent(2 * g.n() - 2 * cover.len())?);
            (ip(&rule1(g))?, &f * &ip(&rule3(g, cover)?)?, Some(f))
        }
        Identity::CycleCoronaLemma { g, cycle, h } => {
            g.check_cycle(cycle)?;
            let anchors = VertexSet::new(cycle.iter().copied());
            let f = ip(h)?.pow(exponent(cycle.len())?);
            let lhs = ip(&g.corona(&anchors, &h.copies(2))?)?;
            (lhs, &f * &ip(&g.cycle_triangle(cycle, h)?)?, Some(f))
        }
        Identity::CycleCoverThm { g, cover } => {
            let f = one_plus_x().pow(exponent(g.n() - cover.vertex_cycles())?);
            (ip(&rule1(g))?, &f * &ip(&rule2(g, cover)?)?, Some(f))
        }
        Identity::MatchingLineGraph { g } => {
            (matching_polynomial(g, budget)?, ip(&g.line_graph())?, None)
        }
        Identity::HnRecurrence { n } => {
            let n = *n;
            if n == 0 {
                return Err(ConstructionError::InvalidInput(
                    "hn_recurrence needs n >= 1".into(),
                ));
            }
            let j = |m: usize| ip(&h_n_family(m));
            let rhs = match n {
                1 => Polynomial::from_i64s(&[1, 3, 1]),
                _ if n % 2 == 0 => &j(n - 1)? + &j(n - 2)?.shift(1),
                _ => &(&one_plus_x().pow(2) * &j(n - 1)?) + &j(n - 2)?.shift(1),
            };
            (j(n)?, rhs, None)
        }
        Identity::AntiregularFormula { n } => {
            let n = *n;
            let g = named_graph("antiregular", &[n])?;
            let k = exponent(n.div_ceil(2))?;
            let rhs = if n % 2 == 1 {
                &(&one_plus_x().pow(k) + &one_plus_x().pow(k - 1)) - &Polynomial::one()
            } else {
                &one_plus_x().pow(k).scale(&2.into()) - &Polynomial::one()
            };
            (ip(&g)?, rhs, None)
        }
    };
    let quotient = factor.and_then(|f| lhs.exact_divide(&f).ok());
    let holds = lhs == rhs;
    Ok(IdentityReport {
        identity: identity.id().name().to_string(),
        inputs: identity.inputs(),
        lhs,
        rhs,
        quotient,
        holds,
        elapsed: start.elapsed(),
    })
}

fn check_clique(g: &Graph, clique: &VertexSet) -> Result<(), ConstructionError> {
    clique.check_within(g.n())?;
    if clique.is_empty() || !g.is_clique(clique) {
        return Err(ConstructionError::InvalidInput(format!(
            "{:?} is not a nonempty clique",
            clique.as_slice()
        )));
    }
    Ok(())
}
