//! Rule-based graph constructions and the identities they satisfy.

mod cover;
mod identity;
mod rules;

use std::time::Instant;

use crate::engine::{alpha_mu, independence_polynomial, ComputeBudget, EngineError};
use crate::graph::{named_graph, Graph, GraphError, VertexSet};
use crate::poly::{classify, PolyError, Polynomial};

pub use cover::{CliqueCover, CycleCover, CyclePart};
pub use identity::{fingerprint, verify_identity, Identity, IdentityId, IdentityReport};
pub use rules::{h_n_family, rule1, rule2, rule3};

#[derive(Debug, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("k = {k} is outside 0..={mu}")]
    KOutOfRange { k: usize, mu: usize },
    #[error("identity {} failed: {} != {}", .0.identity, .0.lhs, .0.rhs)]
    IdentityFailed(Box<IdentityReport>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Clique cover made of the first `k` edges of a maximum matching plus
/// singletons for every other vertex.
pub fn cover_from_matching(
    g: &Graph,
    k: usize,
    budget: &ComputeBudget,
) -> Result<CliqueCover, ConstructionError> {
    let am = alpha_mu(g, budget)?;
    if k > am.mu {
        return Err(ConstructionError::KOutOfRange { k, mu: am.mu });
    }
    let edges = &am.witness_matching[..k];
    let mut covered = vec![false; g.n()];
    let mut parts: Vec<VertexSet> = Vec::with_capacity(g.n() - k);
    for &(u, v) in edges {
        covered[u] = true;
        covered[v] = true;
        parts.push([u, v].into());
    }
    parts.extend(
        (0..g.n())
            .filter(|&v| !covered[v])
            .map(|v| VertexSet::from([v])),
    );
    CliqueCover::new(g, parts)
}

/// A graph `h` containing `g` as an induced subgraph (on `0..n`) with
/// `I(h)` symmetric and `I(g ∘ 2K1) = (1+x)^k I(h)`, for `0 <= k <= μ(g)`.
///
/// Uses `ceil(k/2)` matching edges as 2-cliques and pads with one isolated
/// vertex when `k` is odd.
pub fn build_symmetric_divisor(
    g: &Graph,
    k: usize,
    budget: &ComputeBudget,
) -> Result<(Graph, IdentityReport), ConstructionError> {
    let start = Instant::now();
    let mu = alpha_mu(g, budget)?.mu;
    if k > mu {
        return Err(ConstructionError::KOutOfRange { k, mu });
    }
    let j = k.div_ceil(2);
    let cover = cover_from_matching(g, j, budget)?;
    let h = rule3(g, &cover)?.with_isolated(2 * j - k);
    let lhs = independence_polynomial(&rule1(g), budget)?;
    let quotient = independence_polynomial(&h, budget)?;
    let rhs = &Polynomial::one_plus(1).pow(k as u32) * &quotient;
    let holds = lhs == rhs && classify(&quotient)?.symmetric;
    let report = IdentityReport {
        identity: "symmetric_divisor".into(),
        inputs: vec![fingerprint(g), format!("k={k}")],
        lhs,
        rhs,
        quotient: Some(quotient),
        holds,
        elapsed: start.elapsed(),
    };
    if !report.holds {
        return Err(ConstructionError::IdentityFailed(Box::new(report)));
    }
    Ok((h, report))
}

/// `I(G ∘ H) = sum_k s_k x^k I(H)^{n-k}` with `s_k` the coefficients of
/// `I(G)`.
pub fn corona_formula(
    g: &Graph,
    h: &Graph,
    budget: &ComputeBudget,
) -> Result<Polynomial, ConstructionError> {
    let ig = independence_polynomial(g, budget)?;
    let ih = independence_polynomial(h, budget)?;
    let n = g.n();
    let mut powers = vec![Polynomial::one()];
    for i in 1..=n {
        powers.push(&powers[i - 1] * &ih);
    }
    Ok(ig
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, s)| powers[n - k].scale(s).shift(k))
        .sum())
}

/// `J_{p,q} + K_{pq-p-q+1}`, whose independence polynomial is
/// `1 + (2+pq)x + (2+pq)x^2 + x^3`.
pub fn gutman_symmetric(
    p: usize,
    q: usize,
    budget: &ComputeBudget,
) -> Result<(Graph, IdentityReport), ConstructionError> {
    let start = Instant::now();
    let j = named_graph("gutman_j", &[p, q])?;
    let m = (p - 1) * (q - 1);
    let g = j.join(&named_graph("complete", &[m])?);
    let c = (2 + p * q) as i64;
    let lhs = independence_polynomial(&g, budget)?;
    let rhs = Polynomial::from_i64s(&[1, c, c, 1]);
    let report = IdentityReport {
        identity: "gutman_symmetric".into(),
        inputs: vec![format!("p={p}"), format!("q={q}")],
        holds: lhs == rhs,
        lhs,
        rhs,
        quotient: None,
        elapsed: start.elapsed(),
    };
    Ok((g, report))
}
