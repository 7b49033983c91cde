//! Named graph families.
//!
//! Vertex numbering per family (stable):
//!
//! | family | vertices |
//! |---|---|
//! | `empty n`, `complete n` | `0..n` |
//! | `path n` | `0..n` along the path |
//! | `cycle n` | `0..n` around the cycle |
//! | `complete_bipartite a b` | sides `0..a` and `a..a+b` |
//! | `gutman_j p q` | `0` is the hub, `1..=p` is `K_p`, `p+1..=p+q` is `K_q`; the hub sees the first `p-1` and first `q-1` of each clique |
//! | `kt_path t k` | `v_i` is vertex `i-1` |
//! | `kt_path_augmented t k d` | path vertices as above, then `u_{i,j}` at `t+k-1 + i*d + (j-1)` |
//! | `antiregular n` | `v_i` is vertex `i-1`; `v_i ~ v_j` iff `i+j >= n+1` |
//! | `antiregular_disconnected n` | complement of `antiregular n` |

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Empty,
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    GutmanJ,
    KtPath,
    KtPathAugmented,
    Antiregular,
    AntiregularDisconnected,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Empty,
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::GutmanJ,
        Family::KtPath,
        Family::KtPathAugmented,
        Family::Antiregular,
        Family::AntiregularDisconnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Empty => "empty",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete_bipartite",
            Family::GutmanJ => "gutman_j",
            Family::KtPath => "kt_path",
            Family::KtPathAugmented => "kt_path_augmented",
            Family::Antiregular => "antiregular",
            Family::AntiregularDisconnected => "antiregular_disconnected",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::GutmanJ | Family::KtPath => 2,
            Family::KtPathAugmented => 3,
            _ => 1,
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph, GraphError> {
        let invalid = |reason: String| GraphError::InvalidParams {
            family: self.name().to_string(),
            reason,
        };
        if params.len() != self.arity() {
            return Err(invalid(format!(
                "expected {} parameter(s), got {}",
                self.arity(),
                params.len()
            )));
        }
        match self {
            Family::Empty => Ok(Graph::empty(params[0])),
            Family::Complete => Ok(complete(params[0])),
            Family::Path => match params[0] {
                0 => Err(invalid("path needs n >= 1".into())),
                n => Ok(path(n)),
            },
            Family::Cycle => match params[0] {
                n if n < 3 => Err(invalid("cycle needs n >= 3".into())),
                n => Ok(cycle(n)),
            },
            Family::CompleteBipartite => Ok(complete_bipartite(params[0], params[1])),
            Family::GutmanJ => {
                let (p, q) = (params[0], params[1]);
                if p < 2 || q < 2 {
                    return Err(invalid("gutman_j needs p > 1 and q > 1".into()));
                }
                Ok(gutman_j(p, q))
            }
            Family::KtPath => {
                let (t, k) = (params[0], params[1]);
                if t < 2 || k < 1 {
                    return Err(invalid("kt_path needs t >= 2 and k >= 1".into()));
                }
                Ok(kt_path(t, k))
            }
            Family::KtPathAugmented => {
                let (t, k, d) = (params[0], params[1], params[2]);
                if t < 2 || k < 1 {
                    return Err(invalid("kt_path_augmented needs t >= 2 and k >= 1".into()));
                }
                Ok(kt_path_augmented(t, k, d))
            }
            Family::Antiregular => match params[0] {
                0 => Err(invalid("antiregular needs n >= 1".into())),
                n => Ok(antiregular(n)),
            },
            Family::AntiregularDisconnected => match params[0] {
                0 => Err(invalid("antiregular_disconnected needs n >= 1".into())),
                n => Ok(antiregular(n).complement()),
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

pub fn named_graph(family: &str, params: &[usize]) -> Result<Graph, GraphError> {
    family.parse::<Family>()?.build(params)
}

fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

fn cycle(n: usize) -> Graph {
    path(n)
        .with_edges(&[(n - 1, 0)])
        .expect("valid by construction")
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges).expect("valid by construction")
}

fn gutman_j(p: usize, q: usize) -> Graph {
    let cliques = Graph::empty(1)
        .disjoint_union(&complete(p))
        .disjoint_union(&complete(q));
    let hub: Vec<_> = (1..p).chain(p + 1..p + q).map(|v| (0, v)).collect();
    cliques.with_edges(&hub).expect("valid by construction")
}

/// `P(t, k)` on `v_1..v_{t+k-1}` with edges `v_i v_{i+j}` for
/// `1 <= i <= t+k-2`, `1 <= j <= min(t-1, t+k-i-1)`.
fn kt_path(t: usize, k: usize) -> Graph {
    let n = t + k - 1;
    let mut edges = Vec::new();
    for i in 1..=t + k - 2 {
        for j in 1..=(t - 1).min(t + k - i - 1) {
            edges.push((i - 1, i + j - 1));
        }
    }
    Graph::from_edges(n, &edges).expect("valid by construction")
}

/// `u_{0,j}` attaches to `v_1` only; `u_{i,j}` for `i >= 1` attaches to
/// `v_i` and `v_{i+1}`.
fn kt_path_augmented(t: usize, k: usize, d: usize) -> Graph {
    let base = kt_path(t, k);
    let n = base.n();
    let g = base.with_isolated((t + k - 1) * d);
    let mut edges = Vec::new();
    for i in 0..=t + k - 2 {
        for j in 0..d {
            let u = n + i * d + j;
            if i == 0 {
                edges.push((0, u));
            } else {
                edges.push((i - 1, u));
                edges.push((i, u));
            }
        }
    }
    g.with_edges(&edges).expect("valid by construction")
}

/// Threshold construction of the connected antiregular graph `A_n`.
fn antiregular(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if i + j > n {
                edges.push((i - 1, j - 1));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid by construction")
}
