//! The three augmentation rules and the graph families derived from them.
//!
//! New vertices are always appended after the host's vertices, in cover-part
//! order, so the host keeps its indices and is an induced subgraph of the
//! result.

use super::cover::{CliqueCover, CycleCover, CyclePart};
use super::ConstructionError;
use crate::graph::{named_graph, Graph};

/// `G ∘ 2K1`: two new pendant vertices on every vertex.
pub fn rule1(g: &Graph) -> Graph {
    g.corona_all(&Graph::empty(2))
}

/// Cycle-cover augmentation: two new vertices per vertex-cycle (joined to
/// it) and per edge-cycle (joined to both ends); one new vertex per vertex
/// of a proper cycle `v_1..v_s`, with `w_1 ~ v_s, v_1` and
/// `w_i ~ v_{i-1}, v_i`.
pub fn rule2(g: &Graph, cover: &CycleCover) -> Result<Graph, ConstructionError> {
    check_host(g, cover.host_order())?;
    let mut attach: Vec<Vec<usize>> = Vec::new();
    for part in cover.parts() {
        match part {
            CyclePart::Vertex(v) => {
                attach.push(vec![*v]);
                attach.push(vec![*v]);
            }
            CyclePart::Edge(u, v) => {
                attach.push(vec![*u, *v]);
                attach.push(vec![*u, *v]);
            }
            CyclePart::Cycle(c) => {
                let s = c.len();
                for i in 0..s {
                    attach.push(vec![c[(i + s - 1) % s], c[i]]);
                }
            }
        }
    }
    Ok(append_attached(g, &attach))
}

/// Clique-cover augmentation: two new non-adjacent vertices per clique,
/// each joined to the whole clique.
pub fn rule3(g: &Graph, cover: &CliqueCover) -> Result<Graph, ConstructionError> {
    check_host(g, cover.host_order())?;
    let attach: Vec<Vec<usize>> = cover
        .parts()
        .iter()
        .flat_map(|q| [q.as_slice().to_vec(), q.as_slice().to_vec()])
        .collect();
    Ok(append_attached(g, &attach))
}

fn check_host(g: &Graph, order: usize) -> Result<(), ConstructionError> {
    if g.n() != order {
        return Err(ConstructionError::InvalidCover(format!(
            "cover is for {order} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

fn append_attached(g: &Graph, attach: &[Vec<usize>]) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = attach
        .iter()
        .enumerate()
        .flat_map(|(i, targets)| targets.iter().map(move |&t| (t, n + i)))
        .collect();
    let out = g
        .with_isolated(attach.len())
        .with_edges(&edges)
        .expect("attachments reference host vertices");
    debug_assert!(out.validate());
    out
}

/// `H_m`: rule 3 applied to `P_m` with the cover `{v_1}, {v_2,v_3}, ...`
/// for odd `m` and `{v_1,v_2}, {v_3,v_4}, ...` for even `m`. `H_0` is the
/// empty graph.
pub fn h_n_family(m: usize) -> Graph {
    if m == 0 {
        return Graph::empty(0);
    }
    let path = named_graph("path", &[m]).expect("m >= 1");
    let mut parts = Vec::new();
    let mut v = 0;
    if m % 2 == 1 {
        parts.push([0].into());
        v = 1;
    }
    while v < m {
        parts.push([v, v + 1].into());
        v += 2;
    }
    let cover = CliqueCover::new(&path, parts).expect("path edges and singletons are cliques");
    rule3(&path, &cover).expect("cover matches host")
}
