#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use indpoly::{parse_graph6, CliqueCover, CycleCover, CyclePart, Graph, Polynomial, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

pub fn fixture_graph(name: &str) -> Graph {
    fixture_text(name)
        .parse()
        .unwrap_or_else(|e| panic!("parsing {name}: {e}"))
}

/// Every graph with at most `max_n` vertices, up to isomorphism.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    fixture_text("graphs_n1-9.g6")
        .lines()
        .map(|l| parse_graph6(l.as_bytes()).expect("corpus line"))
        .filter(|g| g.n() <= max_n)
        .collect()
}

pub fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `p` itself drawn uniformly from `[0.1, 0.9]`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let density = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph_upto(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    random_graph(rng, n)
}

/// Greedy random partition into cliques.
pub fn random_clique_cover(rng: &mut ChaCha8Rng, g: &Graph) -> CliqueCover {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut parts = Vec::new();
    for &v in &order {
        if used[v] {
            continue;
        }
        used[v] = true;
        let mut part = vec![v];
        for &w in &order {
            if !used[w] && part.iter().all(|&u| g.has_edge(u, w)) && rng.gen_bool(0.7) {
                used[w] = true;
                part.push(w);
            }
        }
        parts.push(VertexSet::new(part));
    }
    CliqueCover::new(g, parts).unwrap()
}

/// Random partition into proper cycles, edges and single vertices, found by
/// random walks that close back onto their start.
pub fn random_cycle_cover(rng: &mut ChaCha8Rng, g: &Graph) -> CycleCover {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut parts = Vec::new();
    for &v in &order {
        if used[v] {
            continue;
        }
        used[v] = true;
        let mut walk = vec![v];
        let mut closed = false;
        loop {
            let last = *walk.last().unwrap();
            if walk.len() >= 3 && g.has_edge(last, v) && rng.gen_bool(0.6) {
                closed = true;
                break;
            }
            let next: Vec<usize> = g.neighbors(last).filter(|&w| !used[w]).collect();
            let Some(&w) = next.choose(rng) else { break };
            used[w] = true;
            walk.push(w);
        }
        if closed {
            parts.push(CyclePart::Cycle(walk));
            continue;
        }
        // Keep at most an edge of an unclosed walk; release the rest.
        let keep = if walk.len() >= 2 && rng.gen_bool(0.5) {
            2
        } else {
            1
        };
        for &w in &walk[keep..] {
            used[w] = false;
        }
        parts.push(match keep {
            2 => CyclePart::Edge(walk[0], walk[1]),
            _ => CyclePart::Vertex(v),
        });
    }
    CycleCover::new(g, parts).unwrap()
}

/// Random palindromic polynomial with positive coefficients.
pub fn random_symmetric(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    let mut c = vec![0i64; d + 1];
    for i in 0..=d / 2 {
        let v = rng.gen_range(1..50);
        c[i] = v;
        c[d - i] = v;
    }
    Polynomial::from_i64s(&c)
}
