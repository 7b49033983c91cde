//! Writes every graph on 1..=N vertices up to isomorphism, one graph6 line
//! each, grouped by order and sorted within each order.
//!
//! ```text
//! cargo run --release -p indpoly --example gen_graph6_corpus -- 9 > graphs.g6
//! ```
//!
//! Graphs on `n` vertices come from graphs on `n - 1` vertices by adding a
//! vertex with every possible neighborhood, deduplicated by a canonical
//! labeling (equitable refinement, individualization, best leaf code).

use std::collections::HashSet;
use std::io::{self, BufWriter, Write};

use indpoly::{write_graph6, Graph};

const KNOWN_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

type Adj = Vec<u16>;

fn refine(adj: &Adj, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        'outer: for s in 0..cells.len() {
            let splitter: u16 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c]
                    .iter()
                    .map(|&v| ((adj[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort();
                if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
                    continue;
                }
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                changed = true;
                break 'outer;
            }
        }
        if !changed {
            return cells;
        }
    }
}

fn code(adj: &Adj, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    c
}

fn twins(adj: &Adj, u: usize, v: usize) -> bool {
    let mask = !(1u16 << u | 1 << v);
    adj[u] & mask == adj[v] & mask
}

fn search(adj: &Adj, cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[t] {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = next[t].iter().copied().filter(|&w| w != v).collect();
        next.splice(t..=t, [vec![v], rest]);
        search(adj, next, best);
    }
}

/// Canonical code and the relabeled adjacency.
fn canonical(adj: &Adj) -> (u64, Adj) {
    let n = adj.len();
    let mut best = None;
    search(adj, vec![(0..n).collect()], &mut best);
    let (c, order) = best.expect("at least one leaf");
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = vec![0u16; n];
    for (v, &row) in adj.iter().enumerate() {
        for w in 0..n {
            if row >> w & 1 == 1 {
                out[pos[v]] |= 1 << pos[w];
            }
        }
    }
    (c, out)
}

fn to_graph(adj: &Adj) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            (u + 1..n)
                .filter(move |&w| adj[u] >> w & 1 == 1)
                .map(move |w| (u, w))
        })
        .collect();
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn main() -> io::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("order must be an integer"))
        .unwrap_or(7);
    assert!((1..=9).contains(&max_n), "order must be in 1..=9");
    let mut out = BufWriter::new(io::stdout().lock());
    let mut level: Vec<(u64, Adj)> = vec![(0, Vec::new())];
    for (n, &expected) in KNOWN_COUNTS.iter().enumerate().take(max_n + 1).skip(1) {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, adj) in &level {
            for nbrs in 0u16..1 << (n - 1) {
                let mut a = adj.clone();
                for (v, row) in a.iter_mut().enumerate() {
                    *row |= (nbrs >> v & 1) << (n - 1);
                }
                a.push(nbrs);
                let (c, canon) = canonical(&a);
                if seen.insert(c) {
                    next.push((c, canon));
                }
            }
        }
        next.sort_by_key(|x| std::cmp::Reverse(x.0));
        assert_eq!(next.len(), expected, "graph count on {n} vertices");
        for (_, adj) in &next {
            writeln!(
                out,
                "{}",
                write_graph6(&to_graph(adj)).expect("small graph")
            )?;
        }
        eprintln!("n = {n}: {} graphs", next.len());
        level = next;
    }
    Ok(())
}
