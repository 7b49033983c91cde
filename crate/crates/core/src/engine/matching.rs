use std::collections::HashMap;

use super::bits::Bits;
use super::{with_width, ComputeBudget, EngineError};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// `M(G; x)`, the generating polynomial of matchings by size.
pub fn matching_polynomial(g: &Graph, budget: &ComputeBudget) -> Result<Polynomial, EngineError> {
    Ok(maximum_matching(g, budget)?.0)
}

/// `M(G; x)` together with one maximum matching, retained along the
/// recursion.
///
/// Applying the edge recurrence `M(G) = M(G - e) + x M(G - u - v)` to every
/// edge at a vertex `v` in turn leaves `v` isolated, which gives
/// `M(G) = M(G - v) + x * sum_{u ~ v} M(G - u - v)`; all subproblems are then
/// induced subgraphs, memoized by vertex mask. Components multiply. The
/// branch vertex is one of minimum positive degree.
pub fn maximum_matching(
    g: &Graph,
    budget: &ComputeBudget,
) -> Result<(Polynomial, Vec<(usize, usize)>), EngineError> {
    budget.check_recursive(g.n(), "matching polynomial")?;
    Ok(with_width!(g.n(), solve, g, budget))
}

type Entry = (Polynomial, Vec<(usize, usize)>);

fn solve<const W: usize>(g: &Graph, budget: &ComputeBudget) -> Entry {
    let mut solver = Solver::<W> {
        adj: (0..g.n())
            .map(|v| Bits::from_row(g.adjacency_row(v)))
            .collect(),
        memo: HashMap::new(),
        capacity: budget.memo_capacity,
    };
    let (poly, mut matching) = solver.run(Bits::first_n(g.n()));
    matching.sort_unstable();
    (poly, matching)
}

struct Solver<const W: usize> {
    adj: Vec<Bits<W>>,
    memo: HashMap<Bits<W>, Entry>,
    capacity: usize,
}

impl<const W: usize> Solver<W> {
    fn run(&mut self, alive: Bits<W>) -> Entry {
        // Isolated vertices never take part in a matching.
        let active: Bits<W> = alive
            .iter()
            .filter(|&v| !self.adj[v].and(alive).is_empty())
            .fold(Bits::EMPTY, |mut b, v| {
                b.insert(v);
                b
            });
        let Some(start) = active.first() else {
            return (Polynomial::one(), Vec::new());
        };
        if let Some(e) = self.memo.get(&active) {
            return e.clone();
        }
        let result = self.reduce(active, start);
        if self.memo.len() < self.capacity {
            self.memo.insert(active, result.clone());
        }
        result
    }

    fn reduce(&mut self, alive: Bits<W>, start: usize) -> Entry {
        let comp = self.component(alive, start);
        if comp != alive {
            let (pa, mut ma) = self.run(comp);
            let (pb, mb) = self.run(alive.and_not(comp));
            ma.extend(mb);
            return (&pa * &pb, ma);
        }
        let v = alive
            .iter()
            .min_by_key(|&v| self.adj[v].and(alive).count())
            .expect("nonempty");
        let mut without_v = alive;
        without_v.remove(v);
        let (mut poly, mut best) = self.run(without_v);
        let mut sum = Polynomial::zero();
        for u in self.adj[v].and(alive).iter() {
            let mut rest = without_v;
            rest.remove(u);
            let (p, m) = self.run(rest);
            sum = &sum + &p;
            if m.len() + 1 > best.len() {
                best = m;
                best.push((v.min(u), v.max(u)));
            }
        }
        poly = &poly + &sum.shift(1);
        (poly, best)
    }

    fn component(&self, alive: Bits<W>, start: usize) -> Bits<W> {
        let mut seen = Bits::single(start);
        let mut frontier = seen;
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let fresh = alive.and(self.adj[u]).and_not(seen);
            seen = seen.or(fresh);
            frontier = frontier.or(fresh);
        }
        seen
    }
}
