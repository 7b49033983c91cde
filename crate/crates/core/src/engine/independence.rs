use std::collections::HashMap;

use super::bits::Bits;
use super::{with_width, ComputeBudget, EngineError};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// `I(G; x)` by the vertex recurrence `I(G) = I(G - v) + x I(G - N[v])`.
///
/// Before branching, each subproblem is reduced: components multiply,
/// co-components (the pieces of a join) add as `sum I(G_i) - (k - 1)`, and
/// cliques are closed form. The branch vertex is the one of maximum degree,
/// lowest index on ties. Subproblems are induced subgraphs of the input, so
/// the memo is keyed by the surviving vertex mask.
pub fn independence_polynomial(
    g: &Graph,
    budget: &ComputeBudget,
) -> Result<Polynomial, EngineError> {
    budget.check_recursive(g.n(), "independence polynomial")?;
    Ok(with_width!(g.n(), solve, g, budget))
}

fn solve<const W: usize>(g: &Graph, budget: &ComputeBudget) -> Polynomial {
    let mut solver = Solver::<W> {
        adj: (0..g.n())
            .map(|v| Bits::from_row(g.adjacency_row(v)))
            .collect(),
        memo: HashMap::new(),
        capacity: budget.memo_capacity,
    };
    solver.run(Bits::first_n(g.n()))
}

struct Solver<const W: usize> {
    adj: Vec<Bits<W>>,
    memo: HashMap<Bits<W>, Polynomial>,
    capacity: usize,
}

impl<const W: usize> Solver<W> {
    fn run(&mut self, alive: Bits<W>) -> Polynomial {
        let Some(start) = alive.first() else {
            return Polynomial::one();
        };
        if let Some(p) = self.memo.get(&alive) {
            return p.clone();
        }
        let result = self.reduce(alive, start);
        if self.memo.len() < self.capacity {
            self.memo.insert(alive, result.clone());
        }
        result
    }

    fn reduce(&mut self, alive: Bits<W>, start: usize) -> Polynomial {
        let size = alive.count();
        if size == 1 {
            return Polynomial::one_plus(1);
        }
        let comp = self.component(alive, start, false);
        if comp != alive {
            let rest = alive.and_not(comp);
            return &self.run(comp) * &self.run(rest);
        }
        if alive
            .iter()
            .all(|v| self.adj[v].and(alive).count() == size - 1)
        {
            return Polynomial::one_plus(size as i64);
        }
        let co = self.component(alive, start, true);
        if co != alive {
            let rest = alive.and_not(co);
            return &(&self.run(co) + &self.run(rest)) - &Polynomial::one();
        }
        let v = self.branch_vertex(alive);
        let mut without_v = alive;
        without_v.remove(v);
        let without_closed = alive.and_not(self.adj[v]).and_not(Bits::single(v));
        let a = self.run(without_v);
        let b = self.run(without_closed);
        &a + &b.shift(1)
    }

    /// Component of `start` in the graph (or its complement) induced on `alive`.
    fn component(&self, alive: Bits<W>, start: usize, complement: bool) -> Bits<W> {
        let mut seen = Bits::single(start);
        let mut frontier = seen;
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let nbrs = if complement {
                alive.and_not(self.adj[u])
            } else {
                alive.and(self.adj[u])
            };
            let fresh = nbrs.and_not(seen);
            seen = seen.or(fresh);
            frontier = frontier.or(fresh);
        }
        seen
    }

    fn branch_vertex(&self, alive: Bits<W>) -> usize {
        let mut best = (0, usize::MAX);
        for v in alive.iter() {
            let d = self.adj[v].and(alive).count();
            if best.1 == usize::MAX || d > best.0 {
                best = (d, v);
            }
        }
        best.1
    }
}
