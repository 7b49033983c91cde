use num_bigint::BigInt;

use super::{ComputeBudget, EngineError};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// `I(G; x)` by literally counting independent sets of each size.
///
/// Shares no code with the recursive engine; it walks the subset lattice in
/// lexicographic order and extends only independent prefixes.
pub fn independence_polynomial_bruteforce(
    g: &Graph,
    budget: &ComputeBudget,
) -> Result<Polynomial, EngineError> {
    budget.check_bruteforce(g.n(), "brute-force enumeration")?;
    let mut counts: Vec<u64> = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    for_each_independent_set(g, &all, &mut |set| {
        if counts.len() <= set.len() {
            counts.resize(set.len() + 1, 0);
        }
        counts[set.len()] += 1;
        true
    });
    Ok(Polynomial::new(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Calls `visit` on every independent subset of `candidates` (including the
/// empty set) until it returns `false`. Returns whether the walk finished.
pub(crate) fn for_each_independent_set(
    g: &Graph,
    candidates: &[usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut chosen = Vec::new();
    extend(g, candidates, &mut chosen, visit)
}

fn extend(
    g: &Graph,
    candidates: &[usize],
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if !visit(chosen) {
        return false;
    }
    for (i, &v) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| !g.has_edge(v, w))
            .collect();
        chosen.push(v);
        let go_on = extend(g, &next, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}
