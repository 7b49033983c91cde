use super::brute::for_each_independent_set;
use super::{ComputeBudget, EngineError};
use crate::graph::{Graph, VertexSet};

/// True iff no vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if nbrs[j + 1..]
                    .iter()
                    .any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c))
                {
                    return false;
                }
            }
        }
        true
    })
}

/// Checks `|N(A) ∩ S| = 2|A|` for every independent `A ⊆ V - S`, the
/// sufficient condition for `I(G; x)` to be symmetric.
pub fn stevanovic_condition(
    g: &Graph,
    s: &VertexSet,
    budget: &ComputeBudget,
) -> Result<bool, EngineError> {
    s.check_within(g.n())?;
    if !g.is_independent(s) {
        return Err(EngineError::SNotIndependent);
    }
    budget.check_bruteforce(g.n(), "independent-set condition check")?;
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let holds = for_each_independent_set(g, &outside, &mut |a| {
        let hit = s
            .iter()
            .filter(|&t| a.iter().any(|&u| g.has_edge(u, t)))
            .count();
        hit == 2 * a.len()
    });
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::independence_polynomial;
    use crate::graph::{arb_graph, named_graph};
    use proptest::prelude::*;

    #[test]
    fn claw_examples() {
        assert!(!is_claw_free(
            &named_graph("complete_bipartite", &[1, 3]).unwrap()
        ));
        assert!(is_claw_free(&named_graph("cycle", &[5]).unwrap()));
        assert!(is_claw_free(&named_graph("complete", &[5]).unwrap()));
    }

    #[test]
    fn condition_examples() {
        let b = ComputeBudget::default();
        let p3 = named_graph("path", &[3]).unwrap();
        assert_eq!(
            stevanovic_condition(&p3, &VertexSet::from([0, 2]), &b),
            Ok(true)
        );
        let k2 = named_graph("complete", &[2]).unwrap();
        assert_eq!(
            stevanovic_condition(&k2, &VertexSet::from([0]), &b),
            Ok(false)
        );
        assert_eq!(
            stevanovic_condition(&k2, &VertexSet::from([0, 1]), &b),
            Err(EngineError::SNotIndependent)
        );
        assert!(stevanovic_condition(&k2, &VertexSet::from([2]), &b).is_err());
    }

    proptest! {
        #[test]
        fn line_graphs_are_claw_free(g in arb_graph(8)) {
            prop_assert!(is_claw_free(&g.line_graph()));
        }

        #[test]
        fn condition_implies_symmetry(g in arb_graph(8), mask in any::<u16>()) {
            let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let b = ComputeBudget::default();
            if let Ok(true) = stevanovic_condition(&g, &s, &b) {
                prop_assert!(independence_polynomial(&g, &b).unwrap().is_symmetric());
            }
        }
    }
}
