//! Exact graph polynomials and the structural checks built on them.
//!
//! [`independence_polynomial`] and [`matching_polynomial`] run a memoized
//! branch-and-reduce recursion over vertex masks of the input graph;
//! [`independence_polynomial_bruteforce`] is a separate subset enumerator
//! that serves as the test oracle.

mod bits;
mod brute;
mod independence;
mod matching;
mod structure;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::poly::Polynomial;

pub use brute::independence_polynomial_bruteforce;
pub use independence::independence_polynomial;
pub use matching::{matching_polynomial, maximum_matching};
pub use structure::{is_claw_free, stevanovic_condition};

/// Widest mask the recursive engines support.
pub const MAX_ENGINE_VERTICES: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("{what} limited to {limit} vertices, graph has {n}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("the given set is not independent")]
    SNotIndependent,
    #[error("budget limits must be positive")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Size limits for the exponential-time routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeBudget {
    pub max_vertices_bruteforce: usize,
    pub max_vertices_recursive: usize,
    /// Memo entries kept per top-level computation; inserts stop when full.
    pub memo_capacity: usize,
}

impl Default for ComputeBudget {
    fn default() -> Self {
        ComputeBudget {
            max_vertices_bruteforce: 26,
            max_vertices_recursive: 50,
            memo_capacity: 1 << 20,
        }
    }
}

impl ComputeBudget {
    pub fn new(
        max_vertices_bruteforce: usize,
        max_vertices_recursive: usize,
        memo_capacity: usize,
    ) -> Result<Self, EngineError> {
        if max_vertices_bruteforce == 0 || max_vertices_recursive == 0 || memo_capacity == 0 {
            return Err(EngineError::InvalidBudget);
        }
        Ok(ComputeBudget {
            max_vertices_bruteforce,
            max_vertices_recursive,
            memo_capacity,
        })
    }

    /// Default budget with a different recursive vertex limit.
    pub fn with_recursive_limit(limit: usize) -> Self {
        ComputeBudget {
            max_vertices_recursive: limit,
            ..Self::default()
        }
    }

    pub(crate) fn check_recursive(&self, n: usize, what: &'static str) -> Result<(), EngineError> {
        let limit = self.max_vertices_recursive.min(MAX_ENGINE_VERTICES);
        if n > limit {
            return Err(EngineError::BudgetExceeded { what, n, limit });
        }
        Ok(())
    }

    pub(crate) fn check_bruteforce(&self, n: usize, what: &'static str) -> Result<(), EngineError> {
        if n > self.max_vertices_bruteforce {
            return Err(EngineError::BudgetExceeded {
                what,
                n,
                limit: self.max_vertices_bruteforce,
            });
        }
        Ok(())
    }
}

/// `D(G; x) = I(complement of G; -x)`.
pub fn dependence_polynomial(g: &Graph, budget: &ComputeBudget) -> Result<Polynomial, EngineError> {
    Ok(independence_polynomial(&g.complement(), budget)?.negate_variable())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaMu {
    pub alpha: usize,
    pub mu: usize,
    /// A maximum matching, edges as `(u, v)` with `u < v`.
    pub witness_matching: Vec<(usize, usize)>,
}

/// Independence number, matching number and a maximum matching.
pub fn alpha_mu(g: &Graph, budget: &ComputeBudget) -> Result<AlphaMu, EngineError> {
    let alpha = independence_polynomial(g, budget)?.degree().unwrap_or(0);
    let (m, witness_matching) = maximum_matching(g, budget)?;
    Ok(AlphaMu {
        alpha,
        mu: m.degree().unwrap_or(0),
        witness_matching,
    })
}

/// Dispatches a mask-width-generic routine on the narrowest width that fits.
macro_rules! with_width {
    ($n:expr, $f:ident $(, $arg:expr)*) => {
        match $n {
            0..=64 => $f::<1>($($arg),*),
            65..=128 => $f::<2>($($arg),*),
            129..=192 => $f::<3>($($arg),*),
            _ => $f::<4>($($arg),*),
        }
    };
}
pub(crate) use with_width;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn dependence_examples() {
        let b = ComputeBudget::default();
        let k2 = named_graph("complete", &[2]).unwrap();
        assert_eq!(
            dependence_polynomial(&k2, &b).unwrap(),
            Polynomial::from_i64s(&[1, -2, 1])
        );
        for n in 1..6 {
            assert_eq!(
                dependence_polynomial(&Graph::empty(n), &b).unwrap(),
                Polynomial::from_i64s(&[1, -(n as i64)])
            );
        }
    }

    #[test]
    fn alpha_mu_examples() {
        let b = ComputeBudget::default();
        let p4 = named_graph("path", &[4]).unwrap();
        let r = alpha_mu(&p4, &b).unwrap();
        assert_eq!((r.alpha, r.mu), (2, 2));
        assert_eq!(r.witness_matching, vec![(0, 1), (2, 3)]);
        let k33 = named_graph("complete_bipartite", &[3, 3]).unwrap();
        let r = alpha_mu(&k33, &b).unwrap();
        assert_eq!((r.alpha, r.mu), (3, 3));
    }

    #[test]
    fn budget_validation() {
        assert_eq!(ComputeBudget::new(0, 5, 5), Err(EngineError::InvalidBudget));
        let b = ComputeBudget::new(4, 4, 10).unwrap();
        assert!(matches!(
            independence_polynomial(&Graph::empty(5), &b),
            Err(EngineError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            independence_polynomial_bruteforce(&Graph::empty(5), &b),
            Err(EngineError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            matching_polynomial(&Graph::empty(5), &b),
            Err(EngineError::BudgetExceeded { .. })
        ));
    }
}
