//! Exact independence, matching and dependence polynomials of small graphs,
//! together with the corona and cover constructions that turn an arbitrary
//! graph into one with a symmetric independence polynomial.
//!
//! ```
//! use indpoly::{independence_polynomial, named_graph, rule1, ComputeBudget};
//!
//! let g = named_graph("path", &[3]).unwrap();
//! let p = independence_polynomial(&rule1(&g), &ComputeBudget::default()).unwrap();
//! assert!(p.is_symmetric());
//! assert_eq!(p.to_string(), "1 + 9x + 28x^2 + 40x^3 + 28x^4 + 9x^5 + x^6");
//! ```

pub mod constructions;
pub mod engine;
pub mod graph;
pub mod poly;

pub use constructions::{
    build_symmetric_divisor, corona_formula, cover_from_matching, gutman_symmetric, h_n_family,
    rule1, rule2, rule3, verify_identity, CliqueCover, ConstructionError, CycleCover, CyclePart,
    Identity, IdentityId, IdentityReport,
};
pub use engine::{
    alpha_mu, dependence_polynomial, independence_polynomial, independence_polynomial_bruteforce,
    is_claw_free, matching_polynomial, maximum_matching, stevanovic_condition, AlphaMu,
    ComputeBudget, EngineError, MAX_ENGINE_VERTICES,
};
pub use graph::{named_graph, parse_graph6, write_graph6, Family, Graph, GraphError, VertexSet};
pub use poly::{
    check_monotone_window, classify, count_real_roots, PolyError, PolyProfile, Polynomial,
    RealRootCount,
};
