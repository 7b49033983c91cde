//! Simple undirected graphs on vertices `0..n` and the construction algebra
//! built on them: deletions, unions, Zykov sums, coronas, cycle attachments,
//! line graphs and complements.
//!
//! Adjacency is stored as one bit row per vertex. Every operation returns a
//! fresh graph; nothing mutates after construction.

mod adjlist;
mod families;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use families::{named_graph, Family};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 size form for {0} vertices is not supported (max 62)")]
    UnsupportedGraph6(usize),
    #[error("malformed adjacency list: {0}")]
    MalformedAdjList(String),
}

/// Sorted, duplicate-free set of vertex indices relative to some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn check_within(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::new(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let ones: usize = self.adj.iter().map(|w| w.count_ones() as usize).sum();
        ones / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor bits of `v`, one `u64` per 64 vertices.
    pub fn adjacency_row(&self, v: usize) -> &[u64] {
        self.row(v)
    }

    fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let w = self.words;
        self.adj[u * w + v / 64] |= 1 << (v % 64);
        self.adj[v * w + u / 64] |= 1 << (u % 64);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.adj[u * w + v / 64] &= !(1 << (v % 64));
        self.adj[v * w + u / 64] &= !(1 << (u % 64));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v).chain(std::iter::once(v)).collect())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Checks the simple-graph invariant: symmetric rows, no loops, no bits
    /// past `n`.
    pub fn validate(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }

    fn debug_checked(self) -> Self {
        debug_assert!(self.validate(), "construction produced an invalid graph");
        self
    }

    /// `G - W`: remaining vertices keep their relative order. Returns the new
    /// graph and, for each new index, the original index.
    pub fn remove_vertices(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        w.check_within(self.n)?;
        let kept: Vec<usize> = (0..self.n).filter(|&v| !w.contains(v)).collect();
        Ok((self.induced(&kept), kept))
    }

    /// Induced subgraph on `kept`, renumbered in the given order.
    pub fn induced(&self, kept: &[usize]) -> Graph {
        let mut g = Graph::empty(kept.len());
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.link(i, j);
                }
            }
        }
        g.debug_checked()
    }

    /// `G - F`: indexing is unchanged.
    pub fn remove_edges(&self, f: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in f {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u, v));
            }
            g.unlink(u, v);
        }
        Ok(g.debug_checked())
    }

    /// `G - N[v]`.
    pub fn closed_neighborhood_minus(&self, v: usize) -> Result<Graph, GraphError> {
        let nv = self.closed_neighborhood(v)?;
        Ok(self.remove_vertices(&nv)?.0)
    }

    /// `G ∪ H`: the second graph's vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        g.debug_checked()
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Graph {
        (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    /// Zykov sum `(G1, A1) + (G2, A2)`: disjoint union plus every edge
    /// between `A1` and (shifted) `A2`.
    pub fn zykov_sum(
        &self,
        a1: &VertexSet,
        other: &Graph,
        a2: &VertexSet,
    ) -> Result<Graph, GraphError> {
        a1.check_within(self.n)?;
        a2.check_within(other.n)?;
        let mut g = self.disjoint_union(other);
        for u in a1.iter() {
            for w in a2.iter() {
                g.link(u, w + self.n);
            }
        }
        Ok(g.debug_checked())
    }

    /// Full join `G1 + G2`.
    pub fn join(&self, other: &Graph) -> Graph {
        self.zykov_sum(&VertexSet::all(self.n), other, &VertexSet::all(other.n))
            .expect("full vertex sets are always valid")
    }

    /// Corona `(G, A) ∘ H`: one copy of `h` per anchor, appended in ascending
    /// anchor order, each copy fully joined to its anchor.
    pub fn corona(&self, anchors: &VertexSet, h: &Graph) -> Result<Graph, GraphError> {
        anchors.check_within(self.n)?;
        let mut g = self.disjoint_union(&h.copies(anchors.len()));
        for (i, a) in anchors.iter().enumerate() {
            let base = self.n + i * h.n;
            for x in base..base + h.n {
                g.link(a, x);
            }
        }
        Ok(g.debug_checked())
    }

    /// `G ∘ H` over all vertices.
    pub fn corona_all(&self, h: &Graph) -> Graph {
        self.corona(&VertexSet::all(self.n), h)
            .expect("all vertices are valid anchors")
    }

    /// Checks that `cycle` lists at least three distinct vertices with
    /// consecutive (and last-to-first) vertices adjacent.
    pub fn check_cycle(&self, cycle: &[usize]) -> Result<(), GraphError> {
        if cycle.len() < 3 {
            return Err(GraphError::NotACycle(format!(
                "{cycle:?} has fewer than 3 vertices"
            )));
        }
        for &v in cycle {
            self.check_vertex(v)?;
        }
        if VertexSet::new(cycle.iter().copied()).len() != cycle.len() {
            return Err(GraphError::NotACycle(format!("{cycle:?} repeats a vertex")));
        }
        let q = cycle.len();
        for i in 0..q {
            let (a, b) = (cycle[i], cycle[(i + 1) % q]);
            if !self.has_edge(a, b) {
                return Err(GraphError::NotACycle(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(())
    }

    /// `(G, C) △ H`: copy `i` of `h` (0-based) is fully joined to
    /// `cycle[i - 1]` and `cycle[i]`, cyclically, so copy 0 sits between the
    /// last and the first cycle vertex.
    pub fn cycle_triangle(&self, cycle: &[usize], h: &Graph) -> Result<Graph, GraphError> {
        self.check_cycle(cycle)?;
        let q = cycle.len();
        let mut g = self.disjoint_union(&h.copies(q));
        for i in 0..q {
            let base = self.n + i * h.n;
            for x in base..base + h.n {
                g.link(cycle[(i + q - 1) % q], x);
                g.link(cycle[i], x);
            }
        }
        Ok(g.debug_checked())
    }

    /// `L(G)`: one vertex per edge in [`Graph::edges`] order.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut g = Graph::empty(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.link(i, j);
                }
            }
        }
        g.debug_checked()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g.debug_checked()
    }

    /// Connected components as vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Adds edges, returning a new graph. Used by the family and rule
    /// constructions.
    pub(crate) fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Graph {
        self.disjoint_union(&Graph::empty(k))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

#[cfg(test)]
pub(crate) use tests::arb_graph;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    fn path(n: usize) -> Graph {
        named_graph("path", &[n]).unwrap()
    }

    #[test]
    fn from_edges_rejects_loops_and_out_of_range() {
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = Graph::from_edges(130, &[(0, 129), (64, 65)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
        assert!(g.validate());
    }

    #[test]
    fn vertex_deletion() {
        let (g, map) = path(4).remove_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(map, vec![1, 2, 3]);
        let k3 = named_graph("complete", &[3]).unwrap();
        assert_eq!(
            k3.remove_vertices(&VertexSet::all(3)).unwrap().0,
            Graph::empty(0)
        );
        assert!(path(2).remove_vertices(&VertexSet::from([5])).is_err());
    }

    #[test]
    fn edge_deletion() {
        let c4 = named_graph("cycle", &[4]).unwrap();
        assert_eq!(c4.remove_edges(&[(3, 0)]).unwrap(), path(4));
        assert_eq!(
            c4.remove_edges(&[(0, 2)]),
            Err(GraphError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn closed_neighborhood_deletion() {
        let k5 = named_graph("complete", &[5]).unwrap();
        assert_eq!(k5.closed_neighborhood_minus(2).unwrap(), Graph::empty(0));
        assert_eq!(
            path(4).closed_neighborhood_minus(1).unwrap(),
            Graph::empty(1)
        );
        assert_eq!(
            Graph::empty(4).closed_neighborhood_minus(0).unwrap(),
            Graph::empty(3)
        );
        assert!(path(4).closed_neighborhood_minus(4).is_err());
    }

    #[test]
    fn union_and_zykov() {
        assert_eq!(
            Graph::empty(1).disjoint_union(&Graph::empty(1)),
            Graph::empty(2)
        );
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), named_graph("complete", &[2]).unwrap());
        let p3 = path(3);
        assert_eq!(Graph::empty(0).disjoint_union(&p3), p3);
        // Cone of P3 on its endpoints.
        let cone = p3
            .zykov_sum(&VertexSet::from([0, 2]), &k1, &VertexSet::all(1))
            .unwrap();
        assert_eq!(cone, named_graph("cycle", &[4]).unwrap());
        assert!(p3
            .zykov_sum(&VertexSet::from([3]), &k1, &VertexSet::all(1))
            .is_err());
    }

    #[test]
    fn corona_examples() {
        let two_k1 = Graph::empty(2);
        assert_eq!(
            Graph::empty(1).corona_all(&two_k1),
            Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap()
        );
        let k2 = named_graph("complete", &[2]).unwrap();
        let c = k2.corona_all(&two_k1);
        assert_eq!(c.n(), 6);
        assert_eq!(c.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let g = path(3);
        assert_eq!(g.corona(&VertexSet::empty(), &two_k1).unwrap(), g);
        assert!(g.corona(&VertexSet::from([3]), &two_k1).is_err());
    }

    #[test]
    fn cycle_triangle_examples() {
        let c4 = named_graph("cycle", &[4]).unwrap();
        let w = c4.cycle_triangle(&[0, 1, 2, 3], &Graph::empty(1)).unwrap();
        assert_eq!(w.n(), 8);
        // First copy sits between the last and the first cycle vertex.
        assert!(w.has_edge(4, 3) && w.has_edge(4, 0));
        assert!(w.has_edge(5, 0) && w.has_edge(5, 1));
        let k3 = named_graph("complete", &[3]).unwrap();
        let t = k3.cycle_triangle(&[0, 1, 2], &Graph::empty(1)).unwrap();
        assert_eq!((t.n(), t.edge_count()), (6, 9));
        assert!(matches!(
            path(4).cycle_triangle(&[0, 1, 2, 3], &Graph::empty(1)),
            Err(GraphError::NotACycle(_))
        ));
        assert!(k3.check_cycle(&[0, 1]).is_err());
        assert!(k3.check_cycle(&[0, 1, 1]).is_err());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(path(3).line_graph(), named_graph("complete", &[2]).unwrap());
        assert_eq!(Graph::empty(1).line_graph(), Graph::empty(0));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            named_graph("complete", &[4]).unwrap().complement(),
            Graph::empty(4)
        );
        assert_eq!(
            named_graph("cycle", &[5])
                .unwrap()
                .complement()
                .edge_count(),
            5
        );
    }

    #[test]
    fn independence_and_clique_checks() {
        let p = path(4);
        assert!(p.is_independent(&VertexSet::from([0, 2])));
        assert!(!p.is_independent(&VertexSet::from([1, 2])));
        assert!(p.is_clique(&VertexSet::from([1, 2])));
        assert!(p.is_clique(&VertexSet::from([3])));
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(10)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn corona_size(g in arb_graph(6), h in arb_graph(3)) {
            let c = g.corona_all(&h);
            prop_assert_eq!(c.n(), g.n() * (1 + h.n()));
            prop_assert_eq!(c.edge_count(), g.edge_count() + g.n() * (h.edge_count() + h.n()));
            prop_assert!(c.validate());
        }

        #[test]
        fn line_graph_degrees(g in arb_graph(8)) {
            let l = g.line_graph();
            for (i, (u, v)) in g.edges().into_iter().enumerate() {
                prop_assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
            }
        }

        #[test]
        fn join_commutes_up_to_shift(g1 in arb_graph(5), g2 in arb_graph(5)) {
            let a = g1.join(&g2);
            let b = g2.join(&g1);
            let (n1, n2) = (g1.n(), g2.n());
            // Move g2's block to the front in `a` and compare with `b`.
            let order: Vec<usize> = (n1..n1 + n2).chain(0..n1).collect();
            prop_assert_eq!(a.induced(&order), b);
        }

        #[test]
        fn cycle_triangle_attaches_each_copy_twice(q in 3usize..8, hn in 1usize..3) {
            let c = named_graph("cycle", &[q]).unwrap();
            let h = Graph::empty(hn);
            let cycle: Vec<usize> = (0..q).collect();
            let w = c.cycle_triangle(&cycle, &h).unwrap();
            prop_assert_eq!(w.n(), q + q * hn);
            for x in q..w.n() {
                prop_assert_eq!(w.neighbors(x).filter(|&v| v < q).count(), 2);
            }
        }
    }
}
