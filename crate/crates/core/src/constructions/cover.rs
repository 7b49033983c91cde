//! Validated clique covers and cycle covers.
//!
//! Both cover types check the partition eagerly and store their parts sorted
//! by smallest vertex, which fixes the order in which rule constructions
//! append new vertices.

use std::fmt;

use super::ConstructionError;
use crate::graph::{Graph, VertexSet};

/// A partition of `V(G)` into cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    n: usize,
    parts: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(g: &Graph, parts: Vec<VertexSet>) -> Result<Self, ConstructionError> {
        check_partition(g.n(), parts.iter().map(|p| p.as_slice()))?;
        if let Some(bad) = parts.iter().find(|p| !g.is_clique(p)) {
            return Err(ConstructionError::InvalidCover(format!(
                "{:?} is not a clique",
                bad.as_slice()
            )));
        }
        let mut parts = parts;
        parts.sort_by_key(|p| p.min());
        Ok(CliqueCover { n: g.n(), parts })
    }

    /// Every vertex on its own.
    pub fn singletons(g: &Graph) -> Self {
        CliqueCover {
            n: g.n(),
            parts: (0..g.n()).map(|v| VertexSet::from([v])).collect(),
        }
    }

    /// Parses `0; 1,2; 3,4,5` (parts separated by `;`, vertices by `,`).
    pub fn parse(g: &Graph, text: &str) -> Result<Self, ConstructionError> {
        let parts = parse_parts(text)?.into_iter().map(VertexSet::new).collect();
        Self::new(g, parts)
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// `|Φ|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn host_order(&self) -> usize {
        self.n
    }
}

impl fmt::Display for CliqueCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| join(p.as_slice(), ",")).collect();
        f.write_str(&parts.join("; "))
    }
}

/// One component of a cycle cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclePart {
    Vertex(usize),
    Edge(usize, usize),
    /// At least three vertices, consecutive ones (and last-first) adjacent.
    Cycle(Vec<usize>),
}

impl CyclePart {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            CyclePart::Vertex(v) => vec![*v],
            CyclePart::Edge(u, v) => vec![*u, *v],
            CyclePart::Cycle(c) => c.clone(),
        }
    }

    fn min_vertex(&self) -> usize {
        self.vertices().into_iter().min().unwrap_or(usize::MAX)
    }
}

/// A partition of `V(G)` into vertex-cycles, edge-cycles and proper cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCover {
    n: usize,
    parts: Vec<CyclePart>,
}

impl CycleCover {
    pub fn new(g: &Graph, parts: Vec<CyclePart>) -> Result<Self, ConstructionError> {
        let vertex_lists: Vec<Vec<usize>> = parts.iter().map(CyclePart::vertices).collect();
        check_partition(g.n(), vertex_lists.iter().map(Vec::as_slice))?;
        for part in &parts {
            match part {
                CyclePart::Vertex(_) => {}
                CyclePart::Edge(u, v) => {
                    if !g.has_edge(*u, *v) {
                        return Err(ConstructionError::InvalidCover(format!(
                            "{u}-{v} is not an edge"
                        )));
                    }
                }
                CyclePart::Cycle(c) => g
                    .check_cycle(c)
                    .map_err(|e| ConstructionError::InvalidCover(e.to_string()))?,
            }
        }
        let mut parts = parts;
        parts.sort_by_key(CyclePart::min_vertex);
        Ok(CycleCover { n: g.n(), parts })
    }

    /// Parses `0; 1,2; 3,4,5`: one vertex is a vertex-cycle, two an
    /// edge-cycle, three or more a proper cycle in the listed order.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, ConstructionError> {
        let parts = parse_parts(text)?
            .into_iter()
            .map(|p| match p.as_slice() {
                [v] => CyclePart::Vertex(*v),
                [u, v] => CyclePart::Edge(*u, *v),
                _ => CyclePart::Cycle(p),
            })
            .collect();
        Self::new(g, parts)
    }

    pub fn parts(&self) -> &[CyclePart] {
        &self.parts
    }

    /// Number of vertex-cycles.
    pub fn vertex_cycles(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| matches!(p, CyclePart::Vertex(_)))
            .count()
    }

    pub fn host_order(&self) -> usize {
        self.n
    }

    /// The clique cover with the same parts, when there are no proper cycles.
    pub fn as_clique_cover(&self, g: &Graph) -> Option<CliqueCover> {
        let parts = self
            .parts
            .iter()
            .map(|p| match p {
                CyclePart::Cycle(_) => None,
                other => Some(VertexSet::new(other.vertices())),
            })
            .collect::<Option<Vec<_>>>()?;
        CliqueCover::new(g, parts).ok()
    }
}

impl fmt::Display for CycleCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| join(&p.vertices(), ","))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn check_partition<'a, I>(n: usize, parts: I) -> Result<(), ConstructionError>
where
    I: Iterator<Item = &'a [usize]>,
{
    let mut seen = vec![false; n];
    for part in parts {
        if part.is_empty() {
            return Err(ConstructionError::InvalidCover("empty part".into()));
        }
        for &v in part {
            if v >= n {
                return Err(ConstructionError::InvalidCover(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ConstructionError::InvalidCover(format!(
                    "vertex {v} appears twice"
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(ConstructionError::InvalidCover(format!(
            "vertex {v} is not covered"
        )));
    }
    Ok(())
}

fn parse_parts(text: &str) -> Result<Vec<Vec<usize>>, ConstructionError> {
    text.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.split(',')
                .map(|v| {
                    v.trim().parse::<usize>().map_err(|_| {
                        ConstructionError::InvalidCover(format!("bad vertex {:?}", v.trim()))
                    })
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn clique_cover_validation() {
        let p4 = named_graph("path", &[4]).unwrap();
        let c = CliqueCover::parse(&p4, "2,3; 0,1").unwrap();
        assert_eq!(c.parts()[0], VertexSet::from([0, 1]));
        assert_eq!(c.to_string(), "0,1; 2,3");
        assert!(CliqueCover::parse(&p4, "0,2; 1; 3").is_err());
        assert!(CliqueCover::parse(&p4, "0,1; 2").is_err());
        assert!(CliqueCover::parse(&p4, "0,1; 1,2; 3").is_err());
        assert!(CliqueCover::parse(&p4, "0,1; 2,3; 4").is_err());
        assert!(CliqueCover::parse(&p4, "0,1; x").is_err());
        assert_eq!(CliqueCover::singletons(&p4).len(), 4);
    }

    #[test]
    fn cycle_cover_validation() {
        let c4 = named_graph("cycle", &[4]).unwrap();
        let cover = CycleCover::parse(&c4, "0,1,2,3").unwrap();
        assert_eq!(cover.vertex_cycles(), 0);
        assert!(cover.as_clique_cover(&c4).is_none());
        let cover = CycleCover::parse(&c4, "0; 1,2; 3").unwrap();
        assert_eq!(cover.vertex_cycles(), 2);
        assert_eq!(cover.as_clique_cover(&c4).unwrap().len(), 3);
        assert!(CycleCover::parse(&c4, "0,2; 1; 3").is_err());
        assert!(CycleCover::parse(&c4, "0,2,1,3").is_err());
    }
}
