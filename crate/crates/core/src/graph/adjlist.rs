//! Human-authored fixture format: `n; u-v, u-v, ...`.
//!
//! Blank lines and `#` comments are ignored, and the edge list may span
//! several lines.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body: String = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        let bad = |msg: String| GraphError::MalformedAdjList(msg);
        let (head, rest) = match body.split_once(';') {
            Some((h, r)) => (h, r),
            None => (body.as_str(), ""),
        };
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(format!("vertex count {:?}", head.trim())))?;
        let mut edges = Vec::new();
        for item in rest.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| bad(format!("edge {item:?} is not u-v")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("edge {item:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edges(n, &edges)
    }
}
