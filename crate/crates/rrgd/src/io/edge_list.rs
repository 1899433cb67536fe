//! Plain edge-list format: one `u v` pair per line, `#` comments and blank
//! lines ignored, vertices `0..=max_id`.

use super::IoError;
use crate::graph::Graph;
use std::collections::HashSet;

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_id = None::<usize>;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(IoError::EdgeList {
                    line,
                    message: format!("expected two vertex ids, got {content:?}"),
                })
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| IoError::EdgeList {
                line,
                message: format!("invalid vertex id {s:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(IoError::EdgeList { line, message: format!("self-loop at vertex {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(IoError::EdgeList { line, message: format!("duplicate edge ({u}, {v})") });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let vertex_count = max_id.map_or(0, |m| m + 1);
    Ok(Graph::new(vertex_count, edges)?)
}
