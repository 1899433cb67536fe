//! Immutable simple undirected graph with a per-vertex incident edge index.

use std::collections::HashSet;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) references vertex >= vertex count {count}")]
    EndpointOutOfRange { u: VertexId, v: VertexId, count: usize },
}

/// An undirected graph over vertices `0..vertex_count`. Simple by
/// construction: self-loops and duplicate edges are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut incident = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::EndpointOutOfRange { u, v, count: vertex_count });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Graph { vertex_count, edges, incident })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Edge ids incident to `v` (the set `E_v`).
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v].len()
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edge_has_endpoint(&self, e: EdgeId, v: VertexId) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    pub fn edges_share_vertex(&self, e1: EdgeId, e2: EdgeId) -> bool {
        let (a, b) = self.edges[e1];
        self.edge_has_endpoint(e2, a) || self.edge_has_endpoint(e2, b)
    }
}
