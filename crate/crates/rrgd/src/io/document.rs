//! The persisted drawing document: JSON with node coordinates at full
//! float precision, edges, the expanded box and run metadata. Writing and
//! reading round-trips exactly.

use super::IoError;
use crate::drawing::{BoundingBox, Drawing};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::optimizer::EngineConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BoxRecord {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct DocumentMeta {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<EngineConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy: Option<f64>,
    /// Original node labels, e.g. GraphML string ids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct DrawingDocument {
    pub schema: u32,
    #[serde(rename = "box")]
    pub bbox: BoxRecord,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub meta: DocumentMeta,
}

impl DrawingDocument {
    pub fn from_drawing(graph: &Graph, drawing: &Drawing, meta: DocumentMeta) -> Self {
        let bbox = drawing.bbox();
        DrawingDocument {
            schema: SCHEMA_VERSION,
            bbox: BoxRecord {
                min_x: bbox.min().x,
                min_y: bbox.min().y,
                max_x: bbox.max().x,
                max_y: bbox.max().y,
                margin: bbox.margin(),
            },
            nodes: (0..graph.vertex_count())
                .map(|id| {
                    let p = drawing.position(id);
                    NodeRecord { id, x: p.x, y: p.y }
                })
                .collect(),
            edges: graph.edges().to_vec(),
            meta,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, IoError> {
        Ok(Graph::new(self.nodes.len(), self.edges.clone())?)
    }

    pub fn to_drawing(&self) -> Result<Drawing, IoError> {
        let bbox = BoundingBox::from_expanded(
            Point::new(self.bbox.min_x, self.bbox.min_y),
            Point::new(self.bbox.max_x, self.bbox.max_y),
            self.bbox.margin,
        )
        .map_err(|e| IoError::Document(e.to_string()))?;
        let mut positions = vec![None; self.nodes.len()];
        for n in &self.nodes {
            let slot = positions
                .get_mut(n.id)
                .ok_or_else(|| IoError::Document(format!("node id {} out of range", n.id)))?;
            if slot.is_some() {
                return Err(IoError::Document(format!("duplicate node id {}", n.id)));
            }
            *slot = Some(Point::new(n.x, n.y));
        }
        let positions = positions
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| IoError::Document("missing node ids".into()))?;
        Drawing::new(positions, bbox).map_err(|e| IoError::Document(e.to_string()))
    }

    fn validate(&self) -> Result<(), IoError> {
        if self.schema != SCHEMA_VERSION {
            return Err(IoError::Document(format!("unsupported schema {}", self.schema)));
        }
        for &(u, v) in &self.edges {
            if u >= self.nodes.len() || v >= self.nodes.len() {
                return Err(IoError::Document(format!("edge ({u}, {v}) references missing node")));
            }
        }
        Ok(())
    }
}

pub fn write_drawing(doc: &DrawingDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn read_drawing(text: &str) -> Result<DrawingDocument, IoError> {
    let doc: DrawingDocument = serde_json::from_str(text)?;
    doc.validate()?;
    // Positions and box must reconstruct.
    doc.to_drawing()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> (Graph, Drawing) {
        let g = Graph::complete(4);
        let d = Drawing::from_positions(vec![
            Point::new(0.1, 0.2),
            Point::new(3.7, 0.4),
            Point::new(3.3, 2.9),
            Point::new(0.6, 2.5),
        ])
        .unwrap();
        (g, d)
    }

    #[test]
    fn round_trip_is_exact() {
        let (g, d) = fixture();
        let meta = DocumentMeta { seed: Some(42), crossings: Some(0), ..Default::default() };
        let doc = DrawingDocument::from_drawing(&g, &d, meta);
        let text = write_drawing(&doc);
        let back = read_drawing(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_drawing().unwrap(), d);
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn rejects_bad_edge_reference() {
        let (g, d) = fixture();
        let mut doc = DrawingDocument::from_drawing(&g, &d, DocumentMeta::default());
        doc.edges.push((0, 99));
        let text = write_drawing(&doc);
        assert!(read_drawing(&text).is_err());
    }

    #[test]
    fn rejects_duplicate_node_ids() {
        let (g, d) = fixture();
        let mut doc = DrawingDocument::from_drawing(&g, &d, DocumentMeta::default());
        doc.nodes[1].id = 0;
        let text = write_drawing(&doc);
        assert!(read_drawing(&text).is_err());
    }
}
