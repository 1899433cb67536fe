//! Graph ingestion, drawing persistence and SVG rendering.

mod document;
mod edge_list;
mod graphml;
mod svg;

pub use document::{read_drawing, write_drawing, BoxRecord, DocumentMeta, DrawingDocument, NodeRecord};
pub use edge_list::parse_edge_list;
pub use graphml::{parse_graphml_subset, ParsedGraph};
pub use svg::write_svg;

use crate::graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graphml: {0}")]
    Graphml(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid drawing document: {0}")]
    Document(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
