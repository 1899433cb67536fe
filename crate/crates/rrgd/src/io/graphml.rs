//! Minimal GraphML reader: node and edge elements of one undirected graph.
//! Keys, data attributes and everything else are ignored; original node
//! ids are kept so drawings can refer back to them.

use super::IoError;
use crate::graph::Graph;
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use std::collections::HashMap;

/// A parsed graph plus the original string id of each dense vertex.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub node_ids: Vec<String>,
}

fn attr(e: &BytesStart, name: &[u8]) -> Result<Option<String>, IoError> {
    for a in e.attributes() {
        let a = a.map_err(|err| IoError::Graphml(err.to_string()))?;
        if a.key.as_ref() == name {
            let v = a
                .normalized_value()
                .map_err(|err| IoError::Graphml(err.to_string()))?;
            return Ok(Some(v.into_owned()));
        }
    }
    Ok(None)
}

pub fn parse_graphml_subset(xml: &str) -> Result<ParsedGraph, IoError> {
    let mut reader = Reader::from_str(xml);
    let mut node_ids: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut in_graph = false;
    let mut saw_graph = false;

    loop {
        let event = reader
            .read_event()
            .map_err(|err| IoError::Graphml(err.to_string()))?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => match e.name().as_ref() {
                b"graph" => {
                    if saw_graph {
                        return Err(IoError::Graphml("multiple graph elements".into()));
                    }
                    saw_graph = true;
                    in_graph = true;
                    match attr(e, b"edgedefault")?.as_deref() {
                        Some("undirected") => {}
                        Some("directed") => {
                            return Err(IoError::Graphml("directed graphs are not supported".into()))
                        }
                        other => {
                            return Err(IoError::Graphml(format!(
                                "missing or invalid edgedefault: {other:?}"
                            )))
                        }
                    }
                }
                b"node" if in_graph => {
                    let id = attr(e, b"id")?
                        .ok_or_else(|| IoError::Graphml("node without id".into()))?;
                    if index.contains_key(&id) {
                        return Err(IoError::Graphml(format!("duplicate node id {id:?}")));
                    }
                    index.insert(id.clone(), node_ids.len());
                    node_ids.push(id);
                }
                b"edge" if in_graph => {
                    if attr(e, b"directed")?.as_deref() == Some("true") {
                        return Err(IoError::Graphml("directed edge".into()));
                    }
                    let src = attr(e, b"source")?
                        .ok_or_else(|| IoError::Graphml("edge without source".into()))?;
                    let dst = attr(e, b"target")?
                        .ok_or_else(|| IoError::Graphml("edge without target".into()))?;
                    let lookup = |id: &str| {
                        index.get(id).copied().ok_or_else(|| {
                            IoError::Graphml(format!("edge references undeclared node {id:?}"))
                        })
                    };
                    edges.push((lookup(&src)?, lookup(&dst)?));
                }
                _ => {}
            },
            Event::End(ref e) if e.name().as_ref() == b"graph" => in_graph = false,
            Event::Eof => break,
            _ => {}
        }
    }

    if !saw_graph {
        return Err(IoError::Graphml("no graph element".into()));
    }
    let graph = Graph::new(node_ids.len(), edges)?;
    Ok(ParsedGraph { graph, node_ids })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"<?xml version="1.0"?>
<graphml xmlns="http://graphml.graphdrawing.org/xmlns">
  <graph id="G" edgedefault="undirected">
    <node id="n0"/>
    <node id="n1"/>
    <node id="n2"/>
    <edge source="n0" target="n1"/>
    <edge source="n1" target="n2"/>
  </graph>
</graphml>"#;

    #[test]
    fn parses_minimal_path() {
        let parsed = parse_graphml_subset(MINIMAL).unwrap();
        assert_eq!(parsed.graph.vertex_count(), 3);
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(parsed.node_ids, vec!["n0", "n1", "n2"]);
    }

    #[test]
    fn unknown_attributes_and_keys_ignored() {
        let xml = r#"<graphml>
  <key id="w" for="edge" attr.name="weight" attr.type="double"/>
  <graph edgedefault="undirected">
    <node id="a" yfiles="x"><data key="d0">ignored</data></node>
    <node id="b"/>
    <edge id="e0" source="a" target="b"><data key="w">2.5</data></edge>
  </graph>
</graphml>"#;
        let parsed = parse_graphml_subset(xml).unwrap();
        assert_eq!(parsed.graph.edge_count(), 1);
        assert_eq!(parsed.node_ids, vec!["a", "b"]);
    }

    #[test]
    fn undeclared_endpoint_is_an_error() {
        let xml = r#"<graphml><graph edgedefault="undirected">
  <node id="a"/>
  <edge source="a" target="ghost"/>
</graph></graphml>"#;
        let err = parse_graphml_subset(xml).unwrap_err();
        assert!(err.to_string().contains("undeclared node"));
    }

    #[test]
    fn directed_documents_rejected() {
        let xml = r#"<graphml><graph edgedefault="directed">
  <node id="a"/><node id="b"/>
  <edge source="a" target="b"/>
</graph></graphml>"#;
        assert!(parse_graphml_subset(xml).is_err());

        let xml = r#"<graphml><graph edgedefault="undirected">
  <node id="a"/><node id="b"/>
  <edge source="a" target="b" directed="true"/>
</graph></graphml>"#;
        assert!(parse_graphml_subset(xml).is_err());
    }

    #[test]
    fn malformed_xml_rejected() {
        assert!(parse_graphml_subset("<graphml><graph edgedefault=").is_err());
        assert!(parse_graphml_subset("<graphml></graphml>").is_err());
    }
}
