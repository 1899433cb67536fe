//! Crossing-number and energy metrics over a drawing, the vertex comparison
//! order built from them, and the facet count of the planarization.
//!
//! Dummy box edges never participate in any metric here.

use crate::drawing::{Drawing, EnergyModel};
use crate::geometry::{segments_cross, Point, Segment};
use crate::graph::{EdgeId, Graph, VertexId};
use std::cmp::Ordering;

/// Number of transversal crossings between edge `e` and every other real
/// edge. Edges sharing a vertex with `e` cannot cross it.
pub fn cr_edge(graph: &Graph, drawing: &Drawing, e: EdgeId) -> usize {
    let seg = drawing.edge_segment(graph, e);
    (0..graph.edge_count())
        .filter(|&other| other != e && !graph.edges_share_vertex(e, other))
        .filter(|&other| segments_cross(seg, drawing.edge_segment(graph, other)))
        .count()
}

/// `cr(v)`: sum of `cr_edge` over the incident edges of `v`.
pub fn cr_vertex(graph: &Graph, drawing: &Drawing, v: VertexId) -> usize {
    cr_vertex_at(graph, drawing, v, drawing.position(v))
}

/// `cr(v)` with `v` hypothetically placed at `pos`; the rest of the drawing
/// stays put. Used to score candidate positions without mutating anything.
pub fn cr_vertex_at(graph: &Graph, drawing: &Drawing, v: VertexId, pos: Point) -> usize {
    let mut count = 0;
    for &e in graph.incident_edges(v) {
        let u = graph.other_endpoint(e, v);
        let seg = Segment::new(pos, drawing.position(u));
        for other in 0..graph.edge_count() {
            if other == e || graph.edge_has_endpoint(other, v) || graph.edge_has_endpoint(other, u) {
                continue;
            }
            if segments_cross(seg, drawing.edge_segment(graph, other)) {
                count += 1;
            }
        }
    }
    count
}

/// `cr(Gamma)`: total number of distinct crossing pairs.
pub fn cr_drawing(graph: &Graph, drawing: &Drawing) -> usize {
    let mut count = 0;
    for e1 in 0..graph.edge_count() {
        let seg1 = drawing.edge_segment(graph, e1);
        for e2 in (e1 + 1)..graph.edge_count() {
            if graph.edges_share_vertex(e1, e2) {
                continue;
            }
            if segments_cross(seg1, drawing.edge_segment(graph, e2)) {
                count += 1;
            }
        }
    }
    count
}

pub fn energy_edge(graph: &Graph, drawing: &Drawing, model: &EnergyModel, e: EdgeId) -> f64 {
    model.edge_energy(drawing.edge_segment(graph, e).length())
}

pub fn energy_vertex(graph: &Graph, drawing: &Drawing, model: &EnergyModel, v: VertexId) -> f64 {
    energy_vertex_at(graph, drawing, model, v, drawing.position(v))
}

/// Local energy of `v` hypothetically placed at `pos`.
pub fn energy_vertex_at(
    graph: &Graph,
    drawing: &Drawing,
    model: &EnergyModel,
    v: VertexId,
    pos: Point,
) -> f64 {
    graph
        .incident_edges(v)
        .iter()
        .map(|&e| {
            let u = graph.other_endpoint(e, v);
            model.edge_energy(pos.distance(drawing.position(u)))
        })
        .sum()
}

pub fn energy_drawing(graph: &Graph, drawing: &Drawing, model: &EnergyModel) -> f64 {
    (0..graph.edge_count())
        .map(|e| energy_edge(graph, drawing, model, e))
        .sum()
}

/// Upper bound on the total energy of any drawing confined to the box of
/// `initial`: `|E| * k * max(L0^2, (d - L0)^2)` with `d` the box diagonal.
pub fn energy_max(graph: &Graph, initial: &Drawing, model: &EnergyModel) -> f64 {
    let d = initial.bbox().diagonal();
    let l0 = model.rest_length;
    let worst = (l0 * l0).max((d - l0) * (d - l0));
    graph.edge_count() as f64 * model.stiffness * worst
}

/// The vertex order: `u` sorts before `v` when `cr(u) < cr(v)`, with local
/// energy breaking ties. Total preorder, ascending.
pub fn compare_vertices(
    graph: &Graph,
    drawing: &Drawing,
    model: &EnergyModel,
    u: VertexId,
    v: VertexId,
) -> Ordering {
    let cu = cr_vertex(graph, drawing, u);
    let cv = cr_vertex(graph, drawing, v);
    cu.cmp(&cv).then_with(|| {
        let eu = energy_vertex(graph, drawing, model, u);
        let ev = energy_vertex(graph, drawing, model, v);
        eu.partial_cmp(&ev).expect("energies are finite")
    })
}

/// Face count of the planarization, outer face included:
/// `|E| - |V| + 2 + cr(Gamma)`. Assumes a connected underlying graph and no
/// three edges concurrent at one interior point.
pub fn facet_count(graph: &Graph, drawing: &Drawing) -> usize {
    let f = graph.edge_count() as i64 - graph.vertex_count() as i64
        + 2
        + cr_drawing(graph, drawing) as i64;
    debug_assert!(f >= 0);
    f.max(0) as usize
}
