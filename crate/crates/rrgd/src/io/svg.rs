//! SVG rendering: one line per edge, one circle per vertex, viewport equal
//! to the expanded box. The y axis is flipped so larger y renders upward.

use crate::drawing::Drawing;
use crate::graph::Graph;
use std::fmt::Write;

pub fn write_svg(graph: &Graph, drawing: &Drawing) -> String {
    let bbox = drawing.bbox();
    let (w, h) = (bbox.width(), bbox.height());
    let flip = |y: f64| bbox.min().y + bbox.max().y - y;
    let stroke = (bbox.diagonal() / 400.0).max(1e-9);
    let radius = 2.0 * stroke;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        bbox.min().x,
        bbox.min().y,
        w,
        h
    );
    let _ = writeln!(
        out,
        r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="white" stroke="gray" stroke-width="{}" stroke-dasharray="{}"/>"#,
        bbox.min().x,
        bbox.min().y,
        w,
        h,
        stroke,
        4.0 * stroke
    );
    for &(u, v) in graph.edges() {
        let a = drawing.position(u);
        let b = drawing.position(v);
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
            a.x,
            flip(a.y),
            b.x,
            flip(b.y),
            stroke
        );
    }
    for v in graph.vertices() {
        let p = drawing.position(v);
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="steelblue"/>"#,
            p.x,
            flip(p.y),
            radius
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn empty_graph_renders_viewport_only() {
        let g = Graph::new(0, vec![]).unwrap();
        let d = Drawing::from_positions(vec![]).unwrap();
        let svg = write_svg(&g, &d);
        assert!(svg.contains("viewBox"));
        assert!(!svg.contains("<line"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn k4_square_has_six_lines_four_circles() {
        let g = Graph::complete(4);
        let d = Drawing::from_positions(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let svg = write_svg(&g, &d);
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("<circle").count(), 4);
    }

    #[test]
    fn larger_y_renders_upward() {
        // Vertex 1 sits above vertex 0; after the flip its svg y must be
        // smaller (svg y grows downward).
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let d = Drawing::from_positions(vec![Point::new(0.0, 0.0), Point::new(0.0, 10.0)]).unwrap();
        let svg = write_svg(&g, &d);
        let line = svg.lines().find(|l| l.contains("<line")).unwrap();
        let grab = |key: &str| -> f64 {
            let start = line.find(key).unwrap() + key.len() + 2;
            let rest = &line[start..];
            rest[..rest.find('"').unwrap()].parse().unwrap()
        };
        assert!(grab("y2") < grab("y1"));
    }
}
