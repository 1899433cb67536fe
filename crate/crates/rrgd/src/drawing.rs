//! Straight-line drawings: a position per vertex plus the fixed expanded
//! bounding box whose four sides act as always-reflecting dummy edges.

use crate::geometry::{Point, Segment};
use crate::graph::{EdgeId, Graph, VertexId};
use thiserror::Error;

/// Fraction of the tight extent used as the default box margin.
pub const DEFAULT_MARGIN_RATIO: f64 = 0.1;

#[derive(Debug, Error, PartialEq)]
pub enum DrawingError {
    #[error("position {index} is not finite")]
    NonFinitePosition { index: usize },
    #[error("position {index} lies outside the expanded bounding box")]
    OutsideBox { index: usize },
    #[error("bounding box is degenerate or has non-positive margin")]
    BadBox,
}

/// The expanded bounding box `B_eps`: a tight rectangle grown by `margin` on
/// every side. Its corners play the role of four dummy vertices and its
/// sides the four dummy edges; both stay fixed for a whole optimizer run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    min: Point,
    max: Point,
    margin: f64,
}

impl BoundingBox {
    /// Expand the tight rectangle `[min, max]` by `margin` on every side.
    pub fn expand(tight_min: Point, tight_max: Point, margin: f64) -> Result<Self, DrawingError> {
        if !(margin > 0.0) || !tight_min.is_finite() || !tight_max.is_finite() {
            return Err(DrawingError::BadBox);
        }
        if tight_min.x > tight_max.x || tight_min.y > tight_max.y {
            return Err(DrawingError::BadBox);
        }
        Ok(BoundingBox {
            min: Point::new(tight_min.x - margin, tight_min.y - margin),
            max: Point::new(tight_max.x + margin, tight_max.y + margin),
            margin,
        })
    }

    /// Rebuild a box from already-expanded bounds, e.g. from a persisted
    /// drawing. Exact: no arithmetic is applied to the bounds.
    pub fn from_expanded(min: Point, max: Point, margin: f64) -> Result<Self, DrawingError> {
        if !(margin > 0.0) || !min.is_finite() || !max.is_finite() {
            return Err(DrawingError::BadBox);
        }
        if min.x >= max.x || min.y >= max.y {
            return Err(DrawingError::BadBox);
        }
        Ok(BoundingBox { min, max, margin })
    }

    /// Box around a point set with the default margin rule
    /// (`DEFAULT_MARGIN_RATIO` of the larger tight extent, with a fallback
    /// for degenerate point sets so the margin stays positive).
    pub fn around(points: &[Point]) -> Result<Self, DrawingError> {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        if points.is_empty() {
            min = Point::new(0.0, 0.0);
            max = Point::new(0.0, 0.0);
        }
        let extent = (max.x - min.x).max(max.y - min.y);
        let extent = if extent > 0.0 { extent } else { 1.0 };
        BoundingBox::expand(min, max, DEFAULT_MARGIN_RATIO * extent)
    }

    pub fn min(&self) -> Point {
        self.min
    }

    pub fn max(&self) -> Point {
        self.max
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn diagonal(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// Closed containment test, exact comparisons.
    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Clamp a point into the closed box. A no-op for interior points; used
    /// to absorb sub-ulp rounding escapes of computed intersection points.
    pub fn clamp(&self, p: Point) -> Point {
        Point::new(p.x.clamp(self.min.x, self.max.x), p.y.clamp(self.min.y, self.max.y))
    }

    /// The four dummy corner vertices, counter-clockwise from `min`.
    pub fn corners(&self) -> [Point; 4] {
        [
            self.min,
            Point::new(self.max.x, self.min.y),
            self.max,
            Point::new(self.min.x, self.max.y),
        ]
    }

    /// The four dummy edges: bottom, right, top, left.
    pub fn sides(&self) -> [Segment; 4] {
        let [c0, c1, c2, c3] = self.corners();
        [
            Segment::new(c0, c1),
            Segment::new(c1, c2),
            Segment::new(c2, c3),
            Segment::new(c3, c0),
        ]
    }
}

/// A straight-line drawing: one position per vertex, all inside the closed
/// expanded box. The box never changes after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    positions: Vec<Point>,
    bbox: BoundingBox,
}

impl Drawing {
    pub fn new(positions: Vec<Point>, bbox: BoundingBox) -> Result<Self, DrawingError> {
        for (index, p) in positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFinitePosition { index });
            }
            if !bbox.contains(*p) {
                return Err(DrawingError::OutsideBox { index });
            }
        }
        Ok(Drawing { positions, bbox })
    }

    /// Build a drawing and fix its box from the positions themselves using
    /// the default margin rule.
    pub fn from_positions(positions: Vec<Point>) -> Result<Self, DrawingError> {
        for (index, p) in positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFinitePosition { index });
            }
        }
        let bbox = BoundingBox::around(&positions)?;
        Drawing::new(positions, bbox)
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: VertexId) -> Point {
        self.positions[v]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn bbox(&self) -> &BoundingBox {
        &self.bbox
    }

    pub fn set_position(&mut self, v: VertexId, p: Point) {
        debug_assert!(self.bbox.contains(p), "position left the box: {p:?}");
        self.positions[v] = self.bbox.clamp(p);
    }

    /// The segment drawn for edge `e` of `graph`.
    pub fn edge_segment(&self, graph: &Graph, e: EdgeId) -> Segment {
        let (u, v) = graph.edge(e);
        Segment::new(self.positions[u], self.positions[v])
    }
}

/// Quadratic spring energy: each edge of length `l` contributes
/// `stiffness * (l - rest_length)^2`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EnergyModel {
    pub rest_length: f64,
    pub stiffness: f64,
}

impl EnergyModel {
    pub fn new(rest_length: f64, stiffness: f64) -> Self {
        assert!(rest_length > 0.0 && stiffness > 0.0);
        EnergyModel { rest_length, stiffness }
    }

    /// Rest length `sqrt(w * h / |V|)` from the expanded box, the uniform
    /// density spacing, with unit stiffness.
    pub fn recommended(graph: &Graph, bbox: &BoundingBox) -> Self {
        let n = graph.vertex_count().max(1) as f64;
        EnergyModel::new((bbox.width() * bbox.height() / n).sqrt(), 1.0)
    }

    pub fn edge_energy(&self, length: f64) -> f64 {
        let d = length - self.rest_length;
        self.stiffness * d * d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_expansion_and_sides() {
        let b = BoundingBox::expand(Point::new(0.0, 0.0), Point::new(4.0, 2.0), 1.0).unwrap();
        assert_eq!(b.min(), Point::new(-1.0, -1.0));
        assert_eq!(b.max(), Point::new(5.0, 3.0));
        assert_eq!(b.width(), 6.0);
        assert_eq!(b.height(), 4.0);
        let sides = b.sides();
        assert_eq!(sides[0].a, Point::new(-1.0, -1.0));
        assert_eq!(sides[2].b, Point::new(-1.0, 3.0));
    }

    #[test]
    fn around_uses_margin_ratio() {
        let pts = vec![Point::new(0.0, 0.0), Point::new(10.0, 4.0)];
        let b = BoundingBox::around(&pts).unwrap();
        assert_eq!(b.margin(), 1.0);
        assert!(b.contains(Point::new(0.0, 0.0)));
        assert!(b.contains(Point::new(11.0, 5.0)));
        assert!(!b.contains(Point::new(11.1, 0.0)));
    }

    #[test]
    fn around_degenerate_point_set_still_has_margin() {
        let b = BoundingBox::around(&[Point::new(3.0, 3.0)]).unwrap();
        assert!(b.margin() > 0.0);
        assert!(b.contains(Point::new(3.0, 3.0)));
    }

    #[test]
    fn drawing_rejects_out_of_box() {
        let b = BoundingBox::expand(Point::new(0.0, 0.0), Point::new(1.0, 1.0), 0.5).unwrap();
        let err = Drawing::new(vec![Point::new(9.0, 0.0)], b);
        assert_eq!(err, Err(DrawingError::OutsideBox { index: 0 }));
    }

    #[test]
    fn energy_zero_at_rest_length() {
        let m = EnergyModel::new(1.0, 1.0);
        assert_eq!(m.edge_energy(1.0), 0.0);
        assert_eq!(m.edge_energy(3.0), 4.0);
    }
}
