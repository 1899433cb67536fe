//! Casting one ray from a vertex: repeatedly intersect the current
//! half-line with every edge (real edges plus the four box sides), pop the
//! nearest hit, and either reflect off it or cross through it depending on
//! the opacity of the hit edge. After `ray_size` steps the midpoint of the
//! last polyline segment is the candidate position.

use crate::drawing::Drawing;
use crate::geometry::{
    halfline_segment_intersection, reflect_angle, segments_cross, Angle, Point, Segment,
};
use crate::graph::{EdgeId, Graph, VertexId};
use rand::Rng;
use thiserror::Error;

/// How the opacity of a hit edge is turned into a reflect/cross decision.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum OpacityMode {
    /// Reflect iff the opacity is non-negative.
    Deterministic,
    /// Draw chi uniformly on `[-1 - epsilon, 1 + epsilon]` and reflect iff
    /// `chi < opacity`. The widened interval keeps both outcomes possible
    /// even at opacity +-1.
    Randomized { epsilon: f64 },
}

/// Numerical knobs of the caster. All length-like values are expressed
/// relative to the expanded box diagonal.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Epsilons {
    /// Distance (as a fraction of the box diagonal) between a hit point and
    /// the near-side opacity evaluation point.
    pub ray_offset_factor: f64,
    /// Proximity radius (fraction of the diagonal) for declaring a hit
    /// degenerate: on a segment endpoint or on a crossing point.
    pub degeneracy_factor: f64,
    /// Angle perturbation, in radians, applied before recasting a
    /// degenerate ray.
    pub angle_perturbation: f64,
    /// How many perturbed recasts to attempt before giving up on the ray.
    pub degeneracy_retries: u32,
}

impl Default for Epsilons {
    fn default() -> Self {
        Epsilons {
            ray_offset_factor: 1e-6,
            degeneracy_factor: 1e-9,
            angle_perturbation: 1e-7,
            degeneracy_retries: 3,
        }
    }
}

/// Everything `cast_ray` needs besides the drawing itself.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RaycastSettings {
    /// Number of polyline points appended per cast (`n_r`).
    pub ray_size: u32,
    pub mode: OpacityMode,
    pub epsilons: Epsilons,
}

/// A cast ray: the polyline built so far and the final direction.
#[derive(Debug, Clone, PartialEq)]
pub struct Ray {
    pub points: Vec<Point>,
    pub dir: Angle,
}

impl Ray {
    /// Midpoint of the last polyline segment, the candidate position.
    pub fn endpoint(&self) -> Point {
        let n = self.points.len();
        self.points[n - 2].midpoint(self.points[n - 1])
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CastError {
    #[error("ray from vertex {vertex} stayed degenerate after {retries} perturbed recasts")]
    Degenerate { vertex: VertexId, retries: u32 },
}

/// What a ray can hit: a real edge or one of the four box sides. Box sides
/// always reflect and never get an opacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HitSource {
    Edge(EdgeId),
    BoxSide(usize),
}

impl HitSource {
    /// Tie-break rank for equal distances: real edges by id first, then
    /// box sides.
    fn rank(self) -> (u8, usize) {
        match self {
            HitSource::Edge(e) => (0, e),
            HitSource::BoxSide(i) => (1, i),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Hit {
    distance: f64,
    point: Point,
    source: HitSource,
}

/// Pending intersections sorted by distance from the current ray origin.
/// Refilled from scratch after every reflection; crossings just keep
/// popping from the same queue.
struct HitQueue {
    hits: Vec<Hit>,
    next: usize,
}

impl HitQueue {
    fn new() -> Self {
        HitQueue { hits: Vec::new(), next: 0 }
    }

    fn is_empty(&self) -> bool {
        self.next >= self.hits.len()
    }

    fn clear(&mut self) {
        self.hits.clear();
        self.next = 0;
    }

    fn pop(&mut self) -> Option<Hit> {
        let h = self.hits.get(self.next).copied();
        self.next += 1;
        h
    }

    fn peek(&self) -> Option<&Hit> {
        self.hits.get(self.next)
    }

    fn fill(&mut self, graph: &Graph, drawing: &Drawing, origin: Point, dir: Angle) {
        self.clear();
        for e in 0..graph.edge_count() {
            if let Some(p) = halfline_segment_intersection(origin, dir, drawing.edge_segment(graph, e))
            {
                self.hits.push(Hit { distance: origin.distance(p), point: p, source: HitSource::Edge(e) });
            }
        }
        let bbox = drawing.bbox();
        for (i, side) in bbox.sides().iter().enumerate() {
            if let Some(p) = halfline_segment_intersection(origin, dir, *side) {
                // Snap the fixed coordinate of the side so box hits never
                // drift outside the closed box.
                let p = match i {
                    0 => Point::new(p.x, bbox.min().y),
                    1 => Point::new(bbox.max().x, p.y),
                    2 => Point::new(p.x, bbox.max().y),
                    _ => Point::new(bbox.min().x, p.y),
                };
                let p = bbox.clamp(p);
                self.hits.push(Hit { distance: origin.distance(p), point: p, source: HitSource::BoxSide(i) });
            }
        }
        self.hits.sort_by(|a, b| {
            a.distance
                .total_cmp(&b.distance)
                .then_with(|| a.source.rank().cmp(&b.source.rank()))
        });
    }
}

/// Weight of one incident edge of `v` against the hit edge `hit`, with `v`
/// evaluated at `eval_pos`: 0 when the edges share a vertex, -1 when the
/// incident edge crosses `hit`, +1 otherwise.
pub fn edge_weight(
    graph: &Graph,
    drawing: &Drawing,
    v: VertexId,
    incident: EdgeId,
    hit: EdgeId,
    eval_pos: Point,
) -> i8 {
    if graph.edges_share_vertex(incident, hit) {
        return 0;
    }
    let u = graph.other_endpoint(incident, v);
    let moved = Segment::new(eval_pos, drawing.position(u));
    if segments_cross(moved, drawing.edge_segment(graph, hit)) {
        -1
    } else {
        1
    }
}

/// Mean of the non-zero incident-edge weights, or exactly 1 when every
/// weight is zero (or `v` has no incident edges). Always in `[-1, 1]`.
pub fn opacity(graph: &Graph, drawing: &Drawing, v: VertexId, hit: EdgeId, eval_pos: Point) -> f64 {
    let mut sum = 0i64;
    let mut relevant = 0i64;
    for &e in graph.incident_edges(v) {
        let w = edge_weight(graph, drawing, v, e, hit, eval_pos);
        if w != 0 {
            sum += w as i64;
            relevant += 1;
        }
    }
    if relevant > 0 {
        sum as f64 / relevant as f64
    } else {
        1.0
    }
}

/// Reflect-or-cross decision from an opacity value. Returns true to
/// reflect.
pub fn decide_reflection(op: f64, mode: OpacityMode, rng: &mut impl Rng) -> bool {
    match mode {
        OpacityMode::Deterministic => op >= 0.0,
        OpacityMode::Randomized { epsilon } => {
            let chi = rng.gen_range(-1.0 - epsilon..1.0 + epsilon);
            chi < op
        }
    }
}

/// Cast one ray and return the full polyline. Fails only when repeated
/// angle perturbations cannot escape a degenerate hit.
pub fn cast_ray_polyline(
    graph: &Graph,
    drawing: &Drawing,
    v: VertexId,
    theta: Angle,
    settings: &RaycastSettings,
    rng: &mut impl Rng,
) -> Result<Ray, CastError> {
    let eps = &settings.epsilons;
    let mut angle = theta;
    for _ in 0..=eps.degeneracy_retries {
        match cast_attempt(graph, drawing, v, angle, settings, rng) {
            Some(ray) => return Ok(ray),
            None => angle = Angle::new(angle.radians() + eps.angle_perturbation),
        }
    }
    Err(CastError::Degenerate { vertex: v, retries: eps.degeneracy_retries })
}

/// Cast one ray and return the candidate position (midpoint of the last
/// polyline segment).
pub fn cast_ray(
    graph: &Graph,
    drawing: &Drawing,
    v: VertexId,
    theta: Angle,
    settings: &RaycastSettings,
    rng: &mut impl Rng,
) -> Result<Point, CastError> {
    cast_ray_polyline(graph, drawing, v, theta, settings, rng).map(|r| r.endpoint())
}

/// One cast attempt; `None` signals a degenerate hit that the caller should
/// retry with a perturbed angle.
fn cast_attempt(
    graph: &Graph,
    drawing: &Drawing,
    v: VertexId,
    theta: Angle,
    settings: &RaycastSettings,
    rng: &mut impl Rng,
) -> Option<Ray> {
    assert!(settings.ray_size >= 1, "ray size must be at least 1");
    let bbox = drawing.bbox();
    let diag = bbox.diagonal();
    let eps_ray = settings.epsilons.ray_offset_factor * diag;
    let eps_deg = settings.epsilons.degeneracy_factor * diag;

    let mut dir = theta;
    let mut origin = drawing.position(v);
    let mut points = Vec::with_capacity(settings.ray_size as usize + 1);
    points.push(origin);
    let mut queue = HitQueue::new();

    for _ in 0..settings.ray_size {
        if queue.is_empty() {
            queue.fill(graph, drawing, origin, dir);
        }
        // The box guarantees a forward hit; an empty queue here means the
        // geometry is too degenerate to trust, so recast.
        let hit = queue.pop()?;

        let seg = match hit.source {
            HitSource::Edge(e) => drawing.edge_segment(graph, e),
            HitSource::BoxSide(i) => bbox.sides()[i],
        };
        if hit.point.distance(seg.a) <= eps_deg || hit.point.distance(seg.b) <= eps_deg {
            return None; // hit a segment endpoint
        }
        if let Some(next) = queue.peek() {
            if next.source != hit.source
                && (next.distance - hit.distance).abs() <= eps_deg
                && next.point.distance(hit.point) <= eps_deg
            {
                return None; // hit a crossing point of two edges
            }
        }

        let p = bbox.clamp(hit.point);
        points.push(p);

        let reflect = match hit.source {
            HitSource::BoxSide(_) => true,
            HitSource::Edge(e) => {
                let eval = p - dir.direction() * eps_ray;
                decide_reflection(opacity(graph, drawing, v, e, eval), settings.mode, rng)
            }
        };
        if reflect {
            dir = reflect_angle(dir, seg.angle());
            origin = p;
            queue.clear();
        }
    }

    Some(Ray { points, dir })
}
