//! Initial drawings: uniform random placement, the circle layout, and a
//! short spring-plus-repulsion force pass. The expanded bounding box is
//! fixed from the produced positions in every case.

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::graph::Graph;
use rand::Rng;
use std::f64::consts::TAU;

pub const DEFAULT_WINDOW: f64 = 1000.0;
pub const DEFAULT_FORCE_ITERATIONS: u32 = 30;
const FORCE_STEP: f64 = 0.05;

fn random_positions(graph: &Graph, width: f64, height: f64, rng: &mut impl Rng) -> Vec<Point> {
    (0..graph.vertex_count())
        .map(|_| Point::new(rng.gen_range(0.0..=width), rng.gen_range(0.0..=height)))
        .collect()
}

/// Positions uniform in `[0, width] x [0, height]`.
pub fn init_random(graph: &Graph, width: f64, height: f64, rng: &mut impl Rng) -> Drawing {
    Drawing::from_positions(random_positions(graph, width, height, rng))
        .expect("random positions are finite")
}

/// Vertex `i` at angle `2 pi i / |V|` on a circle of the given radius.
pub fn init_circle(graph: &Graph, radius: f64) -> Drawing {
    let n = graph.vertex_count();
    let positions = (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64;
            Point::new(radius * a.cos(), radius * a.sin())
        })
        .collect();
    Drawing::from_positions(positions).expect("circle positions are finite")
}

/// Random start followed by `iterations` explicit-Euler steps of spring
/// attraction along edges (toward the uniform-density rest length) and
/// inverse-square repulsion between all vertex pairs, clamped to the
/// window. Zero iterations reproduce `init_random` exactly.
pub fn init_force(
    graph: &Graph,
    iterations: u32,
    width: f64,
    height: f64,
    rng: &mut impl Rng,
) -> Drawing {
    let mut pos = random_positions(graph, width, height, rng);
    let n = graph.vertex_count();
    let rest = (width * height / n.max(1) as f64).sqrt();
    let repulsion = rest * rest;

    let mut forces = vec![Point::new(0.0, 0.0); n];
    for _ in 0..iterations {
        for f in forces.iter_mut() {
            *f = Point::new(0.0, 0.0);
        }
        for &(u, v) in graph.edges() {
            let delta = pos[v] - pos[u];
            let dist = delta.norm();
            if dist < 1e-9 {
                continue;
            }
            let pull = delta * ((dist - rest) / dist);
            forces[u] = forces[u] + pull;
            forces[v] = forces[v] - pull;
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let delta = pos[u] - pos[v];
                let dist = delta.norm();
                if dist < 1e-9 {
                    continue;
                }
                let push = delta * (repulsion / (dist * dist * dist));
                forces[u] = forces[u] + push;
                forces[v] = forces[v] - push;
            }
        }
        for (p, f) in pos.iter_mut().zip(&forces) {
            let moved = *p + *f * FORCE_STEP;
            *p = Point::new(moved.x.clamp(0.0, width), moved.y.clamp(0.0, height));
        }
    }
    Drawing::from_positions(pos).expect("force positions are finite")
}
