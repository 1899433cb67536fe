//! Ray-based rectilinear graph drawing.
//!
//! Straight-line drawings of a graph are improved in place: vertices are
//! ranked by crossing count and local spring energy, and the worst one is
//! repositioned to the best landing point found by a fan of rays. Each ray
//! travels through the drawing, reflecting off edges billiard-style or
//! crossing them depending on an opacity score, bouncing off the fixed
//! expanded bounding box, and finally proposes the midpoint of its last
//! segment as a candidate position. A move is kept only when it lowers the
//! vertex's crossing number or frees at least a configured amount of local
//! energy, which makes the total crossing count non-increasing and the run
//! finite.
//!
//! ```
//! use rrgd::{Graph, init_random, EngineConfig, rrgd, cr_drawing};
//! use rand::SeedableRng;
//!
//! let graph = Graph::complete(4);
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let initial = init_random(&graph, 100.0, 100.0, &mut rng);
//! let cfg = EngineConfig::recommended(&graph, &initial);
//! let (finished, stats) = rrgd(&graph, initial, &cfg);
//! assert!(cr_drawing(&graph, &finished) <= stats.records[0].crossings);
//! ```

pub mod analysis;
pub mod bench;
pub mod drawing;
pub mod geometry;
pub mod graph;
pub mod init;
pub mod io;
pub mod metrics;
pub mod optimizer;
pub mod ray;

pub use drawing::{BoundingBox, Drawing, DrawingError, EnergyModel};
pub use geometry::{Angle, Point, Segment};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
pub use init::{init_circle, init_force, init_random};
pub use metrics::{
    compare_vertices, cr_drawing, cr_edge, cr_vertex, energy_drawing, energy_edge, energy_max,
    energy_vertex, facet_count,
};
pub use optimizer::{
    accept_move, move_vertex, plateau_bound, rrgd, EngineConfig, IterationRecord, RunStats,
    StopReason,
};
pub use ray::{cast_ray, cast_ray_polyline, decide_reflection, opacity, OpacityMode, Ray};
