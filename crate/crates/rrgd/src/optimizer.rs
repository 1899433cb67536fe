//! The outer optimization loop: rank vertices worst-first, move the first
//! one whose best ray candidate passes the acceptance rule, cool it down
//! for a prohibition window, and repeat until a full unrestricted scan
//! finds nothing to improve.

use crate::drawing::{Drawing, EnergyModel};
use crate::geometry::{Angle, Point};
use crate::graph::{Graph, VertexId};
use crate::metrics::{
    cr_drawing, cr_vertex_at, energy_drawing, energy_max, energy_vertex_at,
};
use crate::ray::{cast_ray, Epsilons, OpacityMode, RaycastSettings};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::time::{Duration, Instant};

pub const DEFAULT_RAYS_PER_MOVE: u32 = 10;
pub const DEFAULT_RAY_SIZE: u32 = 10;
pub const DEFAULT_PROHIBITION_RATIO: f64 = 0.1;
/// Default energy delta as a fraction of `k * L0^2`.
pub const DEFAULT_DELTA_E_FACTOR: f64 = 1e-3;
/// Default first ray angle in radians; any irrational multiple of pi works.
pub const DEFAULT_THETA0: f64 = 1.0;

/// Full parameter set of one optimizer run.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EngineConfig {
    /// Number of rays cast per move attempt (`R`).
    pub rays_per_move: u32,
    /// Ray size, opacity mode and numeric tolerances.
    pub raycast: RaycastSettings,
    /// Minimum local-energy decrease required to accept a move that does
    /// not reduce the crossing number. Must be positive for the
    /// termination guarantee; zero is allowed for experiments.
    pub delta_e: f64,
    /// Prohibition window as a fraction of the vertex count.
    pub prohibition_ratio: f64,
    /// Base angle of the ray fan.
    pub theta0: Angle,
    pub energy: EnergyModel,
    pub seed: u64,
    /// Outer-pass safety cap; `None` picks a formula-based default.
    pub max_outer_iterations: Option<u64>,
}

impl EngineConfig {
    /// Defaults: R = 10, n_r = 10, deterministic opacity, rest length from
    /// the box area, `delta_e = 1e-3 * k * L0^2`, prohibition ratio 0.1.
    pub fn recommended(graph: &Graph, drawing: &Drawing) -> Self {
        let energy = EnergyModel::recommended(graph, drawing.bbox());
        EngineConfig {
            rays_per_move: DEFAULT_RAYS_PER_MOVE,
            raycast: RaycastSettings {
                ray_size: DEFAULT_RAY_SIZE,
                mode: OpacityMode::Deterministic,
                epsilons: Epsilons::default(),
            },
            delta_e: DEFAULT_DELTA_E_FACTOR * energy.stiffness * energy.rest_length * energy.rest_length,
            prohibition_ratio: DEFAULT_PROHIBITION_RATIO,
            theta0: Angle::new(DEFAULT_THETA0),
            energy,
            seed: 0,
            max_outer_iterations: None,
        }
    }

    /// `w_p = round(ratio * |V|)`, in outer passes.
    pub fn prohibition_window(&self, vertex_count: usize) -> u64 {
        (self.prohibition_ratio * vertex_count as f64).round() as u64
    }
}

/// One row per outer pass, plus a baseline row for the initial drawing.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IterationRecord {
    pub iteration: u64,
    pub moved: Option<VertexId>,
    pub crossings: usize,
    pub energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum StopReason {
    Converged,
    IterationCapReached,
}

#[derive(Debug, Clone)]
pub struct RunStats {
    pub records: Vec<IterationRecord>,
    pub outer_iterations: u64,
    pub accepted_moves: u64,
    pub rays_cast: u64,
    pub failed_rays: u64,
    pub wall: Duration,
    pub outcome: StopReason,
}

/// Result of one move attempt: the chosen position (possibly the current
/// one) and how many rays failed to cast.
#[derive(Debug, Clone, Copy)]
pub struct MoveOutcome {
    pub position: Point,
    pub failed_rays: u32,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent, order-free RNG stream per ray, derived from the master
/// seed, the global move counter, the vertex and the ray index.
fn ray_rng(seed: u64, move_index: u64, v: VertexId, ray_index: u32) -> ChaCha8Rng {
    let mut h = splitmix64(seed);
    for x in [move_index, v as u64, ray_index as u64] {
        h = splitmix64(h ^ x);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// Cast the ray fan from `v` and return the candidate ranked best by
/// `(cr, local energy)`. The current position enters the list first and
/// wins exact ties; among rays the lowest index wins.
pub fn move_vertex(
    graph: &Graph,
    drawing: &Drawing,
    cfg: &EngineConfig,
    v: VertexId,
    move_index: u64,
) -> MoveOutcome {
    let current = drawing.position(v);
    let mut best_pos = current;
    let mut best_cr = cr_vertex_at(graph, drawing, v, current);
    let mut best_energy = energy_vertex_at(graph, drawing, &cfg.energy, v, current);
    let mut failed_rays = 0;

    for ray_index in 1..=cfg.rays_per_move {
        let theta = Angle::new(cfg.theta0.radians() + ray_index as f64 * TAU / cfg.rays_per_move as f64);
        let mut rng = ray_rng(cfg.seed, move_index, v, ray_index);
        match cast_ray(graph, drawing, v, theta, &cfg.raycast, &mut rng) {
            Ok(p) => {
                let cr = cr_vertex_at(graph, drawing, v, p);
                if cr > best_cr {
                    continue;
                }
                let energy = energy_vertex_at(graph, drawing, &cfg.energy, v, p);
                if cr < best_cr || energy < best_energy {
                    best_pos = p;
                    best_cr = cr;
                    best_energy = energy;
                }
            }
            Err(_) => failed_rays += 1,
        }
    }

    MoveOutcome { position: best_pos, failed_rays }
}

/// Acceptance rule: take the candidate iff it strictly reduces the local
/// crossing number, or keeps it while freeing at least `delta_e` of local
/// energy (boundary inclusive).
pub fn accept_move(
    graph: &Graph,
    drawing: &Drawing,
    cfg: &EngineConfig,
    v: VertexId,
    candidate: Point,
) -> bool {
    let current = drawing.position(v);
    let cr_cur = cr_vertex_at(graph, drawing, v, current);
    let cr_new = cr_vertex_at(graph, drawing, v, candidate);
    if cr_new < cr_cur {
        return true;
    }
    if cr_new > cr_cur {
        return false;
    }
    let e_cur = energy_vertex_at(graph, drawing, &cfg.energy, v, current);
    let e_new = energy_vertex_at(graph, drawing, &cfg.energy, v, candidate);
    e_cur - e_new >= cfg.delta_e
}

/// `ceil(E_MAX / delta_e)`: the longest possible run of accepted
/// equal-crossing moves. Unbounded (`u64::MAX`) when `delta_e <= 0`.
pub fn plateau_bound(graph: &Graph, initial: &Drawing, cfg: &EngineConfig) -> u64 {
    if cfg.delta_e <= 0.0 {
        return u64::MAX;
    }
    let ratio = (energy_max(graph, initial, &cfg.energy) / cfg.delta_e).ceil();
    if ratio.is_finite() && ratio < u64::MAX as f64 {
        (ratio as u64).max(1)
    } else {
        u64::MAX
    }
}

/// Default outer-pass safety cap: `10 * |V| * min(plateau_bound, 1e6)`.
pub fn default_safety_cap(graph: &Graph, initial: &Drawing, cfg: &EngineConfig) -> u64 {
    let plateau = plateau_bound(graph, initial, cfg).min(1_000_000);
    (10 * graph.vertex_count() as u64).saturating_mul(plateau).max(1)
}

/// Run the full heuristic from `initial` and return the final drawing with
/// per-pass statistics. The crossing number never increases from one
/// record to the next.
pub fn rrgd(graph: &Graph, initial: Drawing, cfg: &EngineConfig) -> (Drawing, RunStats) {
    let start = Instant::now();
    let mut drawing = initial;
    let n = graph.vertex_count();
    let window = cfg.prohibition_window(n);
    let cap = cfg
        .max_outer_iterations
        .unwrap_or_else(|| default_safety_cap(graph, &drawing, cfg));

    let mut cooldown: Vec<u64> = vec![0; n];
    let mut records = vec![IterationRecord {
        iteration: 0,
        moved: None,
        crossings: cr_drawing(graph, &drawing),
        energy: energy_drawing(graph, &drawing, &cfg.energy),
    }];
    let mut pass: u64 = 0;
    let mut move_index: u64 = 0;
    let mut accepted_moves: u64 = 0;
    let mut rays_cast: u64 = 0;
    let mut failed_rays: u64 = 0;

    let outcome = loop {
        if pass >= cap {
            break StopReason::IterationCapReached;
        }
        pass += 1;
        for c in cooldown.iter_mut() {
            *c = c.saturating_sub(1);
        }

        // Worst vertices first: descending (cr, local energy), vertex id
        // breaking exact ties.
        let mut keys: Vec<(usize, f64, VertexId)> = graph
            .vertices()
            .map(|v| {
                let pos = drawing.position(v);
                (
                    cr_vertex_at(graph, &drawing, v, pos),
                    energy_vertex_at(graph, &drawing, &cfg.energy, v, pos),
                    v,
                )
            })
            .collect();
        keys.sort_by(|a, b| {
            b.0.cmp(&a.0)
                .then_with(|| b.1.total_cmp(&a.1))
                .then_with(|| a.2.cmp(&b.2))
        });

        let mut moved = None;
        let mut skipped_prohibited = false;
        for &(_, _, v) in &keys {
            if cooldown[v] > 0 {
                skipped_prohibited = true;
                continue;
            }
            let outcome = move_vertex(graph, &drawing, cfg, v, move_index);
            move_index += 1;
            rays_cast += cfg.rays_per_move as u64;
            failed_rays += outcome.failed_rays as u64;
            if outcome.position != drawing.position(v)
                && accept_move(graph, &drawing, cfg, v, outcome.position)
            {
                drawing.set_position(v, outcome.position);
                cooldown[v] = window;
                accepted_moves += 1;
                moved = Some(v);
                break;
            }
        }

        records.push(IterationRecord {
            iteration: pass,
            moved,
            crossings: cr_drawing(graph, &drawing),
            energy: energy_drawing(graph, &drawing, &cfg.energy),
        });

        if moved.is_none() && !skipped_prohibited {
            break StopReason::Converged;
        }
    };

    let stats = RunStats {
        records,
        outer_iterations: pass,
        accepted_moves,
        rays_cast,
        failed_rays,
        wall: start.elapsed(),
        outcome,
    };
    (drawing, stats)
}
