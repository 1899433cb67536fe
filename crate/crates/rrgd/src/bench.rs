//! Desk-scale benchmark harness: run the optimizer over a corpus and a
//! configuration grid, one derived RNG stream per run, and aggregate
//! mean/sd statistics after three-sigma filtering.

use crate::analysis::three_sigma_filter;
use crate::drawing::Drawing;
use crate::graph::Graph;
use crate::init::{init_circle, init_force, init_random, DEFAULT_FORCE_ITERATIONS};
use crate::optimizer::{rrgd, EngineConfig, StopReason};
use crate::ray::OpacityMode;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Which initial layout the benchmark runs start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitKind {
    Random,
    Circle,
    Force,
}

impl InitKind {
    pub fn build(self, graph: &Graph, width: f64, height: f64, seed: u64) -> Drawing {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self {
            InitKind::Random => init_random(graph, width, height, &mut rng),
            InitKind::Circle => init_circle(graph, width.min(height) / 2.0),
            InitKind::Force => {
                init_force(graph, DEFAULT_FORCE_ITERATIONS, width, height, &mut rng)
            }
        }
    }
}

/// One graph of the corpus.
#[derive(Debug, Clone)]
pub struct BenchEntry {
    pub label: String,
    pub graph: Graph,
}

/// Cartesian configuration grid. Empty `delta_e` means the per-graph
/// recommended default.
#[derive(Debug, Clone)]
pub struct BenchGrid {
    pub modes: Vec<OpacityMode>,
    pub rays: Vec<u32>,
    pub ray_sizes: Vec<u32>,
    pub delta_e: Vec<Option<f64>>,
    pub prohibition_ratios: Vec<f64>,
    pub runs_per_config: u32,
    pub master_seed: u64,
    pub init: InitKind,
    pub width: f64,
    pub height: f64,
}

impl Default for BenchGrid {
    fn default() -> Self {
        BenchGrid {
            modes: vec![OpacityMode::Deterministic],
            rays: vec![10],
            ray_sizes: vec![10],
            delta_e: vec![None],
            prohibition_ratios: vec![0.1],
            runs_per_config: 10,
            master_seed: 0,
            init: InitKind::Random,
            width: 1000.0,
            height: 1000.0,
        }
    }
}

/// One optimizer run of the grid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RunRecord {
    pub graph: String,
    pub config: String,
    pub seed: u64,
    pub initial_crossings: usize,
    pub final_crossings: usize,
    pub outer_iterations: u64,
    pub accepted_moves: u64,
    pub wall_ms: f64,
    pub converged: bool,
}

/// Per (graph, config) aggregate after three-sigma filtering.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GroupSummary {
    pub graph: String,
    pub config: String,
    pub runs: usize,
    pub kept_crossings: usize,
    pub mean_crossings: f64,
    pub sd_crossings: f64,
    pub mean_wall_ms: f64,
    pub sd_wall_ms: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchReport {
    pub runs: Vec<RunRecord>,
    pub summary: Vec<GroupSummary>,
}

fn mode_label(mode: OpacityMode) -> String {
    match mode {
        OpacityMode::Deterministic => "det".to_string(),
        OpacityMode::Randomized { epsilon } => format!("rand(eps={epsilon})"),
    }
}

fn mean_sd(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = if values.len() > 1 {
        (values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    (mean, sd)
}

/// Run the whole grid. Runs are independent and executed in parallel; each
/// derives its RNG stream from `(master_seed, run_index)` so results do not
/// depend on scheduling.
pub fn run_benchmark(corpus: &[BenchEntry], grid: &BenchGrid) -> BenchReport {
    struct Job<'a> {
        entry: &'a BenchEntry,
        mode: OpacityMode,
        rays: u32,
        ray_size: u32,
        delta_e: Option<f64>,
        ratio: f64,
        run_index: u64,
    }

    let mut jobs = Vec::new();
    let mut run_index = 0u64;
    for entry in corpus {
        for &mode in &grid.modes {
            for &rays in &grid.rays {
                for &ray_size in &grid.ray_sizes {
                    for &delta_e in &grid.delta_e {
                        for &ratio in &grid.prohibition_ratios {
                            for _ in 0..grid.runs_per_config {
                                jobs.push(Job {
                                    entry,
                                    mode,
                                    rays,
                                    ray_size,
                                    delta_e,
                                    ratio,
                                    run_index,
                                });
                                run_index += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let runs: Vec<RunRecord> = jobs
        .par_iter()
        .map(|job| {
            let seed = grid
                .master_seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(job.run_index);
            let drawing = grid.init.build(&job.entry.graph, grid.width, grid.height, seed);
            let mut cfg = EngineConfig::recommended(&job.entry.graph, &drawing);
            cfg.rays_per_move = job.rays;
            cfg.raycast.ray_size = job.ray_size;
            cfg.raycast.mode = job.mode;
            cfg.prohibition_ratio = job.ratio;
            cfg.seed = seed;
            if let Some(de) = job.delta_e {
                cfg.delta_e = de;
            }
            let config = format!(
                "mode={} R={} nr={} dE={:.6} pw={}",
                mode_label(job.mode),
                job.rays,
                job.ray_size,
                cfg.delta_e,
                job.ratio
            );
            let initial_crossings = crate::metrics::cr_drawing(&job.entry.graph, &drawing);
            let (_, stats) = rrgd(&job.entry.graph, drawing, &cfg);
            RunRecord {
                graph: job.entry.label.clone(),
                config,
                seed,
                initial_crossings,
                final_crossings: stats.records.last().map(|r| r.crossings).unwrap_or(0),
                outer_iterations: stats.outer_iterations,
                accepted_moves: stats.accepted_moves,
                wall_ms: stats.wall.as_secs_f64() * 1e3,
                converged: stats.outcome == StopReason::Converged,
            }
        })
        .collect();

    let mut summary = Vec::new();
    let mut seen = Vec::new();
    for run in &runs {
        let key = (run.graph.clone(), run.config.clone());
        if seen.contains(&key) {
            continue;
        }
        seen.push(key.clone());
        let group: Vec<&RunRecord> = runs
            .iter()
            .filter(|r| r.graph == key.0 && r.config == key.1)
            .collect();
        let crossings: Vec<f64> = group.iter().map(|r| r.final_crossings as f64).collect();
        let walls: Vec<f64> = group.iter().map(|r| r.wall_ms).collect();
        let kept_cr = three_sigma_filter(&crossings);
        let kept_wall = three_sigma_filter(&walls);
        let (mean_crossings, sd_crossings) = mean_sd(&kept_cr);
        let (mean_wall_ms, sd_wall_ms) = mean_sd(&kept_wall);
        summary.push(GroupSummary {
            graph: key.0,
            config: key.1,
            runs: group.len(),
            kept_crossings: kept_cr.len(),
            mean_crossings,
            sd_crossings,
            mean_wall_ms,
            sd_wall_ms,
        });
    }

    BenchReport { runs, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn benchmark_runs_grid_and_aggregates() {
        let corpus = vec![
            BenchEntry { label: "k4".into(), graph: Graph::complete(4) },
            BenchEntry { label: "k5".into(), graph: Graph::complete(5) },
        ];
        let grid = BenchGrid {
            modes: vec![OpacityMode::Deterministic, OpacityMode::Randomized { epsilon: 0.05 }],
            rays: vec![4],
            ray_sizes: vec![4],
            runs_per_config: 3,
            width: 100.0,
            height: 100.0,
            ..BenchGrid::default()
        };
        let report = run_benchmark(&corpus, &grid);
        assert_eq!(report.runs.len(), 2 * 2 * 3);
        assert_eq!(report.summary.len(), 4);
        for s in &report.summary {
            assert_eq!(s.runs, 3);
            assert!(s.mean_crossings.is_finite());
        }
        for r in &report.runs {
            assert!(r.final_crossings <= r.initial_crossings);
        }
    }

    #[test]
    fn benchmark_results_do_not_depend_on_scheduling() {
        let corpus = vec![BenchEntry { label: "k5".into(), graph: Graph::complete(5) }];
        let grid = BenchGrid {
            rays: vec![5],
            ray_sizes: vec![5],
            runs_per_config: 4,
            width: 100.0,
            height: 100.0,
            ..BenchGrid::default()
        };
        let a = run_benchmark(&corpus, &grid);
        let b = run_benchmark(&corpus, &grid);
        for (x, y) in a.runs.iter().zip(&b.runs) {
            assert_eq!(x.final_crossings, y.final_crossings);
            assert_eq!(x.outer_iterations, y.outer_iterations);
            assert_eq!(x.seed, y.seed);
        }
    }
}
