//! Probability toolkit and experiment statistics: the Monte Carlo
//! ray-segment estimator, the facet-access probability formulas, the
//! 3-connected graph generator, the three-sigma filter and Welch's t-test.

use crate::geometry::{halfline_segment_intersection, Angle, Point, Segment};
use crate::graph::Graph;
use rand::Rng;
use statrs::distribution::{ContinuousCDF, StudentsT};
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("sample count must be positive")]
    ZeroSamples,
    #[error("facet formula requires nv + cr > 2 (got nv = {nv}, cr = {cr})")]
    TooFewVertices { nv: usize, cr: usize },
    #[error("coverage q must lie in (0, 1), got {0}")]
    BadCoverage(f64),
    #[error("a graph with no edges is never hit")]
    NoEdges,
}

/// Monte Carlo estimate of the probability that a random half-line crosses
/// a random segment, both drawn uniformly in the unit square. Estimates
/// 1/6.
pub fn ray_edge_probability_mc(samples: u64, rng: &mut impl Rng) -> Result<f64, AnalysisError> {
    if samples == 0 {
        return Err(AnalysisError::ZeroSamples);
    }
    let mut hits = 0u64;
    for _ in 0..samples {
        let a = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
        let b = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
        let origin = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
        let dir = Angle::new(rng.gen_range(0.0..TAU));
        if halfline_segment_intersection(origin, dir, Segment::new(a, b)).is_some() {
            hits += 1;
        }
    }
    Ok(hits as f64 / samples as f64)
}

fn edge_hit_chance(nv: usize, ne: usize, cr: usize) -> Result<f64, AnalysisError> {
    if nv + cr <= 2 {
        return Err(AnalysisError::TooFewVertices { nv, cr });
    }
    Ok(ne as f64 / (36.0 * (nv + cr - 2) as f64))
}

/// Upper bound on the probability that at least one of `rays` random rays
/// enters a given facet: `1 - (1 - |E| / (36 (|V| + cr - 2)))^(3R)`,
/// clamped to `[0, 1]`.
pub fn facet_hit_probability(nv: usize, ne: usize, cr: usize, rays: u32) -> Result<f64, AnalysisError> {
    let x = edge_hit_chance(nv, ne, cr)?;
    let p = 1.0 - (1.0 - x).powi(3 * rays as i32);
    Ok(p.clamp(0.0, 1.0))
}

/// The explicit four-term binomial sum for the single-ray facet
/// probability, with `F` the mean number of facets joint to an edge:
/// `sum_k C(3,k) (1/6)^k (5/6)^(3-k) (1 - (1 - 1/F)^k)`.
pub fn q_binomial_sum(f: f64) -> f64 {
    let miss = 1.0 - 1.0 / f;
    let mut q = 0.0;
    for k in 0..=3u32 {
        let binom = match k {
            0 | 3 => 1.0,
            _ => 3.0,
        };
        q += binom
            * (1.0f64 / 6.0).powi(k as i32)
            * (5.0f64 / 6.0).powi(3 - k as i32)
            * (1.0 - miss.powi(k as i32));
    }
    q
}

/// Smallest ray count whose facet-hit probability reaches coverage `q`.
pub fn rays_needed(q: f64, nv: usize, ne: usize, cr: usize) -> Result<u32, AnalysisError> {
    if !(q > 0.0 && q < 1.0) {
        return Err(AnalysisError::BadCoverage(q));
    }
    if ne == 0 {
        return Err(AnalysisError::NoEdges);
    }
    let x = edge_hit_chance(nv, ne, cr)?;
    if x >= 1.0 {
        return Ok(1);
    }
    let mut rays = ((1.0 - q).ln() / (3.0 * (1.0 - x).ln())).ceil().max(1.0) as u32;
    // Guard the closed form against boundary rounding.
    while rays > 1 && facet_hit_probability(nv, ne, cr, rays - 1)? >= q {
        rays -= 1;
    }
    while facet_hit_probability(nv, ne, cr, rays)? < q {
        rays += 1;
    }
    Ok(rays)
}

/// Random 3-connected graph: start from K4 and repeatedly subdivide two
/// distinct edges with fresh midpoint vertices joined by a new edge, until
/// at least `target_vertices` vertices exist. Each step adds 2 vertices
/// and 3 edges net.
pub fn gen_3connected(target_vertices: usize, rng: &mut impl Rng) -> Graph {
    let mut nv = 4usize;
    let mut edges: Vec<(usize, usize)> =
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    while nv < target_vertices {
        let i1 = rng.gen_range(0..edges.len());
        let mut i2 = rng.gen_range(0..edges.len() - 1);
        if i2 >= i1 {
            i2 += 1;
        }
        let (a, b) = edges[i1];
        let (c, d) = edges[i2];
        let (m1, m2) = (nv, nv + 1);
        nv += 2;
        // Remove the higher index first so the lower one stays valid.
        let (hi, lo) = (i1.max(i2), i1.min(i2));
        edges.swap_remove(hi);
        edges.swap_remove(lo);
        edges.extend_from_slice(&[(a, m1), (m1, b), (c, m2), (m2, d), (m1, m2)]);
    }
    Graph::new(nv, edges).expect("construction preserves simplicity")
}

/// Drop values farther than three sample standard deviations from the
/// sample mean.
pub fn three_sigma_filter(values: &[f64]) -> Vec<f64> {
    if values.is_empty() {
        return Vec::new();
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = if values.len() > 1 {
        (values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    values
        .iter()
        .copied()
        .filter(|x| (x - mean).abs() <= 3.0 * sd)
        .collect()
}

/// Two-sided Welch t-test p-value for equal means. Degenerate inputs with
/// zero pooled variance give 1 when the means agree and 0 otherwise.
pub fn welch_t_test(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty(), "samples must be non-empty");
    let mean = |xs: &[f64]| xs.iter().sum::<f64>() / xs.len() as f64;
    let var = |xs: &[f64], m: f64| {
        if xs.len() < 2 {
            0.0
        } else {
            xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
        }
    };
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, mb) = (mean(a), mean(b));
    let (va, vb) = (var(a, ma), var(b, mb));
    let se2 = va / na + vb / nb;
    if se2 <= 0.0 {
        return if ma == mb { 1.0 } else { 0.0 };
    }
    let t = (ma - mb) / se2.sqrt();
    let df = se2 * se2
        / (va * va / (na * na * (na - 1.0).max(1.0)) + vb * vb / (nb * nb * (nb - 1.0).max(1.0)));
    let df = df.max(1.0);
    let dist = StudentsT::new(0.0, 1.0, df).expect("valid degrees of freedom");
    2.0 * (1.0 - dist.cdf(t.abs()))
}
