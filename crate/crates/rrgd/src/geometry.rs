//! Planar primitives used everywhere else: points, segments, direction
//! angles, an orientation predicate, and the two intersection tests the ray
//! caster is built on.
//!
//! All predicates use relative tolerances so results survive uniform
//! rescaling of the coordinates.

use std::f64::consts::TAU;
use std::ops::{Add, Div, Mul, Sub};

/// Relative tolerance for the orientation predicate. The threshold applied
/// to the 2x2 determinant is `ORIENT_EPS * scale^2` where `scale` is the
/// largest coordinate magnitude among the operands.
pub const ORIENT_EPS: f64 = 1e-12;

/// Relative tolerance for the forward cutoff of half-line intersections:
/// hits closer than `FORWARD_EPS * scale` to the origin are discarded.
pub const FORWARD_EPS: f64 = 1e-9;

/// A point in the drawing plane. Also used as a 2D vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Cross product of `self` and `other` as 2D vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, rhs: f64) -> Point {
        Point::new(self.x / rhs, self.y / rhs)
    }
}

/// A straight segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn length(self) -> f64 {
        self.a.distance(self.b)
    }

    /// Direction angle of the segment, from `a` to `b`. For reflection the
    /// orientation does not matter since `2 * theta_e` is taken modulo 2pi.
    pub fn angle(self) -> Angle {
        let d = self.b - self.a;
        Angle::new(d.y.atan2(d.x))
    }
}

/// A direction angle in radians, kept normalized to `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Self {
        if (0.0..TAU).contains(&radians) {
            return Angle(radians);
        }
        let r = radians.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU for tiny negative inputs.
        Angle(if r >= TAU { 0.0 } else { r })
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Unit direction vector for this angle.
    pub fn direction(self) -> Point {
        Point::new(self.0.cos(), self.0.sin())
    }
}

/// Sign of the signed area of the triangle `(p, q, r)`: `+1` for a
/// counter-clockwise turn, `-1` for clockwise, `0` within tolerance of
/// collinear.
pub fn orient(p: Point, q: Point, r: Point) -> i8 {
    let det = (q - p).cross(r - p);
    let scale = p
        .x
        .abs()
        .max(p.y.abs())
        .max(q.x.abs())
        .max(q.y.abs())
        .max(r.x.abs())
        .max(r.y.abs());
    let tau = ORIENT_EPS * scale * scale;
    if det.abs() <= tau {
        0
    } else if det > 0.0 {
        1
    } else {
        -1
    }
}

/// Proper crossing test: true iff the segments intersect at exactly one
/// point interior to both. Shared endpoints, endpoint touches and collinear
/// overlaps all count as non-crossing.
pub fn segments_cross(s1: Segment, s2: Segment) -> bool {
    let d1 = orient(s1.a, s1.b, s2.a);
    let d2 = orient(s1.a, s1.b, s2.b);
    let d3 = orient(s2.a, s2.b, s1.a);
    let d4 = orient(s2.a, s2.b, s1.b);
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Intersection of the open half-line `{origin + t * dir, t > 0}` with a
/// segment, or `None`. Hits behind or within `FORWARD_EPS * scale` of the
/// origin are discarded; parallel and collinear configurations yield `None`.
pub fn halfline_segment_intersection(origin: Point, dir: Angle, s: Segment) -> Option<Point> {
    let d = dir.direction();
    let e = s.b - s.a;
    let denom = d.cross(e);
    // |d| = 1, so denom scales with |e| alone.
    if denom.abs() <= ORIENT_EPS * e.norm() {
        return None;
    }
    let w = s.a - origin;
    let t = w.cross(e) / denom;
    let u = w.cross(d) / denom;
    let scale = origin
        .x
        .abs()
        .max(origin.y.abs())
        .max(s.a.x.abs())
        .max(s.a.y.abs())
        .max(s.b.x.abs())
        .max(s.b.y.abs());
    if t > FORWARD_EPS * scale && (0.0..=1.0).contains(&u) {
        Some(origin + d * t)
    } else {
        None
    }
}

/// Billiard reflection of a direction about an edge direction:
/// `2 * edge_angle - incoming`, normalized. Applying it twice with the same
/// edge angle restores the original direction.
pub fn reflect_angle(incoming: Angle, edge_angle: Angle) -> Angle {
    Angle::new(2.0 * edge_angle.radians() - incoming.radians())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by))
    }

    #[test]
    fn orient_signs() {
        assert_eq!(orient(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)), 1);
        assert_eq!(orient(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)), 0);
        assert_eq!(orient(pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 0.0)), -1);
    }

    #[test]
    fn orient_near_degenerate_is_zero() {
        // Off the line by far less than the relative tolerance at this scale.
        let p = pt(1e6, 1e6);
        let q = pt(2e6, 2e6);
        let r = pt(3e6, 3e6 + 1e-9);
        assert_eq!(orient(p, q, r), 0);
    }

    #[test]
    fn crossing_basic_cases() {
        assert!(segments_cross(seg(0.0, 0.0, 1.0, 1.0), seg(0.0, 1.0, 1.0, 0.0)));
        assert!(!segments_cross(seg(0.0, 0.0, 1.0, 0.0), seg(1.0, 0.0, 2.0, 1.0)));
        assert!(!segments_cross(seg(0.0, 0.0, 2.0, 0.0), seg(0.0, 1.0, 2.0, 1.0)));
    }

    #[test]
    fn crossing_touch_and_overlap_are_false() {
        // Endpoint of one interior to the other.
        assert!(!segments_cross(seg(0.0, 0.0, 2.0, 0.0), seg(1.0, 0.0, 1.0, 1.0)));
        // Collinear overlap.
        assert!(!segments_cross(seg(0.0, 0.0, 2.0, 0.0), seg(1.0, 0.0, 3.0, 0.0)));
    }

    #[test]
    fn halfline_axis_hit() {
        let got = halfline_segment_intersection(pt(0.0, 0.0), Angle::new(0.0), seg(1.0, -1.0, 1.0, 1.0));
        assert_eq!(got, Some(pt(1.0, 0.0)));
    }

    #[test]
    fn halfline_behind_origin_is_none() {
        let got =
            halfline_segment_intersection(pt(0.0, 0.0), Angle::new(0.0), seg(-1.0, -1.0, -1.0, 1.0));
        assert_eq!(got, None);
    }

    #[test]
    fn halfline_miss_is_none() {
        let got =
            halfline_segment_intersection(pt(0.0, 0.0), Angle::new(FRAC_PI_2), seg(1.0, 0.0, 2.0, 0.0));
        assert_eq!(got, None);
    }

    #[test]
    fn reflect_examples() {
        assert!((reflect_angle(Angle::new(0.0), Angle::new(FRAC_PI_2)).radians() - PI).abs() < 1e-12);
        assert!(
            (reflect_angle(Angle::new(FRAC_PI_4), Angle::new(0.0)).radians() - 7.0 * FRAC_PI_4).abs()
                < 1e-12
        );
        let theta = Angle::new(1.234);
        assert_eq!(reflect_angle(theta, theta), theta);
    }

    /// Independent oracle: solve the 2x2 parametric system and require both
    /// parameters strictly inside (0, 1).
    fn cross_oracle(s1: Segment, s2: Segment) -> Option<bool> {
        let d1 = s1.b - s1.a;
        let d2 = s2.b - s2.a;
        let denom = d1.x * d2.y - d1.y * d2.x;
        let scale = d1.norm() * d2.norm();
        if denom.abs() <= 1e-9 * scale {
            return None; // too close to parallel to trust either answer
        }
        let w = s2.a - s1.a;
        let t = (w.x * d2.y - w.y * d2.x) / denom;
        let u = (w.x * d1.y - w.y * d1.x) / denom;
        // Near-degenerate parameter values are ambiguous under the
        // predicate's tolerance; skip them.
        let margin = 1e-9;
        for p in [t, u] {
            if (p - 0.0).abs() < margin || (p - 1.0).abs() < margin {
                return None;
            }
        }
        Some(t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0)
    }

    #[test]
    fn crossing_agrees_with_parametric_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0u32;
        for _ in 0..100_000 {
            let mut p = || pt(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            let s1 = Segment::new(p(), p());
            let s2 = Segment::new(p(), p());
            if let Some(expect) = cross_oracle(s1, s2) {
                assert_eq!(segments_cross(s1, s2), expect, "{s1:?} vs {s2:?}");
                checked += 1;
            }
        }
        assert!(checked > 90_000);
    }

    proptest! {
        #[test]
        fn crossing_is_symmetric(
            ax in -50.0..50.0f64, ay in -50.0..50.0f64,
            bx in -50.0..50.0f64, by in -50.0..50.0f64,
            cx in -50.0..50.0f64, cy in -50.0..50.0f64,
            dx in -50.0..50.0f64, dy in -50.0..50.0f64,
        ) {
            let s1 = seg(ax, ay, bx, by);
            let s2 = seg(cx, cy, dx, dy);
            prop_assert_eq!(segments_cross(s1, s2), segments_cross(s2, s1));
        }

        #[test]
        fn reflect_is_involution(theta in 0.0..TAU, edge in 0.0..TAU) {
            let t = Angle::new(theta);
            let e = Angle::new(edge);
            let back = reflect_angle(reflect_angle(t, e), e);
            let diff = (back.radians() - t.radians()).rem_euclid(TAU);
            let circ = diff.min(TAU - diff);
            prop_assert!(circ < 1e-12, "circular distance {}", circ);
        }

        #[test]
        fn angle_is_normalized(theta in -1e6..1e6f64) {
            let a = Angle::new(theta);
            prop_assert!((0.0..TAU).contains(&a.radians()));
        }

        #[test]
        fn halfline_hit_is_forward_and_on_segment(
            ox in -20.0..20.0f64, oy in -20.0..20.0f64,
            theta in 0.0..TAU,
            ax in -20.0..20.0f64, ay in -20.0..20.0f64,
            bx in -20.0..20.0f64, by in -20.0..20.0f64,
        ) {
            let origin = pt(ox, oy);
            let dir = Angle::new(theta);
            let s = seg(ax, ay, bx, by);
            if let Some(q) = halfline_segment_intersection(origin, dir, s) {
                let pad = 1e-9 * 40.0;
                prop_assert!(q.x >= ax.min(bx) - pad && q.x <= ax.max(bx) + pad);
                prop_assert!(q.y >= ay.min(by) - pad && q.y <= ay.max(by) + pad);
                prop_assert!((q - origin).dot(dir.direction()) > 0.0);
            }
        }
    }
}
