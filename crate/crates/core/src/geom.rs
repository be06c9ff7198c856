//! Planar triangle geometry for an interior point.
//!
//! Every per-point quantity is available through a closed-form path, and the
//! two that have a natural constructive counterpart (bisector lengths and
//! tangent distances) also have an independent second path so the two can be
//! cross-checked.
//!
//! Side and distance labels follow the usual convention: `a = |BC|`,
//! `b = |CA|`, `c = |AB|`, and `d_a`, `d_b`, `d_c` are the distances from `P`
//! to the lines `BC`, `CA`, `AB`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default barycentric interiority margin.
pub const DEFAULT_INTERIOR_MARGIN: f64 = 1e-6;

/// Triangles with `|area| < DEGENERACY_RATIO * max_side^2` are rejected.
pub const DEGENERACY_RATIO: f64 = 1e-12;

const BARY_SUM_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("degenerate triangle: area {area:e} below threshold for max side {max_side:e}")]
    Degenerate { area: f64, max_side: f64 },
    #[error("barycentric coordinates sum to {0}, expected 1")]
    BarycentricSum(f64),
    #[error("barycentric coordinate {value:e} below interior margin {margin:e}")]
    BelowMargin { value: f64, margin: f64 },
    #[error("point is not strictly inside the triangle")]
    NotInterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    pub fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }

    pub fn scale(self, t: f64) -> Point2 {
        Point2::new(self.x * t, self.y * t)
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point2) -> f64 {
        self.sub(o).norm()
    }
}

/// A non-degenerate triangle, stored counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    a: Point2,
    b: Point2,
    c: Point2,
}

impl Triangle {
    /// Builds a triangle, swapping `B` and `C` if the input is clockwise.
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self, GeomError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let twice_area = b.sub(a).cross(c.sub(a));
        let max_side = a.dist(b).max(b.dist(c)).max(c.dist(a));
        let area = 0.5 * twice_area.abs();
        if !(area >= DEGENERACY_RATIO * max_side * max_side) || max_side == 0.0 {
            return Err(GeomError::Degenerate { area, max_side });
        }
        if twice_area > 0.0 {
            Ok(Self { a, b, c })
        } else {
            Ok(Self { a, b: c, c: b })
        }
    }

    /// Equilateral triangle with unit sides, base on the x axis.
    pub fn unit_equilateral() -> Self {
        Self {
            a: Point2::new(0.0, 0.0),
            b: Point2::new(1.0, 0.0),
            c: Point2::new(0.5, 3f64.sqrt() / 2.0),
        }
    }

    /// Triangle with interior angles `angles` (at A, B, C), longest side 1,
    /// `A` at the origin and `B` on the positive x axis.
    pub fn from_angles(angles: [f64; 3]) -> Result<Self, GeomError> {
        let [alpha, beta, gamma] = angles;
        let max_sin = alpha.sin().max(beta.sin()).max(gamma.sin());
        let b_len = beta.sin() / max_sin;
        let c_len = gamma.sin() / max_sin;
        Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(c_len, 0.0),
            Point2::new(b_len * alpha.cos(), b_len * alpha.sin()),
        )
    }

    pub fn a(&self) -> Point2 {
        self.a
    }

    pub fn b(&self) -> Point2 {
        self.b
    }

    pub fn c(&self) -> Point2 {
        self.c
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    pub fn area(&self) -> f64 {
        0.5 * self.b.sub(self.a).cross(self.c.sub(self.a))
    }

    /// `(a, b, c) = (|BC|, |CA|, |AB|)`.
    pub fn side_lengths(&self) -> (f64, f64, f64) {
        (
            self.b.dist(self.c),
            self.c.dist(self.a),
            self.a.dist(self.b),
        )
    }

    pub fn max_side(&self) -> f64 {
        let (a, b, c) = self.side_lengths();
        a.max(b).max(c)
    }

    /// Interior angles at A, B, C.
    pub fn angles(&self) -> [f64; 3] {
        let at = |p: Point2, q: Point2, r: Point2| {
            let u = q.sub(p);
            let v = r.sub(p);
            u.cross(v).abs().atan2(u.dot(v))
        };
        [
            at(self.a, self.b, self.c),
            at(self.b, self.c, self.a),
            at(self.c, self.a, self.b),
        ]
    }

    /// Uniformly scaled copy (about the origin).
    pub fn scaled(&self, t: f64) -> Result<Self, GeomError> {
        Triangle::new(self.a.scale(t), self.b.scale(t), self.c.scale(t))
    }

    /// Signed barycentric coordinates of `p`; they sum to 1 and are all
    /// positive exactly when `p` is strictly inside.
    pub fn barycentric_of(&self, p: Point2) -> [f64; 3] {
        let twice = self.b.sub(self.a).cross(self.c.sub(self.a));
        let la = self.b.sub(p).cross(self.c.sub(p)) / twice;
        let lb = self.c.sub(p).cross(self.a.sub(p)) / twice;
        let lc = self.a.sub(p).cross(self.b.sub(p)) / twice;
        [la, lb, lc]
    }

    pub fn contains_strictly(&self, p: Point2) -> bool {
        p.is_finite() && self.barycentric_of(p).iter().all(|&l| l > 0.0)
    }

    pub fn circumcircle(&self) -> CircumCircle {
        // Solve relative to A to keep the numbers small.
        let b = self.b.sub(self.a);
        let c = self.c.sub(self.a);
        let d = 2.0 * b.cross(c);
        let bb = b.dot(b);
        let cc = c.dot(c);
        let ux = (c.y * bb - b.y * cc) / d;
        let uy = (b.x * cc - c.x * bb) / d;
        let rel = Point2::new(ux, uy);
        CircumCircle {
            center: self.a.add(rel),
            radius: rel.norm(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircumCircle {
    pub center: Point2,
    pub radius: f64,
}

/// Barycentric coordinates of a strictly interior point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarycentricPoint {
    coords: [f64; 3],
}

impl BarycentricPoint {
    /// Validates with the default interiority margin.
    pub fn new(la: f64, lb: f64, lc: f64) -> Result<Self, GeomError> {
        Self::with_margin(la, lb, lc, DEFAULT_INTERIOR_MARGIN)
    }

    pub fn with_margin(la: f64, lb: f64, lc: f64, margin: f64) -> Result<Self, GeomError> {
        let coords = [la, lb, lc];
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let sum = la + lb + lc;
        if (sum - 1.0).abs() > BARY_SUM_TOL {
            return Err(GeomError::BarycentricSum(sum));
        }
        if let Some(&value) = coords.iter().find(|&&v| v < margin) {
            return Err(GeomError::BelowMargin { value, margin });
        }
        Ok(Self { coords })
    }

    pub fn centroid() -> Self {
        Self {
            coords: [1.0 / 3.0; 3],
        }
    }

    /// Barycentric coordinates of a cartesian point, validated against `margin`.
    pub fn from_point(tri: &Triangle, p: Point2, margin: f64) -> Result<Self, GeomError> {
        let [la, lb, lc] = tri.barycentric_of(p);
        Self::with_margin(la, lb, lc, margin)
    }

    pub fn coords(&self) -> [f64; 3] {
        self.coords
    }

    pub fn to_cartesian(&self, tri: &Triangle) -> Point2 {
        let [la, lb, lc] = self.coords;
        tri.a.scale(la).add(tri.b.scale(lb)).add(tri.c.scale(lc))
    }
}

/// Every scalar attached to an interior point `P` of a triangle.
///
/// `alpha`, `beta`, `gamma` are the angles BPC, CPA, APB.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointQuantities {
    pub pa: f64,
    pub pb: f64,
    pub pc: f64,
    pub d_a: f64,
    pub d_b: f64,
    pub d_c: f64,
    pub l_a: f64,
    pub l_b: f64,
    pub l_c: f64,
    pub r_a: f64,
    pub r_b: f64,
    pub r_c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl PointQuantities {
    pub fn vertex_distances(&self) -> [f64; 3] {
        [self.pa, self.pb, self.pc]
    }

    pub fn pedal(&self) -> [f64; 3] {
        [self.d_a, self.d_b, self.d_c]
    }

    pub fn bisectors(&self) -> [f64; 3] {
        [self.l_a, self.l_b, self.l_c]
    }

    pub fn tangents(&self) -> [f64; 3] {
        [self.r_a, self.r_b, self.r_c]
    }

    pub fn apex_angles(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

fn ensure_interior(tri: &Triangle, p: Point2) -> Result<(), GeomError> {
    if !p.is_finite() {
        return Err(GeomError::NonFinite);
    }
    if tri.contains_strictly(p) {
        Ok(())
    } else {
        Err(GeomError::NotInterior)
    }
}

/// Perpendicular distance from `p` to the line through `from` and `to`,
/// positive when `p` lies to the left (inside, for a counterclockwise edge).
fn signed_line_distance(p: Point2, from: Point2, to: Point2) -> f64 {
    let edge = to.sub(from);
    edge.cross(p.sub(from)) / edge.norm()
}

pub fn pedal_distances(tri: &Triangle, p: Point2) -> Result<(f64, f64, f64), GeomError> {
    ensure_interior(tri, p)?;
    Ok((
        signed_line_distance(p, tri.b, tri.c),
        signed_line_distance(p, tri.c, tri.a),
        signed_line_distance(p, tri.a, tri.b),
    ))
}

pub fn vertex_distances(tri: &Triangle, p: Point2) -> Result<(f64, f64, f64), GeomError> {
    ensure_interior(tri, p)?;
    Ok((p.dist(tri.a), p.dist(tri.b), p.dist(tri.c)))
}

fn angle_at(p: Point2, q: Point2, r: Point2) -> f64 {
    let u = q.sub(p);
    let v = r.sub(p);
    u.cross(v).abs().atan2(u.dot(v))
}

/// Angles BPC, CPA, APB.
pub fn apex_angles(tri: &Triangle, p: Point2) -> Result<(f64, f64, f64), GeomError> {
    ensure_interior(tri, p)?;
    Ok((
        angle_at(p, tri.b, tri.c),
        angle_at(p, tri.c, tri.a),
        angle_at(p, tri.a, tri.b),
    ))
}

/// Closed-form length of the bisector of angle BPC up to line BC, and cyclic.
///
/// `l_a = 2 PB PC cos(alpha/2) / (PB + PC)`.
pub fn bisector_lengths(
    pa: f64,
    pb: f64,
    pc: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
) -> (f64, f64, f64) {
    let l = |p: f64, q: f64, angle: f64| 2.0 * p * q * (0.5 * angle).cos() / (p + q);
    (l(pb, pc, alpha), l(pc, pa, beta), l(pa, pb, gamma))
}

/// Constructive bisector lengths: intersects the bisector ray of each apex
/// angle with the opposite side segment.
pub fn bisector_lengths_oracle(tri: &Triangle, p: Point2) -> Result<(f64, f64, f64), GeomError> {
    ensure_interior(tri, p)?;
    let foot = |from: Point2, to: Point2| -> f64 {
        let u = from.sub(p);
        let v = to.sub(p);
        let dir = u.scale(1.0 / u.norm()).add(v.scale(1.0 / v.norm()));
        let edge = to.sub(from);
        // p + t*dir = from + s*edge
        let det = edge.cross(dir);
        let rel = from.sub(p);
        let t = edge.cross(rel) / det;
        let s = dir.cross(rel) / det;
        assert!(
            t > 0.0 && (0.0..=1.0).contains(&s),
            "bisector ray missed the opposite side (t = {t}, s = {s})"
        );
        t * dir.norm()
    };
    Ok((foot(tri.b, tri.c), foot(tri.c, tri.a), foot(tri.a, tri.b)))
}

/// Distances from `p` to the circumcircle tangents at A, B, C.
pub fn tangent_distances(tri: &Triangle, p: Point2) -> Result<(f64, f64, f64), GeomError> {
    ensure_interior(tri, p)?;
    let center = tri.circumcircle().center;
    let dist = |v: Point2| {
        let normal = v.sub(center);
        (p.sub(v).dot(normal) / normal.norm()).abs()
    };
    Ok((dist(tri.a), dist(tri.b), dist(tri.c)))
}

/// Tangent distances from side lengths and pedal distances alone:
/// `R_A = (b d_c + c d_b) / a` and cyclic.
pub fn tangent_distance_identity(
    a: f64,
    b: f64,
    c: f64,
    d_a: f64,
    d_b: f64,
    d_c: f64,
) -> (f64, f64, f64) {
    (
        (b * d_c + c * d_b) / a,
        (c * d_a + a * d_c) / b,
        (a * d_b + b * d_a) / c,
    )
}

pub fn quantities(tri: &Triangle, bary: &BarycentricPoint) -> Result<PointQuantities, GeomError> {
    quantities_at(tri, bary.to_cartesian(tri))
}

/// Closed-form quantities at a cartesian point.
pub fn quantities_at(tri: &Triangle, p: Point2) -> Result<PointQuantities, GeomError> {
    let (pa, pb, pc) = vertex_distances(tri, p)?;
    let (d_a, d_b, d_c) = pedal_distances(tri, p)?;
    let (alpha, beta, gamma) = apex_angles(tri, p)?;
    let (l_a, l_b, l_c) = bisector_lengths(pa, pb, pc, alpha, beta, gamma);
    let (r_a, r_b, r_c) = tangent_distances(tri, p)?;
    Ok(PointQuantities {
        pa,
        pb,
        pc,
        d_a,
        d_b,
        d_c,
        l_a,
        l_b,
        l_c,
        r_a,
        r_b,
        r_c,
        alpha,
        beta,
        gamma,
    })
}

/// Largest relative disagreement between the two computation paths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualPathCheck {
    pub bisector: f64,
    pub tangent: f64,
}

pub fn rel_diff(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

pub fn dual_path_check(tri: &Triangle, p: Point2) -> Result<DualPathCheck, GeomError> {
    let q = quantities_at(tri, p)?;
    let (la, lb, lc) = bisector_lengths_oracle(tri, p)?;
    let (a, b, c) = tri.side_lengths();
    let (ra, rb, rc) = tangent_distance_identity(a, b, c, q.d_a, q.d_b, q.d_c);
    let max3 = |x: [f64; 3], y: [f64; 3]| {
        x.iter()
            .zip(y.iter())
            .map(|(&u, &v)| rel_diff(u, v))
            .fold(0.0, f64::max)
    };
    Ok(DualPathCheck {
        bisector: max3(q.bisectors(), [la, lb, lc]),
        tangent: max3(q.tangents(), [ra, rb, rc]),
    })
}

/// Full angle at an interior point, used by invariant checks.
pub const FULL_TURN: f64 = 2.0 * PI;

#[cfg(test)]
mod tests {
    use super::*;

    fn right() -> Triangle {
        Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 0.0),
            Point2::new(0.0, 3.0),
        )
        .unwrap()
    }

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
    }

    #[test]
    fn side_lengths_examples() {
        assert_eq!(Triangle::unit_equilateral().side_lengths().0, 1.0);
        let (a, b, c) = Triangle::unit_equilateral().side_lengths();
        assert!(close(a, 1.0, 1e-15) && close(b, 1.0, 1e-15) && close(c, 1.0, 1e-15));
        assert_eq!(right().side_lengths(), (5.0, 3.0, 4.0));
        let t = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 3f64.sqrt()),
        )
        .unwrap();
        let (a, b, c) = t.side_lengths();
        assert!(close(a, 2.0, 1e-15) && close(b, 2.0, 1e-15) && close(c, 2.0, 1e-15));
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let t = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 3.0),
            Point2::new(4.0, 0.0),
        )
        .unwrap();
        assert!(t.area() > 0.0);
        assert_eq!(t.b(), Point2::new(4.0, 0.0));
    }

    #[test]
    fn degenerate_and_non_finite_rejected() {
        let e = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 1e-13),
        );
        assert!(matches!(e, Err(GeomError::Degenerate { .. })));
        let p = Point2::new(1.0, 1.0);
        assert!(matches!(
            Triangle::new(p, p, p),
            Err(GeomError::Degenerate { .. })
        ));
        assert_eq!(
            Triangle::new(Point2::new(f64::NAN, 0.0), p, Point2::new(0.0, 1.0)),
            Err(GeomError::NonFinite)
        );
    }

    #[test]
    fn barycentric_validation() {
        assert!(matches!(
            BarycentricPoint::new(0.5, 0.5, 0.5),
            Err(GeomError::BarycentricSum(_))
        ));
        assert!(matches!(
            BarycentricPoint::new(1.0 - 1e-7, 1e-7 / 2.0, 1e-7 / 2.0),
            Err(GeomError::BelowMargin { .. })
        ));
        assert!(BarycentricPoint::with_margin(1.0, 0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn barycentric_to_cartesian_examples() {
        let p = BarycentricPoint::centroid().to_cartesian(&right());
        assert!(close(p.x, 4.0 / 3.0, 1e-15) && close(p.y, 1.0, 1e-15));

        let eq = Triangle::unit_equilateral();
        let v = BarycentricPoint::with_margin(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(v.to_cartesian(&eq), eq.a());

        // Midpoint of A and the midpoint of BC.
        let m = BarycentricPoint::new(0.5, 0.25, 0.25)
            .unwrap()
            .to_cartesian(&eq);
        let bc_mid = eq.b().add(eq.c()).scale(0.5);
        let expected = eq.a().add(bc_mid).scale(0.5);
        assert!(m.dist(expected) < 1e-15);
    }

    #[test]
    fn circumcircle_examples() {
        let cc = right().circumcircle();
        assert!(cc.center.dist(Point2::new(2.0, 1.5)) < 1e-15);
        assert!(close(cc.radius, 2.5, 1e-15));
        let eq = Triangle::unit_equilateral().circumcircle();
        assert!(close(eq.radius, 1.0 / 3f64.sqrt(), 1e-15));
    }

    #[test]
    fn pedal_examples_and_exterior_rejection() {
        let (da, db, dc) = pedal_distances(&right(), Point2::new(1.0, 1.0)).unwrap();
        assert!(close(da, 1.0, 1e-15) && close(db, 1.0, 1e-15) && close(dc, 1.0, 1e-15));
        let eq = Triangle::unit_equilateral();
        let center = BarycentricPoint::centroid().to_cartesian(&eq);
        let (da, _, _) = pedal_distances(&eq, center).unwrap();
        assert!(close(da, 3f64.sqrt() / 6.0, 1e-15));
        assert_eq!(
            pedal_distances(&right(), Point2::new(3.0, 3.0)),
            Err(GeomError::NotInterior)
        );
        assert_eq!(
            pedal_distances(&right(), Point2::new(2.0, 0.0)),
            Err(GeomError::NotInterior)
        );
    }

    #[test]
    fn vertex_distance_limit_near_a() {
        let tri = right();
        let bary = BarycentricPoint::new(1.0 - 2e-6, 1e-6, 1e-6).unwrap();
        let (pa, pb, pc) = vertex_distances(&tri, bary.to_cartesian(&tri)).unwrap();
        assert!(pa < 1e-5);
        assert!((pb - 4.0).abs() < 1e-5 && (pc - 3.0).abs() < 1e-5);
    }

    #[test]
    fn apex_angles_right_triangle() {
        let (al, be, ga) = apex_angles(&right(), Point2::new(1.0, 1.0)).unwrap();
        // 40-digit reference values.
        assert!(close(al, 2.356_194_490_192_345, 1e-14));
        assert!(close(be, 1.892_546_881_191_538_8, 1e-14));
        assert!(close(ga, 2.034_443_935_795_702_7, 1e-14));
        assert!((al + be + ga - FULL_TURN).abs() < 1e-12);
    }

    #[test]
    fn tangent_distances_right_triangle_exact() {
        let (ra, rb, rc) = tangent_distances(&right(), Point2::new(1.0, 1.0)).unwrap();
        assert!((ra - 1.4).abs() < 1e-12 && (rb - 3.0).abs() < 1e-12 && (rc - 2.0).abs() < 1e-12);
        let (ia, ib, ic) = tangent_distance_identity(5.0, 3.0, 4.0, 1.0, 1.0, 1.0);
        assert!((ia - 1.4).abs() < 1e-15 && ib == 3.0 && ic == 2.0);
        let d = 0.7;
        assert_eq!(
            tangent_distance_identity(2.0, 2.0, 2.0, d, d, d),
            (2.0 * d, 2.0 * d, 2.0 * d)
        );
    }

    #[test]
    fn equilateral_center_table() {
        let eq = Triangle::unit_equilateral();
        let q = quantities(&eq, &BarycentricPoint::centroid()).unwrap();
        let r = 1.0 / 3f64.sqrt();
        let d = 3f64.sqrt() / 6.0;
        for v in q.vertex_distances().into_iter().chain(q.tangents()) {
            assert!(close(v, r, 1e-14), "{v}");
        }
        for v in q.pedal().into_iter().chain(q.bisectors()) {
            assert!(close(v, d, 1e-14), "{v}");
        }
        for v in q.apex_angles() {
            assert!(close(v, 2.0 * PI / 3.0, 1e-14));
        }
        let (la, _, _) =
            bisector_lengths_oracle(&eq, BarycentricPoint::centroid().to_cartesian(&eq)).unwrap();
        assert!(close(la, d, 1e-14));
    }

    #[test]
    fn bisector_paths_agree_right_triangle() {
        let p = Point2::new(1.0, 1.0);
        let q = quantities_at(&right(), p).unwrap();
        let (la, lb, lc) = bisector_lengths_oracle(&right(), p).unwrap();
        // 40-digit ray-intersection reference.
        let reference = [
            1.002_522_136_355_774_7,
            1.013_081_457_233_190_1,
            1.027_486_296_746_015_6,
        ];
        for ((closed, oracle), r) in q.bisectors().iter().zip([la, lb, lc]).zip(reference) {
            assert!(close(*closed, r, 1e-13));
            assert!(close(oracle, r, 1e-13));
        }
    }

    #[test]
    fn similarity_scaling() {
        let tri = right();
        let bary = BarycentricPoint::new(0.2, 0.3, 0.5).unwrap();
        let q = quantities(&tri, &bary).unwrap();
        for t in [2.0, 0.5] {
            let qs = quantities(&tri.scaled(t).unwrap(), &bary).unwrap();
            let lengths = |q: &PointQuantities| {
                let mut v = q.vertex_distances().to_vec();
                v.extend(q.pedal());
                v.extend(q.bisectors());
                v.extend(q.tangents());
                v
            };
            for (x, y) in lengths(&q).iter().zip(lengths(&qs)) {
                assert!(rel_diff(x * t, y) < 1e-9);
            }
            for (x, y) in q.apex_angles().iter().zip(qs.apex_angles()) {
                assert!(rel_diff(*x, y) < 1e-9);
            }
        }
    }

    #[test]
    fn from_angles_has_unit_max_side() {
        let t = Triangle::from_angles([0.3, 1.0, PI - 1.3]).unwrap();
        assert!(close(t.max_side(), 1.0, 1e-15));
        let got = t.angles();
        for (g, e) in got.iter().zip([0.3, 1.0, PI - 1.3]) {
            assert!(close(*g, e, 1e-13));
        }
    }
}
