//! Registry of the inequality family as slack functions.
//!
//! Each [`InequalityId`] maps to one `lhs >= rhs` recipe over
//! [`PointQuantities`], the side lengths, and a [`WeightVector`]. Evaluation
//! never clamps: a negative slack is reported as computed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{BarycentricPoint, GeomError, Point2, PointQuantities, Triangle};

/// Floor of the relative-slack denominator.
pub const TINY: f64 = 1e-300;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown inequality id `{0}`")]
    UnknownId(String),
    #[error("{id}: non-finite evaluation (lhs = {lhs}, rhs = {rhs})")]
    NonFinite {
        id: InequalityId,
        lhs: f64,
        rhs: f64,
    },
    #[error("angles sum to {0}, expected pi")]
    AngleSum(f64),
    #[error("weight logs do not sum to zero: {0:?}")]
    WeightConstraint([f64; 2]),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// Weights `(x, y, z, u, v, w)` with `xyz = uvw = 1`, held as logs.
///
/// Each triple is stored as two free values and the negated sum, so the
/// constraint holds by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    logs: [f64; 6],
}

impl Default for WeightVector {
    fn default() -> Self {
        Self::unit()
    }
}

impl WeightVector {
    pub fn unit() -> Self {
        Self { logs: [0.0; 6] }
    }

    /// From the free coordinates `(log x, log y)` and `(log u, log v)`.
    pub fn from_free(log_x: f64, log_y: f64, log_u: f64, log_v: f64) -> Self {
        Self {
            logs: [
                log_x,
                log_y,
                -(log_x + log_y),
                log_u,
                log_v,
                -(log_u + log_v),
            ],
        }
    }

    /// From six logs whose triples must each sum to zero within 1e-12.
    pub fn from_logs(logs: [f64; 6]) -> Result<Self, CatalogError> {
        let s1 = logs[0] + logs[1] + logs[2];
        let s2 = logs[3] + logs[4] + logs[5];
        if !(s1.abs() <= 1e-12 && s2.abs() <= 1e-12) {
            return Err(CatalogError::WeightConstraint([s1, s2]));
        }
        Ok(Self::from_free(logs[0], logs[1], logs[3], logs[4]))
    }

    /// Keeps `(u, v, w)` and sets `x = 1/u^2`, `y = 1/v^2`, `z = 1/w^2`.
    pub fn with_inverse_square_xyz(&self) -> Self {
        let [_, _, _, lu, lv, lw] = self.logs;
        Self {
            logs: [-2.0 * lu, -2.0 * lv, -2.0 * lw, lu, lv, lw],
        }
    }

    pub fn logs(&self) -> [f64; 6] {
        self.logs
    }

    pub fn xyz(&self) -> [f64; 3] {
        [self.logs[0].exp(), self.logs[1].exp(), self.logs[2].exp()]
    }

    pub fn uvw(&self) -> [f64; 3] {
        [self.logs[3].exp(), self.logs[4].exp(), self.logs[5].exp()]
    }

    pub fn log_norm(&self) -> f64 {
        self.logs.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Which weights an inequality reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightUse {
    None,
    Xyz,
    Uvw,
    All,
}

impl WeightUse {
    pub fn arity(self) -> usize {
        match self {
            WeightUse::None => 0,
            WeightUse::Xyz | WeightUse::Uvw => 3,
            WeightUse::All => 6,
        }
    }
}

macro_rules! inequality_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum InequalityId {
            $($variant),+
        }

        impl InequalityId {
            pub const ALL: &'static [InequalityId] = &[$(InequalityId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(InequalityId::$variant => $name),+
                }
            }
        }

        impl FromStr for InequalityId {
            type Err = CatalogError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.trim() {
                    $($name => Ok(InequalityId::$variant),)+
                    other => Err(CatalogError::UnknownId(other.to_string())),
                }
            }
        }
    };
}

inequality_ids! {
    Em => "EM",
    Barrow => "BARROW",
    Dnp => "DNP",
    Wem => "WEM",
    WemU1 => "WEM_U1",
    WemX1 => "WEM_X1",
    Wdnp => "WDNP",
    WdnpU1 => "WDNP_U1",
    WdnpX1 => "WDNP_X1",
    Wbarrow => "WBARROW",
    WbarrowU1 => "WBARROW_U1",
    WbarrowX1 => "WBARROW_X1",
    ProdEm => "PROD_EM",
    ProdEm1 => "PROD_EM_1",
    ProdDnp => "PROD_DNP",
    ProdDnp1 => "PROD_DNP_1",
    ProdBarrow => "PROD_BARROW",
    ProdBarrow1 => "PROD_BARROW_1",
    WbarrowStrong => "WBARROW_STRONG",
    BarrowChainA => "BARROW_CHAIN_A",
    BarrowChainB => "BARROW_CHAIN_B",
    Dargueron => "DARGUERON",
    LemmaA => "LEMMA_A",
    LemmaB => "LEMMA_B",
    LemmaC => "LEMMA_C",
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for InequalityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for InequalityId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated id list; `ALL` expands to the whole catalog.
pub fn parse_id_list(s: &str) -> Result<Vec<InequalityId>, CatalogError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend_from_slice(InequalityId::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(CatalogError::UnknownId(s.to_string()));
    }
    let mut seen = Vec::with_capacity(out.len());
    out.retain(|id| {
        if seen.contains(id) {
            false
        } else {
            seen.push(*id);
            true
        }
    });
    Ok(out)
}

/// Human-readable catalog metadata.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: InequalityId,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub source: &'static str,
    pub weights: WeightUse,
    pub weight_arity: usize,
}

impl InequalityId {
    pub fn weight_use(self) -> WeightUse {
        use InequalityId::*;
        match self {
            Em | Barrow | Dnp | ProdEm1 | ProdDnp1 | ProdBarrow1 | BarrowChainA | BarrowChainB
            | LemmaA | LemmaB | LemmaC => WeightUse::None,
            Wem | Wdnp | Wbarrow => WeightUse::All,
            WemU1 | WdnpU1 | WbarrowU1 | WbarrowStrong => WeightUse::Xyz,
            WemX1 | WdnpX1 | WbarrowX1 | ProdEm | ProdDnp | ProdBarrow | Dargueron => {
                WeightUse::Uvw
            }
        }
    }

    pub fn entry(self) -> CatalogEntry {
        use InequalityId::*;
        let (lhs, rhs, source) = match self {
            Em => ("PA+PB+PC", "2(d_a+d_b+d_c)", "Erdős–Mordell inequality"),
            Barrow => ("PA+PB+PC", "2(l_a+l_b+l_c)", "Barrow's inequality"),
            Dnp => ("R_A+R_B+R_C", "2(d_a+d_b+d_c)", "Dao–Nguyen–Pham inequality"),
            Wem => (
                "x(PA+u^3 d_a)+y(PB+v^3 d_b)+z(PC+w^3 d_c)",
                "3(u d_a+v d_b+w d_c)",
                "weighted Erdős–Mordell inequality, xyz=uvw=1",
            ),
            WemU1 => (
                "x(PA+d_a)+y(PB+d_b)+z(PC+d_c)",
                "3(d_a+d_b+d_c)",
                "weighted Erdős–Mordell, u=v=w=1 specialization",
            ),
            WemX1 => (
                "PA+PB+PC",
                "(3u-u^3)d_a+(3v-v^3)d_b+(3w-w^3)d_c",
                "weighted Erdős–Mordell, x=y=z=1 specialization",
            ),
            Wdnp => (
                "x(R_A+u^3 d_a)+y(R_B+v^3 d_b)+z(R_C+w^3 d_c)",
                "3(u d_a+v d_b+w d_c)",
                "weighted Dao–Nguyen–Pham inequality, xyz=uvw=1",
            ),
            WdnpU1 => (
                "x(R_A+d_a)+y(R_B+d_b)+z(R_C+d_c)",
                "3(d_a+d_b+d_c)",
                "weighted Dao–Nguyen–Pham, u=v=w=1 specialization",
            ),
            WdnpX1 => (
                "R_A+R_B+R_C",
                "(3u-u^3)d_a+(3v-v^3)d_b+(3w-w^3)d_c",
                "weighted Dao–Nguyen–Pham, x=y=z=1 specialization",
            ),
            Wbarrow => (
                "x(PA+u^3 l_a)+y(PB+v^3 l_b)+z(PC+w^3 l_c)",
                "3(u l_a+v l_b+w l_c)",
                "weighted Barrow inequality, xyz=uvw=1",
            ),
            WbarrowU1 => (
                "x(PA+l_a)+y(PB+l_b)+z(PC+l_c)",
                "3(l_a+l_b+l_c)",
                "weighted Barrow, u=v=w=1 specialization",
            ),
            WbarrowX1 => (
                "PA+PB+PC",
                "(3u-u^3)l_a+(3v-v^3)l_b+(3w-w^3)l_c",
                "weighted Barrow, x=y=z=1 specialization",
            ),
            ProdEm => (
                "(PA+u^3 d_a)(PB+v^3 d_b)(PC+w^3 d_c)",
                "(u d_a+v d_b+w d_c)^3",
                "product form of weighted Erdős–Mordell, uvw=1",
            ),
            ProdEm1 => (
                "(PA+d_a)(PB+d_b)(PC+d_c)",
                "(d_a+d_b+d_c)^3",
                "strengthened Erdős–Mordell (product form)",
            ),
            ProdDnp => (
                "(R_A+u^3 d_a)(R_B+v^3 d_b)(R_C+w^3 d_c)",
                "(u d_a+v d_b+w d_c)^3",
                "product form of weighted Dao–Nguyen–Pham, uvw=1",
            ),
            ProdDnp1 => (
                "(R_A+d_a)(R_B+d_b)(R_C+d_c)",
                "(d_a+d_b+d_c)^3",
                "strengthened Dao–Nguyen–Pham (product form)",
            ),
            ProdBarrow => (
                "(PA+u^3 l_a)(PB+v^3 l_b)(PC+w^3 l_c)",
                "(u l_a+v l_b+w l_c)^3",
                "product form of weighted Barrow, uvw=1",
            ),
            ProdBarrow1 => (
                "(PA+l_a)(PB+l_b)(PC+l_c)",
                "(l_a+l_b+l_c)^3",
                "strengthened Barrow (product form)",
            ),
            WbarrowStrong => (
                "x PA+y PB+z PC",
                "sqrt(yz)(sqrt(PB/PC)+sqrt(PC/PB))l_a+sqrt(zx)(sqrt(PC/PA)+sqrt(PA/PC))l_b+sqrt(xy)(sqrt(PA/PB)+sqrt(PB/PA))l_c",
                "strengthened weighted Barrow (Wolstenholme form)",
            ),
            BarrowChainA => (
                "(PA+PB+PC)/2",
                "[PA^2(PB+PC)^2+PB^2(PC+PA)^2+PC^2(PA+PB)^2]/[(PB+PC)(PC+PA)(PA+PB)]",
                "strengthened Barrow chain, upper step",
            ),
            BarrowChainB => (
                "[PA^2(PB+PC)^2+PB^2(PC+PA)^2+PC^2(PA+PB)^2]/[(PB+PC)(PC+PA)(PA+PB)]",
                "l_a+l_b+l_c",
                "strengthened Barrow chain, lower step",
            ),
            Dargueron => (
                "PA/u^2+PB/v^2+PC/w^2",
                "2(u d_a+v d_b+w d_c)",
                "Dar–Gueron weighted Erdős–Mordell, uvw=1",
            ),
            LemmaA => ("PA", "(b d_c+c d_b)/a", "Dar–Gueron vertex lemma at A"),
            LemmaB => ("PB", "(c d_a+a d_c)/b", "Dar–Gueron vertex lemma at B"),
            LemmaC => ("PC", "(a d_b+b d_a)/c", "Dar–Gueron vertex lemma at C"),
        };
        let weights = self.weight_use();
        CatalogEntry {
            id: self,
            lhs,
            rhs,
            source,
            weights,
            weight_arity: weights.arity(),
        }
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    InequalityId::ALL.iter().map(|id| id.entry()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvaluationResult {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub rel_slack: f64,
}

impl EvaluationResult {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        let slack = lhs - rhs;
        Self {
            lhs,
            rhs,
            slack,
            rel_slack: slack / lhs.abs().max(rhs.abs()).max(TINY),
        }
    }
}

/// `x(V_A + u^3 s_a) + y(V_B + v^3 s_b) + z(V_C + w^3 s_c)` against
/// `3(u s_a + v s_b + w s_c)`.
fn weighted_sum(vertex: [f64; 3], side: [f64; 3], xyz: [f64; 3], uvw: [f64; 3]) -> (f64, f64) {
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for i in 0..3 {
        lhs += xyz[i] * (vertex[i] + uvw[i].powi(3) * side[i]);
        rhs += uvw[i] * side[i];
    }
    (lhs, 3.0 * rhs)
}

/// `sum V` against `sum (3u - u^3) s`.
fn cubic_coefficient_sum(vertex: [f64; 3], side: [f64; 3], uvw: [f64; 3]) -> (f64, f64) {
    let lhs = vertex.iter().sum();
    let rhs = (0..3)
        .map(|i| (3.0 * uvw[i] - uvw[i].powi(3)) * side[i])
        .sum();
    (lhs, rhs)
}

/// `prod (V + u^3 s)` against `(sum u s)^3`.
fn product_form(vertex: [f64; 3], side: [f64; 3], uvw: [f64; 3]) -> (f64, f64) {
    let lhs = (0..3)
        .map(|i| vertex[i] + uvw[i].powi(3) * side[i])
        .product();
    let rhs = (0..3).map(|i| uvw[i] * side[i]).sum::<f64>().powi(3);
    (lhs, rhs)
}

fn chain_ratio(p: f64, q: f64, r: f64) -> f64 {
    let num = (p * (q + r)).powi(2) + (q * (r + p)).powi(2) + (r * (p + q)).powi(2);
    num / ((q + r) * (r + p) * (p + q))
}

/// Evaluates one inequality. `sides` are `(a, b, c)` of the triangle that
/// produced `q`.
pub fn evaluate(
    id: InequalityId,
    q: &PointQuantities,
    w: &WeightVector,
    sides: (f64, f64, f64),
) -> Result<EvaluationResult, CatalogError> {
    use InequalityId::*;
    let (a, b, c) = sides;
    let vd = q.vertex_distances();
    let td = q.tangents();
    let pd = q.pedal();
    let bl = q.bisectors();
    let ones = [1.0; 3];
    let xyz = w.xyz();
    let uvw = w.uvw();
    let sum = |v: [f64; 3]| v[0] + v[1] + v[2];

    let (lhs, rhs) = match id {
        Em => (sum(vd), 2.0 * sum(pd)),
        Barrow => (sum(vd), 2.0 * sum(bl)),
        Dnp => (sum(td), 2.0 * sum(pd)),
        Wem => weighted_sum(vd, pd, xyz, uvw),
        WemU1 => weighted_sum(vd, pd, xyz, ones),
        WemX1 => cubic_coefficient_sum(vd, pd, uvw),
        Wdnp => weighted_sum(td, pd, xyz, uvw),
        WdnpU1 => weighted_sum(td, pd, xyz, ones),
        WdnpX1 => cubic_coefficient_sum(td, pd, uvw),
        Wbarrow => weighted_sum(vd, bl, xyz, uvw),
        WbarrowU1 => weighted_sum(vd, bl, xyz, ones),
        WbarrowX1 => cubic_coefficient_sum(vd, bl, uvw),
        ProdEm => product_form(vd, pd, uvw),
        ProdEm1 => product_form(vd, pd, ones),
        ProdDnp => product_form(td, pd, uvw),
        ProdDnp1 => product_form(td, pd, ones),
        ProdBarrow => product_form(vd, bl, uvw),
        ProdBarrow1 => product_form(vd, bl, ones),
        WbarrowStrong => {
            let [x, y, z] = xyz;
            let [pa, pb, pc] = vd;
            let coeff = |wp: f64, s: f64, t: f64| wp.sqrt() * ((s / t).sqrt() + (t / s).sqrt());
            let lhs = x * pa + y * pb + z * pc;
            let rhs = coeff(y * z, pb, pc) * q.l_a
                + coeff(z * x, pc, pa) * q.l_b
                + coeff(x * y, pa, pb) * q.l_c;
            (lhs, rhs)
        }
        BarrowChainA => (0.5 * sum(vd), chain_ratio(q.pa, q.pb, q.pc)),
        BarrowChainB => (chain_ratio(q.pa, q.pb, q.pc), sum(bl)),
        Dargueron => {
            let lhs = (0..3).map(|i| vd[i] / (uvw[i] * uvw[i])).sum();
            let rhs = 2.0 * (0..3).map(|i| uvw[i] * pd[i]).sum::<f64>();
            (lhs, rhs)
        }
        LemmaA => (q.pa, (b * q.d_c + c * q.d_b) / a),
        LemmaB => (q.pb, (c * q.d_a + a * q.d_c) / b),
        LemmaC => (q.pc, (a * q.d_b + b * q.d_a) / c),
    };
    if !(lhs.is_finite() && rhs.is_finite()) {
        return Err(CatalogError::NonFinite { id, lhs, rhs });
    }
    Ok(EvaluationResult::new(lhs, rhs))
}

/// Slack and its sum-of-squares form for
/// `xw^2 + yw^2 + zw^2 >= 2 yw zw cos A + 2 zw xw cos B + 2 xw yw cos C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WolstenholmeSlack {
    pub slack: f64,
    pub sum_of_squares: f64,
    /// `xw^2 + yw^2 + zw^2`, the scale both forms are compared against.
    pub scale: f64,
}

impl WolstenholmeSlack {
    pub fn rel_disagreement(&self) -> f64 {
        (self.slack - self.sum_of_squares).abs() / self.scale.max(TINY)
    }
}

/// Angles must be positive and sum to pi within 1e-9.
pub fn wolstenholme_slack(
    xw: f64,
    yw: f64,
    zw: f64,
    angle_a: f64,
    angle_b: f64,
    angle_c: f64,
) -> Result<WolstenholmeSlack, CatalogError> {
    let total = angle_a + angle_b + angle_c;
    if !(angle_a > 0.0 && angle_b > 0.0 && angle_c > 0.0) || !((total - PI).abs() <= 1e-9) {
        return Err(CatalogError::AngleSum(total));
    }
    let scale = xw * xw + yw * yw + zw * zw;
    let slack = scale
        - 2.0 * yw * zw * angle_a.cos()
        - 2.0 * zw * xw * angle_b.cos()
        - 2.0 * xw * yw * angle_c.cos();
    let sum_of_squares = (xw - yw * angle_c.cos() - zw * angle_b.cos()).powi(2)
        + (yw * angle_c.sin() - zw * angle_b.sin()).powi(2);
    Ok(WolstenholmeSlack {
        slack,
        sum_of_squares,
        scale,
    })
}

/// Both sides of the cubic-polynomial identity behind the Barrow chain:
/// `(p+q+r)(p+q)(q+r)(r+p) - 2p^2(q+r)^2 - 2q^2(r+p)^2 - 2r^2(p+q)^2`
/// and `pq(p-q)^2 + qr(q-r)^2 + rp(r-p)^2`.
pub fn chain_polynomial_identity(p: f64, q: f64, r: f64) -> (f64, f64) {
    let lhs = (p + q + r) * (p + q) * (q + r) * (r + p)
        - 2.0 * (p * (q + r)).powi(2)
        - 2.0 * (q * (r + p)).powi(2)
        - 2.0 * (r * (p + q)).powi(2);
    let rhs = p * q * (p - q).powi(2) + q * r * (q - r).powi(2) + r * p * (r - p).powi(2);
    (lhs, rhs)
}

/// Largest term magnitude in [`chain_polynomial_identity`], used to normalize the
/// difference of its two sides.
pub fn chain_polynomial_scale(p: f64, q: f64, r: f64) -> f64 {
    (p + q + r) * (p + q) * (q + r) * (r + p)
}

/// A configuration at which an inequality is expected to be tight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EqualityConfiguration {
    pub triangle: Triangle,
    pub point: BarycentricPoint,
    pub weights: WeightVector,
    /// Set when the stated equality condition differs from the returned
    /// configuration.
    pub note: Option<&'static str>,
}

fn right_triangle() -> Triangle {
    Triangle::new(
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(0.0, 3.0),
    )
    .expect("fixture triangle")
}

/// Acute triangle with circumcenter `(2, 5/6)`.
pub fn acute_triangle() -> Triangle {
    Triangle::new(
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(2.0, 3.0),
    )
    .expect("fixture triangle")
}

/// Midpoint of the segment from vertex `vertex` (0 = A) to the circumcenter.
fn vertex_circumcenter_midpoint(tri: &Triangle, vertex: usize) -> BarycentricPoint {
    let v = tri.vertices()[vertex];
    let p = v.add(tri.circumcircle().center).scale(0.5);
    BarycentricPoint::from_point(tri, p, 0.0)
        .expect("midpoint of an acute vertex-circumcenter segment is interior")
}

pub fn equality_configuration(id: InequalityId) -> EqualityConfiguration {
    use InequalityId::*;
    let canonical = EqualityConfiguration {
        triangle: Triangle::unit_equilateral(),
        point: BarycentricPoint::centroid(),
        weights: WeightVector::unit(),
        note: None,
    };
    match id {
        LemmaA => {
            let tri = right_triangle();
            EqualityConfiguration {
                triangle: tri,
                point: BarycentricPoint::from_point(&tri, Point2::new(1.0, 0.75), 0.0)
                    .expect("(1, 0.75) is interior"),
                ..canonical
            }
        }
        LemmaB | LemmaC => {
            let tri = acute_triangle();
            let vertex = if id == LemmaB { 1 } else { 2 };
            EqualityConfiguration {
                triangle: tri,
                point: vertex_circumcenter_midpoint(&tri, vertex),
                ..canonical
            }
        }
        BarrowChainA => {
            let tri = acute_triangle();
            EqualityConfiguration {
                triangle: tri,
                point: BarycentricPoint::from_point(&tri, tri.circumcircle().center, 0.0)
                    .expect("circumcenter of an acute triangle is interior"),
                ..canonical
            }
        }
        ProdDnp => EqualityConfiguration {
            note: Some("stated equality condition is P at a vertex; the equilateral center is tight numerically"),
            ..canonical
        },
        _ => canonical,
    }
}

/// Evaluates `id` at its [`equality_configuration`].
pub fn evaluate_at_equality(id: InequalityId) -> Result<EvaluationResult, CatalogError> {
    let cfg = equality_configuration(id);
    let q = crate::geom::quantities(&cfg.triangle, &cfg.point)?;
    evaluate(id, &q, &cfg.weights, cfg.triangle.side_lengths())
}
