//! Seeded randomized property runs over the whole catalog.
//!
//! Sample `i` draws its triangle, point, and weights (in that order) from
//! stream `(seed, i)`, so results do not depend on how samples are spread
//! over workers. Aggregation folds samples in index order.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{
    chain_polynomial_identity, chain_polynomial_scale, evaluate, wolstenholme_slack, InequalityId,
    WeightVector,
};
use crate::geom::{
    dual_path_check, quantities, tangent_distance_identity, tangent_distances, BarycentricPoint,
    GeomError, Point2, Triangle, DEFAULT_INTERIOR_MARGIN,
};
use crate::rng::Xoshiro256;

pub const HISTOGRAM_BINS: usize = 64;
/// Histogram covers `log10(rel_slack)` in `[HISTOGRAM_LOG10_MIN, 0)`.
pub const HISTOGRAM_LOG10_MIN: f64 = -16.0;
const BINS_PER_DECADE: f64 = 4.0;

const UNIFORM_MIN_ANGLE: f64 = 0.05;
const DEGENERATE_MIN_ANGLE: f64 = 1e-3;
const MAX_RETRIES: usize = 64;
const CHUNK: usize = 4096;

pub const GEOMETRIC_TOLERANCE: f64 = 1e-9;
pub const ALGEBRAIC_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("n_samples must be at least 1")]
    NoSamples,
    #[error("weight_log_std must be in [0, 5], got {0}")]
    WeightStd(f64),
    #[error("eps_interior must be in [0, 1/3), got {0}")]
    Interior(f64),
    #[error("tolerance_rel must be non-negative, got {0}")]
    Tolerance(f64),
    #[error("equilateral_jitter must be non-negative, got {0}")]
    Jitter(f64),
    #[error("no inequality ids given")]
    NoIds,
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeMode {
    UniformAngles,
    NearDegenerate,
    NearEquilateral,
}

impl ShapeMode {
    pub const ALL: [ShapeMode; 3] = [
        ShapeMode::UniformAngles,
        ShapeMode::NearDegenerate,
        ShapeMode::NearEquilateral,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplerConfig {
    pub seed: u64,
    pub n_samples: usize,
    pub weight_log_std: f64,
    pub shape_mode: ShapeMode,
    pub eps_interior: f64,
    pub tolerance_rel: f64,
    /// Standard deviation of the angle perturbation in `near_equilateral` mode.
    pub equilateral_jitter: f64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            n_samples: 10_000,
            weight_log_std: 0.5,
            shape_mode: ShapeMode::UniformAngles,
            eps_interior: DEFAULT_INTERIOR_MARGIN,
            tolerance_rel: 1e-9,
            equilateral_jitter: 0.05,
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        if !(0.0..=5.0).contains(&self.weight_log_std) {
            return Err(ConfigError::WeightStd(self.weight_log_std));
        }
        if !(0.0..1.0 / 3.0).contains(&self.eps_interior) {
            return Err(ConfigError::Interior(self.eps_interior));
        }
        if !(self.tolerance_rel >= 0.0) {
            return Err(ConfigError::Tolerance(self.tolerance_rel));
        }
        if !(self.equilateral_jitter >= 0.0) {
            return Err(ConfigError::Jitter(self.equilateral_jitter));
        }
        Ok(())
    }
}

/// Uniform point of `{t_i >= floor, sum t_i = total}`.
fn simplex_angles(rng: &mut Xoshiro256, floor: f64, total: f64) -> [f64; 3] {
    let (mut u1, mut u2) = (rng.uniform(), rng.uniform());
    if u1 > u2 {
        std::mem::swap(&mut u1, &mut u2);
    }
    let free = total - 3.0 * floor;
    [
        floor + free * u1,
        floor + free * (u2 - u1),
        floor + free * (1.0 - u2),
    ]
}

fn draw_angles(rng: &mut Xoshiro256, cfg: &SamplerConfig) -> [f64; 3] {
    match cfg.shape_mode {
        ShapeMode::UniformAngles => simplex_angles(rng, UNIFORM_MIN_ANGLE, PI),
        ShapeMode::NearDegenerate => {
            // Smallest angle log-uniform down to the floor, the other two split
            // uniformly, then a random vertex order.
            let lo = DEGENERATE_MIN_ANGLE.ln();
            let hi = (PI / 3.0).ln();
            let small = rng.uniform_in(lo, hi).exp();
            let rest = PI - small - 2.0 * DEGENERATE_MIN_ANGLE;
            let second = DEGENERATE_MIN_ANGLE + rest * rng.uniform();
            let third = PI - small - second;
            let mut angles = [small, second, third];
            let shift = rng.below(3);
            angles.rotate_left(shift);
            if rng.uniform() < 0.5 {
                angles.swap(1, 2);
            }
            angles
        }
        ShapeMode::NearEquilateral => {
            for _ in 0..MAX_RETRIES {
                let a = PI / 3.0 + cfg.equilateral_jitter * rng.normal();
                let b = PI / 3.0 + cfg.equilateral_jitter * rng.normal();
                let c = PI - a - b;
                if a.min(b).min(c) >= UNIFORM_MIN_ANGLE {
                    return [a, b, c];
                }
            }
            [PI / 3.0; 3]
        }
    }
}

/// Random triangle with longest side 1, randomly rotated about the origin.
pub fn sample_triangle(rng: &mut Xoshiro256, cfg: &SamplerConfig) -> Triangle {
    for _ in 0..MAX_RETRIES {
        let angles = draw_angles(rng, cfg);
        let rotation = rng.uniform_in(0.0, 2.0 * PI);
        let Ok(base) = Triangle::from_angles(angles) else {
            continue;
        };
        let (s, c) = rotation.sin_cos();
        let rot = |p: Point2| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y);
        if let Ok(t) = Triangle::new(rot(base.a()), rot(base.b()), rot(base.c())) {
            return t;
        }
    }
    Triangle::unit_equilateral()
}

/// Softmax of three standard normals, shrunk into the interior margin.
pub fn sample_interior_point(rng: &mut Xoshiro256, cfg: &SamplerConfig) -> BarycentricPoint {
    let g = [rng.normal(), rng.normal(), rng.normal()];
    interior_softmax(g, cfg.eps_interior)
}

pub(crate) fn interior_softmax(g: [f64; 3], margin: f64) -> BarycentricPoint {
    let m = g[0].max(g[1]).max(g[2]);
    let e = g.map(|v| (v - m).exp());
    let total = e[0] + e[1] + e[2];
    let scale = 1.0 - 3.0 * margin;
    let la = margin + scale * e[0] / total;
    let lb = margin + scale * e[1] / total;
    let lc = (1.0 - la - lb).max(margin);
    BarycentricPoint::with_margin(la, lb, lc, margin)
        .unwrap_or_else(|_| BarycentricPoint::centroid())
}

pub fn sample_weights(rng: &mut Xoshiro256, cfg: &SamplerConfig) -> WeightVector {
    let s = cfg.weight_log_std;
    let gx = s * rng.normal();
    let gy = s * rng.normal();
    let gu = s * rng.normal();
    let gv = s * rng.normal();
    WeightVector::from_free(gx, gy, gu, gv)
}

/// One sampled configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleConfiguration {
    pub index: u64,
    pub triangle: [Point2; 3],
    pub barycentric: [f64; 3],
    pub weight_logs: [f64; 6],
}

pub fn sample_configuration(
    cfg: &SamplerConfig,
    index: u64,
) -> (Triangle, BarycentricPoint, WeightVector) {
    let mut rng = Xoshiro256::for_stream(cfg.seed, index);
    let tri = sample_triangle(&mut rng, cfg);
    let bary = sample_interior_point(&mut rng, cfg);
    let w = sample_weights(&mut rng, cfg);
    (tri, bary, w)
}

fn describe(
    index: u64,
    tri: &Triangle,
    bary: &BarycentricPoint,
    w: &WeightVector,
) -> SampleConfiguration {
    SampleConfiguration {
        index,
        triangle: tri.vertices(),
        barycentric: bary.coords(),
        weight_logs: w.logs(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub rel_slack: f64,
    pub slack: f64,
    pub configuration: SampleConfiguration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdRecord {
    pub id: InequalityId,
    pub samples: u64,
    pub domain_errors: u64,
    pub min_rel_slack: f64,
    pub min_slack: f64,
    pub argmin: Option<SampleConfiguration>,
    pub violations: u64,
    pub worst_violation: Option<Violation>,
    pub histogram: Vec<u64>,
}

impl IdRecord {
    fn new(id: InequalityId) -> Self {
        Self {
            id,
            samples: 0,
            domain_errors: 0,
            min_rel_slack: f64::INFINITY,
            min_slack: f64::INFINITY,
            argmin: None,
            violations: 0,
            worst_violation: None,
            histogram: vec![0; HISTOGRAM_BINS],
        }
    }
}

/// Histogram bin of a relative slack; non-positive values land in bin 0.
pub fn histogram_bin(rel_slack: f64) -> usize {
    if !(rel_slack > 0.0) {
        return 0;
    }
    let pos = ((rel_slack.log10() - HISTOGRAM_LOG10_MIN) * BINS_PER_DECADE).floor();
    pos.clamp(0.0, (HISTOGRAM_BINS - 1) as f64) as usize
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SamplerConfig,
    pub geometry_errors: u64,
    pub total_violations: u64,
    pub records: Vec<IdRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    pub fn record(&self, id: InequalityId) -> Option<&IdRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

enum SampleOutcome {
    Geometry,
    Evaluated {
        configuration: SampleConfiguration,
        // (slack, rel_slack) or None for a domain error, in id order.
        values: Vec<Option<(f64, f64)>>,
    },
}

fn run_sample(cfg: &SamplerConfig, ids: &[InequalityId], index: u64) -> SampleOutcome {
    let (tri, bary, w) = sample_configuration(cfg, index);
    let q = match quantities(&tri, &bary) {
        Ok(q) => q,
        Err(_) => return SampleOutcome::Geometry,
    };
    let sides = tri.side_lengths();
    let values = ids
        .iter()
        .map(|&id| {
            evaluate(id, &q, &w, sides)
                .ok()
                .map(|r| (r.slack, r.rel_slack))
        })
        .collect();
    SampleOutcome::Evaluated {
        configuration: describe(index, &tri, &bary, &w),
        values,
    }
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, ConfigError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ConfigError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Runs the suite on the global worker pool.
pub fn run_suite(cfg: &SamplerConfig, ids: &[InequalityId]) -> Result<SuiteReport, ConfigError> {
    run_suite_with_threads(cfg, ids, 0)
}

/// `threads = 0` uses one worker per core.
pub fn run_suite_with_threads(
    cfg: &SamplerConfig,
    ids: &[InequalityId],
    threads: usize,
) -> Result<SuiteReport, ConfigError> {
    cfg.validate()?;
    if ids.is_empty() {
        return Err(ConfigError::NoIds);
    }
    let mut records: Vec<IdRecord> = ids.iter().map(|&id| IdRecord::new(id)).collect();
    let mut geometry_errors = 0;
    let n = cfg.n_samples as u64;

    with_pool(threads, || {
        let mut start = 0u64;
        while start < n {
            let end = (start + CHUNK as u64).min(n);
            let outcomes: Vec<SampleOutcome> = (start..end)
                .into_par_iter()
                .map(|i| run_sample(cfg, ids, i))
                .collect();
            for outcome in outcomes {
                match outcome {
                    SampleOutcome::Geometry => {
                        geometry_errors += 1;
                        for r in records.iter_mut() {
                            r.domain_errors += 1;
                        }
                    }
                    SampleOutcome::Evaluated {
                        configuration,
                        values,
                    } => {
                        for (r, v) in records.iter_mut().zip(values) {
                            let Some((slack, rel)) = v else {
                                r.domain_errors += 1;
                                continue;
                            };
                            r.samples += 1;
                            r.histogram[histogram_bin(rel)] += 1;
                            if rel < r.min_rel_slack {
                                r.min_rel_slack = rel;
                                r.min_slack = slack;
                                r.argmin = Some(configuration);
                            }
                            if rel < -cfg.tolerance_rel {
                                r.violations += 1;
                                let worse = r.worst_violation.is_none_or(|wv| rel < wv.rel_slack);
                                if worse {
                                    r.worst_violation = Some(Violation {
                                        rel_slack: rel,
                                        slack,
                                        configuration,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            start = end;
        }
    })?;

    let total_violations = records.iter().map(|r| r.violations).sum();
    Ok(SuiteReport {
        config: *cfg,
        geometry_errors,
        total_violations,
        records,
    })
}

/// Random acute triangle (all angles below `pi/2 - 0.05`).
pub fn sample_acute_triangle(rng: &mut Xoshiro256) -> Triangle {
    let cfg = SamplerConfig::default();
    for _ in 0..MAX_RETRIES {
        let t = sample_triangle(rng, &cfg);
        if t.angles().iter().all(|&a| a < PI / 2.0 - 0.05) {
            return t;
        }
    }
    Triangle::unit_equilateral()
}

/// Point at fraction `t` of the way from vertex `vertex` (0 = A) to the
/// circumcenter.
pub fn point_on_circumcenter_segment(tri: &Triangle, vertex: usize, t: f64) -> Point2 {
    let v = tri.vertices()[vertex];
    v.add(tri.circumcircle().center.sub(v).scale(t))
}

/// Extremes of `rel_slack` for a lemma on its equality locus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocusReport {
    pub id: InequalityId,
    pub samples: u64,
    pub max_abs_rel_slack: f64,
    pub min_rel_slack: f64,
}

/// Evaluates the vertex lemma for `vertex` at points on the segment from that
/// vertex to the circumcenter of random acute triangles.
pub fn lemma_locus_check(seed: u64, n: usize, vertex: usize) -> Result<LocusReport, GeomError> {
    let id = [
        InequalityId::LemmaA,
        InequalityId::LemmaB,
        InequalityId::LemmaC,
    ][vertex];
    let mut max_abs: f64 = 0.0;
    let mut min_rel = f64::INFINITY;
    for i in 0..n as u64 {
        let mut rng = Xoshiro256::for_stream(seed, i);
        let tri = sample_acute_triangle(&mut rng);
        let t = rng.uniform_in(0.01, 1.0);
        let p = point_on_circumcenter_segment(&tri, vertex, t);
        let bary = BarycentricPoint::from_point(&tri, p, 0.0)?;
        let q = quantities(&tri, &bary)?;
        let r = evaluate(id, &q, &WeightVector::unit(), tri.side_lengths())
            .map_err(|_| GeomError::NonFinite)?;
        max_abs = max_abs.max(r.rel_slack.abs());
        min_rel = min_rel.min(r.rel_slack);
    }
    Ok(LocusReport {
        id,
        samples: n as u64,
        max_abs_rel_slack: max_abs,
        min_rel_slack: min_rel,
    })
}

/// Largest disagreement seen for each dual-path or algebraic identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityReport {
    pub samples: u64,
    pub geometry_errors: u64,
    /// Geometric tangent distances vs. the side/pedal arithmetic.
    pub tangent_identity_max_rel: f64,
    /// Closed-form bisector vs. ray intersection.
    pub bisector_dual_path_max_rel: f64,
    /// Polynomial identity, difference over its largest term.
    pub chain_polynomial_max_rel: f64,
    /// Wolstenholme slack vs. its sum of squares, over `xw^2+yw^2+zw^2`.
    pub wolstenholme_decomposition_max_rel: f64,
    /// Wolstenholme applied with `xw = sqrt(x PA)` and half apex angles.
    pub wolstenholme_geometric_min_rel_slack: f64,
    /// Worst error against the tabulated right-triangle and equilateral values.
    pub fixture_max_error: f64,
    pub passed: bool,
}

fn fixture_error() -> f64 {
    let right = Triangle::new(
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(0.0, 3.0),
    )
    .expect("fixture");
    let p = Point2::new(1.0, 1.0);
    let mut err: f64 = 0.0;
    if let Ok((ra, rb, rc)) = tangent_distances(&right, p) {
        err = err
            .max((ra - 1.4).abs())
            .max((rb - 3.0).abs())
            .max((rc - 2.0).abs());
    } else {
        return f64::INFINITY;
    }
    let (ia, ib, ic) = tangent_distance_identity(5.0, 3.0, 4.0, 1.0, 1.0, 1.0);
    err = err
        .max((ia - 1.4).abs())
        .max((ib - 3.0).abs())
        .max((ic - 2.0).abs());

    let eq = Triangle::unit_equilateral();
    let center = BarycentricPoint::centroid().to_cartesian(&eq);
    match tangent_distances(&eq, center) {
        Ok((ra, rb, rc)) => {
            let r = 1.0 / 3f64.sqrt();
            err.max((ra - r).abs())
                .max((rb - r).abs())
                .max((rc - r).abs())
        }
        Err(_) => f64::INFINITY,
    }
}

pub fn check_identities(cfg: &SamplerConfig) -> Result<IdentityReport, ConfigError> {
    check_identities_with_threads(cfg, 0)
}

pub fn check_identities_with_threads(
    cfg: &SamplerConfig,
    threads: usize,
) -> Result<IdentityReport, ConfigError> {
    cfg.validate()?;

    #[derive(Clone, Copy)]
    struct Acc {
        geometry_errors: u64,
        tangent: f64,
        bisector: f64,
        chain_polynomial: f64,
        wolst: f64,
        wolst_geo: f64,
    }
    let merge = |a: Acc, b: Acc| Acc {
        geometry_errors: a.geometry_errors + b.geometry_errors,
        tangent: a.tangent.max(b.tangent),
        bisector: a.bisector.max(b.bisector),
        chain_polynomial: a.chain_polynomial.max(b.chain_polynomial),
        wolst: a.wolst.max(b.wolst),
        wolst_geo: a.wolst_geo.min(b.wolst_geo),
    };
    let empty = Acc {
        geometry_errors: 0,
        tangent: 0.0,
        bisector: 0.0,
        chain_polynomial: 0.0,
        wolst: 0.0,
        wolst_geo: f64::INFINITY,
    };

    let one = |i: u64| -> Acc {
        let mut acc = empty;
        let (tri, bary, w) = sample_configuration(cfg, i);
        let p = bary.to_cartesian(&tri);
        match (dual_path_check(&tri, p), quantities(&tri, &bary)) {
            (Ok(check), Ok(q)) => {
                acc.tangent = check.tangent;
                acc.bisector = check.bisector;
                let [x, y, z] = w.xyz();
                if let Ok(s) = wolstenholme_slack(
                    (x * q.pa).sqrt(),
                    (y * q.pb).sqrt(),
                    (z * q.pc).sqrt(),
                    0.5 * q.alpha,
                    0.5 * q.beta,
                    0.5 * q.gamma,
                ) {
                    acc.wolst_geo = s.slack / s.scale;
                }
            }
            _ => acc.geometry_errors = 1,
        }

        // Algebraic identities on their own stream.
        let mut rng = Xoshiro256::for_stream(cfg.seed ^ 0xA5A5_A5A5_A5A5_A5A5, i);
        let p = 10.0 * rng.uniform_open0();
        let q = 10.0 * rng.uniform_open0();
        let r = 10.0 * rng.uniform_open0();
        let (lhs, rhs) = chain_polynomial_identity(p, q, r);
        acc.chain_polynomial = (lhs - rhs).abs() / chain_polynomial_scale(p, q, r);

        let xw = 10.0 * rng.uniform_open0();
        let yw = 10.0 * rng.uniform_open0();
        let zw = 10.0 * rng.uniform_open0();
        let [a, b, _] = simplex_angles(&mut rng, 0.0, PI);
        let c = PI - a - b;
        if a > 0.0 && b > 0.0 && c > 0.0 {
            if let Ok(s) = wolstenholme_slack(xw, yw, zw, a, b, c) {
                acc.wolst = s.rel_disagreement();
            }
        }
        acc
    };

    let n = cfg.n_samples as u64;
    let acc = with_pool(threads, || {
        (0..n).into_par_iter().map(one).reduce(|| empty, merge)
    })?;
    let fixture = fixture_error();
    let passed = acc.geometry_errors == 0
        && acc.tangent <= GEOMETRIC_TOLERANCE
        && acc.bisector <= GEOMETRIC_TOLERANCE
        && acc.chain_polynomial <= ALGEBRAIC_TOLERANCE
        && acc.wolst <= ALGEBRAIC_TOLERANCE
        && acc.wolst_geo >= -cfg.tolerance_rel
        && fixture <= ALGEBRAIC_TOLERANCE;
    Ok(IdentityReport {
        samples: n,
        geometry_errors: acc.geometry_errors,
        tangent_identity_max_rel: acc.tangent,
        bisector_dual_path_max_rel: acc.bisector,
        chain_polynomial_max_rel: acc.chain_polynomial,
        wolstenholme_decomposition_max_rel: acc.wolst,
        wolstenholme_geometric_min_rel_slack: acc.wolst_geo,
        fixture_max_error: fixture,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mode: ShapeMode) -> SamplerConfig {
        SamplerConfig {
            shape_mode: mode,
            ..SamplerConfig::default()
        }
    }

    #[test]
    fn config_validation() {
        assert!(SamplerConfig::default().validate().is_ok());
        let bad = SamplerConfig {
            n_samples: 0,
            ..SamplerConfig::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::NoSamples));
        let bad = SamplerConfig {
            weight_log_std: 5.5,
            ..SamplerConfig::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::WeightStd(5.5)));
        assert_eq!(
            run_suite(&SamplerConfig::default(), &[]).unwrap_err(),
            ConfigError::NoIds
        );
    }

    #[test]
    fn triangles_are_deterministic() {
        let c = cfg(ShapeMode::UniformAngles);
        let t1 = sample_triangle(&mut Xoshiro256::seed_from_u64(42), &c);
        let t2 = sample_triangle(&mut Xoshiro256::seed_from_u64(42), &c);
        assert_eq!(t1, t2);
    }

    #[test]
    fn uniform_triangles_respect_floor_and_scale() {
        let c = cfg(ShapeMode::UniformAngles);
        let mut rng = Xoshiro256::seed_from_u64(5);
        for _ in 0..10_000 {
            let t = sample_triangle(&mut rng, &c);
            assert!((t.max_side() - 1.0).abs() < 1e-12);
            assert!(t.area() > 0.0);
            let min = t.angles().iter().cloned().fold(f64::INFINITY, f64::min);
            assert!(min >= UNIFORM_MIN_ANGLE - 1e-9, "{min}");
        }
    }

    #[test]
    fn near_degenerate_reaches_small_angles() {
        let c = cfg(ShapeMode::NearDegenerate);
        let mut rng = Xoshiro256::seed_from_u64(11);
        let mut smallest = f64::INFINITY;
        for _ in 0..2_000 {
            let t = sample_triangle(&mut rng, &c);
            let min = t.angles().iter().cloned().fold(f64::INFINITY, f64::min);
            assert!(min >= DEGENERATE_MIN_ANGLE - 1e-9);
            smallest = smallest.min(min);
        }
        assert!(smallest < 5e-3);
    }

    #[test]
    fn near_equilateral_limit() {
        let c = SamplerConfig {
            shape_mode: ShapeMode::NearEquilateral,
            equilateral_jitter: 1e-9,
            ..SamplerConfig::default()
        };
        let t = sample_triangle(&mut Xoshiro256::seed_from_u64(1), &c);
        for a in t.angles() {
            assert!((a - PI / 3.0).abs() < 1e-7);
        }
    }

    #[test]
    fn interior_points_mean_and_margin() {
        let c = SamplerConfig::default();
        let mut rng = Xoshiro256::seed_from_u64(2);
        let n = 100_000;
        let mut mean = [0.0; 3];
        for _ in 0..n {
            let b = sample_interior_point(&mut rng, &c).coords();
            for k in 0..3 {
                assert!(b[k] >= c.eps_interior);
                mean[k] += b[k] / n as f64;
            }
        }
        for m in mean {
            assert!((m - 1.0 / 3.0).abs() < 0.01, "{m}");
        }
    }

    #[test]
    fn weights_with_zero_std_are_unit() {
        let c = SamplerConfig {
            weight_log_std: 0.0,
            ..SamplerConfig::default()
        };
        let w = sample_weights(&mut Xoshiro256::seed_from_u64(3), &c);
        assert_eq!(w.xyz(), [1.0; 3]);
        assert_eq!(w.uvw(), [1.0; 3]);
        let w = sample_weights(&mut Xoshiro256::seed_from_u64(3), &SamplerConfig::default());
        let l = w.logs();
        assert_eq!(l[0] + l[1] + l[2], 0.0);
        assert_eq!(l[3] + l[4] + l[5], 0.0);
    }

    #[test]
    fn histogram_bins() {
        assert_eq!(histogram_bin(-1.0), 0);
        assert_eq!(histogram_bin(0.0), 0);
        assert_eq!(histogram_bin(1e-20), 0);
        assert_eq!(histogram_bin(1e-16 * 1.01), 0);
        assert_eq!(histogram_bin(0.5), 62);
        assert_eq!(histogram_bin(1.5), 63);
    }

    #[test]
    fn small_suite_report_invariants() {
        let c = SamplerConfig {
            n_samples: 500,
            ..SamplerConfig::default()
        };
        let report = run_suite(&c, InequalityId::ALL).unwrap();
        assert!(report.passed());
        for r in &report.records {
            assert_eq!(r.histogram.iter().sum::<u64>(), r.samples);
            assert_eq!(r.samples + r.domain_errors, 500);
            assert!(r.min_rel_slack >= -1e-9);
        }
    }

    #[test]
    fn lemma_locus_is_tight() {
        for vertex in 0..3 {
            let r = lemma_locus_check(4, 200, vertex).unwrap();
            assert!(r.max_abs_rel_slack <= 1e-9, "{r:?}");
        }
    }
}
