//! Multistart simplex search for the minimal slack of a catalog entry.
//!
//! The search runs in an unconstrained 8-dimensional parameter space that
//! [`decode`]s to a valid configuration:
//!
//! | index | meaning                                          |
//! |-------|--------------------------------------------------|
//! | 0, 1  | triangle shape (softmax over angles, with floor) |
//! | 2, 3  | barycentric logits of `P`                        |
//! | 4, 5  | `log x`, `log y` (`log z` is their negated sum)  |
//! | 6, 7  | `log u`, `log v` (`log w` is their negated sum)  |
//!
//! `theta = 0` decodes to the equilateral triangle (longest side 1), its
//! center, and unit weights.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{
    equality_configuration, evaluate, evaluate_at_equality, CatalogError, InequalityId, WeightUse,
    WeightVector,
};
use crate::geom::{
    quantities, BarycentricPoint, GeomError, Point2, Triangle, DEFAULT_INTERIOR_MARGIN,
};
use crate::rng::Xoshiro256;
use crate::verify::{interior_softmax, point_on_circumcenter_segment, sample_acute_triangle};

pub const DIM: usize = 8;
pub const DEFAULT_MIN_ANGLE: f64 = 0.02;
pub const SPREAD_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TightenError {
    #[error("non-finite search point")]
    NonFinite,
    #[error("every start produced a non-finite slack for {0}")]
    AllStartsDiverged(InequalityId),
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

pub type SearchPoint = [f64; DIM];

/// Maps search points to configurations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Decoder {
    pub min_angle: f64,
    pub interior_margin: f64,
}

impl Default for Decoder {
    fn default() -> Self {
        Self {
            min_angle: DEFAULT_MIN_ANGLE,
            interior_margin: DEFAULT_INTERIOR_MARGIN,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decoded {
    pub triangle: Triangle,
    pub point: BarycentricPoint,
    pub weights: WeightVector,
    pub angles: [f64; 3],
}

fn softmax3(a: f64, b: f64) -> [f64; 3] {
    let m = a.max(b).max(0.0);
    let e = [(a - m).exp(), (b - m).exp(), (-m).exp()];
    let total = e[0] + e[1] + e[2];
    e.map(|v| v / total)
}

impl Decoder {
    pub fn decode(&self, theta: &SearchPoint) -> Result<Decoded, TightenError> {
        if theta.iter().any(|v| !v.is_finite()) {
            return Err(TightenError::NonFinite);
        }
        let free = PI - 3.0 * self.min_angle;
        let s = softmax3(theta[0], theta[1]);
        let angles = [
            self.min_angle + free * s[0],
            self.min_angle + free * s[1],
            PI - 2.0 * self.min_angle - free * (s[0] + s[1]),
        ];
        let triangle = Triangle::from_angles(angles)?;
        let point = interior_softmax([theta[2], theta[3], 0.0], self.interior_margin);
        let weights = WeightVector::from_free(theta[4], theta[5], theta[6], theta[7]);
        Ok(Decoded {
            triangle,
            point,
            weights,
            angles,
        })
    }
}

pub fn decode(theta: &SearchPoint) -> Result<Decoded, TightenError> {
    Decoder::default().decode(theta)
}

/// Weight freedoms explored when minimizing `id`. The `_U1`/`_X1`
/// specializations are searched with frozen unit weights.
pub fn search_weight_use(id: InequalityId) -> WeightUse {
    use InequalityId::*;
    match id {
        WemU1 | WemX1 | WdnpU1 | WdnpX1 | WbarrowU1 | WbarrowX1 => WeightUse::None,
        other => other.weight_use(),
    }
}

/// Indices of `theta` that move during a search for `id`.
pub fn active_coordinates(id: InequalityId) -> Vec<usize> {
    let mut idx = vec![0, 1, 2, 3];
    match search_weight_use(id) {
        WeightUse::None => {}
        WeightUse::Xyz => idx.extend([4, 5]),
        WeightUse::Uvw => idx.extend([6, 7]),
        WeightUse::All => idx.extend([4, 5, 6, 7]),
    }
    idx
}

/// Angle, barycentric, and log-weight deviation from the canonical
/// configuration, as one Euclidean norm.
pub fn distance_to_canonical(d: &Decoded) -> f64 {
    let angle: f64 = d.angles.iter().map(|a| (a - PI / 3.0).powi(2)).sum();
    let bary: f64 = d
        .point
        .coords()
        .iter()
        .map(|l| (l - 1.0 / 3.0).powi(2))
        .sum();
    let w = d.weights.log_norm();
    (angle + bary + w * w).sqrt()
}

/// Slack of `id` at a decoded point; `+inf` when undefined.
pub fn slack_at(decoder: &Decoder, id: InequalityId, theta: &SearchPoint) -> f64 {
    let Ok(d) = decoder.decode(theta) else {
        return f64::INFINITY;
    };
    let Ok(q) = quantities(&d.triangle, &d.point) else {
        return f64::INFINITY;
    };
    match evaluate(id, &q, &d.weights, d.triangle.side_lengths()) {
        Ok(r) if r.slack.is_finite() => r.slack,
        _ => f64::INFINITY,
    }
}

/// Nelder–Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    pub max_iter: usize,
    pub spread_tolerance: f64,
    pub initial_step: f64,
}

#[derive(Debug, Clone)]
pub struct NelderMeadResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best simplex value after each iteration.
    pub history: Vec<f64>,
}

impl NelderMead {
    const REFLECT: f64 = 1.0;
    const EXPAND: f64 = 2.0;
    const CONTRACT: f64 = 0.5;
    const SHRINK: f64 = 0.5;

    pub fn minimize(&self, f: impl Fn(&[f64]) -> f64, x0: &[f64]) -> NelderMeadResult {
        let n = x0.len();
        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        simplex.push(x0.to_vec());
        for i in 0..n {
            let mut v = x0.to_vec();
            v[i] += self.initial_step;
            simplex.push(v);
        }
        let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();
        let mut history = Vec::new();
        let mut converged = false;
        let mut iterations = 0;

        let combine = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
            a.iter().zip(b).map(|(&p, &q)| p + t * (q - p)).collect()
        };

        while iterations < self.max_iter {
            // Sort ascending; stable so equal values keep their order.
            let mut order: Vec<usize> = (0..=n).collect();
            order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
            simplex = order.iter().map(|&i| simplex[i].clone()).collect();
            values = order.iter().map(|&i| values[i]).collect();

            if values[n] - values[0] < self.spread_tolerance {
                converged = true;
                break;
            }
            iterations += 1;

            let mut centroid = vec![0.0; n];
            for v in &simplex[..n] {
                for (c, x) in centroid.iter_mut().zip(v) {
                    *c += x / n as f64;
                }
            }
            let worst = simplex[n].clone();
            // centroid + REFLECT * (centroid - worst)
            let xr = combine(&centroid, &worst, -Self::REFLECT);
            let fr = f(&xr);
            if fr < values[0] {
                let xe = combine(&centroid, &worst, -Self::EXPAND);
                let fe = f(&xe);
                if fe < fr {
                    simplex[n] = xe;
                    values[n] = fe;
                } else {
                    simplex[n] = xr;
                    values[n] = fr;
                }
            } else if fr < values[n - 1] {
                simplex[n] = xr;
                values[n] = fr;
            } else {
                let (xc, fc) = if fr < values[n] {
                    let xc = combine(&centroid, &xr, Self::CONTRACT);
                    let fc = f(&xc);
                    (xc, fc)
                } else {
                    let xc = combine(&centroid, &worst, Self::CONTRACT);
                    let fc = f(&xc);
                    (xc, fc)
                };
                if fc < fr.min(values[n]) {
                    simplex[n] = xc;
                    values[n] = fc;
                } else {
                    let best = simplex[0].clone();
                    for i in 1..=n {
                        simplex[i] = combine(&best, &simplex[i], Self::SHRINK);
                        values[i] = f(&simplex[i]);
                    }
                }
            }
            history.push(values.iter().cloned().fold(f64::INFINITY, f64::min));
        }

        let best = (0..=n)
            .min_by(|&i, &j| values[i].total_cmp(&values[j]))
            .unwrap_or(0);
        NelderMeadResult {
            x: simplex[best].clone(),
            fx: values[best],
            iterations,
            converged,
            history,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecodedConfiguration {
    pub theta: SearchPoint,
    pub triangle: [Point2; 3],
    pub angles: [f64; 3],
    pub barycentric: [f64; 3],
    pub weight_logs: [f64; 6],
}

impl DecodedConfiguration {
    fn new(theta: SearchPoint, d: &Decoded) -> Self {
        Self {
            theta,
            triangle: d.triangle.vertices(),
            angles: d.angles,
            barycentric: d.point.coords(),
            weight_logs: d.weights.logs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessResult {
    pub id: InequalityId,
    pub min_slack: f64,
    pub min_rel_slack: f64,
    pub argmin: DecodedConfiguration,
    pub best_start: usize,
    pub starts: usize,
    pub converged_starts: usize,
    pub distance_to_canonical: f64,
    /// `max(|PA - PB|, |PB - PC|)` at the argmin.
    pub vertex_distance_spread: f64,
    pub min_angle_floor: f64,
    /// Best result among the random starts alone (canonical start excluded).
    pub random_starts: Option<RandomStartSummary>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomStartSummary {
    pub best_start: usize,
    pub min_slack: f64,
    pub distance_to_canonical: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchOptions {
    pub n_starts: usize,
    pub max_iter: usize,
    pub seed: u64,
    pub initial_step: f64,
    pub decoder: Decoder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            n_starts: 16,
            max_iter: 2000,
            seed: 7,
            initial_step: 0.25,
            decoder: Decoder::default(),
        }
    }
}

fn random_start(seed: u64, start: usize, active: &[usize]) -> SearchPoint {
    let mut theta = [0.0; DIM];
    if start == 0 {
        return theta;
    }
    let mut rng = Xoshiro256::for_stream(seed, start as u64);
    for &i in active {
        let sd = if i < 4 { 1.0 } else { 0.5 };
        theta[i] = sd * rng.normal();
    }
    theta
}

pub fn minimize_slack(
    id: InequalityId,
    n_starts: usize,
    max_iter: usize,
    seed: u64,
) -> Result<TightnessResult, TightenError> {
    minimize_slack_with(
        id,
        &SearchOptions {
            n_starts,
            max_iter,
            seed,
            ..SearchOptions::default()
        },
    )
}

/// Runs the canonical start (index 0) plus `n_starts` random starts and keeps
/// the smallest slack, lowest start index on ties.
pub fn minimize_slack_with(
    id: InequalityId,
    opts: &SearchOptions,
) -> Result<TightnessResult, TightenError> {
    let active = active_coordinates(id);
    let decoder = opts.decoder;
    let nm = NelderMead {
        max_iter: opts.max_iter,
        spread_tolerance: SPREAD_TOLERANCE,
        initial_step: opts.initial_step,
    };

    let runs: Vec<(SearchPoint, NelderMeadResult)> = (0..=opts.n_starts)
        .into_par_iter()
        .map(|start| {
            let base = random_start(opts.seed, start, &active);
            let x0: Vec<f64> = active.iter().map(|&i| base[i]).collect();
            let embed = |x: &[f64]| {
                let mut theta = [0.0; DIM];
                for (&i, &v) in active.iter().zip(x) {
                    theta[i] = v;
                }
                theta
            };
            let result = nm.minimize(|x| slack_at(&decoder, id, &embed(x)), &x0);
            (embed(&result.x), result)
        })
        .collect();

    let converged_starts = runs.iter().filter(|(_, r)| r.converged).count();
    let mut best: Option<(usize, SearchPoint, f64)> = None;
    for (k, (theta, r)) in runs.iter().enumerate() {
        if !r.fx.is_finite() {
            continue;
        }
        if best.is_none_or(|(_, _, fx)| r.fx < fx) {
            best = Some((k, *theta, r.fx));
        }
    }
    let (best_start, theta, _) = best.ok_or(TightenError::AllStartsDiverged(id))?;

    let random_starts = runs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, (_, r))| r.fx.is_finite())
        .min_by(|a, b| a.1 .1.fx.total_cmp(&b.1 .1.fx))
        .and_then(|(k, (theta, r))| {
            let d = decoder.decode(theta).ok()?;
            Some(RandomStartSummary {
                best_start: k,
                min_slack: r.fx,
                distance_to_canonical: distance_to_canonical(&d),
            })
        });

    let d = decoder.decode(&theta)?;
    let q = quantities(&d.triangle, &d.point)?;
    let eval = evaluate(id, &q, &d.weights, d.triangle.side_lengths())?;
    Ok(TightnessResult {
        id,
        min_slack: eval.slack,
        min_rel_slack: eval.rel_slack,
        argmin: DecodedConfiguration::new(theta, &d),
        best_start,
        starts: runs.len(),
        converged_starts,
        distance_to_canonical: distance_to_canonical(&d),
        vertex_distance_spread: (q.pa - q.pb).abs().max((q.pb - q.pc).abs()),
        min_angle_floor: decoder.min_angle,
        random_starts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocusKind {
    /// Equilateral triangle, center, unit weights; probed by perturbation.
    Isolated,
    /// Segment from a vertex to the circumcenter; probed along the segment.
    VertexCircumcenterSegment,
    /// Circumcenter of an acute triangle; probed over random acute triangles.
    Circumcenter,
}

pub fn locus_kind(id: InequalityId) -> LocusKind {
    match id {
        InequalityId::LemmaA | InequalityId::LemmaB | InequalityId::LemmaC => {
            LocusKind::VertexCircumcenterSegment
        }
        InequalityId::BarrowChainA => LocusKind::Circumcenter,
        _ => LocusKind::Isolated,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityReport {
    pub id: InequalityId,
    pub locus: LocusKind,
    pub canonical_slack: f64,
    pub radius: f64,
    pub probes: usize,
    pub min_probe_slack: f64,
    pub max_probe_slack: f64,
    /// Probes that contradict the locus: non-positive slack off an isolated
    /// point, or slack above [`ON_LOCUS_TOLERANCE`] on a non-isolated locus.
    pub failures: usize,
    pub note: Option<&'static str>,
    pub passed: bool,
}

pub const CANONICAL_TOLERANCE: f64 = 1e-12;
pub const ON_LOCUS_TOLERANCE: f64 = 1e-9;

/// Slack at the canonical configuration plus `n_probes` probes around or
/// along the equality locus. Supports, never proves, the "only if" direction.
pub fn verify_equality_locus(
    id: InequalityId,
    radius: f64,
    n_probes: usize,
    seed: u64,
) -> Result<EqualityReport, TightenError> {
    let eq = equality_configuration(id);
    let canonical_slack = evaluate_at_equality(id)?.slack;
    let kind = locus_kind(id);
    let decoder = Decoder::default();
    let active = active_coordinates(id);

    let mut slacks = Vec::with_capacity(n_probes);
    for k in 0..n_probes {
        let mut rng = Xoshiro256::for_stream(seed, k as u64);
        let slack = match kind {
            LocusKind::Isolated => {
                let mut dir = [0.0; DIM];
                for &i in &active {
                    dir[i] = rng.normal();
                }
                let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
                let theta = dir.map(|v| radius * v / norm);
                slack_at(&decoder, id, &theta)
            }
            LocusKind::VertexCircumcenterSegment => {
                let vertex = match id {
                    InequalityId::LemmaA => 0,
                    InequalityId::LemmaB => 1,
                    _ => 2,
                };
                let t = rng.uniform_in(0.01, 1.0);
                let p = point_on_circumcenter_segment(&eq.triangle, vertex, t);
                let bary = BarycentricPoint::from_point(&eq.triangle, p, 0.0)?;
                let q = quantities(&eq.triangle, &bary)?;
                evaluate(id, &q, &eq.weights, eq.triangle.side_lengths())?.slack
            }
            LocusKind::Circumcenter => {
                let tri = sample_acute_triangle(&mut rng);
                let bary = BarycentricPoint::from_point(&tri, tri.circumcircle().center, 0.0)?;
                let q = quantities(&tri, &bary)?;
                evaluate(id, &q, &eq.weights, tri.side_lengths())?.slack
            }
        };
        slacks.push(slack);
    }

    let failures = slacks
        .iter()
        .filter(|&&s| match kind {
            LocusKind::Isolated => !(s > 0.0),
            _ => !(s.abs() <= ON_LOCUS_TOLERANCE),
        })
        .count();
    let min_probe_slack = slacks.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_probe_slack = slacks.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(EqualityReport {
        id,
        locus: kind,
        canonical_slack,
        radius,
        probes: n_probes,
        min_probe_slack,
        max_probe_slack,
        failures,
        note: eq.note,
        passed: canonical_slack.abs() <= CANONICAL_TOLERANCE && failures == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_decodes_to_canonical() {
        let d = decode(&[0.0; DIM]).unwrap();
        for a in d.angles {
            assert!((a - PI / 3.0).abs() < 1e-15);
        }
        assert!((d.triangle.max_side() - 1.0).abs() < 1e-15);
        for l in d.point.coords() {
            assert!((l - 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(d.weights, WeightVector::unit());
        assert!(distance_to_canonical(&d) < 1e-15);
    }

    #[test]
    fn non_finite_theta_rejected() {
        let mut theta = [0.0; DIM];
        theta[3] = f64::NAN;
        assert_eq!(decode(&theta).unwrap_err(), TightenError::NonFinite);
    }

    #[test]
    fn decode_is_valid_for_wild_inputs() {
        let mut rng = Xoshiro256::seed_from_u64(13);
        for _ in 0..2000 {
            let theta: SearchPoint = std::array::from_fn(|_| 20.0 * rng.normal());
            let d = decode(&theta).unwrap();
            assert!((d.triangle.max_side() - 1.0).abs() < 1e-12);
            assert!(d.angles.iter().all(|&a| a >= DEFAULT_MIN_ANGLE - 1e-12));
            assert!(quantities(&d.triangle, &d.point).is_ok());
        }
    }

    #[test]
    fn decode_is_continuous() {
        let mut rng = Xoshiro256::seed_from_u64(17);
        for _ in 0..200 {
            let theta: SearchPoint = std::array::from_fn(|_| rng.normal());
            let mut nudged = theta;
            nudged[rng.below(DIM)] += 1e-7;
            let (a, b) = (decode(&theta).unwrap(), decode(&nudged).unwrap());
            for (x, y) in a.triangle.vertices().iter().zip(b.triangle.vertices()) {
                assert!(x.dist(y) < 1e-5);
            }
            for (x, y) in a.point.coords().iter().zip(b.point.coords()) {
                assert!((x - y).abs() < 1e-5);
            }
            for (x, y) in a.weights.logs().iter().zip(b.weights.logs()) {
                assert!((x - y).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn weight_blind_ids_freeze_weights() {
        assert_eq!(active_coordinates(InequalityId::Em), vec![0, 1, 2, 3]);
        assert_eq!(active_coordinates(InequalityId::WemX1), vec![0, 1, 2, 3]);
        assert_eq!(active_coordinates(InequalityId::Wem).len(), 8);
        assert_eq!(
            active_coordinates(InequalityId::ProdEm),
            vec![0, 1, 2, 3, 6, 7]
        );
    }

    #[test]
    fn nelder_mead_rosenbrock_and_monotone_history() {
        let nm = NelderMead {
            max_iter: 5000,
            spread_tolerance: 1e-14,
            initial_step: 0.5,
        };
        let rosen = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let r = nm.minimize(rosen, &[-1.2, 1.0]);
        assert!(r.converged);
        assert!(
            (r.x[0] - 1.0).abs() < 1e-4 && (r.x[1] - 1.0).abs() < 1e-4,
            "{:?}",
            r.x
        );
        assert!(r.history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn slack_is_scale_free() {
        let mut rng = Xoshiro256::seed_from_u64(23);
        for _ in 0..100 {
            let theta: SearchPoint = std::array::from_fn(|_| rng.normal());
            let d = decode(&theta).unwrap();
            let big = d.triangle.scaled(2.0).unwrap();
            let q1 = quantities(&d.triangle, &d.point).unwrap();
            let q2 = quantities(&big, &d.point).unwrap();
            for &id in InequalityId::ALL {
                let r1 = evaluate(id, &q1, &d.weights, d.triangle.side_lengths()).unwrap();
                let r2 = evaluate(id, &q2, &d.weights, big.side_lengths()).unwrap();
                assert!((r1.rel_slack - r2.rel_slack).abs() <= 1e-12, "{id}");
            }
        }
    }

    #[test]
    fn canonical_start_stays_put() {
        let r = minimize_slack(InequalityId::Em, 0, 2000, 1).unwrap();
        assert_eq!(r.starts, 1);
        assert!(r.min_slack.abs() <= 1e-12);
        assert!(r.distance_to_canonical <= 1e-3);
    }

    #[test]
    fn lemma_locus_probes() {
        let r = verify_equality_locus(InequalityId::LemmaA, 1e-2, 100, 3).unwrap();
        assert_eq!(r.locus, LocusKind::VertexCircumcenterSegment);
        assert!(r.passed, "{r:?}");
    }
}
