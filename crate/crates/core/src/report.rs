//! Report envelope and byte-stable JSON / CSV writers.
//!
//! JSON floats are printed with 17 significant digits in exponent form
//! (`1.4142135623730951e0`); non-finite values become `null`. Field order
//! follows struct declaration order.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::catalog::{CatalogEntry, InequalityId};
use crate::tighten::{EqualityReport, TightnessResult};
use crate::verify::{IdentityReport, SampleConfiguration, SamplerConfig, SuiteReport};

pub const SCHEMA_VERSION: u32 = 1;

/// Fully resolved run configuration echoed into every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedConfig {
    pub command: String,
    pub ids: Vec<InequalityId>,
    pub sampler: SamplerConfig,
    pub shape_modes: Vec<crate::verify::ShapeMode>,
    pub starts: usize,
    pub iters: usize,
    pub probes: usize,
    pub radius: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: ResolvedConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tightness: Option<Vec<TightnessResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<Vec<EqualityReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<Vec<CatalogEntry>>,
    pub passed: bool,
}

impl Report {
    pub fn new(config: ResolvedConfig) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            config,
            suites: None,
            identities: None,
            tightness: None,
            equality: None,
            catalog: None,
            passed: true,
        }
    }
}

/// Pretty printer that writes every float with 17 significant digits.
struct FixedDigits<'a>(PrettyFormatter<'a>);

impl Formatter for FixedDigits<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{}", format_f64(value))
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// 17 significant digits, exponent form. Callers handle non-finite values.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut buf, FixedDigits(PrettyFormatter::new()));
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

fn csv_float(v: f64) -> String {
    if v.is_finite() {
        format_f64(v)
    } else {
        String::new()
    }
}

fn configuration_columns(c: Option<&SampleConfiguration>) -> Vec<String> {
    match c {
        None => vec![String::new(); 1 + 6 + 3 + 6],
        Some(c) => {
            let mut cols = vec![c.index.to_string()];
            for p in c.triangle {
                cols.push(csv_float(p.x));
                cols.push(csv_float(p.y));
            }
            cols.extend(c.barycentric.iter().map(|&v| csv_float(v)));
            cols.extend(c.weight_logs.iter().map(|&v| csv_float(v)));
            cols
        }
    }
}

const ARGMIN_HEADER: [&str; 16] = [
    "argmin_index",
    "argmin_ax",
    "argmin_ay",
    "argmin_bx",
    "argmin_by",
    "argmin_cx",
    "argmin_cy",
    "argmin_bary_a",
    "argmin_bary_b",
    "argmin_bary_c",
    "argmin_log_x",
    "argmin_log_y",
    "argmin_log_z",
    "argmin_log_u",
    "argmin_log_v",
    "argmin_log_w",
];

fn finish(w: csv::Writer<Vec<u8>>) -> csv::Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv writes UTF-8"))
}

/// One row per (shape mode, id).
pub fn suites_to_csv(suites: &[SuiteReport]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "id",
        "shape_mode",
        "samples",
        "domain_errors",
        "violations",
        "min_rel_slack",
        "min_slack",
    ];
    header.extend(ARGMIN_HEADER);
    w.write_record(&header)?;
    for suite in suites {
        let mode = serde_json::to_value(suite.config.shape_mode)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        for r in &suite.records {
            let mut row = vec![
                r.id.to_string(),
                mode.clone(),
                r.samples.to_string(),
                r.domain_errors.to_string(),
                r.violations.to_string(),
                csv_float(r.min_rel_slack),
                csv_float(r.min_slack),
            ];
            row.extend(configuration_columns(r.argmin.as_ref()));
            w.write_record(&row)?;
        }
    }
    finish(w)
}

pub fn tightness_to_csv(
    results: &[TightnessResult],
    equality: &[EqualityReport],
) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = [
        "id",
        "min_slack",
        "min_rel_slack",
        "distance_to_canonical",
        "vertex_distance_spread",
        "best_start",
        "starts",
        "converged_starts",
        "canonical_slack",
        "probe_failures",
        "locus_passed",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    header.extend((0..crate::tighten::DIM).map(|i| format!("theta_{i}")));
    w.write_record(&header)?;
    for r in results {
        let eq = equality.iter().find(|e| e.id == r.id);
        let mut row = vec![
            r.id.to_string(),
            csv_float(r.min_slack),
            csv_float(r.min_rel_slack),
            csv_float(r.distance_to_canonical),
            csv_float(r.vertex_distance_spread),
            r.best_start.to_string(),
            r.starts.to_string(),
            r.converged_starts.to_string(),
            eq.map(|e| csv_float(e.canonical_slack)).unwrap_or_default(),
            eq.map(|e| e.failures.to_string()).unwrap_or_default(),
            eq.map(|e| e.passed.to_string()).unwrap_or_default(),
        ];
        row.extend(r.argmin.theta.iter().map(|&v| csv_float(v)));
        w.write_record(&row)?;
    }
    finish(w)
}

pub fn identities_to_csv(r: &IdentityReport) -> csv::Result<String> {
    use crate::verify::{ALGEBRAIC_TOLERANCE, GEOMETRIC_TOLERANCE};
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["check", "value", "tolerance", "passed"])?;
    let rows = [
        (
            "tangent_identity_max_rel",
            r.tangent_identity_max_rel,
            GEOMETRIC_TOLERANCE,
            true,
        ),
        (
            "bisector_dual_path_max_rel",
            r.bisector_dual_path_max_rel,
            GEOMETRIC_TOLERANCE,
            true,
        ),
        (
            "chain_polynomial_max_rel",
            r.chain_polynomial_max_rel,
            ALGEBRAIC_TOLERANCE,
            true,
        ),
        (
            "wolstenholme_decomposition_max_rel",
            r.wolstenholme_decomposition_max_rel,
            ALGEBRAIC_TOLERANCE,
            true,
        ),
        (
            "fixture_max_error",
            r.fixture_max_error,
            ALGEBRAIC_TOLERANCE,
            true,
        ),
        (
            "wolstenholme_geometric_min_rel_slack",
            r.wolstenholme_geometric_min_rel_slack,
            -GEOMETRIC_TOLERANCE,
            false,
        ),
    ];
    for (name, value, tol, upper) in rows {
        let ok = if upper { value <= tol } else { value >= tol };
        w.write_record([
            name.to_string(),
            csv_float(value),
            csv_float(tol),
            ok.to_string(),
        ])?;
    }
    finish(w)
}

pub fn catalog_to_csv(entries: &[CatalogEntry]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "lhs", "rhs", "source", "weight_arity"])?;
    for e in entries {
        w.write_record([
            e.id.to_string(),
            e.lhs.to_string(),
            e.rhs.to_string(),
            e.source.to_string(),
            e.weight_arity.to_string(),
        ])?;
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Sample {
        a: f64,
        b: Vec<f64>,
        c: Option<f64>,
    }

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(format_f64(2f64.sqrt()), "1.4142135623730951e0");
        assert_eq!(format_f64(0.0), "0.0000000000000000e0");
        assert_eq!(format_f64(-1.5e-300), "-1.5000000000000001e-300");
        let json = to_json(&Sample {
            a: 0.1,
            b: vec![1.0, f64::NAN],
            c: None,
        })
        .unwrap();
        assert!(json.contains("\"a\": 1.0000000000000001e-1"));
        assert!(json.contains("null"));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["a"].as_f64(), Some(0.1));
    }

    #[test]
    fn catalog_csv_has_header_and_all_ids() {
        let csv = catalog_to_csv(&crate::catalog::catalog()).unwrap();
        assert_eq!(csv.lines().count(), 26);
        assert!(csv.starts_with("id,lhs,rhs,source,weight_arity"));
    }
}
