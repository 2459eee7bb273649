//! End-to-end checks: each one evaluates both sides of an identity (or a
//! sweep of rank certificates) on a concrete collection and produces a
//! machine-readable report. A config-driven suite runs the checks over a
//! family of generated instances and renders CSV/JSON outputs.
//!
//! Failures are split into two kinds: a hypothesis failure (the collection
//! is not in general position, or the linear system is not generic after
//! retries) marks the report as skipped, while a genuine mismatch on a
//! verified-generic instance marks it as failed.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexes::{binomial, h_from_f, CayleyCombinatorics, HVector};
use crate::error::Error;
use crate::facering::{coordinate_linear_forms, GradedQuotient};
use crate::linalg::{parse_rational, rat, Rational};
use crate::polytope::cayley::cayley_polytope;
use crate::polytope::generators::{cyclic_polytope, perturb, simplex_polytope, stacked_polytope};
use crate::polytope::minkowski::minkowski_sum;
use crate::polytope::PureCollection;
use crate::Result;

/// Magnitude used when a check retries a non-generic instance.
fn retry_magnitude() -> Rational {
    rat(1, 64)
}

const DEFAULT_RETRY_SEED: u64 = 17;

/// One compared quantity within a check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    /// Which index the row belongs to (`k=1`, `i=0,j=2`, ...).
    pub label: String,
    pub lhs: i64,
    pub rhs: i64,
    pub passed: bool,
}

/// Machine-readable outcome of one check on one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub instance: String,
    pub parameters: BTreeMap<String, String>,
    pub rows: Vec<ReportRow>,
    pub passed: bool,
    /// True when the check did not apply (hypothesis unmet), as opposed
    /// to a genuine failure.
    pub skipped: bool,
    pub reason: Option<String>,
    pub runtime_ms: u128,
}

impl CheckReport {
    pub fn lhs(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.lhs).collect()
    }

    pub fn rhs(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.rhs).collect()
    }
}

struct ReportBuilder {
    check_name: &'static str,
    instance: String,
    parameters: BTreeMap<String, String>,
    started: Instant,
}

impl ReportBuilder {
    fn new(check_name: &'static str, instance: &str) -> Self {
        ReportBuilder {
            check_name,
            instance: instance.to_string(),
            parameters: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.into(), value.to_string());
    }

    fn rows(self, rows: Vec<ReportRow>) -> CheckReport {
        let passed = rows.iter().all(|r| r.passed);
        CheckReport {
            check_name: self.check_name.into(),
            instance: self.instance,
            parameters: self.parameters,
            rows,
            passed,
            skipped: false,
            reason: None,
            runtime_ms: self.started.elapsed().as_millis(),
        }
    }

    fn skipped(self, reason: impl Into<String>) -> CheckReport {
        CheckReport {
            check_name: self.check_name.into(),
            instance: self.instance,
            parameters: self.parameters,
            rows: Vec::new(),
            passed: false,
            skipped: true,
            reason: Some(reason.into()),
            runtime_ms: self.started.elapsed().as_millis(),
        }
    }
}

fn eq_row(label: String, lhs: i64, rhs: i64) -> ReportRow {
    ReportRow {
        label,
        lhs,
        rhs,
        passed: lhs == rhs,
    }
}

fn describe(collection: &PureCollection) -> String {
    let ns: Vec<usize> = collection
        .polytopes()
        .iter()
        .map(|p| p.vertex_count())
        .collect();
    format!("d={} m={} n={:?}", collection.d(), collection.m(), ns)
}

/// Cached per-instance pipeline shared by the checks.
struct Prepared {
    combinatorics: Option<CayleyCombinatorics>,
    build_error: Option<String>,
    nonsimplicial: Option<String>,
}

impl Prepared {
    fn new(collection: &PureCollection) -> Self {
        let cayley = cayley_polytope(collection);
        match CayleyCombinatorics::new(&cayley) {
            Err(e) => Prepared {
                combinatorics: None,
                build_error: Some(e.to_string()),
                nonsimplicial: None,
            },
            Ok(comb) => {
                let nonsimplicial = comb
                    .first_nonsimplex_mixed_face()
                    .map(|(face, dim)| format!("mixed face {face:?} of dimension {dim} is not a simplex"));
                Prepared {
                    combinatorics: Some(comb),
                    build_error: None,
                    nonsimplicial,
                }
            }
        }
    }

    /// The combinatorics, provided the Cayley complex is simplicial.
    fn simplicial(&self) -> std::result::Result<&CayleyCombinatorics, String> {
        if let Some(err) = &self.build_error {
            return Err(err.clone());
        }
        if let Some(reason) = &self.nonsimplicial {
            return Err(format!("not in general position: {reason}"));
        }
        Ok(self.combinatorics.as_ref().expect("no build error"))
    }

    fn h_of_t(&self, comb: &CayleyCombinatorics) -> Result<HVector> {
        let t = comb.cayley_complex()?;
        h_from_f(&t.f_vector(), comb.h_dim())
    }
}

/// Face-number correspondence: the boundary f-vector of the Minkowski sum
/// (by direct hull) against the shifted f-vector of the relative Cayley
/// complex.
pub fn check_face_correspondence(collection: &PureCollection) -> CheckReport {
    check_face_correspondence_described(collection, &describe(collection))
}

pub fn check_face_correspondence_described(
    collection: &PureCollection,
    instance: &str,
) -> CheckReport {
    let builder = ReportBuilder::new("face_correspondence", instance);
    let prepared = Prepared::new(collection);
    let comb = match prepared.simplicial() {
        Ok(c) => c,
        Err(reason) => return builder.skipped(reason),
    };
    let predicted = match comb.minkowski_f_prediction() {
        Ok(f) => f,
        Err(e) => return builder.skipped(e.to_string()),
    };
    let sum = match minkowski_sum(collection).and_then(|p| p.face_lattice()) {
        Ok(lat) => lat.boundary_f_vector(),
        Err(e) => return builder.skipped(e.to_string()),
    };
    let d = collection.d() as i64;
    let rows = (0..d)
        .map(|i| eq_row(format!("i={i}"), sum.get(i), predicted.get(i)))
        .collect();
    builder.rows(rows)
}

/// The duality identity `h_{d-k}(T) = h_{k+m-1}(T°) + (-1)^k C(d+m-1, d-k)`
/// for every `k` in `[-m+1, d]`, with out-of-range h-entries read as zero.
pub fn check_dsm(collection: &PureCollection) -> CheckReport {
    check_dsm_described(collection, &describe(collection))
}

pub fn check_dsm_described(collection: &PureCollection, instance: &str) -> CheckReport {
    let builder = ReportBuilder::new("dsm", instance);
    let prepared = Prepared::new(collection);
    let comb = match prepared.simplicial() {
        Ok(c) => c,
        Err(reason) => return builder.skipped(reason),
    };
    let (d, m) = (collection.d() as i64, collection.m() as i64);
    let cap = comb.h_dim();
    let run = || -> Result<Vec<ReportRow>> {
        let h_t = prepared.h_of_t(comb)?;
        let h_rel = h_from_f(&comb.relative_complex()?.f_vector(), cap)?;
        Ok(((-m + 1)..=d)
            .map(|k| {
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                let lhs = h_t.get(d - k);
                let rhs = h_rel.get(k + m - 1) + sign * binomial(cap as i64, d - k);
                eq_row(format!("k={k}"), lhs, rhs)
            })
            .collect())
    };
    match run() {
        Ok(rows) => builder.rows(rows),
        Err(e) => builder.skipped(e.to_string()),
    }
}

/// Tail values: `h_{d+k}(T) = (-1)^k C(d+m-1, d+k)` for `k = 1..m-1`;
/// vacuously true for a single summand.
pub fn check_schenzel_tail(collection: &PureCollection) -> CheckReport {
    check_schenzel_tail_described(collection, &describe(collection))
}

pub fn check_schenzel_tail_described(collection: &PureCollection, instance: &str) -> CheckReport {
    let builder = ReportBuilder::new("schenzel", instance);
    let prepared = Prepared::new(collection);
    let comb = match prepared.simplicial() {
        Ok(c) => c,
        Err(reason) => return builder.skipped(reason),
    };
    let (d, m) = (collection.d() as i64, collection.m() as i64);
    match prepared.h_of_t(comb) {
        Ok(h_t) => {
            let rows = (1..m)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    eq_row(
                        format!("k={k}"),
                        h_t.get(d + k),
                        sign * binomial(d + m - 1, d + k),
                    )
                })
                .collect();
            builder.rows(rows)
        }
        Err(e) => builder.skipped(e.to_string()),
    }
}

/// Monotonicity consequence: `h_i(T) <= h_{i+j}(T)` over the admissible
/// range `2i <= d`, `0 <= j <= d - 2i`.
pub fn check_h_monotonicity(collection: &PureCollection) -> CheckReport {
    check_h_monotonicity_described(collection, &describe(collection))
}

pub fn check_h_monotonicity_described(collection: &PureCollection, instance: &str) -> CheckReport {
    let builder = ReportBuilder::new("monotonicity", instance);
    let prepared = Prepared::new(collection);
    let comb = match prepared.simplicial() {
        Ok(c) => c,
        Err(reason) => return builder.skipped(reason),
    };
    let d = collection.d();
    match prepared.h_of_t(comb) {
        Ok(h_t) => {
            let mut rows = Vec::new();
            for i in 0..=(d / 2) {
                for j in 0..=(d - 2 * i) {
                    let lhs = h_t.get(i as i64);
                    let rhs = h_t.get((i + j) as i64);
                    rows.push(ReportRow {
                        label: format!("i={i},j={j}"),
                        lhs,
                        rhs,
                        passed: lhs <= rhs,
                    });
                }
            }
            builder.rows(rows)
        }
        Err(e) => builder.skipped(e.to_string()),
    }
}

/// Equality-case detection: reports every `i <= d/2 - 1` with
/// `h_i(T) = h_{i+1}(T)`. Detection only; rows never fail.
pub fn detect_equality_case(collection: &PureCollection) -> CheckReport {
    detect_equality_case_described(collection, &describe(collection))
}

pub fn detect_equality_case_described(collection: &PureCollection, instance: &str) -> CheckReport {
    let mut builder = ReportBuilder::new("equality", instance);
    let prepared = Prepared::new(collection);
    let comb = match prepared.simplicial() {
        Ok(c) => c,
        Err(reason) => return builder.skipped(reason),
    };
    let d = collection.d();
    match prepared.h_of_t(comb) {
        Ok(h_t) => {
            let mut rows = Vec::new();
            let mut detected = Vec::new();
            let mut i = 0usize;
            while 2 * i + 2 <= d {
                let lhs = h_t.get(i as i64);
                let rhs = h_t.get(i as i64 + 1);
                if lhs == rhs {
                    detected.push(i);
                }
                rows.push(ReportRow {
                    label: format!("i={i}"),
                    lhs,
                    rhs,
                    passed: true,
                });
                i += 1;
            }
            builder.param("detected", format!("{detected:?}"));
            builder.rows(rows)
        }
        Err(e) => builder.skipped(e.to_string()),
    }
}

/// Lefschetz certificates: verifies `dim A^i = h_i(T)` for `i <= d` (with
/// up to two perturbation retries when the linear system is not generic),
/// then sweeps every admissible `(i, j)` and requires injectivity.
pub fn check_lefschetz(collection: &PureCollection) -> CheckReport {
    check_lefschetz_with_seed(collection, DEFAULT_RETRY_SEED)
}

pub fn check_lefschetz_with_seed(collection: &PureCollection, seed: u64) -> CheckReport {
    check_lefschetz_described(collection, &describe(collection), seed)
}

pub fn check_lefschetz_described(
    collection: &PureCollection,
    instance: &str,
    seed: u64,
) -> CheckReport {
    const MAX_RETRIES: usize = 2;
    let mut builder = ReportBuilder::new("lefschetz", instance);
    let d = collection.d();
    let mut current = collection.clone();
    let mut last_reason = String::new();
    for attempt in 0..=MAX_RETRIES {
        if attempt > 0 {
            builder.param("retries", attempt);
            current = match perturb(collection, &retry_magnitude(), seed + attempt as u64) {
                Ok(c) => c,
                Err(e) => return builder.skipped(e.to_string()),
            };
        }
        match lefschetz_rows(&current, d) {
            Ok(rows) => return builder.rows(rows),
            Err(LefschetzFailure::Hypothesis(reason)) => last_reason = reason,
            Err(LefschetzFailure::Error(e)) => return builder.skipped(e.to_string()),
        }
    }
    builder.skipped(format!(
        "linear system not generic after {MAX_RETRIES} perturbation retries: {last_reason}"
    ))
}

enum LefschetzFailure {
    /// Not in general position / non-generic coordinates; retryable.
    Hypothesis(String),
    Error(Error),
}

impl From<Error> for LefschetzFailure {
    fn from(e: Error) -> Self {
        LefschetzFailure::Error(e)
    }
}

fn lefschetz_rows(
    collection: &PureCollection,
    d: usize,
) -> std::result::Result<Vec<ReportRow>, LefschetzFailure> {
    let prepared = Prepared::new(collection);
    let comb = prepared
        .simplicial()
        .map_err(LefschetzFailure::Hypothesis)?;
    let h_t = prepared.h_of_t(comb)?;
    let cayley = cayley_polytope(collection);
    let t = comb.cayley_complex()?;
    let quotient = GradedQuotient::build(&t, &coordinate_linear_forms(&cayley), d)?;

    let mut rows = Vec::new();
    for i in 0..=d {
        let dim = quotient.dim(i)? as i64;
        let h = h_t.get(i as i64);
        if dim != h {
            return Err(LefschetzFailure::Hypothesis(format!(
                "dim A^{i} = {dim} but h_{i} = {h}"
            )));
        }
        rows.push(eq_row(format!("dim i={i}"), dim, h));
    }
    for cert in quotient.all_certificates(d)? {
        rows.push(ReportRow {
            label: format!("i={},j={}", cert.i, cert.j),
            lhs: cert.map_rank as i64,
            rhs: cert.dim_source as i64,
            passed: cert.injective,
        });
    }
    Ok(rows)
}

/// Canonical check names.
pub const CHECK_NAMES: [&str; 6] = [
    "face_correspondence",
    "dsm",
    "schenzel",
    "lefschetz",
    "monotonicity",
    "equality",
];

/// Normalize a user-facing check name.
pub fn parse_check_name(name: &str) -> Result<&'static str> {
    let normalized = name.trim().to_lowercase().replace('-', "_");
    match normalized.as_str() {
        "face_correspondence" | "faces" | "fc" => Ok("face_correspondence"),
        "dsm" | "duality" => Ok("dsm"),
        "schenzel" | "schenzel_tail" | "tail" => Ok("schenzel"),
        "lefschetz" | "hl" => Ok("lefschetz"),
        "monotonicity" | "mono" => Ok("monotonicity"),
        "equality" | "equality_case" | "detect_equality" => Ok("equality"),
        _ => Err(Error::InvalidParameter(format!(
            "unknown check {name:?}; known checks: {CHECK_NAMES:?}"
        ))),
    }
}

/// Run one named check.
pub fn run_check(
    name: &str,
    collection: &PureCollection,
    instance: &str,
    seed: u64,
) -> Result<CheckReport> {
    Ok(match parse_check_name(name)? {
        "face_correspondence" => check_face_correspondence_described(collection, instance),
        "dsm" => check_dsm_described(collection, instance),
        "schenzel" => check_schenzel_tail_described(collection, instance),
        "lefschetz" => check_lefschetz_described(collection, instance, seed),
        "monotonicity" => check_h_monotonicity_described(collection, instance),
        "equality" => detect_equality_case_described(collection, instance),
        _ => unreachable!(),
    })
}

/// Vertex counts for the summands: one shared count or one per summand.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexCounts {
    Shared(usize),
    PerSummand(Vec<usize>),
}

impl Default for VertexCounts {
    fn default() -> Self {
        VertexCounts::Shared(0)
    }
}

/// One instance of the suite: a generated (or loaded) collection.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub kind: String,
    #[serde(default)]
    pub d: usize,
    #[serde(default)]
    pub n: VertexCounts,
    #[serde(default = "default_m")]
    pub m: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturb: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

fn default_m() -> usize {
    1
}

/// Suite configuration: instances, enabled checks, output stem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub instances: Vec<InstanceSpec>,
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<SuiteConfig> {
        let config: SuiteConfig = serde_json::from_str(text)?;
        for check in &config.checks {
            parse_check_name(check)?;
        }
        for (idx, spec) in config.instances.iter().enumerate() {
            build_collection(spec).map_err(|e| {
                Error::InvalidParameter(format!("instance {idx} ({}): {e}", spec.kind))
            })?;
        }
        Ok(config)
    }
}

fn summand_counts(spec: &InstanceSpec) -> Result<Vec<usize>> {
    match &spec.n {
        VertexCounts::Shared(n) => Ok(vec![*n; spec.m]),
        VertexCounts::PerSummand(ns) => {
            if ns.len() != spec.m {
                return Err(Error::InvalidParameter(format!(
                    "n lists {} counts but m = {}",
                    ns.len(),
                    spec.m
                )));
            }
            Ok(ns.clone())
        }
    }
}

/// Build the collection an instance spec describes.
pub fn build_collection(spec: &InstanceSpec) -> Result<PureCollection> {
    if spec.kind != "file" && spec.m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let collection = match spec.kind.as_str() {
        "cyclic" => {
            let ns = summand_counts(spec)?;
            let summands = ns
                .iter()
                .map(|&n| cyclic_polytope(spec.d, n))
                .collect::<Result<Vec<_>>>()?;
            PureCollection::new(spec.d, summands)?
        }
        "stacked" => {
            let ns = summand_counts(spec)?;
            let summands = ns
                .iter()
                .enumerate()
                .map(|(i, &n)| stacked_polytope(spec.d, n, spec.seed.wrapping_add(i as u64)))
                .collect::<Result<Vec<_>>>()?;
            PureCollection::new(spec.d, summands)?
        }
        "simplex" => {
            let summands = (0..spec.m)
                .map(|_| simplex_polytope(spec.d))
                .collect::<Result<Vec<_>>>()?;
            PureCollection::new(spec.d, summands)?
        }
        "file" => {
            let path = spec.path.as_ref().ok_or_else(|| {
                Error::InvalidParameter("kind \"file\" requires a path".into())
            })?;
            crate::io::load_collection(Path::new(path))?
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown instance kind {other:?}"
            )))
        }
    };
    match &spec.perturb {
        None => Ok(collection),
        Some(magnitude) => perturb(&collection, &parse_rational(magnitude)?, spec.seed),
    }
}

fn instance_description(spec: &InstanceSpec, collection: Option<&PureCollection>) -> String {
    let mut out = match collection {
        // Loaded collections report their actual shape, not the config
        // entry's defaults.
        Some(c) => {
            let ns: Vec<usize> = c.polytopes().iter().map(|p| p.vertex_count()).collect();
            format!("{} d={} m={} n={ns:?}", spec.kind, c.d(), c.m())
        }
        None => {
            let mut s = format!("{} d={} m={}", spec.kind, spec.d, spec.m);
            match &spec.n {
                VertexCounts::Shared(0) => {}
                VertexCounts::Shared(n) => s.push_str(&format!(" n={n}")),
                VertexCounts::PerSummand(ns) => s.push_str(&format!(" n={ns:?}")),
            }
            s
        }
    };
    out.push_str(&format!(" seed={}", spec.seed));
    if let Some(p) = &spec.perturb {
        out.push_str(&format!(" perturb={p}"));
    }
    if let Some(p) = &spec.path {
        out.push_str(&format!(" path={p}"));
    }
    out
}

/// Run every enabled check on every instance. Instances are evaluated in
/// parallel; the report order follows the config order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    for check in &config.checks {
        parse_check_name(check)?;
    }
    let jobs: Vec<(usize, &InstanceSpec)> = config.instances.iter().enumerate().collect();
    let mut per_instance: Vec<(usize, Vec<CheckReport>)> = jobs
        .par_iter()
        .map(|&(idx, spec)| {
            let built = build_collection(spec);
            let description = instance_description(spec, built.as_ref().ok());
            let reports = match built {
                Ok(collection) => config
                    .checks
                    .iter()
                    .map(|check| {
                        run_check(check, &collection, &description, spec.seed)
                            .expect("check names validated above")
                    })
                    .collect(),
                Err(e) => config
                    .checks
                    .iter()
                    .map(|check| {
                        let name = parse_check_name(check).expect("validated");
                        ReportBuilder::new(name, &description).skipped(format!(
                            "instance construction failed: {e}"
                        ))
                    })
                    .collect(),
            };
            (idx, reports)
        })
        .collect();
    per_instance.sort_by_key(|&(idx, _)| idx);
    Ok(per_instance.into_iter().flat_map(|(_, r)| r).collect())
}

/// CSV rendering: one row per compared quantity, `ms` last so the
/// deterministic data columns can be compared byte-for-byte.
pub fn render_csv(reports: &[CheckReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["check_name", "instance", "k_or_ij", "lhs", "rhs", "passed", "ms"])
        .expect("csv header");
    for report in reports {
        let ms = report.runtime_ms.to_string();
        if report.skipped {
            writer
                .write_record([
                    report.check_name.as_str(),
                    report.instance.as_str(),
                    "-",
                    "-",
                    "-",
                    "skipped",
                    ms.as_str(),
                ])
                .expect("csv row");
            continue;
        }
        for row in &report.rows {
            writer
                .write_record([
                    report.check_name.as_str(),
                    report.instance.as_str(),
                    row.label.as_str(),
                    row.lhs.to_string().as_str(),
                    row.rhs.to_string().as_str(),
                    if row.passed { "true" } else { "false" },
                    ms.as_str(),
                ])
                .expect("csv row");
        }
    }
    String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is utf-8")
}

/// JSON summary of a suite run.
pub fn render_summary(reports: &[CheckReport]) -> serde_json::Value {
    let failed = reports.iter().filter(|r| !r.passed && !r.skipped).count();
    let skipped = reports.iter().filter(|r| r.skipped).count();
    serde_json::json!({
        "total": reports.len(),
        "failed": failed,
        "skipped": skipped,
        "passed": failed == 0,
        "reports": reports,
    })
}

/// Write `<stem>.csv` and `<stem>.json`; returns the two paths.
pub fn write_outputs(reports: &[CheckReport], stem: &Path) -> Result<(PathBuf, PathBuf)> {
    let csv_path = stem.with_extension("csv");
    let json_path = stem.with_extension("json");
    if let Some(parent) = csv_path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(&csv_path, render_csv(reports))?;
    std::fs::write(
        &json_path,
        serde_json::to_string_pretty(&render_summary(reports))?,
    )?;
    Ok((csv_path, json_path))
}
