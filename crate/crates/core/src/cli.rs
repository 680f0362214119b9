//! The `mvol` command-line front end.
//!
//! Every subcommand reads one JSON job file. Integers may be written as JSON
//! numbers or decimal strings; output documents always use decimal strings.
//! Point and daughter indices are 0-based in job files and JSON output, and
//! 1-based in human-readable text.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::apps::degrees::{ed_degree, ml_degree, polar_degree, CayleyInput};
use crate::apps::newton::{detect_stretched_bk, newton_number};
use crate::apps::off::{voff, ConeSpec, Route, VoffReport};
use crate::apps::toric::{orbit_multiplicity, toric_report};
use crate::error::Error;
use crate::lattice::IntMatrix;
use crate::lemma::verify_all_sutures;
use crate::mixed::{khovanskii_mv, mixed_volume, mv_zero_witness, Lift};
use crate::polytope::{convex_hull, Face, PointSet};
use crate::semi::{classify_faces, daughter_check, suture_system, suture_system_checked, DaughterFamily};

/// An arbitrary-precision integer stored as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Num(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(Int(n.into())),
            Repr::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(Int)
                .map_err(|_| serde::de::Error::custom(format!("`{s}` is not a decimal integer"))),
        }
    }
}

fn to_ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().cloned().map(Int).collect()
}

fn from_ints(v: &[Int]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJob {
    pub functionals: Vec<Vec<Int>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksJob {
    pub block_dim: usize,
    pub supports: Vec<Vec<Vec<Int>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<usize>>,
}

/// One job: a point set plus whatever the subcommand needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub dim: usize,
    #[serde(default)]
    pub points: Vec<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub daughters: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeJob>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksJob>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
}

impl JobFile {
    pub fn from_points(set: &PointSet) -> Self {
        JobFile {
            dim: set.dim(),
            points: set.iter().map(|p| to_ints(p)).collect(),
            ..Default::default()
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let job: JobFile = serde_json::from_str(text).map_err(|e| format!("malformed job file: {e}"))?;
        job.validate()?;
        Ok(job)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job files always serialize")
    }

    /// Field-level schema checks beyond what deserialization enforces.
    pub fn validate(&self) -> Result<(), String> {
        let mut seen = HashSet::new();
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != self.dim {
                return Err(format!("points[{i}]: expected {} coordinates, found {}", self.dim, p.len()));
            }
            if !seen.insert(p) {
                return Err(format!("points[{i}]: duplicate point"));
            }
        }
        for (j, d) in self.daughters.iter().flatten().enumerate() {
            if d.is_empty() {
                return Err(format!("daughters[{j}]: empty index list"));
            }
            if let Some(&bad) = d.iter().find(|&&i| i >= self.points.len()) {
                return Err(format!("daughters[{j}]: index {bad} out of range ({} points)", self.points.len()));
            }
        }
        if let Some(cone) = &self.cone {
            for (i, l) in cone.functionals.iter().enumerate() {
                if l.len() != self.dim {
                    return Err(format!("cone.functionals[{i}]: expected {} entries, found {}", self.dim, l.len()));
                }
            }
        }
        if let Some(blocks) = &self.blocks {
            for (j, s) in blocks.supports.iter().enumerate() {
                for (i, p) in s.iter().enumerate() {
                    if p.len() != blocks.block_dim {
                        return Err(format!(
                            "blocks.supports[{j}][{i}]: expected {} coordinates, found {}",
                            blocks.block_dim,
                            p.len()
                        ));
                    }
                }
            }
        }
        if let Some(face) = self.params.as_ref().and_then(|p| p.face.as_ref()) {
            if let Some(&bad) = face.iter().find(|&&i| i >= self.points.len()) {
                return Err(format!("params.face: index {bad} out of range ({} points)", self.points.len()));
            }
        }
        Ok(())
    }

    pub fn point_set(&self) -> PointSet {
        PointSet::new(self.dim, self.points.iter().map(|p| from_ints(p)).collect()).expect("validated")
    }

    fn daughters(&self) -> Result<Vec<Vec<usize>>, Failure> {
        self.daughters.clone().ok_or_else(|| Failure::input("daughters: field required"))
    }

    fn params(&self) -> Params {
        self.params.clone().unwrap_or_default()
    }

    fn cone(&self) -> Result<ConeSpec, Failure> {
        match &self.cone {
            None => Ok(ConeSpec::orthant(self.dim)),
            Some(c) => Ok(ConeSpec::new(self.dim, c.functionals.iter().map(|l| from_ints(l)).collect())?),
        }
    }

    fn cayley_input(&self) -> Result<CayleyInput, Failure> {
        let b = self.blocks.as_ref().ok_or_else(|| Failure::input("blocks: field required"))?;
        let supports = b
            .supports
            .iter()
            .map(|s| PointSet::new(b.block_dim, s.iter().map(|p| from_ints(p)).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CayleyInput::new(b.block_dim, supports)?)
    }
}

#[derive(Parser, Debug)]
#[command(name = "mvol", version, about = "Exact mixed volumes, suture systems and off-coordinate degrees")]
pub struct Cli {
    /// Evaluate mixed volumes with the inclusion-exclusion oracle only.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Run both the formula and the oracle and fail on any mismatch.
    #[arg(long, global = true)]
    pub check: bool,
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Lattice volume of the hull of `points` in its own affine lattice.
    Volume { job: PathBuf },
    /// Mixed volume of the `daughters` (one per coordinate).
    MixedVolume { job: PathBuf },
    /// Test each entry of `daughters` against the daughter definition.
    DaughterCheck { job: PathBuf },
    /// Is the daughter family semi-interlaced; lists its sutures.
    SemiCheck { job: PathBuf },
    /// Suture table: coefficient matrix, its inverse, volumes, mixed volumes.
    Sutures { job: PathBuf },
    /// Mixed volume of the off-coordinate daughters for `cone` (default: orthant).
    Voff { job: PathBuf },
    /// Newton number of a convenient set.
    Newton { job: PathBuf },
    /// Search for a stretched B_k decomposition.
    BkDetect { job: PathBuf },
    /// Maximum likelihood degree from `blocks` and `params.u`.
    Mldeg { job: PathBuf },
    /// Euclidean distance degree from `blocks`.
    Eddeg { job: PathBuf },
    /// Polar degree of a form with support `points` and degree `params.d`.
    Pdeg { job: PathBuf },
    /// Orbit multiplicity at `params.face`, or all faces when absent.
    Mult { job: PathBuf },
    /// Check the local mixed-volume identity at every suture.
    VerifyLemma { job: PathBuf },
}

impl Command {
    fn job(&self) -> &Path {
        match self {
            Command::Volume { job }
            | Command::MixedVolume { job }
            | Command::DaughterCheck { job }
            | Command::SemiCheck { job }
            | Command::Sutures { job }
            | Command::Voff { job }
            | Command::Newton { job }
            | Command::BkDetect { job }
            | Command::Mldeg { job }
            | Command::Eddeg { job }
            | Command::Pdeg { job }
            | Command::Mult { job }
            | Command::VerifyLemma { job } => job,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Volume { .. } => "volume",
            Command::MixedVolume { .. } => "mixed-volume",
            Command::DaughterCheck { .. } => "daughter-check",
            Command::SemiCheck { .. } => "semi-check",
            Command::Sutures { .. } => "sutures",
            Command::Voff { .. } => "voff",
            Command::Newton { .. } => "newton",
            Command::BkDetect { .. } => "bk-detect",
            Command::Mldeg { .. } => "mldeg",
            Command::Eddeg { .. } => "eddeg",
            Command::Pdeg { .. } => "pdeg",
            Command::Mult { .. } => "mult",
            Command::VerifyLemma { .. } => "verify-lemma",
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID_INPUT, message: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() { EXIT_INVALID_INPUT } else { EXIT_CHECK_FAILED };
        Failure { code, message: e.to_string() }
    }
}

/// A finished document: JSON form, text form, and whether a property failed.
struct Doc {
    json: Value,
    text: String,
    failed: bool,
}

impl Doc {
    fn ok(json: Value, text: String) -> Self {
        Doc { json, text, failed: false }
    }
}

/// Parses `args` (including the program name) and runs one job.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let result = std::fs::read_to_string(cli.command.job())
        .map_err(|e| Failure::input(format!("{}: {e}", cli.command.job().display())))
        .and_then(|text| JobFile::parse(&text).map_err(Failure::input))
        .and_then(|job| dispatch(cli, &job));
    match result {
        Ok(doc) => {
            let mut stdout = if cli.json {
                let mut json = doc.json;
                json["command"] = Value::String(cli.command.name().to_string());
                serde_json::to_string_pretty(&json).expect("documents serialize")
            } else {
                doc.text.trim_end().to_string()
            };
            stdout.push('\n');
            let code = if doc.failed { EXIT_CHECK_FAILED } else { EXIT_OK };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("mvol: {}\n", f.message) },
    }
}

fn route(cli: &Cli) -> Route {
    if cli.check {
        Route::Check
    } else if cli.oracle {
        Route::Oracle
    } else {
        Route::Formula
    }
}

fn dispatch(cli: &Cli, job: &JobFile) -> Result<Doc, Failure> {
    match &cli.command {
        Command::Volume { .. } => cmd_volume(job),
        Command::MixedVolume { .. } => cmd_mixed_volume(job, cli.check),
        Command::DaughterCheck { .. } => cmd_daughter_check(job),
        Command::SemiCheck { .. } => cmd_semi_check(job),
        Command::Sutures { .. } => cmd_sutures(job, cli.check || cli.oracle),
        Command::Voff { .. } => Ok(voff_doc(&voff(&job.point_set(), &job.cone()?, route(cli))?)),
        Command::Newton { .. } => {
            let nu = newton_number(&job.point_set())?;
            Ok(Doc::ok(json!({ "result": nu.to_string() }), format!("newton number: {nu}")))
        }
        Command::BkDetect { .. } => cmd_bk_detect(job),
        Command::Mldeg { .. } => {
            let u = job.params().u.ok_or_else(|| Failure::input("params.u: field required"))?;
            Ok(voff_doc(&ml_degree(&job.cayley_input()?, &from_ints(&u), route(cli))?))
        }
        Command::Eddeg { .. } => Ok(voff_doc(&ed_degree(&job.cayley_input()?, route(cli))?)),
        Command::Pdeg { .. } => {
            let d = job.params().d.ok_or_else(|| Failure::input("params.d: field required"))?;
            Ok(voff_doc(&polar_degree(&job.point_set(), d, route(cli))?))
        }
        Command::Mult { .. } => cmd_mult(job),
        Command::VerifyLemma { .. } => cmd_verify_lemma(job),
    }
}

fn s(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| ints_json(m.row(i))).collect())
}

fn face_json(f: &Face) -> Value {
    json!({ "points": f.points, "dim": f.dim, "witness": ints_json(&f.witness) })
}

/// `{1, 2, 3}` from 0-based indices.
fn one_based(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_volume(job: &JobFile) -> Result<Doc, Failure> {
    let hull = convex_hull(&job.point_set())?;
    let vol = hull.volume();
    Ok(Doc::ok(
        json!({ "result": vol.to_string(), "dim": hull.dim(), "vertices": hull.vertices() }),
        format!("volume: {vol}\ndim: {}\nvertices: {}", hull.dim(), one_based(hull.vertices())),
    ))
}

/// Deterministic, fairly generic heights for the `--check` route.
fn check_lifts(sets: &[PointSet]) -> Vec<Lift> {
    sets.iter()
        .enumerate()
        .map(|(j, set)| {
            let heights = (0..set.len())
                .map(|i| BigRational::from_integer((((i + 1) * (j + 3) * (i + j + 5)) % 11).into()))
                .collect();
            Lift::new(set.clone(), heights).expect("one height per point")
        })
        .collect()
}

fn cmd_mixed_volume(job: &JobFile, check: bool) -> Result<Doc, Failure> {
    let p = job.point_set();
    let sets: Vec<PointSet> = job.daughters()?.iter().map(|d| p.subset(d)).collect();
    let mv = mixed_volume(&sets)?;
    let witness = mv_zero_witness(&sets)?;
    if check {
        let k = khovanskii_mv(&check_lifts(&sets))?.value;
        if k != mv {
            return Err(Error::CheckFailed(format!("subdivision formula gives {k}, oracle gives {mv}")).into());
        }
    }
    let mut text = format!("mixed volume: {mv}");
    if let Some(w) = &witness {
        let _ = write!(text, "\nzero witness: {}", one_based(w));
    }
    Ok(Doc::ok(json!({ "result": mv.to_string(), "zero_witness": witness }), text))
}

fn cmd_daughter_check(job: &JobFile) -> Result<Doc, Failure> {
    let p = job.point_set();
    let mut entries = Vec::new();
    let mut text = String::new();
    let mut failed = false;
    for (j, d) in job.daughters()?.iter().enumerate() {
        let c = daughter_check(d, &p)?;
        failed |= !c.accepted;
        let removed: Vec<Value> = c.removed.iter().map(face_json).collect();
        entries.push(json!({ "accepted": c.accepted, "removed": removed, "violation": c.violation }));
        let status = if c.accepted { "daughter" } else { "not a daughter" };
        let _ = writeln!(text, "D{}: {status}", j + 1);
        for f in &c.removed {
            let _ = writeln!(text, "  removes face {} (dim {})", one_based(&f.points), f.dim);
        }
        if let Some(v) = &c.violation {
            let _ = writeln!(text, "  {v}");
        }
    }
    Ok(Doc { json: json!({ "daughters": entries, "result": !failed }), text, failed })
}

fn family(job: &JobFile) -> Result<DaughterFamily, Failure> {
    Ok(DaughterFamily::new(job.point_set(), job.daughters()?)?)
}

fn cmd_semi_check(job: &JobFile) -> Result<Doc, Failure> {
    let fam = family(job)?;
    let class = classify_faces(&fam);
    let sutures: Vec<Value> = class.sutures.iter().map(face_json).collect();
    let mut text = format!("semi-interlaced: {}\nsutures: {}", class.semi, class.sutures.len());
    for f in &class.sutures {
        let _ = write!(text, "\n  {} (dim {})", one_based(&f.points), f.dim);
    }
    if let Some(f) = &class.violation {
        let _ = write!(
            text,
            "\nface {} of dimension {} meets only {} daughters",
            one_based(&f.points),
            f.dim,
            fam.meeting(f).len()
        );
    }
    Ok(Doc {
        json: json!({
            "result": class.semi,
            "sutures": sutures,
            "violation": class.violation.as_ref().map(face_json),
        }),
        text,
        failed: !class.semi,
    })
}

fn cmd_sutures(job: &JobFile, checked: bool) -> Result<Doc, Failure> {
    let fam = family(job)?;
    let table = if checked { suture_system_checked(&fam)? } else { suture_system(&fam)? };
    let mv = table.mixed_volume();
    let mut text = format!("mixed volume: {mv}\nsutures: {}\n", table.sutures.len());
    for (i, f) in table.sutures.iter().enumerate() {
        let _ = writeln!(
            text,
            "  S{}: {} dim {}  v = {}  vdag = {}",
            i + 1,
            one_based(&f.points),
            f.dim,
            table.v[i],
            table.vdag[i]
        );
    }
    for (name, m) in [("C", &table.c), ("D", &table.dmat)] {
        let _ = writeln!(text, "{name}:");
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "  [{}]", row.join(", "));
        }
    }
    Ok(Doc::ok(
        json!({
            "result": mv.to_string(),
            "sutures": table.sutures.iter().map(face_json).collect::<Vec<_>>(),
            "c": matrix_json(&table.c),
            "d": matrix_json(&table.dmat),
            "v": ints_json(&table.v),
            "vdag": ints_json(&table.vdag),
        }),
        text,
    ))
}

fn voff_doc(r: &VoffReport) -> Doc {
    let mut text = format!("result: {}", r.value);
    if let Some(w) = &r.zero_witness {
        let _ = write!(text, "\nzero witness: {}", one_based(w));
    }
    if !r.untouched.is_empty() {
        let _ = write!(text, "\nfacets without points: {}", one_based(&r.untouched));
    }
    if let Some(o) = &r.oracle {
        let _ = write!(text, "\noracle: {o}");
    }
    if let Some(t) = &r.table {
        let _ = write!(text, "\nsutures: {}", t.sutures.len());
    }
    Doc::ok(
        json!({
            "result": r.value.to_string(),
            "daughters": r.daughters,
            "untouched": r.untouched,
            "zero_witness": r.zero_witness,
            "oracle": r.oracle.as_ref().map(s),
            "sutures": r.table.as_ref().map(|t| t.sutures.len()),
        }),
        text,
    )
}

fn cmd_bk_detect(job: &JobFile) -> Result<Doc, Failure> {
    let p = job.point_set();
    if p.is_empty() {
        return Err(Error::EmptySet.into());
    }
    Ok(match detect_stretched_bk(&p) {
        None => Doc::ok(json!({ "result": Value::Null }), "no stretched B_k decomposition".to_string()),
        Some(b) => {
            let blocks: Vec<Value> =
                b.blocks.iter().map(|blk| Value::Array(blk.iter().map(|q| ints_json(q)).collect())).collect();
            let stretch: Vec<String> = b.stretch.iter().map(ToString::to_string).collect();
            Doc::ok(
                json!({ "result": { "k": b.k, "coords": b.coords, "stretch": ints_json(&b.stretch), "blocks": blocks } }),
                format!(
                    "stretched B_{} along coordinates {} with stretch ({})",
                    b.k,
                    one_based(&b.coords),
                    stretch.join(", ")
                ),
            )
        }
    })
}

fn cmd_mult(job: &JobFile) -> Result<Doc, Failure> {
    let p = job.point_set();
    if let Some(face) = job.params().face {
        let m = orbit_multiplicity(&p, &face)?;
        return Ok(Doc::ok(json!({ "result": m.to_string() }), format!("multiplicity: {m}")));
    }
    let r = toric_report(&p)?;
    let mut text = format!("smooth: {}\nunit coefficients: {}\n", r.smooth, r.unit_coefficients);
    for (f, m) in &r.multiplicities {
        let _ = writeln!(text, "  {} (dim {}): {m}", one_based(&f.points), f.dim);
    }
    let faces: Vec<Value> = r
        .multiplicities
        .iter()
        .map(|(f, m)| json!({ "points": f.points, "dim": f.dim, "multiplicity": m.to_string() }))
        .collect();
    Ok(Doc::ok(json!({ "result": r.smooth, "unit_coefficients": r.unit_coefficients, "faces": faces }), text))
}

fn cmd_verify_lemma(job: &JobFile) -> Result<Doc, Failure> {
    let fam = family(job)?;
    let reports = verify_all_sutures(&fam)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut failed = false;
    for r in &reports {
        let ok = r.holds();
        failed |= !ok;
        let _ = writeln!(
            text,
            "suture {} (dim {}): {} covectors, sum {} vs c = {}: {}",
            one_based(&r.suture.points),
            r.suture.dim,
            r.checks.len(),
            r.coefficient_sum,
            r.coefficient,
            if ok { "ok" } else { "FAILED" }
        );
        entries.push(json!({
            "suture": face_json(&r.suture),
            "holds": ok,
            "covectors": r.checks.len(),
            "coefficient": r.coefficient.to_string(),
            "coefficient_sum": r.coefficient_sum.to_string(),
        }));
    }
    Ok(Doc { json: json!({ "result": !failed, "sutures": entries }), text, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_accept_numbers_and_strings() {
        let job = JobFile::parse(r#"{"dim":1,"points":[[0],["123456789012345678901234567890"]]}"#).unwrap();
        assert_eq!(job.points[1][0].0, "123456789012345678901234567890".parse::<BigInt>().unwrap());
        let back = JobFile::parse(&job.to_json()).unwrap();
        assert_eq!(back, job);
    }

    #[test]
    fn schema_errors_name_the_field() {
        let err = JobFile::parse(r#"{"dim":2,"points":[[0,0],[1]]}"#).unwrap_err();
        assert!(err.contains("points[1]"), "{err}");
        let err = JobFile::parse(r#"{"dim":1,"points":[[0],[1]],"daughters":[[0,2]]}"#).unwrap_err();
        assert!(err.contains("daughters[0]"), "{err}");
        let err = JobFile::parse(r#"{"dim":1,"points":[["x"]]}"#).unwrap_err();
        assert!(err.contains("malformed"), "{err}");
    }
}
