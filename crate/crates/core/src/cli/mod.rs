//! Command-line front end. Reports go to stdout as JSON, progress to stderr.
//!
//! Exit codes: 0 success or PASS, 1 FAIL, 2 usage error, 3 resource limit.

mod claims;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::AlgebraicNumber;
use crate::codes::{
    associated_graph, build_code, check_realizable, params_summary, predicted_asymptotics, realize_vectors,
    CodeError, CodeParameters, Realizability,
};
use crate::constructions::{build_named, verify_construction, ConstructionError};
use crate::graph::{canonical_form, chromatic_number, ColoringOutcome, Partition, SignedGraph};
use crate::io::{
    graph_file_to_json, number_to_json, parse_graph_json, parse_lambda, parse_number, parse_vectors_json, poly_to_json,
    query_to_json, vectors_to_json, FormatError, GraphFile,
};
use crate::search::{
    compute_m, forbidden_family, kp_search, spectral_radius_order, ForbiddenFamily, Limits, SearchError, SearchOptions,
};
use crate::spectral::{char_poly, spectral_report};

pub use claims::{run_claim, ClaimId, CLAIMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Vertex cap for enumerations unless `SGSPEC_MAX_N` says otherwise.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Limit(_) => EXIT_LIMIT,
            CliError::Failed(_) => EXIT_FAIL,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::VerificationFailed { .. } => CliError::Failed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::CertificateFailed(_) | CodeError::NumericFailure(_) => CliError::Failed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "sgspec", version, about = "Exact spectra of signed graphs and spherical two-distance sets")]
pub struct Cli {
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Enumeration vertex cap; overrides SGSPEC_MAX_N.
    #[arg(long, global = true)]
    pub limit_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic number, degrees, characteristic polynomial and λ queries for a graph file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Emit a named construction, optionally with its verification report.
    Gallery {
        /// Construction name, or `all`.
        name: String,
        params: Vec<i64>,
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Check a registered claim, or re-check a saved report.
    Verify {
        /// Claim id; omit with --replay.
        claim: Option<String>,
        /// Use the full enumeration where a reduction is the default.
        #[arg(long)]
        long: bool,
        /// Report file to re-verify.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Spherical two-distance codes.
    Code {
        #[command(subcommand)]
        kind: CodeKind,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long = "max-n")]
    pub max_n: usize,
    /// Only connected graphs.
    #[arg(long)]
    pub connected: bool,
}

#[derive(Subcommand, Debug)]
pub enum SearchKind {
    /// k(λ): fewest vertices of a graph with largest eigenvalue λ.
    K {
        #[command(flatten)]
        common: SearchArgs,
    },
    /// k_p(λ): least order-to-multiplicity ratio with χ ≤ p.
    Kp {
        #[command(flatten)]
        common: SearchArgs,
        #[arg(short)]
        p: usize,
    },
    /// M(λ, N): largest multiplicity under the χ, tail and forbidden-family constraints.
    #[command(name = "M")]
    M {
        #[command(flatten)]
        common: SearchArgs,
        #[arg(short)]
        p: usize,
        /// Forbidden family order bound; 0 for no family (default ⌊λ²⌋ + 2).
        #[arg(long)]
        family_h: Option<usize>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Subcommand, Debug)]
pub enum CodeKind {
    /// λ, p and the leading-order size formula.
    Params {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build a code from a witness graph with exact certificates.
    Build {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short)]
        d: usize,
        /// Witness graph file.
        #[arg(long, conflicts_with = "named")]
        witness: Option<PathBuf>,
        /// Witness from the gallery, e.g. `h3_hat` or `complete_negative:3`.
        #[arg(long)]
        named: Option<String>,
        /// Comma-separated colors; defaults to an optimal coloring.
        #[arg(long)]
        coloring: Option<String>,
        /// Include a numeric realization and its round-trip check.
        #[arg(long)]
        vectors: bool,
    },
    /// Exact realizability of a graph (SG-JSON) or vector file (vecjson) in ℝ^d.
    Check {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short)]
        d: Option<usize>,
        file: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

/// Parses arguments, runs the command, prints the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            emit(&report);
            code
        }
        Err(e) => {
            eprintln!("sgspec: {e}");
            if matches!(e, CliError::Limit(_) | CliError::Failed(_)) {
                emit(&json!({"error": e.to_string()}));
            }
            e.exit_code()
        }
    }
}

fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string(v).expect("serializable"));
}

fn enumeration_cap(cli: &Cli) -> Result<usize, CliError> {
    if let Some(n) = cli.limit_n {
        return Ok(n);
    }
    match std::env::var("SGSPEC_MAX_N") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("SGSPEC_MAX_N must be a count, got {s:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

pub(crate) fn search_options(cli: &Cli, connected: bool) -> Result<SearchOptions, CliError> {
    Ok(SearchOptions {
        jobs: cli.jobs,
        limits: Limits { max_n: enumeration_cap(cli)? },
        connected,
    })
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn quadratic_lambda(s: &str) -> Result<AlgebraicNumber, CliError> {
    parse_lambda(s)?
        .as_quadratic()
        .cloned()
        .ok_or_else(|| CliError::Usage("searches need λ in a quadratic field".into()))
}

fn code_params(a: &ParamArgs) -> Result<CodeParameters, CliError> {
    Ok(CodeParameters::new(parse_number(&a.alpha)?, parse_number(&a.beta)?)?)
}

/// `name` or `name:p1,p2`.
fn parse_named(s: &str) -> Result<(String, Vec<i64>), CliError> {
    let (name, params) = s.split_once(':').unwrap_or((s, ""));
    let params = params
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad parameter {t:?}"))))
        .collect::<Result<_, _>>()?;
    Ok((name.to_string(), params))
}

fn execute(cli: &Cli) -> Result<(Value, i32), CliError> {
    match &cli.command {
        Command::Analyze { file, lambda } => Ok((analyze(file, lambda.as_deref())?, EXIT_OK)),
        Command::Gallery { name, params, verify } => gallery(name, params, *verify),
        Command::Search { kind } => Ok((search(cli, kind)?, EXIT_OK)),
        Command::Verify { claim, long, replay } => match (claim, replay) {
            (_, Some(path)) => {
                let text = read_file(path)?;
                let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad report: {e}")))?;
                let r = claims::replay(&v)?;
                let code = if r["verdict"] == "PASS" { EXIT_OK } else { EXIT_FAIL };
                Ok((r, code))
            }
            (Some(id), None) => {
                let id: ClaimId = id.parse().map_err(CliError::Usage)?;
                eprintln!("sgspec: checking {}", id.as_str());
                let r = run_claim(id, *long, &search_options(cli, false)?)?;
                let code = if r["verdict"] == "PASS" { EXIT_OK } else { EXIT_FAIL };
                Ok((r, code))
            }
            (None, None) => Err(CliError::Usage(format!(
                "verify needs a claim id ({}) or --replay",
                CLAIMS.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(", ")
            ))),
        },
        Command::Code { kind } => code(kind),
    }
}

fn coloring_json(g: &SignedGraph) -> (Value, Value) {
    match chromatic_number(g) {
        ColoringOutcome::Finite { chi, certificate } => (json!(chi), json!({"colors": certificate.colors()})),
        ColoringOutcome::Infinite { u, v, path } => (
            json!("infinite"),
            json!({"negative_edge": [u, v], "positive_path": path}),
        ),
    }
}

fn analyze(file: &Path, lambda: Option<&str>) -> Result<Value, CliError> {
    let text = read_file(file)?;
    let gf = parse_graph_json(&text)?;
    let g = gf.to_signed();
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let positive = g.edges().iter().filter(|e| e.2 > 0).count();
    let (chi, certificate) = coloring_json(&g);
    let mut m = Map::new();
    m.insert("n".into(), json!(n));
    m.insert("kind".into(), json!(if matches!(gf, GraphFile::Signed(_)) { "signed" } else { "plain" }));
    m.insert("edges".into(), json!(g.edge_count()));
    m.insert("positive_edges".into(), json!(positive));
    m.insert("negative_edges".into(), json!(g.edge_count() - positive));
    m.insert(
        "degrees".into(),
        json!({
            "min": degrees.iter().min().copied().unwrap_or(0),
            "max": degrees.iter().max().copied().unwrap_or(0),
            "sequence": degrees,
        }),
    );
    m.insert("connected".into(), json!(g.is_connected()));
    m.insert("chi".into(), chi);
    m.insert("chi_certificate".into(), certificate);
    m.insert("char_poly".into(), poly_to_json(&char_poly(&g)));
    if let Some(l) = lambda {
        let q = parse_lambda(l)?;
        let r = spectral_report(&g, &q).map_err(|e| CliError::Usage(e.to_string()))?;
        let cmp = r.comparison.map(|o| match o {
            std::cmp::Ordering::Less => "less",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "greater",
        });
        m.insert(
            "lambda".into(),
            json!({"value": query_to_json(&q), "multiplicity": r.multiplicity, "top_eigenvalue": cmp}),
        );
    }
    Ok(Value::Object(m))
}

pub(crate) fn verification_json(r: &crate::constructions::VerificationReport) -> Value {
    json!({
        "label": r.label(),
        "pass": r.pass(),
        "checks": r.checks.iter().map(|c| json!({
            "fact": c.fact, "expected": c.expected, "actual": c.actual, "pass": c.pass,
        })).collect::<Vec<_>>(),
    })
}

fn gallery(name: &str, params: &[i64], verify: bool) -> Result<(Value, i32), CliError> {
    let items: Vec<(String, Vec<i64>)> = if name == "all" {
        crate::constructions::gallery_items()
            .into_iter()
            .map(|(n, p)| (n.to_string(), p))
            .collect()
    } else {
        vec![(name.to_string(), params.to_vec())]
    };
    let mut out = Vec::new();
    let mut all_pass = true;
    for (name, params) in items {
        let c = build_named(&name, &params)?;
        let graph = match &c.graph {
            crate::constructions::ConstructionGraph::Signed(g) => GraphFile::Signed(g.clone()),
            crate::constructions::ConstructionGraph::Plain(g) => GraphFile::Plain(g.clone()),
        };
        let mut m = Map::new();
        m.insert("name".into(), json!(name));
        m.insert("params".into(), json!(params));
        m.insert("graph".into(), graph_file_to_json(&graph));
        if verify {
            let r = verify_construction(&c);
            all_pass &= r.pass();
            m.insert("verification".into(), verification_json(&r));
        }
        out.push(Value::Object(m));
    }
    let report = if out.len() == 1 { out.pop().expect("one item") } else { json!({"items": out}) };
    Ok((report, if all_pass { EXIT_OK } else { EXIT_FAIL }))
}

fn search(cli: &Cli, kind: &SearchKind) -> Result<Value, CliError> {
    match kind {
        SearchKind::K { common } => {
            let lambda = quadratic_lambda(&common.lambda)?;
            eprintln!("sgspec: k({lambda}) up to {} vertices", common.max_n);
            Ok(spectral_radius_order(&lambda, common.max_n, &search_options(cli, common.connected)?)?.to_json())
        }
        SearchKind::Kp { common, p } => {
            let lambda = quadratic_lambda(&common.lambda)?;
            eprintln!("sgspec: k_{p}({lambda}) up to {} vertices", common.max_n);
            Ok(kp_search(&lambda, *p, common.max_n, &search_options(cli, common.connected)?)?.to_json())
        }
        SearchKind::M { common, p, family_h } => {
            let lambda = quadratic_lambda(&common.lambda)?;
            let opts = search_options(cli, common.connected)?;
            if common.max_n > DEFAULT_MAX_N {
                return Err(CliError::Limit(format!("M is computed on at most {DEFAULT_MAX_N} vertices")));
            }
            let h = match family_h {
                Some(h) => *h,
                None => {
                    let d = lambda.square().floor();
                    usize::try_from(d + 2).unwrap_or(usize::MAX)
                }
            };
            let family = if h == 0 { ForbiddenFamily::empty(&lambda) } else { forbidden_family(&lambda, h)? };
            eprintln!("sgspec: M_{p}({lambda}, {}) with a {}-member family", common.max_n, family.len());
            Ok(compute_m(&lambda, *p, common.max_n, &family, &opts)?.to_json())
        }
    }
}

fn witness_from_args(witness: &Option<PathBuf>, named: &Option<String>) -> Result<SignedGraph, CliError> {
    match (witness, named) {
        (Some(path), _) => Ok(parse_graph_json(&read_file(path)?)?.to_signed()),
        (None, Some(spec)) => {
            let (name, params) = parse_named(spec)?;
            Ok(build_named(&name, &params)?.graph.spectral())
        }
        (None, None) => Err(CliError::Usage("code build needs --witness or --named".into())),
    }
}

fn code(kind: &CodeKind) -> Result<(Value, i32), CliError> {
    match kind {
        CodeKind::Params { params } => Ok((params_summary(&code_params(params)?, &[])?, EXIT_OK)),
        CodeKind::Build {
            params,
            d,
            witness,
            named,
            coloring,
            vectors,
        } => {
            let c = code_params(params)?;
            let g = witness_from_args(witness, named)?;
            let parts = match coloring {
                Some(s) => {
                    let colors = s
                        .split(',')
                        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad color {t:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    Partition::from_colors(&colors).map_err(|e| CliError::Usage(e.to_string()))?
                }
                None => match chromatic_number(&g) {
                    ColoringOutcome::Finite { certificate, .. } => certificate,
                    ColoringOutcome::Infinite { .. } => {
                        return Err(CliError::Usage("witness has no valid coloring".into()));
                    }
                },
            };
            let inst = build_code(&g, &parts, &c, *d)?;
            let formula = predicted_asymptotics(&c, &[]).ok().map(|a| a.formula);
            let mut report = inst.to_json(formula.as_deref());
            if *vectors {
                let v = realize_vectors(&inst)?;
                let back = associated_graph(&v, &c, 1e-6)?;
                let round_trip = canonical_form(&back.with_sign(1)) == canonical_form(&inst.graph.with_sign(1));
                report["round_trip"] = json!(round_trip);
                report["vectors"] = vectors_to_json(inst.d, &v);
                if !round_trip {
                    return Ok((report, EXIT_FAIL));
                }
            }
            Ok((report, EXIT_OK))
        }
        CodeKind::Check { params, d, file, tol } => {
            let c = code_params(params)?;
            let text = read_file(file)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad input: {e}")))?;
            let (g, dim) = if v.get("format").and_then(Value::as_str) == Some("vecjson/1") {
                let (dim, rows) = parse_vectors_json(&text)?;
                (associated_graph(&rows, &c, *tol)?, d.unwrap_or(dim))
            } else {
                let g = parse_graph_json(&text)?;
                let GraphFile::Plain(g) = g else {
                    return Err(CliError::Usage("code check needs a plain graph or a vector file".into()));
                };
                let dim = d.ok_or_else(|| CliError::Usage("code check on a graph needs -d".into()))?;
                (g, dim)
            };
            let mut m = Map::new();
            m.insert("N".into(), json!(g.n()));
            m.insert("d".into(), json!(dim));
            m.insert("alpha".into(), number_to_json(&c.alpha));
            m.insert("beta".into(), number_to_json(&c.beta));
            let ok = match check_realizable(&g, &c, dim)? {
                Realizability::Yes { rank, .. } => {
                    m.insert("realizable".into(), json!(true));
                    m.insert("rank".into(), json!(rank));
                    m.insert("psd".into(), json!("certified"));
                    true
                }
                Realizability::RankTooLarge { rank } => {
                    m.insert("realizable".into(), json!(false));
                    m.insert("rank".into(), json!(rank));
                    m.insert("psd".into(), json!("certified"));
                    false
                }
                Realizability::NotPsd { witness, value } => {
                    m.insert("realizable".into(), json!(false));
                    m.insert("psd".into(), json!("refuted"));
                    m.insert(
                        "negative_direction".into(),
                        json!({"x": witness.iter().map(number_to_json).collect::<Vec<_>>(), "value": number_to_json(&value)}),
                    );
                    false
                }
            };
            Ok((Value::Object(m), if ok { EXIT_OK } else { EXIT_FAIL }))
        }
    }
}
