//! `skcodes` command line: table emission and verification suites.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! without spawning a binary.

pub mod fixtures;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use skcodes::basis::basis;
use skcodes::codes::{dord_table, CodeContext, CodeParams};
use skcodes::derived::{conv_params, quantum_csv, quantum_table};
use skcodes::points::CoverParams;
use skcodes::report::RunMeta;
use skcodes::{CurveSpec, Family, FieldContext, NumericalSemigroup};

pub use verify::{Check, VerifyTarget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "skcodes", version, about = "AG codes on the Suzuki-cover curve: tables and verifications")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized checks, recorded in every header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: rayon's choice).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Genus, conductor and symmetry of a numerical semigroup.
    Semigroup {
        /// Weierstrass semigroup of the cover with this q.
        #[arg(long, conflicts_with = "generators")]
        q: Option<u64>,
        /// Explicit generators, comma separated.
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<u64>>,
        #[arg(long, default_value = "suzuki-cover")]
        family: Family,
        /// Also list the gaps.
        #[arg(long)]
        gaps: bool,
    },
    /// Closed-form constants of a curve.
    Curve {
        #[arg(long, default_value = "suzuki-cover")]
        family: Family,
        #[arg(long, default_value_t = 1)]
        s: u32,
    },
    /// Multi-point code parameters, one row per r.
    Multipoint {
        #[arg(long, default_value = "suzuki-cover")]
        family: Family,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u64>,
    },
    /// Affine rational points in canonical order.
    Enumerate {
        #[arg(long, default_value_t = 8)]
        q: u64,
    },
    /// Monomial basis of L(rho P_inf).
    Basis {
        #[arg(long)]
        rho: u64,
        #[arg(long, default_value_t = 8)]
        q: u64,
    },
    /// Dual one-point code parameters with the order bound, l = 2 ..= 3g + 1.
    DordTable {
        #[arg(long, default_value_t = 8)]
        q: u64,
        /// A single row.
        #[arg(long)]
        ell: Option<u64>,
    },
    /// CSS quantum code parameters, s = n - 2l for l = 2g ..= 3g + 1.
    QuantumTable {
        #[arg(long, default_value_t = 8)]
        q: u64,
    },
    /// Unit-memory convolutional code parameters.
    Conv {
        #[arg(long)]
        rho: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 8)]
        q: u64,
    },
    /// Run a verification suite; exit 1 if it fails.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Random inner-product pairs for the duality check.
        #[arg(long, default_value_t = 2000)]
        pairs: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs. Never exits the process.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => execute(&cfg),
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            Outcome {
                exit_code: code,
                stdout,
                stderr,
            }
        }
    }
}

/// [`run`] inside a dedicated thread pool when `--threads` is given.
pub fn execute(cfg: &RunConfig) -> Outcome {
    let result = match cfg.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cfg)),
            Err(e) => Err(usage(format!("--threads {n}: {e}"))),
        },
        None => run(cfg),
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome {
            exit_code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (body, exit_code) = render(cfg)?;
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Outcome {
                exit_code,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            exit_code,
            stdout: body,
            stderr: String::new(),
        }),
    }
}

/// The cover with this q, searching s = 1, 2, ...
pub fn spec_for(family: Family, q: u64) -> Result<CurveSpec, CliError> {
    (1..=8)
        .map(|s| CurveSpec::new(family, s))
        .find(|c| c.q_u64() == q)
        .ok_or_else(|| usage(format!("no {} curve with q = {q}", family.name())))
}

/// Modulus of the evaluation field F_{q^4} when it is one of the documented fields.
fn field_modulus(spec: &CurveSpec) -> Option<String> {
    if spec.family != Family::SuzukiCover {
        return None;
    }
    let k = 4 * (2 * spec.s + 1);
    if k == 12 {
        return Some(FieldContext::gf4096().modulus_string());
    }
    FieldContext::binary(k).map(|f| f.modulus_string())
}

fn cover_semigroup(spec: &CurveSpec) -> Result<(NumericalSemigroup, Vec<u64>, u64), CliError> {
    let po = spec
        .pole_orders_u64()
        .ok_or_else(|| usage("pole orders exceed 64 bits"))?;
    let genus = spec.genus_u64().ok_or_else(|| usage("genus exceeds 64 bits"))?;
    let s = NumericalSemigroup::new(&po, 0).map_err(usage)?;
    Ok((s, po, genus))
}

fn require_q8(q: u64) -> Result<(), CliError> {
    if q != 8 {
        return Err(usage(format!("only q = 8 is supported here, got q = {q}")));
    }
    Ok(())
}

struct Doc {
    meta: RunMeta,
    data: Value,
    csv: Option<String>,
    default: Format,
}

impl Doc {
    fn emit(self, format: Option<Format>) -> Result<String, CliError> {
        match (format.unwrap_or(self.default), self.csv) {
            (Format::Csv, Some(csv)) => Ok(format!("{}{}", self.meta.csv_header(), csv)),
            (Format::Csv, None) => Err(usage("this subcommand has no CSV form; use --format json")),
            (Format::Json, _) => Ok(json_doc(&self.meta, self.data)),
        }
    }
}

fn json_doc(meta: &RunMeta, data: Value) -> String {
    let doc = json!({ "meta": meta, "data": data });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn key_value_csv(pairs: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in pairs {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn render(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let seed = cfg.seed;
    let doc = match &cfg.command {
        Command::Semigroup { q, generators, family, gaps } => {
            let (gens, spec) = match (q, generators) {
                (Some(q), None) => {
                    let spec = spec_for(family.cover(), *q)?;
                    let (_, po, _) = cover_semigroup(&spec)?;
                    (po, Some(spec))
                }
                (None, Some(g)) => (g.clone(), None),
                _ => return Err(usage("give exactly one of --q or --generators")),
            };
            let s = NumericalSemigroup::new(&gens, 0).map_err(usage)?;
            let symmetric = s.is_symmetric().map_err(usage)?;
            let curve_genus = spec.as_ref().and_then(|c| c.genus_u64());
            let mut pairs = vec![
                ("generators", gens.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")),
                ("genus", s.genus().to_string()),
                ("frobenius", s.frobenius_number().map(|f| f.to_string()).unwrap_or_default()),
                ("conductor", s.conductor().to_string()),
                ("symmetric", symmetric.to_string()),
            ];
            if let Some(g) = curve_genus {
                pairs.push(("curve_genus", g.to_string()));
                pairs.push(("genus_matches_curve", (g == s.genus()).to_string()));
            }
            let gap_list = gaps.then(|| s.gaps());
            if let Some(gl) = &gap_list {
                pairs.push(("gaps", gl.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")));
            }
            Doc {
                meta: RunMeta::new(None, seed),
                data: json!({
                    "generators": gens,
                    "genus": s.genus(),
                    "frobenius": s.frobenius_number(),
                    "conductor": s.conductor(),
                    "symmetric": symmetric,
                    "curve_genus": curve_genus,
                    "gaps": gap_list,
                }),
                csv: Some(key_value_csv(&pairs)),
                default: Format::Csv,
            }
        }
        Command::Curve { family, s } => {
            if *s == 0 {
                return Err(usage("--s must be positive"));
            }
            let spec = CurveSpec::new(*family, *s);
            let hurwitz = spec.hurwitz_quotient_check();
            let aut = spec.aut_orders().map(|a| {
                json!({
                    "simple_group_order": a.simple_group_order.to_string(),
                    "curve_aut_order": a.curve_aut_order.to_string(),
                    "field_automorphisms": a.field_automorphisms.to_string(),
                    "field_units": a.field_units.to_string(),
                    "code_aut_subgroup_order": a.code_aut_subgroup_order.to_string(),
                })
            });
            let pairs = [
                ("family", family.name().to_string()),
                ("q", spec.q.to_string()),
                ("q0", spec.q0.to_string()),
                ("m", spec.m.to_string()),
                ("genus", spec.genus.to_string()),
                ("rational_points", spec.rational_points.to_string()),
                ("maximal_point_count", spec.maximal_point_count().to_string()),
                ("hurwitz_holds", hurwitz.holds.to_string()),
            ];
            Doc {
                meta: RunMeta::new(field_modulus(&spec), seed),
                data: json!({
                    "curve": spec,
                    "maximal_point_count": spec.maximal_point_count().to_string(),
                    "hurwitz": hurwitz,
                    "aut_orders": aut,
                }),
                csv: Some(key_value_csv(&pairs)),
                default: Format::Json,
            }
        }
        Command::Multipoint { family, s, r } => {
            if !family.is_cover() || *s == 0 {
                return Err(usage("multi-point codes need a cover family and s >= 1"));
            }
            let spec = CurveSpec::new(*family, *s);
            let rows: Vec<_> = r.iter().map(|&r| spec.multipoint_params(r)).collect();
            let mut csv = format!("{}\n", skcodes::curve::MultipointParams::CSV_HEADER);
            for row in &rows {
                let _ = writeln!(csv, "{}", row.csv_row());
            }
            Doc {
                meta: RunMeta::new(field_modulus(&spec), seed),
                data: to_value(&rows),
                csv: Some(csv),
                default: Format::Csv,
            }
        }
        Command::Enumerate { q } => {
            require_q8(*q)?;
            let ctx = CodeContext::q8().map_err(usage)?;
            let meta = RunMeta::new(Some(ctx.field().modulus_string()), seed);
            let pts = ctx.points();
            let csv = pts.to_csv(&meta);
            if cfg.format.unwrap_or(Format::Csv) == Format::Csv {
                return Ok((csv, 0));
            }
            let rows: Vec<[u32; 5]> = pts
                .points()
                .iter()
                .map(|p| [p.x.code(), p.y.code(), p.t.code(), p.z.code(), p.w.code()])
                .collect();
            Doc {
                meta,
                data: json!({ "count": rows.len(), "columns": ["x", "y", "t", "z", "w"], "points": rows }),
                csv: None,
                default: Format::Json,
            }
        }
        Command::Basis { rho, q } => {
            let spec = spec_for(Family::SuzukiCover, *q)?;
            let (s, po, genus) = cover_semigroup(&spec)?;
            let b = basis(&s, &po, *rho, genus).map_err(usage)?;
            let meta = RunMeta::new(field_modulus(&spec), seed);
            let csv = b.to_csv("");
            Doc {
                meta,
                data: json!({
                    "rho": b.rho,
                    "dimension": b.dimension(),
                    "pole_orders": po,
                    "monomials": b.monomials.iter().map(|m| json!({
                        "exps": m.exps,
                        "pole_order": m.pole_order,
                        "display": m.display(),
                    })).collect::<Vec<_>>(),
                }),
                csv: Some(csv),
                default: Format::Csv,
            }
        }
        Command::DordTable { q, ell } => {
            let spec = spec_for(Family::SuzukiCover, *q)?;
            let (s, _, g) = cover_semigroup(&spec)?;
            let n = CoverParams::from_spec(&spec).affine_point_count();
            let range = match ell {
                Some(l) if *l >= 1 => *l..=*l,
                Some(_) => return Err(usage("--ell must be positive")),
                None => 2..=3 * g + 1,
            };
            let rows = dord_table(&s, n, range).map_err(usage)?;
            let mut csv = format!("{}\n", CodeParams::DORD_CSV_HEADER);
            for r in &rows {
                let _ = writeln!(csv, "{}", r.dord_csv_row());
            }
            Doc {
                meta: RunMeta::new(field_modulus(&spec), seed),
                data: to_value(&rows),
                csv: Some(csv),
                default: Format::Csv,
            }
        }
        Command::QuantumTable { q } => {
            let spec = spec_for(Family::SuzukiCover, *q)?;
            let (s, _, _) = cover_semigroup(&spec)?;
            let n = CoverParams::from_spec(&spec).affine_point_count();
            let rows = quantum_table(&s, n).map_err(usage)?;
            Doc {
                meta: RunMeta::new(field_modulus(&spec), seed),
                data: to_value(&rows),
                csv: Some(quantum_csv(&rows, "")),
                default: Format::Csv,
            }
        }
        Command::Conv { rho, s, q } => {
            let spec = spec_for(Family::SuzukiCover, *q)?;
            let (sg, _, _) = cover_semigroup(&spec)?;
            let n = CoverParams::from_spec(&spec).affine_point_count();
            let c = conv_params(&sg, n, *rho, *s).map_err(usage)?;
            let csv = format!(
                "n,dimension,degree,memory,rho,l,k,df_bound\n{},{},{},{},{},{},{},{}\n",
                c.n, c.dimension, c.degree, c.memory, c.rho, c.l, c.k, c.df_bound
            );
            Doc {
                meta: RunMeta::new(field_modulus(&spec), seed),
                data: to_value(&c),
                csv: Some(csv),
                default: Format::Json,
            }
        }
        Command::Verify { target, pairs } => {
            if cfg.format == Some(Format::Csv) {
                return Err(usage("verification reports are JSON only"));
            }
            let checks = verify::run_target(*target, seed, *pairs).map_err(usage)?;
            let passed = checks.iter().all(|c| c.passed);
            let meta = RunMeta::new(Some(FieldContext::gf4096().modulus_string()), seed);
            let data = json!({ "target": target, "passed": passed, "checks": checks });
            return Ok((json_doc(&meta, data), if passed { 0 } else { 1 }));
        }
    };
    Ok((doc.emit(cfg.format)?, 0))
}
