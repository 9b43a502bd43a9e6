//! Command implementations behind the `hyperspectra` binary.
//!
//! Every command produces a [`Report`]: a JSON record (with a schema
//! version) plus a human-readable table, and whether all its checks passed.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use hyperspectra::certify::{
    build_certificate, check_alpha_normal, CertificateVerdict, VerdictKind,
};
use hyperspectra::io::{self, HypergraphFile};
use hyperspectra::power::{gen_power, predicted_rho, PowerSpec};
use hyperspectra::{spectral_radius, Error as CoreError, Family, SolverOptions, SpectralResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Absolute tolerance for certificate equalities and strictness.
pub const CERTIFY_TOLERANCE: f64 = 1e-9;

/// `|rho(G^{k,s}) - rho(G)^{ts/k}|` accepted by `power --verify`.
pub const POWER_IDENTITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "hyperspectra", version, about = "Spectral radii and certificates for uniform hypergraphs")]
pub struct Cli {
    /// Solver tolerance on the eigenvalue bracket width.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    #[arg(long = "max-iters", global = true, default_value_t = 100_000)]
    pub max_iters: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Bp,
    Bl1,
    Bl2,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Bp => Family::P,
            FamilyArg::Bl1 => Family::L1,
            FamilyArg::Bl2 => Family::L2,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate B_m^P, B_m^L(1) or B_m^L(2) in the hypergraph file format.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Output path; the file is printed to stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Spectral radius of a connected hypergraph.
    SpectralRadius {
        file: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        shift: f64,
        #[arg(long)]
        emit_vector: bool,
    },
    /// Classify a weighted incidence certificate.
    Certify(CertifyArgs),
    /// Build the generalized power G^{k,s} of a seed hypergraph.
    Power {
        seed: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        emit_map: bool,
        /// Solve both hypergraphs and compare with rho(G)^{ts/k}.
        #[arg(long)]
        verify: bool,
    },
    /// Check rho(B_m^L(1)) > rho(B_m^L(2)) > rho(B_m^P) over a (k, m) grid.
    VerifyConjecture {
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 5)]
        m_min: usize,
        #[arg(long, default_value_t = 10)]
        m_max: usize,
    },
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Hypergraph file to check a user-supplied matrix against.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    pub file: Option<PathBuf>,
    #[arg(long, requires = "file")]
    pub alpha: Option<f64>,
    /// JSON list of [vertex, edge, weight] triples.
    #[arg(long, requires = "file")]
    pub matrix: Option<PathBuf>,
    /// Build and classify the explicit certificate of a family.
    #[arg(long, value_enum, requires_all = ["k", "m"])]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

/// Outcome of one command.
#[derive(Debug)]
pub struct Report {
    pub record: Value,
    pub table: String,
    pub success: bool,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Records => {
                let mut s = serde_json::to_string_pretty(&self.record).expect("json value");
                s.push('\n');
                s
            }
            OutputFormat::Table => self.table.clone(),
        }
    }
}

fn record(command: &str, body: Value) -> Value {
    let mut out = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}

pub fn run(cli: &Cli) -> Result<Report> {
    let solver = SolverOptions {
        tolerance: cli.tol,
        max_iterations: cli.max_iters,
        ..SolverOptions::default()
    };
    match &cli.command {
        Command::Gen { family, k, m, out } => cmd_gen((*family).into(), *k, *m, out.as_deref()),
        Command::SpectralRadius {
            file,
            shift,
            emit_vector,
        } => cmd_spectral(
            file,
            &SolverOptions {
                shift: *shift,
                ..solver
            },
            *emit_vector,
        ),
        Command::Certify(args) => cmd_certify(args),
        Command::Power {
            seed,
            k,
            s,
            out,
            emit_map,
            verify,
        } => cmd_power(seed, *k, *s, out, *emit_map, verify.then_some(&solver)),
        Command::VerifyConjecture {
            k_min,
            k_max,
            m_min,
            m_max,
        } => cmd_verify_conjecture(*k_min..=*k_max, *m_min..=*m_max, &solver),
    }
}

pub fn cmd_gen(family: Family, k: usize, m: usize, out: Option<&Path>) -> Result<Report> {
    let g = family.generate(k, m)?;
    let file = HypergraphFile::from(&g);
    let text = io::hypergraph_to_string(&file);
    let table = match out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            format!(
                "{} k={k} m={m}: n={} edges={} -> {}\n",
                family.name(),
                g.graph.n(),
                g.graph.m(),
                path.display()
            )
        }
        None => text,
    };
    Ok(Report {
        record: record(
            "gen",
            json!({
                "family": family.name(),
                "k": k,
                "m": m,
                "n": g.graph.n(),
                "edges": g.graph.m(),
                "path": out.map(|p| p.display().to_string()),
            }),
        ),
        table,
        success: true,
    })
}

fn spectral_record(r: &SpectralResult, converged: bool, emit_vector: bool) -> Value {
    let mut v = json!({
        "converged": converged,
        "rho": r.rho,
        "lower": r.lower,
        "upper": r.upper,
        "iterations": r.iterations,
        "residual": r.residual,
    });
    if emit_vector {
        v["eigenvector"] = json!(r.eigenvector);
    }
    v
}

pub fn cmd_spectral(file: &Path, opts: &SolverOptions, emit_vector: bool) -> Result<Report> {
    let g = io::read_hypergraph(file)?;
    let (result, converged) = match spectral_radius(&g.graph, opts) {
        Ok(r) => (r, true),
        Err(CoreError::NotConverged { best }) => (*best, false),
        Err(e) => return Err(e.into()),
    };
    let mut table = String::new();
    writeln!(table, "rho        {:.15}", result.rho)?;
    writeln!(table, "bracket    [{:.15}, {:.15}]", result.lower, result.upper)?;
    writeln!(table, "iterations {}", result.iterations)?;
    writeln!(table, "residual   {:.3e}", result.residual)?;
    if !converged {
        writeln!(table, "NOT CONVERGED")?;
    }
    if emit_vector {
        for (i, x) in result.eigenvector.iter().enumerate() {
            writeln!(table, "x[{i}] = {x:.15}")?;
        }
    }
    Ok(Report {
        record: record("spectral-radius", spectral_record(&result, converged, emit_vector)),
        table,
        success: converged,
    })
}

#[derive(Serialize)]
struct CertifyBody<'a> {
    family: Option<&'static str>,
    k: usize,
    m: usize,
    y: Option<f64>,
    alpha: f64,
    alpha_bound: f64,
    verdict: &'a CertificateVerdict,
}

pub fn cmd_certify(args: &CertifyArgs) -> Result<Report> {
    let (graph, weights, alpha, family, y) = match (&args.family, &args.file) {
        (Some(f), _) => {
            let (k, m) = (args.k.expect("clap requires k"), args.m.expect("clap requires m"));
            let family: Family = (*f).into();
            let c = build_certificate(family, k, m)?;
            let alpha = c.alpha();
            (c.graph.graph, c.weights, alpha, Some(family.name()), Some(c.root.y))
        }
        (None, Some(file)) => {
            let Some(alpha) = args.alpha else {
                bail!("--alpha is required when certifying a file");
            };
            let Some(matrix) = &args.matrix else {
                bail!("--matrix is required when certifying a file");
            };
            let g = io::read_hypergraph(file)?;
            let text = std::fs::read_to_string(matrix)
                .with_context(|| format!("reading {}", matrix.display()))?;
            (g.graph, io::parse_matrix(&text)?, alpha, None, None)
        }
        (None, None) => bail!("either a hypergraph file or --family is required"),
    };
    let verdict = check_alpha_normal(&graph, &weights, alpha, CERTIFY_TOLERANCE)?;
    let alpha_bound = alpha.powf(-1.0 / graph.k() as f64);

    let mut table = String::new();
    if let Some(name) = family {
        writeln!(table, "family     {name} (k={}, m={})", graph.k(), graph.m())?;
    }
    if let Some(y) = y {
        writeln!(table, "alpha^1/3  {y:.15}")?;
    }
    writeln!(table, "alpha      {alpha:.15}")?;
    writeln!(table, "alpha^-1/k {alpha_bound:.15}")?;
    writeln!(table, "verdict    {:?}", verdict.kind)?;
    writeln!(table, "rho bound  {:?}", verdict.rho_bound)?;
    for w in &verdict.witnesses {
        writeln!(table, "witness    {}", serde_json::to_string(w)?)?;
    }

    let body = CertifyBody {
        family,
        k: graph.k(),
        m: graph.m(),
        y,
        alpha,
        alpha_bound,
        verdict: &verdict,
    };
    Ok(Report {
        record: record("certify", serde_json::to_value(&body)?),
        table,
        success: verdict.kind != VerdictKind::Invalid,
    })
}

pub fn cmd_power(
    seed_path: &Path,
    k: usize,
    s: usize,
    out: &Path,
    emit_map: bool,
    verify: Option<&SolverOptions>,
) -> Result<Report> {
    let seed = io::read_hypergraph(seed_path)?.graph;
    let spec = PowerSpec::new(seed.k(), k, s)?;
    let (power, map) = gen_power(&seed, spec)?;
    io::write_hypergraph(out, &HypergraphFile::from(&power))?;

    let mut table = format!(
        "G^{{{k},{s}}} of a {}-uniform seed: n={} edges={} -> {}\n",
        seed.k(),
        power.n(),
        power.m(),
        out.display()
    );
    let mut body = json!({
        "t": spec.t(),
        "k": spec.k(),
        "s": spec.s(),
        "n": power.n(),
        "edges": power.m(),
        "path": out.display().to_string(),
    });
    if emit_map {
        body["map"] = serde_json::to_value(&map)?;
        writeln!(table, "vertex blocks {:?}", map.vertex_blocks)?;
        writeln!(table, "edge blocks   {:?}", map.edge_blocks)?;
    }
    let mut success = true;
    if let Some(opts) = verify {
        let base = spectral_radius(&seed, opts)?;
        let lifted = spectral_radius(&power, opts)?;
        let predicted = predicted_rho(base.rho, spec)?;
        let gap = (lifted.rho - predicted).abs();
        success = gap <= POWER_IDENTITY_TOLERANCE;
        body["verify"] = json!({
            "rho_seed": base.rho,
            "rho_power": lifted.rho,
            "predicted": predicted,
            "gap": gap,
            "tolerance": POWER_IDENTITY_TOLERANCE,
            "holds": success,
        });
        writeln!(table, "rho(G)          {:.15}", base.rho)?;
        writeln!(table, "rho(G^k,s)      {:.15}", lifted.rho)?;
        writeln!(table, "rho(G)^(ts/k)   {predicted:.15}")?;
        writeln!(table, "gap             {gap:.3e} ({})", if success { "ok" } else { "FAIL" })?;
    }
    Ok(Report {
        record: record("power", body),
        table,
        success,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

impl From<&SpectralResult> for Bracket {
    fn from(r: &SpectralResult) -> Self {
        Self {
            rho: r.rho,
            lower: r.lower,
            upper: r.upper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRow {
    pub k: usize,
    pub m: usize,
    pub rho_bl1: Option<Bracket>,
    pub rho_bl2: Option<Bracket>,
    pub rho_bp: Option<Bracket>,
    pub ordering_holds: bool,
    /// `rho_bl1 - rho_bl2` and `rho_bl2 - rho_bp`.
    pub margins: Option<[f64; 2]>,
    pub error: Option<String>,
}

pub fn verification_row(k: usize, m: usize, opts: &SolverOptions) -> VerificationRow {
    let solve = |f: Family| -> Result<Bracket, String> {
        let g = f.generate(k, m).map_err(|e| e.to_string())?;
        spectral_radius(&g.graph, opts)
            .map(|r| Bracket::from(&r))
            .map_err(|e| format!("{}: {e}", f.name()))
    };
    let results = [solve(Family::L1), solve(Family::L2), solve(Family::P)];
    let error = results
        .iter()
        .filter_map(|r| r.as_ref().err().cloned())
        .reduce(|a, b| format!("{a}; {b}"));
    let [l1, l2, p] = results.map(Result::ok);
    let (margins, ordering_holds) = match (l1, l2, p) {
        (Some(l1), Some(l2), Some(p)) => {
            let margins = [l1.rho - l2.rho, l2.rho - p.rho];
            let holds =
                margins[0] > l1.width() + l2.width() && margins[1] > l2.width() + p.width();
            (Some(margins), holds)
        }
        _ => (None, false),
    };
    VerificationRow {
        k,
        m,
        rho_bl1: l1,
        rho_bl2: l2,
        rho_bp: p,
        ordering_holds,
        margins,
        error,
    }
}

pub fn cmd_verify_conjecture(
    ks: std::ops::RangeInclusive<usize>,
    ms: std::ops::RangeInclusive<usize>,
    opts: &SolverOptions,
) -> Result<Report> {
    if *ks.start() < 3 || *ms.start() < 5 || ks.is_empty() || ms.is_empty() {
        bail!("verify-conjecture needs 3 <= k-min <= k-max and 5 <= m-min <= m-max");
    }
    let grid: Vec<(usize, usize)> = ks
        .clone()
        .flat_map(|k| ms.clone().map(move |m| (k, m)))
        .collect();
    // collect() on an indexed parallel iterator keeps (k, m) order
    let rows: Vec<VerificationRow> = grid
        .par_iter()
        .map(|&(k, m)| verification_row(k, m, opts))
        .collect();
    let all_hold = rows.iter().all(|r| r.ordering_holds);

    let mut table = String::new();
    writeln!(
        table,
        "{:>2} {:>3} {:>18} {:>18} {:>18} {:>11} {:>11}  holds",
        "k", "m", "rho(B_L1)", "rho(B_L2)", "rho(B_P)", "L1-L2", "L2-P"
    )?;
    let cell = |b: &Option<Bracket>| b.map_or("-".to_string(), |b| format!("{:.15}", b.rho));
    for r in &rows {
        let (d1, d2) = r
            .margins
            .map_or(("-".into(), "-".into()), |[a, b]| (format!("{a:.4e}"), format!("{b:.4e}")));
        writeln!(
            table,
            "{:>2} {:>3} {:>18} {:>18} {:>18} {:>11} {:>11}  {}",
            r.k,
            r.m,
            cell(&r.rho_bl1),
            cell(&r.rho_bl2),
            cell(&r.rho_bp),
            d1,
            d2,
            if r.ordering_holds { "yes" } else { "NO" }
        )?;
        if let Some(e) = &r.error {
            writeln!(table, "      error: {e}")?;
        }
    }
    writeln!(table, "ordering holds on all rows: {all_hold}")?;

    Ok(Report {
        record: record(
            "verify-conjecture",
            json!({ "tolerance": opts.tolerance, "all_hold": all_hold, "rows": rows }),
        ),
        table,
        success: all_hold,
    })
}
