//! Command-line front end.
//!
//! Settings are resolved as flags > TOML config file > built-in defaults.
//! Exit codes: 0 success, 1 a verified identity missed its tolerance,
//! 2 usage, I/O or parse error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::ArithTable;
use crate::error::{Error, Result};
use crate::explicit::identities::{inverse_square_closed_form, inverse_square_tail};
use crate::explicit::reconstruct::{emit_grid, GridKind};
use crate::explicit::{
    catalan_identity_residual, constant_a, cramer_expansion_residual, derivative_identity_residual,
    integrated_identity_residual, logderiv_half_closed_form, logderiv_half_numeric,
    logderiv_half_report, main_identity_residual, tau_square_sum, trig_identity_residual,
    Companion, IdentityReport, KernelParams, ReportParams, ResidueCache, SeriesGrid,
};
use crate::special::{EvalParams, CATALAN, EULER_GAMMA};
use crate::zeros::{load_zeros, ZeroTable};

pub const DEFAULT_ZEROS: &str = "data/zeros_10k.txt";
pub const DEFAULT_MAX_ZEROS: usize = 10_000;
pub const DEFAULT_ARITH_BOUND: usize = 1_000_000;
/// Six-digit reference value of `A` for the `constant_a` check.
pub const CONSTANT_A_REFERENCE: f64 = -0.759_578;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "zeta-explicit",
    version,
    about = "Explicit formulas over zeta zeros"
)]
pub struct Cli {
    /// TOML file with default settings
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Zero ordinates, one per line
    #[arg(long, global = true, value_name = "PATH")]
    pub zeros: Option<PathBuf>,
    #[arg(long, global = true, value_name = "K")]
    pub max_zeros: Option<usize>,
    /// Kernel parameter, 3 <= x < pi
    #[arg(long, global = true, value_name = "VAL", allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Number of Mangoldt terms in arithmetic series
    #[arg(long, global = true, value_name = "N")]
    pub n_terms: Option<usize>,
    /// Sieve bound for the arithmetic tables
    #[arg(long, global = true, value_name = "N")]
    pub arith_bound: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Comma-separated identity names to run
    #[arg(long, global = true, value_delimiter = ',', value_name = "NAMES")]
    pub suite: Option<Vec<String>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the identity suite and report residuals as JSON lines
    Verify,
    /// Sample a reconstruction on t_min, t_min + step, ..., t_max
    Reconstruct {
        /// mangoldt, moebius, phi or staircase
        which: String,
        #[arg(allow_negative_numbers = true)]
        t_min: f64,
        #[arg(allow_negative_numbers = true)]
        t_max: f64,
        #[arg(allow_negative_numbers = true)]
        step: f64,
    },
    /// Print the constants with method and truncation metadata
    Constants,
}

/// Settings read from a config file; every key optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub zeros: Option<PathBuf>,
    pub max_zeros: Option<usize>,
    pub x: Option<f64>,
    pub n_terms: Option<usize>,
    pub arith_bound: Option<usize>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub suite: Option<Vec<String>>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        toml::from_str(&text).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub zeros_path: PathBuf,
    pub max_zeros: usize,
    pub x: f64,
    pub n_terms: usize,
    pub arith_bound: usize,
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
    pub suite: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let k = KernelParams::default();
        Self {
            zeros_path: DEFAULT_ZEROS.into(),
            max_zeros: DEFAULT_MAX_ZEROS,
            x: k.x,
            n_terms: k.n_terms,
            arith_bound: DEFAULT_ARITH_BOUND,
            output_format: None,
            output_path: None,
            suite: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Layers the config file (if any) and then the flags over the defaults.
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let d = RunConfig::default();
        let arith_bound = cli
            .arith_bound
            .or(file.arith_bound)
            .unwrap_or(d.arith_bound);
        let cfg = RunConfig {
            zeros_path: cli.zeros.clone().or(file.zeros).unwrap_or(d.zeros_path),
            max_zeros: cli.max_zeros.or(file.max_zeros).unwrap_or(d.max_zeros),
            x: cli.x.or(file.x).unwrap_or(d.x),
            // the default term count shrinks with a smaller sieve
            n_terms: cli
                .n_terms
                .or(file.n_terms)
                .unwrap_or(d.n_terms.min(arith_bound)),
            arith_bound,
            output_format: cli.format.or(file.format),
            output_path: cli.out.clone().or(file.out),
            suite: cli.suite.clone().or(file.suite).unwrap_or_default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_zeros < 1 {
            return Err(Error::InvalidParams("max_zeros must be at least 1".into()));
        }
        if self.arith_bound < 100 {
            return Err(Error::InvalidParams(
                "arith_bound must be at least 100".into(),
            ));
        }
        if self.n_terms > self.arith_bound {
            return Err(Error::InvalidParams(format!(
                "n_terms = {} exceeds arith_bound = {}",
                self.n_terms, self.arith_bound
            )));
        }
        self.kernel().map(|_| ())
    }

    pub fn kernel(&self) -> Result<KernelParams> {
        KernelParams::new(self.x, self.max_zeros, self.n_terms)
    }

    fn wants(&self, name: &str) -> bool {
        self.suite.is_empty() || self.suite.iter().any(|s| s == name)
    }

    fn load_zeros(&self) -> Result<ZeroTable> {
        let table = load_zeros(&self.zeros_path)?;
        if table.count() > self.max_zeros {
            table.truncated(self.max_zeros)
        } else {
            Ok(table)
        }
    }
}

/// One line of `verify` output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyLine {
    #[serde(flatten)]
    pub report: IdentityReport,
    pub tolerance: f64,
    pub pass: bool,
}

/// Failure to evaluate an identity at all.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyError {
    pub name: String,
    pub error: String,
    pub pass: bool,
}

/// Identity names accepted by `--suite`.
pub const SUITE_NAMES: &[&str] = &[
    "tau_square_sum",
    "constant_a",
    "logderiv_half",
    "main_identity",
    "trig_identity",
    "trig_identity_halfint",
    "integrated_identity",
    "integrated_identity_halfint",
    "derivative_identity",
    "catalan_identity",
    "cramer_expansion_order0",
];

struct Ctx {
    kernel: KernelParams,
    eval: EvalParams,
    zeros: ZeroTable,
    arith: Option<ArithTable>,
}

type Check = (f64, Result<IdentityReport>);

fn run_suite(cfg: &RunConfig, ctx: &Ctx) -> Vec<(String, Check)> {
    let p = &ctx.kernel;
    let z = &ctx.zeros;
    let mut out: Vec<(String, Check)> = Vec::new();
    let mut push =
        |name: &str, tol: f64, r: Result<IdentityReport>| out.push((name.to_string(), (tol, r)));
    let arith = || {
        ctx.arith
            .as_ref()
            .ok_or_else(|| Error::InvalidParams("arithmetic table not built".into()))
    };

    if cfg.wants("tau_square_sum") {
        push("tau_square_sum", 5e-5, tau_square_sum(p, &ctx.eval, z));
    }
    if cfg.wants("constant_a") {
        let a = constant_a(p, z);
        push(
            "constant_a",
            1e-5,
            Ok(IdentityReport::new(
                "constant_a",
                a,
                CONSTANT_A_REFERENCE,
                ReportParams::Kernel(*p),
            )
            .with_notes("computed A against its 6-digit reference value")),
        );
    }
    if cfg.wants("logderiv_half") {
        push("logderiv_half", 1e-8, logderiv_half_report(&ctx.eval));
    }
    if cfg.wants("main_identity") {
        for x in [0.5, 2.0, 5.0] {
            let r = arith().and_then(|a| main_identity_residual(Complex64::new(x, 0.0), p, z, a));
            push("main_identity", 1e-4, r);
        }
    }
    let strip = [(0.5, 1e-5), (1.5, 1e-6), (3.0, 1e-3)];
    for (name, companion, integrated) in [
        ("trig_identity", Companion::Mangoldt, false),
        ("trig_identity_halfint", Companion::HalfInteger, false),
        ("integrated_identity", Companion::Mangoldt, true),
        ("integrated_identity_halfint", Companion::HalfInteger, true),
    ] {
        if !cfg.wants(name) {
            continue;
        }
        for (zv, tol) in strip {
            let zc = Complex64::new(zv, 0.0);
            let r = arith().and_then(|a| {
                if integrated {
                    integrated_identity_residual(zc, companion, p, z, a)
                } else {
                    trig_identity_residual(zc, companion, p, z, a)
                }
            });
            push(name, tol, r);
        }
    }
    if cfg.wants("derivative_identity") {
        push(
            "derivative_identity",
            1e-6,
            derivative_identity_residual(p, z),
        );
    }
    if cfg.wants("catalan_identity") {
        push("catalan_identity", 5e-4, catalan_identity_residual(p, z));
    }
    if cfg.wants("cramer_expansion_order0") {
        push(
            "cramer_expansion_order0",
            1e-3,
            cramer_expansion_residual(50.0, 0, p, z),
        );
    }
    out
}

fn needs_arith(cfg: &RunConfig) -> bool {
    [
        "main_identity",
        "trig_identity",
        "trig_identity_halfint",
        "integrated_identity",
        "integrated_identity_halfint",
    ]
    .iter()
    .any(|n| cfg.wants(n))
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> std::result::Result<bool, Error> {
    if let Some(bad) = cfg
        .suite
        .iter()
        .find(|s| !SUITE_NAMES.contains(&s.as_str()))
    {
        return Err(Error::InvalidParams(format!(
            "unknown suite '{bad}'; known: {}",
            SUITE_NAMES.join(", ")
        )));
    }
    let zeros = cfg.load_zeros()?;
    let arith = if needs_arith(cfg) {
        Some(ArithTable::build(cfg.arith_bound)?)
    } else {
        None
    };
    let ctx = Ctx {
        kernel: cfg.kernel()?,
        eval: EvalParams::default(),
        zeros,
        arith,
    };
    let mut all_pass = true;
    for (name, (tol, r)) in run_suite(cfg, &ctx) {
        let line = match r {
            Ok(report) => {
                let pass = report.residual < tol;
                all_pass &= pass;
                serde_json::to_string(&VerifyLine {
                    report,
                    tolerance: tol,
                    pass,
                })
            }
            Err(e) => {
                all_pass = false;
                serde_json::to_string(&VerifyError {
                    name,
                    error: e.to_string(),
                    pass: false,
                })
            }
        }
        .expect("reports serialize");
        writeln!(out, "{line}").map_err(|e| Error::io(output_name(cfg), e))?;
    }
    Ok(all_pass)
}

fn output_name(cfg: &RunConfig) -> PathBuf {
    cfg.output_path.clone().unwrap_or_else(|| "<stdout>".into())
}

/// Writes a grid as CSV (`t,reconstructed,reference`, 17 significant digits).
pub fn write_grid_csv(grid: &SeriesGrid, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "t,reconstructed,reference")?;
    for (t, v, r) in grid.rows() {
        writeln!(out, "{t:.16e},{v:.16e},{r:.16e}")?;
    }
    Ok(())
}

fn cmd_reconstruct(
    cfg: &RunConfig,
    which: &str,
    t_min: f64,
    t_max: f64,
    step: f64,
    out: &mut dyn Write,
) -> Result<()> {
    let kind: GridKind = which.parse()?;
    if !(step > 0.0) {
        return Err(Error::InvalidParams(format!(
            "step = {step} must be positive"
        )));
    }
    if t_max > cfg.arith_bound as f64 {
        return Err(Error::OutOfRange {
            what: "t_max",
            value: t_max,
            limit: cfg.arith_bound as f64,
        });
    }
    let zeros = cfg.load_zeros()?;
    let p = cfg.kernel()?;
    let arith = ArithTable::build(
        cfg.arith_bound
            .min(t_max.max(2.0).ceil() as usize + 2)
            .max(100),
    )?;
    let cache = ResidueCache::for_zeros_file(&cfg.zeros_path, EvalParams::default());
    let grid = emit_grid(kind, t_min, t_max, step, &p, &zeros, &arith, &cache)?;
    let name = output_name(cfg);
    match cfg.output_format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => write_grid_csv(&grid, out).map_err(|e| Error::io(&name, e)),
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, &grid)
                .map_err(|e| Error::io(&name, std::io::Error::other(e)))?;
            writeln!(out).map_err(|e| Error::io(&name, e))
        }
    }
}

/// One row of `constants` output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstantRow {
    pub name: String,
    pub value: f64,
    pub method: String,
    pub truncation: String,
}

pub fn constant_rows(
    p: &KernelParams,
    eval: &EvalParams,
    zeros: &ZeroTable,
) -> Result<Vec<ConstantRow>> {
    let row = |name: &str, value: f64, method: &str, truncation: String| ConstantRow {
        name: name.into(),
        value,
        method: method.into(),
        truncation,
    };
    let k = p.k_zeros.min(zeros.count());
    let used = zeros.head(k);
    let last = *used.last().expect("table is never empty");
    let head: f64 = crate::explicit::reduce::tree_sum(k, |j| 1.0 / (used[j] * used[j]));
    let tail = inverse_square_tail(last);
    Ok(vec![
        row("euler_c", EULER_GAMMA, "literal", "exact to f64".into()),
        row("catalan_g", CATALAN, "literal", "exact to f64".into()),
        row(
            "constant_a",
            constant_a(p, zeros),
            "half-integer series plus zero sum",
            format!(
                "{} half-integer terms, {k} zeros",
                p.n_terms.min(crate::explicit::lambda_sums::HALFINT_MAX)
            ),
        ),
        row(
            "logderiv_half_closed",
            logderiv_half_closed_form(),
            "C/2 + log(8 pi)/2 + pi/4",
            "exact to f64".into(),
        ),
        row(
            "logderiv_half_numeric",
            logderiv_half_numeric(eval)?,
            "Euler-Maclaurin zeta'/zeta",
            format!(
                "{} EM terms, {} Bernoulli corrections",
                eval.em_terms, eval.em_bernoulli
            ),
        ),
        row(
            "inverse_square_sum",
            head + tail,
            "zero sum plus density tail",
            format!("{k} zeros up to {last:.6}, tail {tail:.3e}"),
        ),
        row(
            "inverse_square_closed",
            inverse_square_closed_form(eval)?,
            "-4 + G + pi^2/8 + (log zeta)''(1/2)/2",
            format!("{} EM terms", eval.em_terms),
        ),
    ])
}

fn cmd_constants(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let zeros = cfg.load_zeros()?;
    let rows = constant_rows(&cfg.kernel()?, &EvalParams::default(), &zeros)?;
    let name = output_name(cfg);
    let io = |e| Error::io(&name, e);
    match cfg.output_format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("rows serialize"))
                    .map_err(io)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "name,value,method,truncation").map_err(io)?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{:.16e},\"{}\",\"{}\"",
                    r.name, r.value, r.method, r.truncation
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

fn open_output<'a>(cfg: &RunConfig, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    match &cfg.output_path {
        Some(p) => {
            let f = File::create(p).map_err(|e| Error::io(p, e))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(stdout)),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let result = RunConfig::resolve(&cli).and_then(|cfg| {
        let mut out = open_output(&cfg, stdout)?;
        let status = match &cli.command {
            Command::Verify => cmd_verify(&cfg, &mut out).map(|ok| if ok { 0 } else { 1 }),
            Command::Reconstruct {
                which,
                t_min,
                t_max,
                step,
            } => cmd_reconstruct(&cfg, which, *t_min, *t_max, *step, &mut out).map(|_| 0),
            Command::Constants => cmd_constants(&cfg, &mut out).map(|_| 0),
        }?;
        out.flush().map_err(|e| Error::io(output_name(&cfg), e))?;
        Ok(status)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
