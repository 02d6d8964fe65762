//! `spreadopt` — spread-option pricing, Greeks, method comparison and
//! benchmark-table regeneration.
//!
//! Exit codes: 0 success, 1 domain/convergence error, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spreadopt::greeks::{greeks_closed_form, FrozenExtended};
use spreadopt::pricers::{default_extended_params, DiscretizationConfig, ExtendedParams, McConfig, Method};
use spreadopt::{SpreadContract, SpreadError};

use spreadopt_cli::config::{merged, ConfigMap};
use spreadopt_cli::format;
use spreadopt_cli::run::{price_with_method, RunConfig};
use spreadopt_cli::tables::{run_compare, run_table, TablePreset, TableSpec};

#[derive(Parser)]
#[command(
    name = "spreadopt",
    version,
    about = "European spread option pricing under log-normal dynamics"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Price one contract with one method
    Price(PriceArgs),
    /// Sensitivities of the extended closed form (frozen slope fractions)
    Greeks(GreeksArgs),
    /// Regenerate a benchmark grid with per-method error statistics
    Table(TableArgs),
    /// Rank methods against the quadrature oracle on one contract
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct SharedArgs {
    /// Forward of the long leg
    #[arg(long, allow_hyphen_values = true)]
    f1: Option<f64>,
    /// Forward of the short leg
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<f64>,
    /// Volatility of the long leg (1/sqrt(year))
    #[arg(long, allow_hyphen_values = true)]
    sigma1: Option<f64>,
    /// Volatility of the short leg
    #[arg(long, allow_hyphen_values = true)]
    sigma2: Option<f64>,
    /// Driver correlation in [-1, 1]
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<f64>,
    /// Continuously compounded rate (default 0)
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    /// Maturity in years
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    /// Strike, any sign (default 0); negative strikes are parity-routed
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    /// Monte Carlo seed
    #[arg(long)]
    seed: Option<u64>,
    /// Monte Carlo paths
    #[arg(long)]
    paths: Option<u64>,
    /// Antithetic sampling (true/false)
    #[arg(long)]
    antithetic: Option<bool>,
    /// Truncation half-width of the discretized pricer
    #[arg(long = "disc-b")]
    disc_b: Option<f64>,
    /// Interval count of the discretized pricer
    #[arg(long = "disc-n")]
    disc_n: Option<u32>,
    /// First anchor of the extended formula (default: built-in heuristic)
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// Second anchor of the extended formula
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    /// Third anchor of the extended formula
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    /// Absolute tolerance of the quadrature oracle
    #[arg(long = "quad-tol")]
    quad_tol: Option<f64>,
    /// key=value file mirroring these flags; explicit flags win
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct PriceArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// bachelier|kirk|margrabe|bs|cd|discretized|extended|quadrature|mc
    #[arg(long)]
    method: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GreeksArgs {
    #[command(flatten)]
    shared: SharedArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// table1|table2|table3|custom
    #[arg(long)]
    preset: Option<String>,
    /// Comma-separated methods (overrides the preset's list)
    #[arg(long)]
    methods: Option<String>,
    /// Reference method for the error statistics
    #[arg(long)]
    reference: Option<String>,
    /// Comma-separated strikes (custom preset)
    #[arg(long, allow_hyphen_values = true)]
    strikes: Option<String>,
    /// Comma-separated correlations (custom preset)
    #[arg(long, allow_hyphen_values = true)]
    rhos: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// Comma-separated methods, at least two
    #[arg(long)]
    methods: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum CliError {
    Usage(String),
    Run(SpreadError),
}

impl From<SpreadError> for CliError {
    fn from(e: SpreadError) -> Self {
        match e {
            SpreadError::Config(_) => CliError::Usage(e.to_string()),
            other => CliError::Run(other),
        }
    }
}

/// Flag values merged with the config file.
struct Resolved {
    contract: SpreadContract,
    run: RunConfig,
    cfg: ConfigMap,
}

fn resolve_shared(shared: &SharedArgs) -> Result<Resolved, CliError> {
    let cfg = match &shared.config {
        Some(path) => ConfigMap::load(path)?,
        None => ConfigMap::default(),
    };
    let need = |name: &str, v: Option<f64>| -> Result<f64, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("missing required value --{name}")))
    };
    let f1 = need("f1", merged(shared.f1, &cfg, "f1")?)?;
    let f2 = need("f2", merged(shared.f2, &cfg, "f2")?)?;
    let sigma1 = need("sigma1", merged(shared.sigma1, &cfg, "sigma1")?)?;
    let sigma2 = need("sigma2", merged(shared.sigma2, &cfg, "sigma2")?)?;
    let rho = need("rho", merged(shared.rho, &cfg, "rho")?)?;
    let t = need("t", merged(shared.t, &cfg, "t")?)?;
    let r = merged(shared.r, &cfg, "r")?.unwrap_or(0.0);
    let k = merged(shared.k, &cfg, "k")?.unwrap_or(0.0);
    let contract =
        SpreadContract::new(f1, f2, sigma1, sigma2, rho, r, t, k).map_err(CliError::Run)?;

    let mut run = RunConfig::default();
    if let Some(b) = merged(shared.disc_b, &cfg, "disc-b")? {
        run.disc = DiscretizationConfig { b, ..run.disc };
    }
    if let Some(n) = merged(shared.disc_n, &cfg, "disc-n")? {
        run.disc = DiscretizationConfig { n, ..run.disc };
    }
    run.mc = McConfig {
        paths: merged(shared.paths, &cfg, "paths")?.unwrap_or(run.mc.paths),
        seed: merged(shared.seed, &cfg, "seed")?.unwrap_or(run.mc.seed),
        antithetic: merged(shared.antithetic, &cfg, "antithetic")?.unwrap_or(run.mc.antithetic),
    };
    if let Some(q) = merged(shared.quad_tol, &cfg, "quad-tol")? {
        run.quad_tol = q;
    }
    let lambda = merged(shared.lambda, &cfg, "lambda")?;
    let mu = merged(shared.mu, &cfg, "mu")?;
    let gamma = merged(shared.gamma, &cfg, "gamma")?;
    run.extended = match (lambda, mu, gamma) {
        (None, None, None) => None,
        (Some(l), Some(m), Some(g)) => Some(ExtendedParams::new(l, m, g).map_err(CliError::Run)?),
        _ => {
            return Err(CliError::Usage(
                "provide all three of --lambda, --mu, --gamma or none".into(),
            ))
        }
    };
    Ok(Resolved { contract, run, cfg })
}

fn parse_method_list(raw: &str) -> Result<Vec<Method>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Method::from_str(s).map_err(CliError::from))
        .collect()
}

fn parse_f64_list(raw: &str, what: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("invalid {what} value '{s}'")))
        })
        .collect()
}

fn cmd_price(args: &PriceArgs) -> Result<(), CliError> {
    let resolved = resolve_shared(&args.shared)?;
    let method_raw = match &args.method {
        Some(m) => m.clone(),
        None => resolved
            .cfg
            .get_raw("method")
            .map(str::to_string)
            .ok_or_else(|| CliError::Usage("missing required value --method".into()))?,
    };
    let method = Method::from_str(&method_raw)?;
    let out = price_with_method(method, &resolved.contract, &resolved.run).map_err(CliError::Run)?;
    match args.format {
        Format::Text => print!("{}", format::render_price_text(&out)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        _ => return Err(CliError::Usage("price supports --format text or json".into())),
    }
    Ok(())
}

fn cmd_greeks(args: &GreeksArgs) -> Result<(), CliError> {
    let resolved = resolve_shared(&args.shared)?;
    let c = resolved.contract;
    let params = match resolved.run.extended {
        Some(p) => p,
        None => default_extended_params(&c).map_err(CliError::Run)?,
    };
    let fx = FrozenExtended::from_params(c, &params).map_err(CliError::Run)?;
    let report = greeks_closed_form(&fx);
    match args.format {
        Format::Text => print!("{}", format::render_greeks_text(&report)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => return Err(CliError::Usage("greeks supports --format text or json".into())),
    }
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<(), CliError> {
    // presets do not require market flags, so resolve them lazily
    let preset_raw = args.preset.as_deref().unwrap_or("custom").to_ascii_lowercase();
    let cfg = match &args.shared.config {
        Some(path) => ConfigMap::load(path)?,
        None => ConfigMap::default(),
    };
    let mut spec = if preset_raw == "custom" {
        let resolved = resolve_shared(&args.shared)?;
        let strikes_raw = args
            .strikes
            .clone()
            .or_else(|| cfg.get_raw("strikes").map(str::to_string))
            .ok_or_else(|| CliError::Usage("custom tables need --strikes".into()))?;
        let rhos_raw = args
            .rhos
            .clone()
            .or_else(|| cfg.get_raw("rhos").map(str::to_string))
            .ok_or_else(|| CliError::Usage("custom tables need --rhos".into()))?;
        TableSpec {
            name: "custom".into(),
            base: resolved.contract,
            strikes: parse_f64_list(&strikes_raw, "strike")?,
            rhos: parse_f64_list(&rhos_raw, "rho")?,
            methods: vec![
                Method::Discretized,
                Method::Kirk,
                Method::BjerksundStensland,
                Method::Extended,
            ],
            reference: Method::Discretized,
        }
    } else {
        TableSpec::preset(TablePreset::from_str(&preset_raw)?)
    };
    if let Some(methods) = args
        .methods
        .clone()
        .or_else(|| cfg.get_raw("methods").map(str::to_string))
    {
        spec.methods = parse_method_list(&methods)?;
    }
    if let Some(reference) = args
        .reference
        .clone()
        .or_else(|| cfg.get_raw("reference").map(str::to_string))
    {
        spec.reference = Method::from_str(&reference)?;
    }

    // numeric settings still honor flags/config even for presets
    let mut run = RunConfig::default();
    if let Some(b) = merged(args.shared.disc_b, &cfg, "disc-b")? {
        run.disc = DiscretizationConfig { b, ..run.disc };
    }
    if let Some(n) = merged(args.shared.disc_n, &cfg, "disc-n")? {
        run.disc = DiscretizationConfig { n, ..run.disc };
    }
    run.mc = McConfig {
        paths: merged(args.shared.paths, &cfg, "paths")?.unwrap_or(run.mc.paths),
        seed: merged(args.shared.seed, &cfg, "seed")?.unwrap_or(run.mc.seed),
        antithetic: merged(args.shared.antithetic, &cfg, "antithetic")?
            .unwrap_or(run.mc.antithetic),
    };
    if let Some(q) = merged(args.shared.quad_tol, &cfg, "quad-tol")? {
        run.quad_tol = q;
    }

    let doc = run_table(&spec, &run).map_err(CliError::Run)?;
    match args.format {
        Format::Csv => print!("{}", format::render_table_csv(&doc)),
        Format::Markdown => print!("{}", format::render_table_markdown(&doc)),
        Format::Json => println!("{}", format::render_table_json(&doc)),
        Format::Text => print!("{}", format::render_table_markdown(&doc)),
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    let resolved = resolve_shared(&args.shared)?;
    let methods_raw = args
        .methods
        .clone()
        .or_else(|| resolved.cfg.get_raw("methods").map(str::to_string))
        .ok_or_else(|| CliError::Usage("compare needs --methods".into()))?;
    let methods = parse_method_list(&methods_raw)?;
    if methods.len() < 2 {
        return Err(CliError::Usage("compare needs at least two methods".into()));
    }
    let report =
        run_compare(&resolved.contract, &methods, &resolved.run).map_err(CliError::Run)?;
    match args.format {
        Format::Text => print!("{}", format::render_compare_text(&report)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => return Err(CliError::Usage("compare supports --format text or json".into())),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Price(a) => cmd_price(a),
        Cmd::Greeks(a) => cmd_greeks(a),
        Cmd::Table(a) => cmd_table(a),
        Cmd::Compare(a) => cmd_compare(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
