//! Command-line interface: tabulate functions, emit Lamé-curve CSV,
//! run verification suites, and raster (a,b)-convexity sweeps.
//!
//! Exit codes: 0 success, 1 gating suite violation, 2 usage or domain
//! errors. Output is deterministic for identical flags and seed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pqtrig::convexity::{check_ab_convex, Direction, FunctionId, GridSpec, PairMode};
use pqtrig::lame::{extend_four_quadrants, sample_curve_c, sample_curve_d, to_csv as lame_csv};
use pqtrig::pq::PqParams;
use pqtrig::suites::{run_suite_custom, CustomParams, SuiteId};
use pqtrig::NumericConfig;

fn parse_order(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 1.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must satisfy the constraint p > 1 (and q > 1), got {v}"))
    }
}

fn parse_function(s: &str) -> Result<FunctionId, String> {
    FunctionId::parse(s).ok_or_else(|| {
        let names: Vec<_> = FunctionId::ALL.iter().map(|f| f.name()).collect();
        format!("unknown function {s:?}; expected one of: {}", names.join(", "))
    })
}

fn parse_suite(s: &str) -> Result<SuiteId, String> {
    SuiteId::parse(s).ok_or_else(|| {
        let names: Vec<_> = SuiteId::ALL.iter().map(|id| id.name()).collect();
        format!("unknown suite {s:?}; expected one of: {}", names.join(", "))
    })
}

fn parse_grid_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n >= 2 {
        Ok(n)
    } else {
        Err(format!("grid size must be at least 2, got {n}"))
    }
}

#[derive(Args)]
struct OrderArgs {
    /// First exponent of the (p,q) family (must exceed 1)
    #[arg(long, value_parser = parse_order)]
    p: f64,
    /// Second exponent of the (p,q) family (must exceed 1)
    #[arg(long, value_parser = parse_order)]
    q: f64,
}

#[derive(Args)]
struct OutArg {
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
#[command(name = "pqtrig", version, about = "Generalized (p,q)-trigonometric function toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate one function as `x,fx` CSV over its natural domain
    Tab {
        /// Function to tabulate (e.g. arcsin_pq, sin_pq, ...)
        #[arg(long = "fn", value_parser = parse_function)]
        function: FunctionId,
        #[command(flatten)]
        order: OrderArgs,
        /// Number of grid points
        #[arg(long, default_value_t = 100, value_parser = parse_grid_n)]
        n: usize,
        /// Override the lower end of the tabulation interval
        #[arg(long)]
        lo: Option<f64>,
        /// Override the upper end of the tabulation interval
        #[arg(long)]
        hi: Option<f64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Emit both Lamé-curve parametrizations over all four quadrants
    Curve {
        #[command(flatten)]
        order: OrderArgs,
        /// Interior samples per parametrization (each emits n+2 per quadrant)
        #[arg(long, default_value_t = 100, value_parser = parse_grid_n)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run one verification suite and report each configuration
    Verify {
        /// Suite name (T1_1, T1_2, T1_3, T1_4, T1_5, corollary_T1_5, L2_7, L2_8, L2_9)
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteId,
        /// Probe a custom p (requires --q; makes every row informational)
        #[arg(long, value_parser = parse_order)]
        p: Option<f64>,
        /// Probe a custom q (requires --p)
        #[arg(long, value_parser = parse_order)]
        q: Option<f64>,
        /// Probe a custom first mean order
        #[arg(long, allow_hyphen_values = true)]
        a: Option<f64>,
        /// Probe a custom second mean order
        #[arg(long, allow_hyphen_values = true)]
        b: Option<f64>,
        /// Violation slack relative to max(1, |rhs|)
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Raster a convexity verdict over an (a,b) lattice for one function
    Sweep {
        /// Function to sweep (e.g. arcsin_pq, sinh_pq, ...)
        #[arg(long = "fn", value_parser = parse_function)]
        function: FunctionId,
        #[command(flatten)]
        order: OrderArgs,
        /// Number of domain grid points per lattice cell
        #[arg(long, default_value_t = 30, value_parser = parse_grid_n)]
        n: usize,
        /// Override the lower end of the domain interval
        #[arg(long)]
        lo: Option<f64>,
        /// Override the upper end of the domain interval
        #[arg(long)]
        hi: Option<f64>,
        /// Violation slack relative to max(1, |rhs|)
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Check this many random grid pairs instead of all pairs
        #[arg(long, default_value_t = 0)]
        random_pairs: usize,
        /// Seed for random pair selection
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn tab_grid(
    function: FunctionId,
    params: &PqParams<f64>,
    lo: Option<f64>,
    hi: Option<f64>,
    n: usize,
    cfg: &NumericConfig,
) -> Result<Vec<f64>, String> {
    let (dlo, dhi) = function.natural_domain(params, cfg).map_err(|e| e.to_string())?;
    let lo = lo.unwrap_or(dlo);
    let hi = hi.unwrap_or(dhi);
    GridSpec::linear(lo, hi, n).points().map_err(|e| e.to_string())
}

fn cmd_tab(
    function: FunctionId,
    order: OrderArgs,
    n: usize,
    lo: Option<f64>,
    hi: Option<f64>,
    out: OutArg,
) -> Result<ExitCode, String> {
    let cfg = NumericConfig::default();
    let params = PqParams::new(order.p, order.q).map_err(|e| e.to_string())?;
    let mut csv = String::from("x,fx\n");
    for x in tab_grid(function, &params, lo, hi, n, &cfg)? {
        let fx = function.eval(&params, x, &cfg).map_err(|e| e.to_string())?;
        let _ = writeln!(csv, "{x:.16e},{fx:.16e}");
    }
    write_out(&out.out, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_curve(order: OrderArgs, n: usize, out: OutArg) -> Result<ExitCode, String> {
    let cfg = NumericConfig::default();
    let params = PqParams::new(order.p, order.q).map_err(|e| e.to_string())?;
    let mut samples = extend_four_quadrants(
        &sample_curve_c(&params, n + 2).map_err(|e| e.to_string())?,
    );
    samples.extend(extend_four_quadrants(
        &sample_curve_d(&params, n, &cfg).map_err(|e| e.to_string())?,
    ));
    write_out(&out.out, &lame_csv(&samples))?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: SuiteId,
    p: Option<f64>,
    q: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    tol: f64,
    out: OutArg,
) -> Result<ExitCode, String> {
    let pq = match (p, q) {
        (Some(p), Some(q)) => Some((p, q)),
        (None, None) => None,
        _ => return Err("custom orders need both --p and --q".into()),
    };
    let cfg = NumericConfig::default();
    let custom = CustomParams { pq, a, b };
    let report = run_suite_custom(suite, &custom, tol, &cfg);
    write_out(&out.out, &report.to_csv())?;
    eprint!("{}", report.to_text());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    function: FunctionId,
    order: OrderArgs,
    n: usize,
    lo: Option<f64>,
    hi: Option<f64>,
    tol: f64,
    random_pairs: usize,
    seed: u64,
    out: OutArg,
) -> Result<ExitCode, String> {
    let cfg = NumericConfig::default();
    let params = PqParams::new(order.p, order.q).map_err(|e| e.to_string())?;
    let (dlo, dhi) = function.natural_domain(&params, &cfg).map_err(|e| e.to_string())?;
    let mut grid = GridSpec::linear(lo.unwrap_or(dlo), hi.unwrap_or(dhi), n);
    if random_pairs > 0 {
        grid.pair_mode = PairMode::RandomPairs { count: random_pairs, seed };
    }
    let lattice: Vec<f64> = (-4..=4).map(|k| k as f64 * 0.5).collect();
    let mut csv = String::from("a,b,verdict,gap\n");
    for &a in &lattice {
        for &b in &lattice {
            let verdict = check_ab_convex(
                |x| function.eval(&params, x, &cfg),
                a,
                b,
                &grid,
                tol,
                Direction::Convex,
            );
            match verdict {
                Ok(v) => {
                    let word = if v.holds { "holds" } else { "violated" };
                    let _ = writeln!(csv, "{a},{b},{word},{:.16e}", v.worst_gap);
                }
                Err(e) => {
                    let _ = writeln!(csv, "{a},{b},error,{e}");
                }
            }
        }
    }
    write_out(&out.out, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tab { function, order, n, lo, hi, out } => cmd_tab(function, order, n, lo, hi, out),
        Command::Curve { order, n, out } => cmd_curve(order, n, out),
        Command::Verify { suite, p, q, a, b, tol, out } => cmd_verify(suite, p, q, a, b, tol, out),
        Command::Sweep { function, order, n, lo, hi, tol, random_pairs, seed, out } => {
            cmd_sweep(function, order, n, lo, hi, tol, random_pairs, seed, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
