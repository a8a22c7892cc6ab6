//! Command-line front end.
//!
//! Subcommands: `verify-lemmas`, `certify`, `resize-eta`, `scan`,
//! `zeros-convert`, `oracle-check`. Exit codes: 0 success, 1 check or
//! verdict failure, 2 usage, 3 I/O. Output is deterministic for fixed
//! inputs and flags apart from the leading timestamp line, which
//! `--no-timestamp` suppresses; `--threads` caps the worker pool without
//! changing any numerical result (chunked reductions are order-fixed).
//!
//! All numeric flags accept scientific notation (`--alpha 1.34e11`). The
//! defaults encode the flagship parameter set (α = 1.34·10¹¹,
//! ω = 727.952018, η = 1.6·10⁻⁴, A = 1.022·10⁷, T = 1131944.4718), so
//! `certify` with only a zero table reproduces that computation.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::budget::{CertParams, Variant};
use crate::catalog::ZeroCatalog;
use crate::certify::{certify_with, render_certificate, resize_eta, Verdict};
use crate::checks::{self, OracleConfig};
use crate::error::{Error, Result};
use crate::scan::{emit_csv, emit_svg, find_candidates, refine_maximum, scan};
use crate::zero_sum::DeltaMode;

/// Flagship truncation height used when no catalog pins one.
pub const DEFAULT_T: f64 = 1_131_944.4718;

/// Top-level command line.
#[derive(Debug, Parser)]
#[command(
    name = "skewes",
    version,
    about = "Certified sign-change regions for pi(x) - li(x) via damped explicit-formula sums"
)]
pub struct Cli {
    /// Suppress the leading timestamp line (byte-identical reruns).
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Cap the worker-thread count. Results do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

/// One subcommand per workflow.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the Gaussian-kernel lemma identities and zero-catalog facts.
    VerifyLemmas {
        /// Zero-ordinate table (text or binary).
        #[arg(long)]
        zeros: PathBuf,
        /// Random parameter-grid size per identity.
        #[arg(long, default_value_t = 100)]
        grid_points: usize,
    },
    /// Assemble a certificate for one parameter set.
    Certify(CertifyArgs),
    /// Re-run the error budget over a grid of window half-widths η.
    ResizeEta(ResizeEtaArgs),
    /// Scan the truncated sum f_T over an interval, with CSV/SVG output.
    Scan(ScanArgs),
    /// Convert a zero table between the text and binary formats.
    ZerosConvert {
        /// Input table; the format is sniffed from the magic bytes.
        input: PathBuf,
        /// Output path.
        output: PathBuf,
        /// Output format.
        #[arg(long, value_parser = ["text", "binary"])]
        format: String,
    },
    /// Run the number-theoretic oracle battery.
    OracleCheck(OracleArgs),
}

/// Certification parameters shared by `certify` and `resize-eta`.
#[derive(Args, Clone, Debug)]
pub struct ParamArgs {
    /// Gaussian damping parameter α.
    #[arg(long, default_value_t = 1.34e11)]
    pub alpha: f64,

    /// Window center ω = ln x.
    #[arg(long, default_value_t = 727.952018)]
    pub omega: f64,

    /// Window half-width η.
    #[arg(long, default_value_t = 1.6e-4)]
    pub eta: f64,

    /// Verified zero-free height A in the analytic budget.
    #[arg(long = "a-height", default_value_t = 1.022e7)]
    pub a_height: f64,

    /// Zero-sum truncation height T. Default: the flagship height, capped
    /// at the last catalog ordinate when a catalog is given.
    #[arg(long = "t-height")]
    pub t_height: Option<f64>,

    /// Budget variant: lehman1966, saouter_demichel2010, revers, std2015.
    #[arg(long, default_value = "revers", value_parser = Variant::parse)]
    pub variant: Variant,

    /// Assume the Riemann hypothesis: drop the R6 term and the window side
    /// conditions that exist only to control low-lying counterexamples.
    #[arg(long)]
    pub rh_mode: bool,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Zero-ordinate table (text or binary).
    #[arg(long)]
    pub zeros: Option<PathBuf>,

    #[command(flatten)]
    pub params: ParamArgs,

    /// Take the zero sum S* as given instead of summing a catalog
    /// (published-table regression mode; implies --compat).
    #[arg(long, allow_hyphen_values = true)]
    pub s_star_override: Option<f64>,

    /// Use the published (coarser) accuracy-propagation geometry even when
    /// a catalog could sharpen it.
    #[arg(long)]
    pub compat: bool,
}

#[derive(Args, Debug)]
pub struct ResizeEtaArgs {
    /// Zero-ordinate table (text or binary).
    #[arg(long)]
    pub zeros: Option<PathBuf>,

    #[command(flatten)]
    pub params: ParamArgs,

    /// Comma-separated window half-widths to tabulate.
    #[arg(long, value_delimiter = ',', required = true)]
    pub etas: Vec<f64>,

    /// Bisect a bracketing pair to the critical η (4 significant digits).
    #[arg(long)]
    pub refine: bool,

    /// Take the zero sum S* as given (implies --compat).
    #[arg(long, allow_hyphen_values = true)]
    pub s_star_override: Option<f64>,

    /// Use the published accuracy-propagation geometry.
    #[arg(long)]
    pub compat: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Zero-ordinate table (text or binary).
    #[arg(long)]
    pub zeros: PathBuf,

    /// Interval start (ω = ln x, or u = log₁₀ x with --log10).
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,

    /// Interval end (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,

    /// Grid size, endpoints included.
    #[arg(long, default_value_t = 500)]
    pub points: usize,

    /// Truncation height T. Default: the last catalog ordinate.
    #[arg(long = "t-height")]
    pub t_height: Option<f64>,

    /// Interpret the axis as u = log₁₀ x instead of ω = ln x.
    #[arg(long)]
    pub log10: bool,

    /// List strict interior maxima with value ≥ this threshold.
    #[arg(long, allow_hyphen_values = true)]
    pub threshold: Option<f64>,

    /// Write the series as CSV here.
    #[arg(long)]
    pub csv: Option<PathBuf>,

    /// Write an SVG rendering here.
    #[arg(long)]
    pub svg: Option<PathBuf>,

    /// Zoom iteratively on the argmax and report the refined local peak.
    #[arg(long)]
    pub refine: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Sieve limit and upper end of the π < li sweep (at most 10⁸).
    #[arg(long, default_value_t = 10_000_000)]
    pub max_x: u64,

    /// Sample count for the π < li sweep.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    /// Zero table enabling the truncation-convergence check at x = 1000.
    #[arg(long)]
    pub zeros: Option<PathBuf>,

    /// External reference for π(4·10⁹), engaging the Dusart cross-check.
    #[arg(long = "pi-4e9")]
    pub pi_4e9: Option<f64>,
}

/// Entry point for the binary: parse, run, return the exit code.
pub fn main_entry() -> i32 {
    run(Cli::parse())
}

/// Execute a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        // Build the global pool once; a second invocation in-process keeps
        // the first pool, which never changes results.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    if !cli.no_timestamp {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        println!("# timestamp: {secs}");
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

/// Map library errors onto the documented exit codes.
fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => 2,
        Error::Io(_) | Error::Parse { .. } => 3,
        _ => 1,
    }
}

/// Resolve the truncation height: explicit flag, else the flagship height
/// capped at the catalog top, else (override mode only) the flagship height.
fn resolve_t(flag: Option<f64>, catalog: Option<&ZeroCatalog>, has_override: bool) -> Result<f64> {
    match (flag, catalog) {
        (Some(t), _) => Ok(t),
        (None, Some(c)) => Ok(DEFAULT_T.min(c.last())),
        (None, None) if has_override => Ok(DEFAULT_T),
        (None, None) => Err(Error::Usage(
            "no truncation height: pass --t-height, or --zeros to infer it from a catalog".into(),
        )),
    }
}

fn load_optional(path: &Option<PathBuf>) -> Result<Option<ZeroCatalog>> {
    path.as_ref().map(ZeroCatalog::load_auto).transpose()
}

fn params_from(args: &ParamArgs, t_height: f64) -> CertParams {
    CertParams {
        alpha: args.alpha,
        omega: args.omega,
        eta: args.eta,
        a_height: args.a_height,
        t_height,
        variant: args.variant,
        rh_mode: args.rh_mode,
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::VerifyLemmas { zeros, grid_points } => {
            let catalog = ZeroCatalog::load_auto(&zeros)?;
            let results = checks::verify_lemmas(&catalog, grid_points);
            print!("{}", checks::render_report(&results));
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("verify-lemmas: {} checks, {failed} failed", results.len());
            Ok(if failed == 0 { 0 } else { 1 })
        }

        Command::Certify(args) => {
            let catalog = load_optional(&args.zeros)?;
            let t = resolve_t(
                args.params.t_height,
                catalog.as_ref(),
                args.s_star_override.is_some(),
            )?;
            let p = params_from(&args.params, t);
            let mode = if args.s_star_override.is_some() || args.compat {
                DeltaMode::Compat
            } else {
                DeltaMode::Tight
            };
            let cert = certify_with(catalog.as_ref(), &p, args.s_star_override, mode)?;
            print!("{}", render_certificate(&cert));
            Ok(match cert.verdict {
                Verdict::Positive => 0,
                Verdict::Inconclusive => 1,
            })
        }

        Command::ResizeEta(args) => {
            let catalog = load_optional(&args.zeros)?;
            let t = resolve_t(
                args.params.t_height,
                catalog.as_ref(),
                args.s_star_override.is_some(),
            )?;
            let base = params_from(&args.params, t);
            let mode = if args.s_star_override.is_some() || args.compat {
                DeltaMode::Compat
            } else {
                DeltaMode::Tight
            };
            let result = resize_eta(
                catalog.as_ref(),
                &base,
                &args.etas,
                args.s_star_override,
                mode,
                args.refine,
            )?;
            println!(
                "{:>14} {:>14} {:>18} {:>13}",
                "eta", "R_total", "lower_bound", "verdict"
            );
            for row in &result.rows {
                println!(
                    "{:>14.6e} {:>14.6e} {:>18.6e} {:>13}",
                    row.eta, row.budget_total, row.lower_bound, row.verdict
                );
            }
            match result.best_eta {
                Some(e) => println!("best_eta = {e:e}"),
                None => println!("best_eta = none"),
            }
            if args.refine {
                match result.refined_eta {
                    Some(e) => println!("refined_eta = {e:.4e}"),
                    None => println!("refined_eta = none"),
                }
            }
            Ok(0)
        }

        Command::Scan(args) => {
            let catalog = ZeroCatalog::load_auto(&args.zeros)?;
            let t = args.t_height.unwrap_or_else(|| catalog.last());
            let series = scan(&catalog, args.from, args.to, args.points, t, args.log10)?;
            let axis = if args.log10 { "log10_x" } else { "omega" };
            println!(
                "scan: {} points on [{}, {}] ({axis}), T = {}, zeros = {}",
                args.points, args.from, args.to, series.t_height, series.zeros_used
            );
            let (mut max_v, mut max_at) = (f64::NEG_INFINITY, args.from);
            for (&w, &v) in series.omegas.iter().zip(&series.values) {
                if v > max_v {
                    max_v = v;
                    max_at = w;
                }
            }
            println!("max f = {max_v:.6e} at {axis} = {max_at:.6}");
            if args.refine {
                let half = 2.0 * series.grid_spacing;
                let refined = refine_maximum(
                    &catalog,
                    max_at - half,
                    max_at + half,
                    args.points,
                    t,
                    args.log10,
                    3,
                )?;
                println!(
                    "refined max f = {:.6e} at {axis} = {:.6}",
                    refined.value, refined.omega
                );
            }
            if let Some(threshold) = args.threshold {
                let candidates = find_candidates(&series, threshold);
                println!("candidates: {}", candidates.len());
                for c in &candidates {
                    println!("candidate: {axis} = {:.6}, f = {:.6e}", c.omega, c.value);
                }
            }
            if let Some(path) = &args.csv {
                std::fs::write(path, emit_csv(&series))?;
                println!("wrote csv: {}", path.display());
            }
            if let Some(path) = &args.svg {
                std::fs::write(path, emit_svg(&series))?;
                println!("wrote svg: {}", path.display());
            }
            Ok(0)
        }

        Command::ZerosConvert {
            input,
            output,
            format,
        } => {
            let catalog = ZeroCatalog::load_auto(&input)?;
            match format.as_str() {
                "binary" => catalog.save_binary(&output)?,
                "text" => catalog.save_text(&output)?,
                other => {
                    return Err(Error::Usage(format!(
                        "unknown output format {other:?} (expected text or binary)"
                    )))
                }
            }
            println!(
                "converted {} ordinates (accuracy {:e}) -> {}",
                catalog.len(),
                catalog.accuracy(),
                output.display()
            );
            Ok(0)
        }

        Command::OracleCheck(args) => {
            let catalog = load_optional(&args.zeros)?;
            let cfg = OracleConfig {
                max_x: args.max_x,
                samples: args.samples,
                pi_4e9_reference: args.pi_4e9,
                ..OracleConfig::default()
            };
            let results = checks::oracle_check(catalog.as_ref(), &cfg)?;
            print!("{}", checks::render_report(&results));
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("oracle-check: {} checks, {failed} failed", results.len());
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("parse")
    }

    #[test]
    fn certify_defaults_encode_flagship_set() {
        let cli = parse(&["skewes", "certify", "--s-star-override", "-1.0065"]);
        let Command::Certify(args) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(args.params.alpha, 1.34e11);
        assert_eq!(args.params.omega, 727.952018);
        assert_eq!(args.params.eta, 1.6e-4);
        assert_eq!(args.params.a_height, 1.022e7);
        assert_eq!(args.params.t_height, None);
        assert_eq!(args.params.variant, Variant::Revers);
        assert!(!args.params.rh_mode);
        assert_eq!(args.s_star_override, Some(-1.0065));
    }

    #[test]
    fn scientific_notation_accepted_everywhere() {
        let cli = parse(&[
            "skewes",
            "certify",
            "--alpha",
            "6e12",
            "--eta",
            "2.28333e-5",
            "--t-height",
            "1.03795997274e7",
            "--s-star-override",
            "-1.0029e0",
        ]);
        let Command::Certify(args) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(args.params.alpha, 6e12);
        assert_eq!(args.params.eta, 2.28333e-5);
        assert_eq!(args.params.t_height, Some(1.03795997274e7));
    }

    #[test]
    fn eta_list_parses_comma_separated() {
        let cli = parse(&[
            "skewes",
            "resize-eta",
            "--etas",
            "1.6e-4,1.4e-4,1.2e-4",
            "--s-star-override",
            "-1.0065",
        ]);
        let Command::ResizeEta(args) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(args.etas, vec![1.6e-4, 1.4e-4, 1.2e-4]);
    }

    #[test]
    fn bad_variant_is_a_parse_error() {
        assert!(Cli::try_parse_from(["skewes", "certify", "--variant", "bogus"]).is_err());
    }

    #[test]
    fn t_resolution_rules() {
        // Explicit flag wins.
        assert_eq!(resolve_t(Some(5.0), None, true).unwrap(), 5.0);
        // Override mode falls back to the flagship height.
        assert_eq!(resolve_t(None, None, true).unwrap(), DEFAULT_T);
        // No data at all is a usage error.
        assert!(matches!(
            resolve_t(None, None, false),
            Err(Error::Usage(_))
        ));
        // A catalog caps the default at its top ordinate.
        let cat = ZeroCatalog::new(vec![14.134725142, 21.022039639], 1e-9, "t").unwrap();
        assert_eq!(resolve_t(None, Some(&cat), false).unwrap(), 21.022039639);
    }

    #[test]
    fn exit_codes_follow_error_classes() {
        assert_eq!(exit_code_for(&Error::Usage("x".into())), 2);
        assert_eq!(
            exit_code_for(&Error::Io(std::io::Error::other("x"))),
            3
        );
        assert_eq!(
            exit_code_for(&Error::Parse {
                line: 1,
                msg: "x".into()
            }),
            3
        );
        assert_eq!(exit_code_for(&Error::Conditions("x".into())), 1);
        assert_eq!(
            exit_code_for(&Error::CatalogExhausted {
                requested: 2.0,
                last: 1.0
            }),
            1
        );
    }

    #[test]
    fn global_flags_reach_subcommands() {
        let cli = parse(&[
            "skewes",
            "oracle-check",
            "--no-timestamp",
            "--threads",
            "2",
            "--max-x",
            "100000",
        ]);
        assert!(cli.no_timestamp);
        assert_eq!(cli.threads, Some(2));
    }
}
