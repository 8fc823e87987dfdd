//! Command-line front end: every computation and cross-check as a
//! subcommand with machine-readable output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use theta_root::asymptotics::{
    amplitude_estimate, estimate_mu_with_depth, MU_REFERENCE_DECIMAL,
};
use theta_root::polyomino::{enumerate_ferrers, enumerate_stacks};
use theta_root::theta::{
    a_refined, a_sigma_extended, atilde_refined, xi_fix1, xi_fix2, xi_via_theta, SigmaWord,
};
use theta_root::tree::{all_trees, enumerate_trees, trees_to_dot};
use theta_root::verify::{run_verification, VerifyConfig};
use theta_root::{QSeries, TQSeries};

#[derive(Parser)]
#[command(
    name = "theta-root",
    version,
    about = "Exact series computation of the leading root of the partial theta function, \
             with combinatorial enumeration oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Triangular coefficient solve on the root equation
    Theta,
    /// Fixed point of the stack-polyomino species map
    Fix1,
    /// Fixed point of the constrained-Ferrers species map
    Fix2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    /// Space-separated coefficients
    Plain,
    /// The series JSON schema
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RefineFormat {
    /// One `q^k: polynomial` line per order
    Plain,
    /// The nested-polynomial series JSON schema
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    /// CSV with header `area,vertices,count`
    Csv,
    /// DOT digraph of every tree (areas up to 5)
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpeciesArg {
    /// Stack polyominoes sized by rise
    Stack,
    /// Durfee-constrained Ferrers diagrams sized by width
    Ferrers,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the leading-root series xi(q)
    Xi {
        /// Truncation order
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Method::Theta)]
        method: Method,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Plain)]
        format: SeriesFormat,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex-count refinement A(t,q) or A~(t,q)
    Refine {
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SpeciesArg::Stack)]
        species: SpeciesArg,
        #[arg(long, value_enum, default_value_t = RefineFormat::Plain)]
        format: RefineFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Level-mixed refinement A_sigma(t,q); the word extends periodically
    /// by its last letter
    Sigma {
        /// Word over 0 (stack) and 1 (Ferrers), e.g. 110
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RefineFormat::Plain)]
        format: RefineFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive stack-polyomino table as CSV (area,width,height,rise,count)
    Stacks {
        #[arg(long, default_value_t = 7)]
        max_area: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive Ferrers-diagram table as CSV (area,width,height,count)
    Ferrers {
        #[arg(long, default_value_t = 7)]
        max_area: usize,
        /// Keep only diagrams whose n-th largest row has length n
        #[arg(long)]
        durfee: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enriched-tree census as CSV (area,vertices,count) or DOT
    Trees {
        /// Species word over 0/1, extended periodically by its last letter
        #[arg(long, default_value = "0")]
        sigma: String,
        #[arg(long, default_value_t = 7)]
        max_area: usize,
        /// Restrict to trees of at most this height
        #[arg(long)]
        max_height: Option<usize>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Csv)]
        format: TreeFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate the coefficient growth rate mu
    Mu {
        #[arg(long, default_value_t = 300)]
        order: usize,
        /// Coefficient window, lo:hi
        #[arg(long, default_value = "100:300")]
        window: String,
        /// Richardson extrapolation depth
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Also report the amplitude readout
        #[arg(long)]
        amplitude: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full identity / oracle / cross-method suite
    Verify {
        #[arg(long, default_value_t = 50)]
        order: usize,
        #[arg(long, default_value_t = 8)]
        max_area: usize,
        /// Perturb one check to prove the suite can fail (testing hook)
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Xi {
            order,
            method,
            format,
            out,
        } => {
            let xi = match method {
                Method::Theta => xi_via_theta(order),
                Method::Fix1 => xi_fix1(order),
                Method::Fix2 => xi_fix2(order),
            };
            let text = render_qseries(&xi, format);
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Refine {
            order,
            species,
            format,
            out,
        } => {
            let series = match species {
                SpeciesArg::Stack => a_refined(order),
                SpeciesArg::Ferrers => atilde_refined(order),
            };
            emit(out, &render_tqseries(&series, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma {
            sigma,
            order,
            format,
            out,
        } => {
            let word = SigmaWord::parse(&sigma).map_err(|e| e.to_string())?;
            let series = a_sigma_extended(&word, order).map_err(|e| e.to_string())?;
            emit(out, &render_tqseries(&series, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Stacks { max_area, out } => {
            let mut text = String::from("area,width,height,rise,count\n");
            for ((area, width, height, rise), count) in enumerate_stacks(max_area) {
                let _ = writeln!(text, "{area},{width},{height},{rise},{count}");
            }
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ferrers {
            max_area,
            durfee,
            out,
        } => {
            let mut text = String::from("area,width,height,count\n");
            for ((area, width, height), count) in enumerate_ferrers(max_area, durfee) {
                let _ = writeln!(text, "{area},{width},{height},{count}");
            }
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Trees {
            sigma,
            max_area,
            max_height,
            format,
            out,
        } => {
            let word = SigmaWord::parse(&sigma).map_err(|e| e.to_string())?;
            match format {
                TreeFormat::Csv => {
                    let table = enumerate_trees(&word, max_area, max_height);
                    let mut text = String::from("area,vertices,count\n");
                    for ((area, vertices), count) in table {
                        let _ = writeln!(text, "{area},{vertices},{count}");
                    }
                    emit(out, &text)?;
                }
                TreeFormat::Dot => {
                    if max_area > 5 {
                        // a debug rendering; object counts explode past this
                        eprintln!("error: --format dot supports --max-area up to 5");
                        return Ok(ExitCode::from(2));
                    }
                    let trees = all_trees(&word, max_area, max_height);
                    emit(out, &trees_to_dot(&trees))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mu {
            order,
            window,
            depth,
            amplitude,
            out,
        } => {
            let (lo, hi) = parse_window(&window)?;
            let digits = precision_from_env();
            let xi = xi_via_theta(order);
            let est =
                estimate_mu_with_depth(&xi, lo..=hi, depth).map_err(|e| e.to_string())?;
            let mut text = String::new();
            let _ = writeln!(text, "mu estimate : {}", est.mu_decimal(digits));
            let _ = writeln!(text, "residual    : {:.3e}", est.residual_f64());
            let _ = writeln!(
                text,
                "window      : n = {}..{}  (depth {}, exponent -3/2)",
                lo, hi, depth
            );
            let _ = writeln!(text, "reference   : {}", MU_REFERENCE_DECIMAL);
            if amplitude {
                let amp = amplitude_estimate(&xi, est.mu(), lo..=hi).map_err(|e| e.to_string())?;
                let _ = writeln!(
                    text,
                    "amplitude   : {:.6}  ({})",
                    amp.amplitude,
                    if amp.stabilized { "stabilized" } else { "not stabilized" }
                );
            }
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            order,
            max_area,
            inject_fault,
        } => {
            let outcomes = run_verification(VerifyConfig { order, max_area }, inject_fault);
            let mut failed = 0usize;
            for o in &outcomes {
                println!(
                    "{} [{:02}] {}",
                    if o.pass { "PASS" } else { "FAIL" },
                    o.index,
                    o.name
                );
                if !o.pass {
                    failed += 1;
                }
            }
            if failed == 0 {
                println!("all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{failed} of {} checks failed", outcomes.len());
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn render_qseries(series: &QSeries, format: SeriesFormat) -> String {
    match format {
        SeriesFormat::Plain => format!("{series}\n"),
        SeriesFormat::Json => format!("{}\n", series.to_json()),
    }
}

fn render_tqseries(series: &TQSeries, format: RefineFormat) -> String {
    match format {
        RefineFormat::Plain => {
            let mut text = String::new();
            for (k, poly) in series.coeffs().iter().enumerate() {
                let _ = writeln!(text, "q^{k}: {poly}");
            }
            text
        }
        RefineFormat::Json => format!("{}\n", series.to_json()),
    }
}

fn parse_window(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("window must be lo:hi, got {text:?}"))?;
    let lo = lo.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

/// Decimal digits for growth-rate output; THETA_ROOT_PRECISION overrides
/// the default of 50.
fn precision_from_env() -> usize {
    std::env::var("THETA_ROOT_PRECISION")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|d| d.clamp(1, 1000))
        .unwrap_or(50)
}

fn emit(out: Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}
