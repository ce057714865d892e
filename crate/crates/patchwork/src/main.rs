//! Thin command-line front end over the library. Each subcommand reads and
//! writes the JSON formats defined in `patchwork::io`.

use clap::{Parser, Subcommand};
use patchwork::calculus::{
    haas_check, kappa, rho_uniformity, solve_simple_harnack, Frames, NamedDistribution,
    QuadraticCoeffs,
};
use patchwork::experiments::{exhaustive_b0, monte_carlo_b0, render_svg, report};
use patchwork::families::{generate, Family};
use patchwork::io;
use patchwork::lattice::PrimitiveComplex;
use patchwork::real::build_tx;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit code for validation failures.
const EXIT_INVALID: u8 = 2;
/// Exit code for resource-cap refusals.
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "patchwork", about = "Combinatorial patchworking toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named triangulation family and write it as JSON.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        size: i64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Validate a triangulation file.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Combinatorial analysis: f-vector, interior points, ρ-uniformity, κ.
    Analyze {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Evaluate a sign formula on a triangulation and write explicit values.
    Sign {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        formula: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        value: Option<u8>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the T-hypersurface and dump its cell complex.
    BuildTx {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        sign: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the maximality conditions.
    HaasCheck {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        sign: PathBuf,
        /// Compute the homological condition 2 (dimension 3).
        #[arg(long)]
        cond2: bool,
    },
    /// Solve the simple-integrability system.
    SolveHarnack {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Estimate or enumerate the expected number of components.
    ExpectB0 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 256)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate all sign distributions instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render a planar patchwork as SVG.
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        sign: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "svg")]
        format: String,
    },
    /// Full machine-readable analysis report of one (K, ε).
    Report {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        sign: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn load_complex(path: &PathBuf) -> Result<PrimitiveComplex, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    io::triangulation_from_json(&text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<(), (u8, String)> {
    let invalid = |msg: String| (EXIT_INVALID, msg);
    match cli.command {
        Command::Generate {
            family,
            dim,
            size,
            out,
        } => {
            let family: Family = family.parse().map_err(invalid)?;
            let k = generate(family, dim, size).map_err(|e| invalid(e.to_string()))?;
            emit(&out, &io::triangulation_to_json(&k)).map_err(|e| invalid(e.to_string()))
        }
        Command::Validate { input } => {
            let k = load_complex(&input).map_err(invalid)?;
            println!(
                "valid: dim {} with f-vector {:?}",
                k.dim(),
                k.f_vector()
            );
            Ok(())
        }
        Command::Analyze { input } => {
            let k = load_complex(&input).map_err(invalid)?;
            let frames = Frames::new(&k);
            let (uniform, failures) = rho_uniformity(&frames);
            let kap = kappa(&k, &frames);
            let doc = serde_json::json!({
                "dim": k.dim(),
                "f_vector": k.f_vector(),
                "interior_points": k.polytope().interior_lattice_points().len(),
                "rho_uniform": uniform,
                "rho_failures": failures.iter().map(|s| s.verts().to_vec()).collect::<Vec<_>>(),
                "kappa": kap,
            });
            println!("{doc}");
            Ok(())
        }
        Command::Sign {
            input,
            formula,
            seed,
            value,
            out,
        } => {
            let k = load_complex(&input).map_err(invalid)?;
            let kind = match formula.as_str() {
                "harnack" => NamedDistribution::Harnack,
                "quadratic" => NamedDistribution::Quadratic(QuadraticCoeffs {
                    constant: false,
                    linear: vec![true; k.dim()],
                    quadratic: (0..k.dim())
                        .flat_map(|i| (i + 1..k.dim()).map(move |j| (i, j)))
                        .collect(),
                }),
                "constant" => NamedDistribution::Constant(value.unwrap_or(0) == 1),
                "random" => NamedDistribution::Random(
                    seed.ok_or_else(|| invalid("--seed is required for random".into()))?,
                ),
                other => return Err(invalid(format!("unknown formula `{other}`"))),
            };
            let eps = patchwork::calculus::named_distribution(&kind, &k);
            emit(&out, &io::sign_to_json(&eps)).map_err(|e| invalid(e.to_string()))
        }
        Command::BuildTx { input, sign, out } => {
            let k = load_complex(&input).map_err(invalid)?;
            let text = std::fs::read_to_string(&sign).map_err(|e| invalid(e.to_string()))?;
            let eps = io::sign_from_json(&text, &k).map_err(|e| invalid(e.to_string()))?;
            let tx = build_tx(&k, &eps).map_err(|e| (EXIT_RESOURCE, e.to_string()))?;
            emit(&out, &io::cells_to_json(&tx, &k)).map_err(|e| invalid(e.to_string()))
        }
        Command::HaasCheck { input, sign, cond2 } => {
            let k = load_complex(&input).map_err(invalid)?;
            let text = std::fs::read_to_string(&sign).map_err(|e| invalid(e.to_string()))?;
            let eps = io::sign_from_json(&text, &k).map_err(|e| invalid(e.to_string()))?;
            let frames = Frames::new(&k);
            let report =
                haas_check(&k, &frames, &eps, cond2).map_err(|e| invalid(e.to_string()))?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(())
        }
        Command::SolveHarnack { input, out } => {
            let k = load_complex(&input).map_err(invalid)?;
            let frames = Frames::new(&k);
            match solve_simple_harnack(&k, &frames) {
                Some(eps) => emit(&out, &io::sign_to_json(&eps)).map_err(|e| invalid(e.to_string())),
                None => Err(invalid("not simply integrable".into())),
            }
        }
        Command::ExpectB0 {
            input,
            trials,
            seed,
            exhaustive,
            out,
        } => {
            let k = load_complex(&input).map_err(invalid)?;
            let doc = if exhaustive {
                let sweep = exhaustive_b0(&k).map_err(|e| (EXIT_RESOURCE, e.to_string()))?;
                serde_json::json!({
                    "exhaustive": true,
                    "histogram": sweep.histogram,
                    "mean_b0": sweep.mean(),
                    "maximal_b0": sweep.maximal_b0,
                    "maximizers": sweep.maximal_set.len(),
                })
            } else {
                let r =
                    monte_carlo_b0(&k, trials, seed).map_err(|e| (EXIT_RESOURCE, e.to_string()))?;
                serde_json::to_value(&r).unwrap()
            };
            emit(&out, &doc.to_string()).map_err(|e| invalid(e.to_string()))
        }
        Command::Render {
            input,
            sign,
            out,
            format,
        } => {
            if format != "svg" {
                return Err(invalid(format!("unsupported render format `{format}`")));
            }
            let k = load_complex(&input).map_err(invalid)?;
            let text = std::fs::read_to_string(&sign).map_err(|e| invalid(e.to_string()))?;
            let eps = io::sign_from_json(&text, &k).map_err(|e| invalid(e.to_string()))?;
            let svg = render_svg(&k, &eps).map_err(|e| invalid(e.to_string()))?;
            emit(&out, &svg).map_err(|e| invalid(e.to_string()))
        }
        Command::Report {
            input,
            sign,
            out,
            format,
        } => {
            if format != "json" {
                return Err(invalid(format!("unsupported report format `{format}`")));
            }
            let k = load_complex(&input).map_err(invalid)?;
            let text = std::fs::read_to_string(&sign).map_err(|e| invalid(e.to_string()))?;
            let eps = io::sign_from_json(&text, &k).map_err(|e| invalid(e.to_string()))?;
            let r = report(&k, &eps).map_err(|e| (EXIT_RESOURCE, e.to_string()))?;
            emit(&out, &serde_json::to_string_pretty(&r).unwrap())
                .map_err(|e| invalid(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
