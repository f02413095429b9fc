use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use scx_cli::analyze::analyze;
use scx_cli::config::{Config, ConfigOverlay};
use scx_cli::format::{parse_complex, serialize_complex, Metadata};
use scx_cli::verify::{run_suite, Suite, SuiteParams};
use scx_cli::CliError;
use scx_core::{dual_graph, generators, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "scx",
    version,
    about = "Simplicial complex expansion toolkit: generators, exact Cheeger numbers, Laplacian spectra, and a verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Config file (key = value TOML); defaults to ./scx.toml when present
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Sweep budget: at most 2^bits vectors per exact sweep
    #[arg(long, global = true)]
    brute_cap_bits: Option<u32>,
    /// Coset table budget: at most 2^bits table entries
    #[arg(long, global = true)]
    coset_cap_bits: Option<u32>,
    /// Jacobi convergence tolerance (relative to the Frobenius norm)
    #[arg(long, global = true)]
    eig_tol: Option<f64>,
    /// Band under which float eigenvalues are displayed as zero
    #[arg(long, global = true)]
    zero_band: Option<f64>,
    /// Base seed for randomized instances
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Sigma,
    Xk,
    Yk,
    Gk,
    Rp2,
    RandomDisk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Paper,
    Quick,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in complex family as a canonical complex file
    Generate {
        #[arg(long)]
        family: Family,
        /// Dimension (sigma, xk, yk)
        #[arg(long)]
        m: Option<usize>,
        /// Iteration (xk, yk) or leaf count (gk)
        #[arg(long)]
        k: Option<usize>,
        /// Triangle budget (random-disk)
        #[arg(long)]
        t: Option<usize>,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a complex file: Betti numbers, torsion, spectral gaps,
    /// Cheeger certificates, diameter/radius, orientability
    Analyze {
        input: PathBuf,
        /// Comma-separated dimensions to analyze (default: all)
        #[arg(long)]
        dims: Option<String>,
        /// Skip exact sweeps; use the structural h_1 and h^(m-1) paths only
        #[arg(long)]
        structural_only: bool,
        /// Print the machine-readable JSON document instead of the table
        #[arg(long)]
        json: bool,
        /// Also write the CSV mirror of the table
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also write the JSON document to a file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over the built-in families
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Paper)]
        suite: SuiteArg,
        /// Dimension of the main gluing/subdivision families
        #[arg(long)]
        m: Option<usize>,
        /// Largest family iteration
        #[arg(long)]
        kmax: Option<usize>,
        /// Number of seeded random instances
        #[arg(long)]
        seeds: Option<u32>,
        /// Print the JSON report instead of text
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_generator: bool,
    },
    /// Emit the dual graph of a complex file as a graph document
    Dual {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct DualDocument {
    vertices: Vec<Vec<u32>>,
    edges: Vec<(usize, usize)>,
    border_set: Vec<usize>,
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
        }
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn generate(
    family: Family,
    m: Option<usize>,
    k: Option<usize>,
    t: Option<usize>,
    cfg: &Config,
) -> Result<(String, Metadata, SimplicialComplex), CliError> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::Validation(format!("--{flag} is required for this family")))
    };
    Ok(match family {
        Family::Sigma => {
            let m = need(m, "m")?;
            (
                format!("sigma-{m}"),
                Metadata {
                    family: Some("sigma".into()),
                    m: Some(m),
                    ..Default::default()
                },
                generators::sigma(m),
            )
        }
        Family::Xk => {
            let (m, k) = (need(m, "m")?, need(k, "k")?);
            if m < 1 || k < 1 {
                return Err(CliError::Validation("xk needs m >= 1 and k >= 1".into()));
            }
            (
                format!("xk-m{m}-k{k}"),
                Metadata {
                    family: Some("xk".into()),
                    m: Some(m),
                    k: Some(k),
                    ..Default::default()
                },
                generators::xk(m, k),
            )
        }
        Family::Yk => {
            let (m, k) = (need(m, "m")?, need(k, "k")?);
            if m < 1 || k < 1 {
                return Err(CliError::Validation("yk needs m >= 1 and k >= 1".into()));
            }
            (
                format!("yk-m{m}-k{k}"),
                Metadata {
                    family: Some("yk".into()),
                    m: Some(m),
                    k: Some(k),
                    ..Default::default()
                },
                generators::yk(m, k),
            )
        }
        Family::Gk => {
            let k = need(k, "k")?;
            if k < 1 {
                return Err(CliError::Validation("gk needs k >= 1".into()));
            }
            (
                format!("gk-{k}"),
                Metadata {
                    family: Some("gk".into()),
                    k: Some(k),
                    ..Default::default()
                },
                generators::gk(k),
            )
        }
        Family::Rp2 => (
            "rp2".into(),
            Metadata {
                family: Some("rp2".into()),
                ..Default::default()
            },
            generators::rp2(),
        ),
        Family::RandomDisk => {
            let t = need(t, "t")?;
            if t < 1 {
                return Err(CliError::Validation("random-disk needs t >= 1".into()));
            }
            (
                format!("disk-t{t}-seed{}", cfg.seed),
                Metadata {
                    family: Some("random_disk".into()),
                    t: Some(t),
                    seed: Some(cfg.seed),
                    ..Default::default()
                },
                generators::random_disk(t, cfg.seed),
            )
        }
    })
}

fn parse_dims(selector: &str) -> Result<Vec<usize>, CliError> {
    selector
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Validation(format!("bad dimension selector: {s}")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let flags = ConfigOverlay {
        brute_cap_bits: cli.brute_cap_bits,
        coset_cap_bits: cli.coset_cap_bits,
        eig_tol: cli.eig_tol,
        zero_band: cli.zero_band,
        seed: cli.seed,
    };
    let cfg = Config::resolve(cli.config.as_deref(), &flags)?;
    match cli.command {
        Command::Generate {
            family,
            m,
            k,
            t,
            out,
        } => {
            let (name, metadata, x) = generate(family, m, k, t, &cfg)?;
            let bytes = serialize_complex(&x, Some(&name), Some(metadata));
            write_output(out.as_ref(), &bytes)?;
            Ok(true)
        }
        Command::Analyze {
            input,
            dims,
            structural_only,
            json,
            csv,
            out,
        } => {
            let bytes = read_input(&input)?;
            let (file, x) = parse_complex(&bytes)?;
            let name = file.name.unwrap_or_else(|| input.display().to_string());
            let dims = dims.as_deref().map(parse_dims).transpose()?;
            let report = analyze(&x, &name, dims.as_deref(), structural_only, &cfg)?;
            if json {
                print!("{}", report.json());
            } else {
                print!("{}", report.text());
            }
            if let Some(p) = out {
                write_output(Some(&p), report.json().as_bytes())?;
            }
            if let Some(p) = csv {
                write_output(Some(&p), report.csv().as_bytes())?;
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            m,
            kmax,
            seeds,
            json,
            corrupt_generator,
        } => {
            let suite = match suite {
                SuiteArg::Paper => Suite::Paper,
                SuiteArg::Quick => Suite::Quick,
            };
            let mut params = SuiteParams::defaults(suite);
            if let Some(m) = m {
                params.m = m;
            }
            if let Some(kmax) = kmax {
                params.kmax = kmax;
            }
            if let Some(seeds) = seeds {
                params.seeds = seeds;
            }
            params.corrupt_generator = corrupt_generator;
            let report = run_suite(suite, &params, &cfg);
            if json {
                print!("{}", report.json());
            } else {
                print!("{}", report.text());
            }
            Ok(report.all_pass())
        }
        Command::Dual { input, out } => {
            let bytes = read_input(&input)?;
            let (_, x) = parse_complex(&bytes)?;
            let g = dual_graph(&x)?;
            let doc = DualDocument {
                vertices: g.labels.iter().map(|s| s.vertices().to_vec()).collect(),
                edges: g.edges.clone(),
                border_set: (0..g.vertex_count()).filter(|&v| g.border[v]).collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            write_output(out.as_ref(), text.as_bytes())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
