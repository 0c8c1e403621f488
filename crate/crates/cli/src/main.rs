use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mustafin_cli::document::{parse_vector, ConfigurationDocument};
use mustafin_cli::error::CliError;
use mustafin_cli::{report, table, verify};
use mustafin_core::apartment::local_model_chain;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "mustafin",
    version,
    about = "Special fibers of one-apartment Mustafin varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lattice points of the tropical convex hull.
    Hull { path: PathBuf },
    /// Reduction data at every hull point, component counts and the
    /// multidegree partition.
    Classify { path: PathBuf },
    /// Multigraded Hilbert function of the image at one hull point.
    Hilbert {
        path: PathBuf,
        /// Hull point, e.g. `0,-1,-4`.
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
        /// Multidegree, one entry per configuration point, e.g. `1,0,2`.
        #[arg(long)]
        u: String,
    },
    /// Hull graph with the reduced edge maps.
    Graph {
        path: PathBuf,
        /// Emit Graphviz DOT instead of a report.
        #[arg(long)]
        dot: bool,
    },
    /// Tropical general position, with a singular minor as witness.
    Gp { path: PathBuf },
    /// The local-model chain of `d` lattice classes.
    LocalModel {
        #[arg(long)]
        d: usize,
    },
    /// Compare the implementation against brute-force oracles.
    Verify {
        /// Configuration to check.
        path: Option<PathBuf>,
        /// Also check a random batch generated from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Size of the random batch.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

/// Rendered output plus whether it reports a failed check.
struct Output {
    text: String,
    failed: bool,
}

fn render<T: Serialize>(format: Format, value: &T, as_table: impl FnOnce(&T) -> String) -> Output {
    let text = match format {
        Format::Json => serde_json::to_string(value).expect("reports serialize") + "\n",
        Format::Table => as_table(value),
    };
    Output {
        text,
        failed: false,
    }
}

fn load(path: &Path) -> Result<(ConfigurationDocument, mustafin_core::Configuration), CliError> {
    let doc = ConfigurationDocument::read(path)?;
    let config = doc.to_configuration()?;
    Ok((doc, config))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Hull { path } => {
            let (doc, config) = load(&path)?;
            Ok(render(
                format,
                &report::hull_report(&config, doc.label),
                table::hull,
            ))
        }
        Command::Classify { path } => {
            let (doc, config) = load(&path)?;
            let r = report::classification_report(&config, doc.label)?;
            Ok(render(format, &r, table::classification))
        }
        Command::Hilbert { path, vertex, u } => {
            let vertex = parse_vector::<i64>("--vertex", &vertex)?;
            let u = parse_vector::<usize>("--u", &u)?;
            let (_, config) = load(&path)?;
            let r = report::hilbert_report(&config, &vertex, &u)?;
            Ok(render(format, &r, table::hilbert))
        }
        Command::Graph { path, dot } => {
            let (_, config) = load(&path)?;
            let r = report::graph_report(&config);
            if dot {
                Ok(Output {
                    text: report::graph_dot(&r),
                    failed: false,
                })
            } else {
                Ok(render(format, &r, table::graph))
            }
        }
        Command::Gp { path } => {
            let (_, config) = load(&path)?;
            let r = report::general_position_report(&config);
            Ok(render(format, &r, table::general_position))
        }
        Command::LocalModel { d } => {
            let chain = local_model_chain(d)?;
            let doc = ConfigurationDocument::from_configuration(&chain, None);
            Ok(render(format, &doc, table::document))
        }
        Command::Verify { path, seed, count } => {
            let mut configs = Vec::new();
            if let Some(path) = &path {
                configs.push(load(path)?.1);
            }
            if let Some(seed) = seed {
                configs.extend(verify::random_configurations(seed, count));
            }
            if configs.is_empty() {
                return Err(CliError::parse(
                    "usage",
                    "verify needs a configuration file, --seed, or both",
                ));
            }
            let r = verify::verify(&configs);
            let mut out = render(format, &r, table::verify);
            out.failed = !r.passed;
            Ok(out)
        }
    }
}

fn fail(error: &CliError) -> ExitCode {
    let record = serde_json::to_string(&error.record()).expect("records serialize");
    eprintln!("{record}");
    error.exit_code()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            return fail(&CliError::parse("usage", message.trim_end()));
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.text.as_bytes());
            if out.failed {
                fail(&CliError::Invariant(
                    "verification found discrepancies".into(),
                ))
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(&e),
    }
}
