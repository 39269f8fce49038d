use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use dialect_forge::Session;
use dialect_forge_cli::commands::{self, Metric, TransformArgs};
use dialect_forge_cli::server;

#[derive(Parser)]
#[command(name = "dialect-forge", version, about = "Rule-based English dialect perturbation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    F1,
    Em,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite a CoNLL-U corpus, or selected fields of a JSON Lines dataset.
    Transform {
        /// Profile file, or the name of a shipped profile.
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, required_unless_present = "jsonl")]
        conllu: Option<PathBuf>,
        #[arg(long, requires_all = ["fields", "parses"])]
        jsonl: Option<PathBuf>,
        /// Comma-separated field selectors, e.g. `questions[*].input_text`.
        #[arg(long, value_delimiter = ',')]
        fields: Vec<String>,
        /// Sidecar CoNLL-U with the parses of the selected fields.
        #[arg(long)]
        parses: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        provenance: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Normalized Manhattan distance between two profiles.
    Distance {
        #[arg(long)]
        profile_a: String,
        #[arg(long)]
        profile_b: String,
        /// One feature number per line; defaults to the cataloged features.
        #[arg(long)]
        universe: Option<PathBuf>,
    },
    /// Summarize a provenance file as JSON.
    Density {
        #[arg(long)]
        provenance: PathBuf,
    },
    /// Compare two prediction files against gold with a paired bootstrap.
    Eval {
        #[arg(long)]
        pred_a: PathBuf,
        #[arg(long)]
        pred_b: PathBuf,
        #[arg(long)]
        gold: PathBuf,
        #[arg(long, value_enum, default_value = "f1")]
        metric: MetricArg,
        #[arg(long, default_value_t = 1000)]
        resamples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Identify a respondent's dialect with yes/no questions.
    Survey {
        /// Directory of `*.tsv` profiles; defaults to the shipped set.
        #[arg(long)]
        profiles: Option<PathBuf>,
        /// Question bank, `feature<TAB>sentence` per line.
        #[arg(long)]
        bank: Option<PathBuf>,
        /// Profiles to leave out of the candidate set.
        #[arg(long, value_delimiter = ',', default_value = "Multi")]
        exclude: Vec<String>,
        /// Serve the HTTP API instead of asking on the terminal.
        #[arg(long)]
        serve: bool,
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
        /// Static files to serve next to the API.
        #[arg(long = "static")]
        static_dir: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Transform {
            profile,
            seed,
            conllu,
            jsonl,
            fields,
            parses,
            out,
            provenance,
            density,
            threads,
        } => {
            let summary = commands::transform(&TransformArgs {
                profile: &profile,
                seed,
                density,
                threads,
                conllu: conllu.as_deref(),
                jsonl: jsonl.as_deref(),
                fields: &fields,
                parses: parses.as_deref(),
                out: &out,
                provenance: &provenance,
            })?;
            let unit = if jsonl.is_some() { "records" } else { "sentences" };
            eprintln!(
                "{} {unit}, {} changed, {} sites skipped",
                summary.units, summary.changed, summary.skips
            );
        }
        Command::Distance {
            profile_a,
            profile_b,
            universe,
        } => {
            println!("{}", commands::distance(&profile_a, &profile_b, universe.as_deref())?);
        }
        Command::Density { provenance } => {
            println!("{}", serde_json::to_string_pretty(&commands::density(&provenance)?)?);
        }
        Command::Eval {
            pred_a,
            pred_b,
            gold,
            metric,
            resamples,
            seed,
        } => {
            let metric = match metric {
                MetricArg::F1 => Metric::F1,
                MetricArg::Em => Metric::Em,
            };
            let report = commands::eval(&pred_a, &pred_b, &gold, metric, resamples, seed)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Survey {
            profiles,
            bank,
            exclude,
            serve,
            addr,
            static_dir,
        } => {
            let (profiles, bank) = commands::survey_inputs(profiles.as_deref(), bank.as_deref(), &exclude)?;
            if serve {
                let state = server::AppState::new(profiles, bank);
                tokio::runtime::Runtime::new()?.block_on(server::serve(&addr, state, static_dir))?;
            } else {
                let session = Session::new(profiles, bank);
                commands::survey_terminal(session, io::stdin().lock(), io::stdout().lock())?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
