use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hc_lab::{LabError, Selector};
use hc_lab_core::harness::{self, HarnessConfig};
use hc_lab_core::HcRule;

#[derive(Parser)]
#[command(name = "hc-lab", version, about = "Finite-group inspection and theorem-check suite")]
struct Cli {
    /// Largest group order accepted by constructors and loaders.
    #[arg(long, global = true)]
    cap_order: Option<NonZeroUsize>,
    /// Largest group whose subgroup lattice is enumerated.
    #[arg(long, global = true)]
    cap_lattice: Option<NonZeroUsize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Standard,
    WithoutNormalizer,
    AmbientNormalizer,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, characteristic subgroups, class flags and Sylow structure.
    Info { spec: String },
    /// Decide an embedding predicate for one subgroup.
    Check {
        /// h, hc, cnormal, weaklyh, quasinormal, subnormal or normal.
        predicate: String,
        spec: String,
        /// order=K,index=J, comma-separated element indices, or all.
        selector: String,
    },
    /// Run statements (or `all`) over the corpus.
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        /// Cayley-table files to use instead of the default corpus.
        #[arg(long, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write records to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<NonZeroUsize>,
        /// Evaluate conclusions even where the hypothesis fails.
        #[arg(long)]
        diagnostic: bool,
        /// Variant of the 𝓗C decision, for mutation runs.
        #[arg(long, value_enum, default_value = "standard")]
        hc_rule: Rule,
    },
}

fn run(cli: Cli) -> Result<u8, LabError> {
    let env = std::env::var(hc_lab::CAPS_ENV).ok();
    let caps = hc_lab::caps_from(env.as_deref(), cli.cap_order.map(usize::from), cli.cap_lattice.map(usize::from))?;
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    let io_err = |source| LabError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match cli.command {
        Command::Info { spec } => {
            let g = hc_lab::realize(&spec, &caps)?;
            w.write_all(hc_lab::info(&g, &caps)?.as_bytes()).map_err(io_err)?;
            w.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Check {
            predicate,
            spec,
            selector,
        } => {
            let pred = predicate.parse()?;
            let selector: Selector = selector.parse()?;
            let g = hc_lab::realize(&spec, &caps)?;
            w.write_all(hc_lab::check(pred, &g, &selector, &caps)?.as_bytes()).map_err(io_err)?;
            w.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Verify {
            ids,
            corpus,
            format,
            out,
            jobs,
            diagnostic,
            hc_rule,
        } => {
            let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
            let stmts = harness::select(&ids)?;
            let groups = if corpus.is_empty() {
                hc_lab::default_corpus(&caps)?
            } else {
                hc_lab::load_corpus(&corpus, &caps)?
            };
            let config = HarnessConfig {
                caps,
                diagnostic,
                rule: match hc_rule {
                    Rule::Standard => HcRule::Standard,
                    Rule::WithoutNormalizer => HcRule::WithoutNormalizer,
                    Rule::AmbientNormalizer => HcRule::AmbientNormalizer,
                },
            };
            let start = Instant::now();
            let report = hc_lab::run_suite(&stmts, &groups, &config, jobs.map(usize::from))?;
            let elapsed = start.elapsed();
            if let Some(path) = out {
                let file = File::create(&path).map_err(|source| LabError::Io { path: path.clone(), source })?;
                let mut fw = BufWriter::new(file);
                hc_lab::write_records(&report, &mut fw)
                    .and_then(|_| fw.flush())
                    .map_err(|source| LabError::Io { path, source })?;
            }
            match format {
                Format::Text => hc_lab::write_text(&report, Some(elapsed), &mut w),
                Format::Records => hc_lab::write_records(&report, &mut w),
            }
            .and_then(|_| w.flush())
            .map_err(io_err)?;
            Ok(hc_lab::exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
