use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cytop::{cmd_analyze, cmd_batch, cmd_face_lab, cmd_polar, read_file, CliError};

/// Topology of Calabi-Yau threefolds from reflexive polytopes.
#[derive(Parser)]
#[command(name = "cytop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one polytope.
    Analyze {
        file: PathBuf,
        /// NEF partition file: one line of 0-based vertex indices per part.
        #[arg(long)]
        nef: Option<PathBuf>,
        /// Print a one-line summary instead of the full report.
        #[arg(long)]
        summary: bool,
    },
    /// One report per record of a concatenated polytope file.
    Batch {
        file: PathBuf,
        /// Worker threads.
        #[arg(short = 'j', long = "jobs")]
        jobs: Option<usize>,
        #[arg(long)]
        summary: bool,
    },
    /// Triangulation, dual complex and shelling of a two-face.
    FaceLab {
        file: PathBuf,
        /// Index of the two-face.
        #[arg(long)]
        face: usize,
        #[arg(long)]
        flips: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Vertices of the polar polytope.
    Polar { file: PathBuf },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { file, nef, summary } => {
            let text = read_file(&file)?;
            let partition = nef.map(|p| read_file(&p)).transpose()?;
            cmd_analyze(&text, partition.as_deref(), summary)
        }
        Command::Batch { file, jobs, summary } => cmd_batch(&read_file(&file)?, jobs, summary),
        Command::FaceLab {
            file,
            face,
            flips,
            seed,
        } => cmd_face_lab(&read_file(&file)?, face, flips.map(|k| (k, seed))),
        Command::Polar { file } => cmd_polar(&read_file(&file)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(mut out) => {
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            // A closed pipe downstream is not an error.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
