use clap::{Parser, Subcommand};
use polariton_core::units::UnitSystem;
use polariton_lab::{figures, LabError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polariton-lab", version, about = "Coupled-oscillator polariton scenarios and figure data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scenario file.
    Run {
        file: PathBuf,
        /// Directory for relative output paths (default: the file's directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the data behind one figure.
    Reproduce {
        /// Figure id, e.g. fig1d. `--list` shows all.
        #[arg(required_unless_present = "list")]
        figure: Option<String>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Print the physical constants in use.
    Constants,
    /// Run an oracle scenario and fail if it exceeds its tolerance.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), LabError> {
    polariton_lab::configure_threads()?;
    match cli.command {
        Command::Run { file, out } => {
            let s = polariton_lab::run_file(&file, out.as_deref())?;
            println!("{}: wrote {}", s.kind, s.outputs.join(", "));
        }
        Command::Reproduce { list: true, .. } => {
            for f in figures::FIGURES {
                println!("{:<8} {}", f.id, f.title);
            }
        }
        Command::Reproduce { figure, out, .. } => {
            let id = figure.expect("clap enforces a figure id");
            let s = polariton_lab::reproduce(&id, &out)?;
            println!("{id}: wrote {} ({} rows)", s.outputs.join(", "), s.rows);
        }
        Command::Constants => {
            for (name, value, unit) in UnitSystem::CODATA.entries() {
                println!("{name:<20} {value:<16e} {unit}");
            }
        }
        Command::Oracle { file, out } => {
            let s = polariton_lab::run_oracle(&file, out.as_deref())?;
            let c = s.check.expect("oracle summaries carry a check");
            println!("pass: max deviation {:e} within tolerance {:e}", c.max_deviation, c.tolerance);
        }
    }
    Ok(())
}
