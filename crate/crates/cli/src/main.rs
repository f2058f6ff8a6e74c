use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arrangement_cli::commands::{self, Options, Outcome};
use arrangement_cli::CliError;
use arrangement_pairing::arrangement::RegionOrder;

#[derive(Parser)]
#[command(name = "arrpair", version, about = "Bounded complexes and intersection pairings of hyperplane arrangements")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Region ordering.
    #[arg(long, global = true, value_enum, default_value_t = Order::Lex)]
    order: Order,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Input,
}

#[derive(Subcommand)]
enum Command {
    /// List the bounded regions with their sign vectors and vertices.
    Regions { path: PathBuf },
    /// Print the pairing matrix of the bounded regions.
    Phi { path: PathBuf },
    /// Print the Gram matrix of the region cycles (simple arrangements only).
    Gram { path: PathBuf },
    /// Print the signed cycle of each region in the independence complex.
    Psi { path: PathBuf },
    /// Run every check and print the report; exit 0 only when verified.
    Verify {
        path: PathBuf,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compare the independence complex with the nerve of the hyperplanes.
    Nerve { path: PathBuf },
    /// Reduced homology ranks of the independence complex.
    Homology { path: PathBuf },
    /// Build an arrangement from a matrix file A and parameters theta.
    Gale {
        path: PathBuf,
        /// Comma-separated rationals; overrides the file's theta.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Explicit lift psi with A·psi = theta; overrides the file's psi.
        #[arg(long, allow_hyphen_values = true)]
        psi: Option<String>,
        /// Write the arrangement file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a planar arrangement as SVG.
    Render { path: PathBuf, out: PathBuf },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = Options {
        json: cli.json,
        order: match cli.order {
            Order::Lex => RegionOrder::Lex,
            Order::Input => RegionOrder::Input,
        },
    };
    match cli.command {
        Command::Regions { path } => commands::cmd_regions(&path, opts),
        Command::Phi { path } => commands::cmd_phi(&path, opts),
        Command::Gram { path } => commands::cmd_gram(&path, opts),
        Command::Psi { path } => commands::cmd_psi(&path, opts),
        Command::Verify { path, report } => commands::cmd_verify(&path, opts, report.as_deref()),
        Command::Nerve { path } => commands::cmd_nerve(&path, opts),
        Command::Homology { path } => commands::cmd_homology(&path, opts),
        Command::Gale { path, theta, psi, out } => {
            commands::cmd_gale(&path, theta.as_deref(), psi.as_deref(), out.as_deref())
        }
        Command::Render { path, out } => commands::cmd_render(&path, &out, opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
