use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vcyc_cli::commands::{self, CmdOutput, Format};
use vcyc_cli::doc;

/// Exact computation of the minimal dimensions of the classifying spaces
/// for the families of finite and of virtually cyclic subgroups, over a
/// zoo of virtually poly-Z and locally virtually cyclic groups.
#[derive(Parser)]
#[command(name = "vcyc", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute dimension reports for every group in the input document.
    Compute {
        /// Input spec document (JSON); "-" reads standard input.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Cross-check the engine against brute-force oracles.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Power bound for the brute-force oracles; defaults to the
        /// rank-dependent rule (lcm of realizable orders, capped at 2520).
        /// The VCYC_ORACLE_DEPTH environment variable overrides the
        /// default; this flag overrides both.
        #[arg(long)]
        oracle_depth: Option<u64>,
    },
    /// Dimension reports with integral cohomology tables attached.
    Cohomology {
        #[arg(long)]
        input: PathBuf,
        /// Truncate tables above this degree.
        #[arg(long)]
        degree_max: Option<usize>,
    },
    /// Combine two named groups with the product rules.
    Product {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
}

fn read_input(path: &PathBuf) -> std::io::Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn load_document(path: &PathBuf) -> Result<doc::SpecDocument, CmdOutput> {
    let bytes = read_input(path).map_err(|e| CmdOutput {
        stdout: format!("error: cannot read {}: {e}\n", path.display()),
        exit: commands::EXIT_USAGE,
    })?;
    doc::parse_spec(&bytes).map_err(|e| CmdOutput {
        stdout: format!("error: {e}\n"),
        exit: commands::EXIT_VALIDATION,
    })
}

fn env_oracle_depth() -> Option<u64> {
    std::env::var("VCYC_ORACLE_DEPTH").ok().and_then(|v| v.parse().ok())
}

fn run() -> CmdOutput {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Keep clap's rendering but pin the exit-code contract:
            // anything that is not an explicit help/version request is a
            // usage error.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return CmdOutput {
                stdout: e.render().to_string(),
                exit: if benign { commands::EXIT_OK } else { commands::EXIT_USAGE },
            };
        }
    };
    match cli.command {
        Command::Compute { input, format } => match load_document(&input) {
            Ok(doc) => commands::cmd_compute(&doc, format.into()),
            Err(out) => out,
        },
        Command::Verify { input, oracle_depth } => match load_document(&input) {
            Ok(doc) => commands::cmd_verify(&doc, oracle_depth.or_else(env_oracle_depth)),
            Err(out) => out,
        },
        Command::Cohomology { input, degree_max } => match load_document(&input) {
            Ok(doc) => commands::cmd_cohomology(&doc, degree_max),
            Err(out) => out,
        },
        Command::Product { input, left, right, format } => match load_document(&input) {
            Ok(doc) => commands::cmd_product(&doc, &left, &right, format.into()),
            Err(out) => out,
        },
    }
}

fn main() -> ExitCode {
    let out = run();
    print!("{}", out.stdout);
    ExitCode::from(out.exit as u8)
}
