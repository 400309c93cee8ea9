use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weyl_core::CartanType;
use weyl_dl::commands::parse_target;
use weyl_dl::error::{EXIT_OK, EXIT_VERIFICATION};
use weyl_dl::{run, CliError, Command, Config, OutputFormat};

/// Character tables and Deligne-Lusztig checks for finite Weyl groups.
#[derive(Debug, Parser)]
#[command(name = "weyl-dl", version)]
struct Cli {
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Directory for cached character tables.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Seed for the eigenspace-splitting combinations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = weyl_core::rootsys::DEFAULT_MAX_ORDER)]
    max_order: usize,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Print the character table of W.
    Table { r#type: String, rank: usize },
    /// Print the Deligne-Lusztig permutation of Irr(W) and the Springer pairing.
    Dl { r#type: String, rank: usize },
    /// Run the invariant suite for one type, or `all` for the full roster.
    Verify { target: String, rank: Option<usize> },
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let mut config = Config {
        max_group_order: cli.max_order,
        rng_seed: cli.seed,
        output_format: cli.format.parse::<OutputFormat>()?,
        ..Config::default()
    };
    if let Some(dir) = cli.cache_dir {
        config.cache_dir = dir;
    }
    let command = match cli.command {
        Cmd::Table { r#type, rank } => Command::Table(r#type.parse::<CartanType>()?, rank),
        Cmd::Dl { r#type, rank } => Command::Dl(r#type.parse::<CartanType>()?, rank),
        Cmd::Verify { target, rank } => Command::Verify(parse_target(&target, rank)?),
    };
    let outcome = run(&command, &config)?;
    let text = outcome.report.render(command.kind(), config.output_format)?;
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(if outcome.success { EXIT_OK } else { EXIT_VERIFICATION })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match execute(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
