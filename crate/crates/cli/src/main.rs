use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use rsbf::Budget;

mod args;
mod commands;

use args::Cli;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Lib(rsbf::Error),
}

impl From<rsbf::Error> for CliError {
    fn from(e: rsbf::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use rsbf::Error::*;
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Lib(e) if e.is_resource() => EXIT_RESOURCE,
            CliError::Lib(Overflow(_) | Internal(_)) => EXIT_VERIFICATION,
            CliError::Lib(_) => EXIT_USAGE,
        }
    }

    /// `error: <kind>: <message>` on a single line.
    fn line(&self) -> String {
        let (kind, msg) = match self {
            CliError::Usage(m) => ("usage", m.clone()),
            CliError::Io(m) => ("io", m.clone()),
            CliError::Lib(e) if e.is_resource() => ("budget", e.to_string()),
            CliError::Lib(e @ (rsbf::Error::Overflow(_) | rsbf::Error::Internal(_))) => {
                ("verification", e.to_string())
            }
            CliError::Lib(e) => ("input", e.to_string()),
        };
        format!("error: {kind}: {}", msg.replace('\n', " "))
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure threads: {e}")))?;
    }
    let budget = cli
        .max_n_override
        .map_or_else(Budget::default, Budget::with_max_n);
    let output = commands::run(&cli.command, cli.format, &budget)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &output.text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(output.text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("cannot write output: {e}")))?;
        }
    }
    Ok(output.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) =>
        {
            let _ = e.print();
            return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("{}", CliError::Usage(first.to_string()).line());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: verification: one or more checks failed");
            ExitCode::from(EXIT_VERIFICATION)
        }
        Err(e) => {
            eprintln!("{}", e.line());
            ExitCode::from(e.exit_code())
        }
    }
}
