use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use oddeven::cli::{run, Cli};
use oddeven::{exit, Error};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    for line in &outcome.stats {
        eprintln!("{line}");
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.document).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(outcome.document.as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    ExitCode::from(outcome.exit_code() as u8)
}
