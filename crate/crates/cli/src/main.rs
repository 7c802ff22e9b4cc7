use std::process::ExitCode;

use clap::Parser;
use polybern_cli::args::{Cli, Command};
use polybern_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Table(r) | Command::Eval(r) => r.out.clone(),
        Command::Verify(v) => v.out.clone(),
    };
    let outcome = match run(&cli.command, &mut |t| eprintln!("{t}")) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("polybern: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match out {
        Some(path) => std::fs::write(&path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("polybern: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.code as u8)
}
