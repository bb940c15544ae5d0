use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use pdneg::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut io::stdin().lock(), &mut out);
    let _ = out.flush();
    match result {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("pdneg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
