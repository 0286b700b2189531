use std::process::ExitCode;

use clap::Parser;

use locsig::cli::{self, Cli};

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let output = cli::execute(&args);
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    if std::env::var_os(cli::NO_WARN_ENV).is_none() {
        for w in &output.warnings {
            eprintln!("warning: {w}");
        }
    }
    ExitCode::from(output.status as u8)
}
