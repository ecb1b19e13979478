use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use falsilab_cli::args::Cli;
use falsilab_cli::commands::execute;
use falsilab_cli::report::{echo, Report};

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args_os().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = Report::new(echo(&raw));
    match execute(&cli.command, &mut report) {
        Ok(()) => {
            print!("{}", report.render(start.elapsed()));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
