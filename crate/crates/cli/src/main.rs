use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use sungeo_cli::{io::to_json, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(4),
            };
        }
    };
    match run(&cli) {
        Ok(report) => {
            println!("{}", to_json(&report));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("sungeo: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
