use std::process::ExitCode;

use clap::Parser;

use tamecurve_cli::{combined_code, run_batch, run_command, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcomes = match (&cli.batch, &cli.command) {
        (Some(path), _) => match std::fs::read_to_string(path) {
            Ok(text) => run_batch(&text, &cli.flags),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(EXIT_ERROR as u8);
            }
        },
        (None, Some(cmd)) => vec![run_command(cmd, &cli.flags)],
        (None, None) => {
            eprintln!("error: no command given (see --help)");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    for o in &outcomes {
        println!("{}", o.output);
    }
    ExitCode::from(combined_code(&outcomes) as u8)
}
