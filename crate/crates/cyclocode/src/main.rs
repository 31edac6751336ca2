use std::process::ExitCode;

use cyclocode::cli::{self, CliError};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || matches!(args[0].as_str(), "--help" | "-h" | "help") {
        println!("{}", cli::USAGE);
        return ExitCode::SUCCESS;
    }
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(args: &[String]) -> Result<(), CliError> {
    let (command, cfg) = cli::parse_args(args)?;
    let text = cli::run_command(&command, &cfg)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, format!("{}\n", text))
            .map_err(|e| CliError::Validation(format!("cannot write {}: {}", path.display(), e)))?,
        None => println!("{}", text),
    }
    Ok(())
}
