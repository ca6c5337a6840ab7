use std::io;
use std::process::ExitCode;

use trig_nderiv_cli::commands::{run_args, Config, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let code = run_args(std::env::args_os(), &config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
