use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use periodic_spectra::cli::{run, RunConfig, EXIT_IO, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    if config.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build_global();
    }

    let outcome = run(&config);
    if let Some(msg) = &outcome.error {
        eprintln!("perispec: {msg}");
    }
    let written = match &config.output {
        Some(path) => std::fs::write(path, &outcome.rendered),
        None => std::io::stdout().write_all(outcome.rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("perispec: {e}");
        return ExitCode::from(EXIT_IO as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
