//! Drives the command layer in-process and reads its CSV back.
//!
//! ```bash
//! cargo run --release --example run_cli
//! ```

use clap::Parser;
use periodic_spectra::cli::{run, ReportDocument, RunConfig};

fn main() -> periodic_spectra::Result<()> {
    let config = RunConfig::parse_from(["perispec", "sweep", "fixture:fig1", "--format", "csv", "--points", "4"]);
    let outcome = run(&config);
    println!("exit code {}", outcome.exit_code);
    let doc = ReportDocument::from_csv(&outcome.rendered)?;
    let slopes = doc.section("slopes").expect("sweep report has slopes");
    for row in &slopes.rows {
        println!("{:?}", row);
    }
    Ok(())
}
