//! Validates the bundled graphs, including the three broken variants.
//!
//! ```bash
//! cargo run --example validate_fixture
//! ```

use periodic_spectra::cli::fixtures::{fixture, FIXTURE_NAMES};
use periodic_spectra::graph::validate;

fn main() -> periodic_spectra::Result<()> {
    for name in FIXTURE_NAMES {
        let spec = fixture(name)?;
        let report = validate(&spec);
        if report.ok() {
            println!("{name:<16} ok ({} vertices, {} edges, d = {})", spec.vertex_count(), spec.edges().len(), spec.dimension());
        } else {
            for v in &report.violations {
                println!("{name:<16} FAIL {v}");
            }
        }
    }
    Ok(())
}
