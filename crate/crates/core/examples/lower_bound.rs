//! Measured total bandwidth against the lower bound built from the
//! shortest nontrivial cycles.
//!
//! ```bash
//! cargo run --release --example lower_bound
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::sweep::lower_bound_total_bandwidth;

fn main() -> periodic_spectra::Result<()> {
    let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
    println!("{:>8} {:>12} {:>12} {:>12}", "mu", "measured", "bound", "bound(x2)");
    for mu in [1e1, 1e2, 1e3, 1e4] {
        let r = lower_bound_total_bandwidth(&spec, mu, 64)?;
        println!(
            "{mu:>8.0e} {:>12.4e} {:>12.4e} {:>12.4e}{}",
            r.measured_total_bandwidth,
            r.bound,
            r.bound_oriented,
            if r.pass { "" } else { "  below bound" }
        );
    }
    Ok(())
}
