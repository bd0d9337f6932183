//! Large-coupling sweep: widths of the band clusters near μa decay like
//! μ^(-ω(a)), and the measure of the spectrum like μ^(-ω).
//!
//! ```bash
//! cargo run --release --example coupling_sweep
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::defaults::geometric_grid;
use periodic_spectra::sweep::sweep;

fn main() -> periodic_spectra::Result<()> {
    let mus = geometric_grid(1e2, 1e4, 5);
    for q in [[1.0, 1.0, 0.0, 0.0, 0.0, 0.0], [1.0, 2.0, 3.0, 4.0, 0.0, 0.0]] {
        let r = sweep(&fig1(q), &mus, 64)?;
        let predicted = r.predicted.as_ref().expect("valid graph");
        println!("Q = {q:?}");
        println!(
            "  measure slope {:+.3} (expected {})",
            r.measure_fit.as_ref().map_or(f64::NAN, |f| f.slope),
            -(predicted.omega as f64)
        );
        for fit in &r.cluster_fits {
            let expected = -(predicted.omega_of(fit.value).unwrap() as f64);
            match &fit.fit {
                _ if fit.flat => println!("  cluster a = {}: flat", fit.value),
                Some(f) => println!("  cluster a = {}: slope {:+.3} ± {:.3} (expected {expected})", fit.value, f.slope, f.stderr),
                None => println!("  cluster a = {}: no fit", fit.value),
            }
        }
    }

    // Widths of order μ^-4 reach rounding level near μ = 10^3.5, so the
    // steepest cluster is refitted on the lower couplings.
    let r = sweep(&fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]), &mus, 64)?;
    let f = r.cluster_slope_up_to(0.0, 1e3)?;
    println!("  cluster a = 0, mu <= 1e3: slope {:+.3}", f.slope);
    Ok(())
}
