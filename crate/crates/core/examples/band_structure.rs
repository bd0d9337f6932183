//! Bands, their union and its measure for one coupling, plus the
//! eigenvector-based upper bound on each band width.
//!
//! ```bash
//! cargo run --release --example band_structure -- 10
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::spectrum::{band_structure, band_width_bounds};

fn main() -> periodic_spectra::Result<()> {
    let mu: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("coupling must be a number"))
        .unwrap_or(10.0);
    let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
    let bs = band_structure(&spec, mu, 64)?;
    let bounds = band_width_bounds(&spec, mu, 64)?;

    println!("mu = {mu}, {} k-points", bs.grid.len());
    println!("{:>3} {:>14} {:>14} {:>12} {:>12}", "j", "lower", "upper", "width", "bound");
    for (j, (b, bound)) in bs.bands.iter().zip(&bounds).enumerate() {
        println!("{:>3} {:>14.8} {:>14.8} {:>12.4e} {:>12.4e}", j + 1, b.lower, b.upper, b.width(), bound);
    }
    let m = bs.measure();
    println!("\nspectrum:");
    for iv in m.union.intervals() {
        println!("  [{:.8}, {:.8}]", iv.lo, iv.hi);
    }
    println!("measure {:.6e}, total bandwidth {:.6e}", m.measure, m.total_bandwidth);
    Ok(())
}
