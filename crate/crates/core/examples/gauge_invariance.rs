//! Spanning-tree gauges: the edges that keep a nonzero index after the
//! change of gauge all have weight at least ω(a), and the spectrum does not
//! move. A hand-corrupted index does move it.
//!
//! ```bash
//! cargo run --release --example gauge_invariance
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::cycles::{mst_gauge, omega_of_value};
use periodic_spectra::spectrum::gauge_equivalence_check;

fn main() -> periodic_spectra::Result<()> {
    let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
    for a in spec.distinct_values() {
        let g = mst_gauge(&spec, a)?;
        let drift = gauge_equivalence_check(&spec, &g.form, 10.0, 16)?;
        println!(
            "a = {a}: support {:?}, min weight {:?}, omega(a) = {}, max |Δλ| = {drift:.2e}",
            g.support(),
            g.min_support_weight(),
            omega_of_value(&spec, a)?
        );
    }

    let mut broken = spec.one_form();
    broken.set(0, vec![1, 0].into());
    let drift = gauge_equivalence_check(&spec, &broken, 10.0, 16)?;
    println!("corrupted index on edge v1-v2: max |Δλ| = {drift:.2e}");
    Ok(())
}
