//! Amplitudes of the eigenvectors near μa shrink like μ^(-d(v, V^a)).
//!
//! ```bash
//! cargo run --example eigenvector_decay
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::defaults::{generic_k, DECAY_MUS};
use periodic_spectra::sweep::eigenvector_decay_check;

fn main() -> periodic_spectra::Result<()> {
    let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
    let r = eigenvector_decay_check(&spec, 0.0, &generic_k(2), &DECAY_MUS)?;
    println!("a = 0 at k = {:?}", r.k);
    for v in &r.vertices {
        println!("  v{}: exponent {:>6.3}  (distance {})", v.vertex + 1, v.exponent, v.target);
    }
    Ok(())
}
