//! On the line, ω of a periodic potential is one less than the largest gap
//! between repeated values.
//!
//! ```bash
//! cargo run --example last_reduction
//! ```

use periodic_spectra::cli::fixtures::zline;
use periodic_spectra::cycles::omega;
use periodic_spectra::sweep::last_gamma;

fn main() -> periodic_spectra::Result<()> {
    let sequences: [&[f64]; 4] = [
        &[0.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 1.0],
        &[0.0, 1.0, 2.0, 0.0, 1.0],
        &[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0],
    ];
    for q in sequences {
        let last = last_gamma(q);
        let w = omega(&zline(q.len(), q))?.omega;
        println!("{q:?}: gamma = {}, omega = {w}", last.gamma);
    }
    Ok(())
}
