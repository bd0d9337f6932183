//! Degeneracy exponents of the six-vertex example for three potentials:
//! the level sets, the distances to each level set, ω(a) and ω.
//!
//! ```bash
//! cargo run --example omega_table
//! ```

use periodic_spectra::cli::fixtures::fig1;
use periodic_spectra::cycles::{distances_to_set, level_sets, omega, shortest_nontrivial_cycle};

fn main() -> periodic_spectra::Result<()> {
    let potentials = [
        [1.0, 1.0, 1.0, 0.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 2.0, 3.0, 4.0, 0.0, 0.0],
    ];
    for q in potentials {
        let spec = fig1(q);
        println!("Q = {q:?}");
        let report = omega(&spec)?;
        for level in level_sets(&spec) {
            let d = distances_to_set(&spec, &level.vertices)?;
            println!(
                "  a = {:<3} d(v, V^a) = {:?}  omega(a) = {}",
                level.value,
                d,
                report.omega_of(level.value).unwrap()
            );
        }
        println!("  omega = {}\n", report.omega);
    }

    let cycles = shortest_nontrivial_cycle(&fig1([0.0; 6])).expect("graph has cycles");
    println!("shortest nontrivial cycles: length {}, count {}", cycles.gamma, cycles.count);
    for c in &cycles.cycles {
        let names: Vec<String> = c.iter().map(|v| format!("v{}", v + 1)).collect();
        println!("  {}", names.join(" -> "));
    }
    Ok(())
}
