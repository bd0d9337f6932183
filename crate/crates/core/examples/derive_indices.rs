//! Edge indices from an embedding: pick one representative per vertex in the
//! unit cell, list edges by endpoint coordinates, read off the cell offsets.
//! Here the cell holds a 3 x 3 patch of the square lattice.
//!
//! ```bash
//! cargo run --example derive_indices
//! ```

use periodic_spectra::cycles::omega;
use periodic_spectra::graph::{derive_indices, validate, PeriodicGraphSpec};

fn main() -> periodic_spectra::Result<()> {
    let site = |i: usize, j: usize| vec![(i as f64 + 0.5) / 3.0, (j as f64 + 0.5) / 3.0];
    let mut reps = Vec::new();
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            reps.push(site(i, j));
            // The right and upper neighbours; at the boundary they sit in
            // the next cell.
            let p = site(i, j);
            edges.push((p.clone(), vec![p[0] + 1.0 / 3.0, p[1]]));
            edges.push((p.clone(), vec![p[0], p[1] + 1.0 / 3.0]));
        }
    }
    let edges = derive_indices(&reps, &edges)?;
    for e in edges.iter().filter(|e| !e.index.is_zero()) {
        println!("v{} -> v{}: {}", e.u + 1, e.v + 1, e.index);
    }

    let potential = (0..9).map(|v| ((v / 3 + v % 3) % 3) as f64).collect();
    let spec = PeriodicGraphSpec::new(2, potential, edges)?;
    println!("valid: {}", validate(&spec).ok());
    let r = omega(&spec)?;
    for v in &r.per_value {
        println!("a = {}: omega(a) = {}", v.value, v.omega);
    }
    Ok(())
}
