/// Degeneracy lengths of a periodic potential on `Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct LastGamma {
    /// `(a, d(a))` per distinct value, ascending in `a`: the longest run
    /// between consecutive occurrences of `a` in the periodic extension.
    pub per_value: Vec<(f64, usize)>,
    /// `min_a d(a)`.
    pub gamma: usize,
}

/// `γ = min_a d(a)` for the `ν`-periodic extension of `sequence`.
///
/// # Panics
/// If `sequence` is empty.
pub fn last_gamma(sequence: &[f64]) -> LastGamma {
    assert!(!sequence.is_empty(), "potential sequence must be nonempty");
    let nu = sequence.len();
    let mut values = sequence.to_vec();
    values.sort_by(f64::total_cmp);
    values.dedup();
    let per_value: Vec<(f64, usize)> = values
        .into_iter()
        .map(|a| {
            let positions: Vec<usize> = (0..nu).filter(|&j| sequence[j] == a).collect();
            let wrap = positions[0] + nu - positions[positions.len() - 1];
            let gap = positions
                .windows(2)
                .map(|w| w[1] - w[0])
                .fold(wrap, usize::max);
            (a, gap)
        })
        .collect();
    let gamma = per_value.iter().map(|&(_, d)| d).min().unwrap();
    LastGamma { per_value, gamma }
}
