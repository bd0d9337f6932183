use crate::error::{Error, Result};

/// Least-squares line `ln w = intercept + slope · ln μ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayFit {
    pub slope: f64,
    pub stderr: f64,
    pub intercept: f64,
}

/// Ordinary least squares on `(ln μ, ln width)`.
pub fn fit_decay_exponent(points: &[(f64, f64)]) -> Result<DecayFit> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            found: points.len(),
        });
    }
    if let Some(&(mu, width)) = points.iter().find(|p| p.1.is_nan() || p.1 <= 0.0) {
        return Err(Error::NonPositiveWidth { mu, width });
    }
    if let Some(&(mu, _)) = points.iter().find(|p| p.0.is_nan() || p.0 <= 0.0) {
        return Err(Error::InvalidArgument(format!("coupling {mu} is not positive")));
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all couplings are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let stderr = (ssr / (n - 2.0) / sxx).sqrt();
    Ok(DecayFit {
        slope,
        stderr,
        intercept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::geometric_grid;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    #[test]
    fn exact_power_law() {
        let pts: Vec<(f64, f64)> = geometric_grid(1e2, 1e4, 5)
            .into_iter()
            .map(|mu| (mu, 0.37 * mu.powi(-3)))
            .collect();
        let fit = fit_decay_exponent(&pts).unwrap();
        assert!((fit.slope + 3.0).abs() < 1e-12);
        assert!(fit.stderr < 1e-12);
    }

    #[test]
    fn constant_widths() {
        let pts: Vec<(f64, f64)> = [1.0, 10.0, 100.0].iter().map(|&mu| (mu, 2.5)).collect();
        assert!(fit_decay_exponent(&pts).unwrap().slope.abs() < 1e-15);
    }

    #[test]
    fn noisy_power_law() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let pts: Vec<(f64, f64)> = geometric_grid(1e2, 1e4, 5)
                .into_iter()
                .map(|mu| (mu, mu.powi(-2) * (1.0 + rng.gen_range(-0.01..0.01))))
                .collect();
            let slope = fit_decay_exponent(&pts).unwrap().slope;
            assert!((-2.1..=-1.9).contains(&slope));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            fit_decay_exponent(&[(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]),
            Err(Error::NonPositiveWidth { .. })
        ));
        assert!(matches!(
            fit_decay_exponent(&[(1.0, 1.0), (2.0, 1.0)]),
            Err(Error::TooFewPoints { .. })
        ));
    }
}
