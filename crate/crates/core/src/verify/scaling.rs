use crate::column::RepresentationId;
use crate::error::{Error, Result};
use crate::generators::{Family, GeneratorSpec};
use crate::reduce::{reduce, ReduceOptions, ReducerId};

/// Least-squares slope of `ln(bitflips)` against `ln(n)`.
pub fn fit_loglog_slope(points: &[(usize, u64)]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit(format!("{} points", points.len())));
    }
    if let Some(&(n, _)) = points.iter().find(|&&(n, b)| n == 0 || b == 0) {
        return Err(Error::DegenerateFit(format!("zero value at n = {n}")));
    }
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|&(n, b)| ((n as f64).ln(), (b as f64).ln()))
        .collect();
    let k = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / k;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all sizes equal".into()));
    }
    Ok(sxy / sxx)
}

/// Bitflips of `reducer` on `family` at each size (vector columns, primal,
/// seed 0).
pub fn scaling_series(
    family: Family,
    reducer: ReducerId,
    sizes: &[usize],
) -> Result<Vec<(usize, u64)>> {
    if sizes.len() < 4 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(format!(
            "need at least 4 strictly increasing sizes, got {sizes:?}"
        )));
    }
    sizes
        .iter()
        .map(|&n| {
            let m = GeneratorSpec::new(family, n, 0).generate()?;
            let r = reduce(
                &m,
                reducer,
                RepresentationId::default(),
                ReduceOptions::default(),
            );
            Ok((n, r.stats.bitflips))
        })
        .collect()
}

/// Fitted growth exponent of the bitflip count.
pub fn scaling_exponent(family: Family, reducer: ReducerId, sizes: &[usize]) -> Result<f64> {
    fit_loglog_slope(&scaling_series(family, reducer, sizes)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_laws() {
        let quad: Vec<_> = [4, 8, 16, 32]
            .iter()
            .map(|&n| (n, (n * n) as u64))
            .collect();
        assert!((fit_loglog_slope(&quad).unwrap() - 2.0).abs() < 1e-12);
        let flat: Vec<_> = [4, 8, 16, 32].iter().map(|&n| (n, 7)).collect();
        assert!(fit_loglog_slope(&flat).unwrap().abs() < 1e-12);
    }

    #[test]
    fn degenerate() {
        assert!(matches!(
            fit_loglog_slope(&[(4, 1), (8, 0)]),
            Err(Error::DegenerateFit(_))
        ));
        assert!(scaling_series(Family::K1, ReducerId::Retrospective, &[4, 8, 8, 16]).is_err());
    }

    #[test]
    fn k1_separates_retro_from_twist() {
        let sizes = [8, 16, 32, 64];
        let retro = scaling_exponent(Family::K1, ReducerId::Retrospective, &sizes).unwrap();
        let twist = scaling_exponent(Family::K1, ReducerId::Twist, &sizes).unwrap();
        assert!((retro - 1.0).abs() < 0.3, "{retro}");
        assert!((twist - 2.0).abs() < 0.3, "{twist}");
    }
}
