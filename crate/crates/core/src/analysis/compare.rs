use rayon::prelude::*;

use crate::asymptotics::{big_f_n, leading_term, second_order, AsymptoticCoefficients};
use crate::error::Result;
use crate::quadrature::{tunneling_exact, QuadratureConfig};
use crate::scalar::{from_usize, lit, Real};

/// Exact and asymptotic tunneling probabilities side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow<T> {
    pub n: usize,
    pub p_exact: T,
    pub p_leading: T,
    pub p_second: T,
    pub err_leading: T,
    pub err_second: T,
    /// `err_second · n^{4/3}`
    pub scaled_err_second: T,
}

fn compare_one<T: Real>(n: usize, cfg: &QuadratureConfig<T>) -> Result<ComparisonRow<T>> {
    let p_leading = leading_term::<T>(n)?.value;
    let p_second = second_order::<T>(n)?.value;
    let p_exact = tunneling_exact(n, cfg)?.value;
    let err_second = (p_exact - p_second).abs();
    Ok(ComparisonRow {
        n,
        p_exact,
        p_leading,
        p_second,
        err_leading: (p_exact - p_leading).abs(),
        err_second,
        scaled_err_second: err_second * from_usize::<T>(n).powf(lit(4.0 / 3.0)),
    })
}

pub fn compare_sweep<T: Real>(n_values: &[usize], cfg: &QuadratureConfig<T>) -> Result<Vec<ComparisonRow<T>>> {
    n_values.par_iter().map(|&n| compare_one(n, cfg)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint<T> {
    pub n: usize,
    pub big_f: T,
    /// `F_∞ / F_n`
    pub ratio: T,
}

/// `F_∞/F_n` for every `n` in `n_min..=n_max`.
pub fn ratio_sweep<T: Real>(n_min: usize, n_max: usize, cfg: &QuadratureConfig<T>) -> Result<Vec<RatioPoint<T>>> {
    if n_min == 0 || n_min > n_max {
        return Err(crate::Error::domain(
            "n_min",
            n_min as f64,
            "1 <= n_min <= n_max",
        ));
    }
    let f_inf = AsymptoticCoefficients::<T>::new().f_infinity;
    (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let big_f = big_f_n(n, cfg)?.value;
            Ok(RatioPoint {
                n,
                big_f,
                ratio: f_inf / big_f,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_keep_input_order() {
        let cfg = QuadratureConfig::<f64>::default();
        let ns = [9usize, 1, 4];
        let rows = compare_sweep(&ns, &cfg).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), ns);
        assert!((rows[1].p_exact - 0.1116).abs() < 5e-5);
        for r in &rows {
            assert!(r.err_leading >= 0.0 && r.err_second >= 0.0);
            assert!(r.p_exact > 0.0 && r.p_exact < 1.0);
        }
    }

    #[test]
    fn rejects_zero_index() {
        let cfg = QuadratureConfig::<f64>::default();
        assert!(compare_sweep(&[0], &cfg).is_err());
        assert!(ratio_sweep(0, 3, &cfg).is_err());
        assert!(ratio_sweep(5, 3, &cfg).is_err());
    }
}
