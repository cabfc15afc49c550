use crate::scalar::{lit, Real};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real `x`, with reflection below 1/2.
pub fn gamma<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma(T::one() - x));
    }
    let x = x - T::one();
    let t = x + lit(LANCZOS_G + 0.5);
    lit::<T>((2.0 * std::f64::consts::PI).sqrt())
        * t.powf(x + half)
        * (-t).exp()
        * lanczos_sum(x)
}

/// ln Γ(x) for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        let pi = T::PI();
        return (pi / (pi * x).sin()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let t = x + lit(LANCZOS_G + 0.5);
    lit::<T>(0.5 * (2.0 * std::f64::consts::PI).ln()) + (x + half) * t.ln() - t
        + lanczos_sum(x).ln()
}

fn lanczos_sum<T: Real>(x: T) -> T {
    let mut acc = lit::<T>(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + lit::<T>(c) / (x + crate::scalar::from_usize(i));
    }
    acc
}

/// ln n!, exact summation for small `n`.
pub fn ln_factorial<T: Real>(n: usize) -> T {
    if n < 32 {
        (2..=n).fold(T::zero(), |acc, k| acc + crate::scalar::from_usize::<T>(k).ln())
    } else {
        ln_gamma(crate::scalar::from_usize::<T>(n) + T::one())
    }
}
