use crate::num::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7). Accuracy is limited to about
/// double precision regardless of `T`.
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = T::of(0.5);
    if x < half {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        let pi = T::PI();
        return (pi / (pi * x).sin()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let mut acc = T::of(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::of(c) / (x + T::of_u64(i as u64));
    }
    let t = x + T::of(LANCZOS_G) + half;
    half * (T::PI() + T::PI()).ln() + (x + half) * t.ln() - t + acc.ln()
}

/// `Γ(k/2)` for a positive integer `k`, exact up to rounding in `T`:
/// integer arguments give factorials and half-integers rational multiples of √π.
pub fn gamma_half_integer<T: Real>(twice_arg: u32) -> T {
    assert!(twice_arg > 0, "Γ has a pole at 0");
    let (mut value, mut two_x) = if twice_arg.is_multiple_of(2) {
        (T::one(), 2u32)
    } else {
        (T::PI().sqrt(), 1u32)
    };
    while two_x < twice_arg {
        value = value * T::of_u64(u64::from(two_x)) / T::of(2.0);
        two_x += 2;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_double::DoubleDouble;
    use num_traits::Float;

    #[test]
    fn lanczos_matches_exact_half_integer_table() {
        for k in 1..40u32 {
            let exact: f64 = gamma_half_integer::<f64>(k).ln();
            let lanczos = ln_gamma(f64::from(k) / 2.0);
            assert!(
                (exact - lanczos).abs() <= 1e-13 * exact.abs().max(1.0),
                "k={k}: {exact} vs {lanczos}"
            );
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(gamma_half_integer::<f64>(2), 1.0);
        assert_eq!(gamma_half_integer::<f64>(8), 6.0);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma_half_integer::<f64>(1) - sqrt_pi).abs() < 1e-15);
        assert!((gamma_half_integer::<f64>(5) - 0.75 * sqrt_pi).abs() < 1e-15);
        assert!(ln_gamma(1.0f64).abs() < 1e-14);
        assert!((ln_gamma(0.25f64) - 3.625_609_908_221_908_f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn double_double_half_integer() {
        let g: DoubleDouble = gamma_half_integer(3);
        // Γ(3/2) = √π / 2
        let want = <DoubleDouble as num_traits::FloatConst>::PI().sqrt() / DoubleDouble::from(2.0);
        assert!(((g - want) / want).abs() < DoubleDouble::from(1e-30));
    }
}
