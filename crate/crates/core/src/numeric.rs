//! Log-space building blocks shared by the kernel evaluators.

use std::f64::consts::LN_2;

/// Above this argument `log(sinh x)` switches to the asymptotic form;
/// below it the direct evaluation is exact and `sinh` cannot overflow.
pub const LOGSINH_CROSSOVER: f64 = 20.0;

/// `log(sinh x)` for `x >= 0`, overflow-free for arbitrarily large `x`.
///
/// For `x > 20` uses `sinh x = e^x (1 - e^{-2x}) / 2`, i.e.
/// `x - ln 2 + log1p(-e^{-2x})`.  Returns `-inf` at `x = 0`.
#[inline]
pub fn logsinh(x: f64) -> f64 {
    debug_assert!(x >= 0.0, "logsinh expects x >= 0, got {x}");
    if x <= LOGSINH_CROSSOVER {
        x.sinh().ln()
    } else {
        x - LN_2 + (-(-2.0 * x).exp()).ln_1p()
    }
}

/// `log(x / sinh x)` for `x >= 0`, with the exact limit 0 at the origin.
#[inline]
pub fn log_x_over_sinh(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x < 1e-4 {
        // sinh x / x = 1 + x²/6 (1 + x²/20) + O(x⁶)
        let x2 = x * x;
        -(x2 / 6.0 * (1.0 + x2 / 20.0)).ln_1p()
    } else {
        x.ln() - logsinh(x)
    }
}

/// `coth x` for `x > 0`.
#[inline]
pub fn coth(x: f64) -> f64 {
    1.0 / x.tanh()
}

/// SplitMix64 finalizer; used to derive independent per-sample RNG streams.
#[inline]
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn logsinh_matches_direct_form_below_crossover() {
        for &x in &[1e-8, 1e-3, 0.1, 1.0, 5.0, 19.9] {
            assert_relative_eq!(logsinh(x), x.sinh().ln(), max_relative = 1e-15);
        }
    }

    #[test]
    fn logsinh_continuous_at_crossover() {
        let below = logsinh(20.0);
        let above = 20.0 - LN_2 + (-(-40.0f64).exp()).ln_1p();
        assert_relative_eq!(below, above, max_relative = 1e-14);
    }

    #[test]
    fn logsinh_no_overflow_for_huge_arguments() {
        let v = logsinh(1e8);
        assert!(v.is_finite());
        assert_relative_eq!(v, 1e8 - LN_2, max_relative = 1e-15);
    }

    #[test]
    fn log_x_over_sinh_limits() {
        assert_eq!(log_x_over_sinh(0.0), 0.0);
        // series branch vs direct branch agree at the seam
        assert_relative_eq!(
            log_x_over_sinh(9.99e-5),
            (9.99e-5f64).ln() - logsinh(9.99e-5),
            epsilon = 1e-15
        );
        assert_relative_eq!(log_x_over_sinh(2.0), (2.0f64 / 2.0f64.sinh()).ln(), max_relative = 1e-15);
    }

    #[test]
    fn splitmix_is_deterministic_and_spreads() {
        assert_eq!(splitmix64(0), splitmix64(0));
        assert_ne!(splitmix64(1), splitmix64(2));
    }
}
