//! The Lobachevsky function and the elementary volumes built from it.
//!
//! `Λ(θ) = −∫₀^θ log|2 sin t| dt` is odd and π-periodic. The main evaluator
//! reduces to `(−π/2, π/2]` and sums the Taylor expansion of
//! `log(sin t / t)` term by term; [`lobachevsky_quadrature`] integrates the
//! definition directly and is kept as an independent cross-check.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, LN_2, PI};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Number of series terms. With `|θ| ≤ π/2` the k-th term is bounded by
/// `4^{-k} / k²`, so 30 terms are far below double precision.
const SERIES_TERMS: usize = 30;

fn zeta_even(s: u32) -> f64 {
    match s {
        2 => PI * PI / 6.0,
        4 => PI.powi(4) / 90.0,
        _ => {
            // Partial sum plus the Euler-Maclaurin tail; the error is far
            // below 1e-17 once s ≥ 6 and N = 1000.
            let n = 1000u32;
            let mut sum = 0.0;
            for j in (1..=n).rev() {
                sum += (j as f64).powi(-(s as i32));
            }
            let nf = n as f64;
            sum + nf.powi(1 - s as i32) / (s as f64 - 1.0) - 0.5 * nf.powi(-(s as i32))
        }
    }
}

/// `c_k = ζ(2k) / (k (2k+1) π^{2k})`, so that
/// `Λ(θ) = θ(1 − ln 2|θ|) + Σ c_k θ^{2k+1}` for `|θ| < π`.
fn series_coefficients() -> &'static [f64; SERIES_TERMS] {
    static COEFFS: OnceLock<[f64; SERIES_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [0.0; SERIES_TERMS];
        for (i, slot) in c.iter_mut().enumerate() {
            let k = (i + 1) as f64;
            let s = 2 * (i as u32 + 1);
            *slot = zeta_even(s) / (k * (2.0 * k + 1.0) * PI.powi(s as i32));
        }
        c
    })
}

/// Reduce `theta` into `(−π/2, π/2]` using π-periodicity.
fn reduce_half_period(theta: f64) -> f64 {
    let mut r = theta - PI * (theta / PI).round();
    if r <= -FRAC_PI_2 {
        r += PI;
    } else if r > FRAC_PI_2 {
        r -= PI;
    }
    r
}

/// The Lobachevsky function `Λ(θ)`.
pub fn lobachevsky(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::invalid(format!("angle must be finite, got {theta}")));
    }
    let r = reduce_half_period(theta);
    let x = r.abs();
    if x == 0.0 || x == FRAC_PI_2 {
        return Ok(0.0);
    }
    let x2 = x * x;
    let coeffs = series_coefficients();
    // Powers x^{2k+1}, summed from the smallest term upward.
    let mut powers = [0.0; SERIES_TERMS];
    let mut p = x;
    for slot in powers.iter_mut() {
        p *= x2;
        *slot = p;
    }
    let mut tail = 0.0;
    for k in (0..SERIES_TERMS).rev() {
        tail += coeffs[k] * powers[k];
    }
    let value = x * (1.0 - (2.0 * x).ln()) + tail;
    Ok(if r < 0.0 { -value } else { value })
}

// 15-point Kronrod rule with its embedded 7-point Gauss rule (QUADPACK qk15).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, err) = gauss_kronrod(f, a, b);
    if err <= tol || depth == 0 {
        return value;
    }
    let m = 0.5 * (a + b);
    adaptive(f, a, m, 0.5 * tol, depth - 1) + adaptive(f, m, b, 0.5 * tol, depth - 1)
}

/// `ln(sin t / (t (π − t)))`, smooth on `[0, π]`.
fn log_sine_remainder(t: f64) -> f64 {
    if t <= 0.0 {
        return -PI.ln();
    }
    if t >= PI {
        return -PI.ln();
    }
    let u = PI - t;
    let s = if t > FRAC_PI_2 { u.sin() } else { t.sin() };
    (s / (t * u)).ln()
}

/// `Λ(θ)` by direct quadrature of the defining integral.
///
/// After reducing to `[0, π)` the integrand is split as
/// `ln 2 + ln t + ln(π − t) + ln(sin t / (t(π − t)))`; the two logarithmic
/// singularities are integrated in closed form and the smooth remainder by
/// adaptive Gauss-Kronrod. Slower than [`lobachevsky`] and used only to
/// validate it.
pub fn lobachevsky_quadrature(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::invalid(format!("angle must be finite, got {theta}")));
    }
    let x = theta.rem_euclid(PI);
    if x == 0.0 {
        return Ok(0.0);
    }
    let xlogx = |y: f64| if y == 0.0 { 0.0 } else { y * y.ln() };
    let int_ln_t = xlogx(x) - x;
    let u = PI - x;
    let int_ln_pi_minus_t = -xlogx(u) + u + xlogx(PI) - PI;
    let smooth = adaptive(&log_sine_remainder, 0.0, x, 1e-15, 40);
    Ok(-(x * LN_2 + int_ln_t + int_ln_pi_minus_t + smooth))
}

/// Volume of the regular ideal tetrahedron, `3Λ(π/3)`.
pub fn v_tet() -> f64 {
    3.0 * lobachevsky(FRAC_PI_3).expect("finite angle")
}

/// Volume of the regular ideal octahedron, `8Λ(π/4)`.
pub fn v_oct() -> f64 {
    8.0 * lobachevsky(FRAC_PI_4).expect("finite angle")
}

fn require_at_least(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        Err(Error::invalid(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// One of the `n` ideal tetrahedra around the axis of the regular ideal
/// `n`-bipyramid: `2Λ(π/n)`.
pub fn ideal_tetrahedron_tn_volume(n: u32) -> Result<f64> {
    require_at_least(n, 3, "T_n")?;
    Ok(2.0 * lobachevsky(PI / n as f64)?)
}

/// Regular ideal `n`-bipyramid, `2nΛ(π/n)`.
pub fn regular_bipyramid_volume(n: u32) -> Result<f64> {
    require_at_least(n, 3, "bipyramid")?;
    Ok(n as f64 * ideal_tetrahedron_tn_volume(n)?)
}

/// The logarithmic upper estimate `2π ln(n/2)` for the regular bipyramid.
pub fn bipyramid_log_bound(n: u32) -> Result<f64> {
    require_at_least(n, 3, "bipyramid bound")?;
    Ok(2.0 * PI * (n as f64 / 2.0).ln())
}

/// Thurston's ideal right-angled `n`-antiprism,
/// `2n [Λ(π/4 + π/2n) + Λ(π/4 − π/2n)]`.
pub fn antiprism_volume(n: u32) -> Result<f64> {
    require_at_least(n, 3, "antiprism")?;
    let nf = n as f64;
    let d = PI / (2.0 * nf);
    Ok(2.0 * nf * (lobachevsky(FRAC_PI_4 + d)? + lobachevsky(FRAC_PI_4 - d)?))
}

/// Twisted antiprism `A(n)*`, the rectification of the two-apex pyramid:
/// `A(n−1) + A(3)`.
pub fn twisted_antiprism_volume(n: u32) -> Result<f64> {
    require_at_least(n, 4, "twisted antiprism")?;
    Ok(antiprism_volume(n - 1)? + antiprism_volume(3)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn special_values() {
        assert_eq!(lobachevsky(0.0).unwrap(), 0.0);
        assert!(lobachevsky(FRAC_PI_2).unwrap().abs() < 1e-15);
        assert!(close(lobachevsky(FRAC_PI_3).unwrap(), 0.338_313_868_803_217_9, 1e-13));
        assert!(close(lobachevsky(PI / 6.0).unwrap(), 0.507_470_803_204_826_8, 1e-13));
    }

    #[test]
    fn constants() {
        assert!(close(v_tet(), 1.014_941_606_409_653_6, 1e-14));
        assert!(close(v_oct(), 3.663_862_376_708_876, 1e-14));
    }

    #[test]
    fn quadrature_matches_series() {
        for i in 1..200 {
            let t = -4.0 + 0.0437 * i as f64;
            let a = lobachevsky(t).unwrap();
            let b = lobachevsky_quadrature(t).unwrap();
            assert!(close(a, b, 1e-12), "theta={t}: {a} vs {b}");
        }
    }

    #[test]
    fn non_finite_rejected() {
        assert!(lobachevsky(f64::NAN).is_err());
        assert!(lobachevsky(f64::INFINITY).is_err());
        assert!(lobachevsky_quadrature(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn family_volumes() {
        assert!(close(antiprism_volume(3).unwrap(), v_oct(), 1e-12));
        assert!(close(antiprism_volume(4).unwrap(), 6.023_046_020, 1e-8));
        assert!(close(twisted_antiprism_volume(4).unwrap(), 7.327_724_753, 1e-8));
        assert!(close(regular_bipyramid_volume(3).unwrap(), 2.0 * v_tet(), 1e-12));
        assert!(close(regular_bipyramid_volume(4).unwrap(), v_oct(), 1e-12));
        assert!(ideal_tetrahedron_tn_volume(2).is_err());
        // T_n is the ideal tetrahedron with angles 2π/n, π/2 − π/n, π/2 − π/n.
        for n in 3..40u32 {
            let a = PI / n as f64;
            let angles =
                lobachevsky_quadrature(2.0 * a).unwrap() + 2.0 * lobachevsky_quadrature(FRAC_PI_2 - a).unwrap();
            assert!((ideal_tetrahedron_tn_volume(n).unwrap() - angles).abs() < 1e-12);
        }
        assert!(antiprism_volume(2).is_err());
        assert!(twisted_antiprism_volume(3).is_err());
        assert!(bipyramid_log_bound(2).is_err());
    }
}
