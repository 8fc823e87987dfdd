//! Growth-rate estimation for the coefficients of `xi(q)`.
//!
//! Under the square-root-singularity model the coefficients behave like
//! `c_n ~ A mu^n n^(-3/2)`, so the ratios satisfy
//! `r_n = c_{n+1}/c_n = mu (1 - 3/(2n) + O(1/n^2))`. The estimator removes
//! the first-order factor multiplicatively and then runs iterated
//! Richardson extrapolation in `1/n` on the corrected sequence. All of it
//! happens in exact rational arithmetic — the coefficients have hundreds of
//! digits at order 300 and float ratios would ruin the extrapolation — with
//! rounding deferred to the final readout.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::series::QSeries;
use crate::Error;

/// Default number of Richardson levels; returns diminish beyond this at
/// desk-scale orders.
pub const DEFAULT_RICHARDSON_DEPTH: usize = 3;

/// 64-digit reference value for the growth constant of the leading-root
/// coefficients, printed next to the estimate by the CLI.
pub const MU_REFERENCE_DECIMAL: &str =
    "3.2336366652450763163646925293871348350211819091413196994020357434";

/// Result of a growth-rate estimation.
///
/// The model exponent is pinned to `-3/2`; `residual` is the magnitude of
/// the final extrapolation correction and `n_used` the coefficient window
/// consumed.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEstimate {
    mu: BigRational,
    residual: BigRational,
    n_used: (usize, usize),
}

impl GrowthEstimate {
    /// The model exponent of the power-law factor `n^(-3/2)`, as a fraction.
    pub const MODEL_EXPONENT: (i64, i64) = (-3, 2);

    /// The extrapolated growth rate, exact.
    pub fn mu(&self) -> &BigRational {
        &self.mu
    }

    pub fn mu_f64(&self) -> f64 {
        rational_to_f64(&self.mu)
    }

    /// Decimal rendering of `mu` truncated to the given number of
    /// fractional digits.
    pub fn mu_decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.mu, digits)
    }

    /// Magnitude of the last extrapolation correction.
    pub fn residual(&self) -> &BigRational {
        &self.residual
    }

    pub fn residual_f64(&self) -> f64 {
        rational_to_f64(&self.residual)
    }

    /// The coefficient index range consumed.
    pub fn n_used(&self) -> (usize, usize) {
        self.n_used
    }
}

/// Estimates the exponential growth rate of the series coefficients over
/// `window` with the default Richardson depth.
pub fn estimate_mu(coeffs: &QSeries, window: RangeInclusive<usize>) -> Result<GrowthEstimate, Error> {
    estimate_mu_with_depth(coeffs, window, DEFAULT_RICHARDSON_DEPTH)
}

/// [`estimate_mu`] with an explicit number of Richardson levels (at least 1).
pub fn estimate_mu_with_depth(
    coeffs: &QSeries,
    window: RangeInclusive<usize>,
    depth: usize,
) -> Result<GrowthEstimate, Error> {
    assert!(depth >= 1, "extrapolation needs at least one level");
    let corrected = corrected_ratios(coeffs, &window)?;
    let lo = *window.start();
    if corrected.len() < depth + 1 {
        return Err(Error::InsufficientCoefficients(format!(
            "window holds {} ratios but depth {} needs {}",
            corrected.len(),
            depth,
            depth + 1
        )));
    }

    // Iterated Richardson in 1/n: level j eliminates the degree-j term of a
    // polynomial in 1/n through Neville's recurrence at nodes 1/n,
    //   T_j[i] = ((n_i + j) T_{j-1}[i+1] - n_i T_{j-1}[i]) / j.
    let mut level = corrected;
    let mut previous_last = level.last().unwrap().clone();
    for j in 1..=depth {
        previous_last = level.last().unwrap().clone();
        let mut next = Vec::with_capacity(level.len() - 1);
        for i in 0..level.len() - 1 {
            let n_i = BigRational::from(BigInt::from(lo + i));
            let n_ij = BigRational::from(BigInt::from(lo + i + j));
            let num = n_ij * &level[i + 1] - n_i * &level[i];
            next.push(num / BigRational::from(BigInt::from(j)));
        }
        level = next;
    }

    let mu = level.last().unwrap().clone();
    let residual = (&mu - previous_last).abs();
    Ok(GrowthEstimate {
        mu,
        residual,
        n_used: (lo, *window.end()),
    })
}

/// Ratio sequence `r_n = c_{n+1}/c_n` for `n` in `window` (minus its top
/// index), corrected for the power-law factor: `s_n = r_n (1 + 3/(2n))`.
fn corrected_ratios(
    coeffs: &QSeries,
    window: &RangeInclusive<usize>,
) -> Result<Vec<BigRational>, Error> {
    let (lo, hi) = (*window.start(), *window.end());
    if hi > coeffs.order() {
        return Err(Error::InsufficientCoefficients(format!(
            "window reaches n = {} but the series has order {}",
            hi,
            coeffs.order()
        )));
    }
    if hi < 20 {
        return Err(Error::InsufficientCoefficients(
            "window must reach at least n = 20".to_string(),
        ));
    }
    if lo < 1 || lo >= hi {
        return Err(Error::InsufficientCoefficients(format!(
            "window {lo}..={hi} cannot produce ratios"
        )));
    }
    for n in lo..=hi {
        if coeffs.coeff(n).sign() != Sign::Plus {
            return Err(Error::ModelViolated(format!(
                "coefficient of q^{n} is not positive"
            )));
        }
    }
    let mut out = Vec::with_capacity(hi - lo);
    for n in lo..hi {
        let ratio = BigRational::new(coeffs.coeff(n + 1).clone(), coeffs.coeff(n).clone());
        let correction = BigRational::new(BigInt::from(2 * n + 3), BigInt::from(2 * n));
        out.push(ratio * correction);
    }
    Ok(out)
}

/// Result of an amplitude readout: the stabilized value of
/// `c_n mu^(-n) n^(3/2)` over the window, with a flag recording whether the
/// window actually stabilized.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeEstimate {
    pub amplitude: f64,
    pub stabilized: bool,
    pub n_used: (usize, usize),
}

/// Reads off the amplitude `A` of the model `c_n ~ A mu^n n^(-3/2)`.
///
/// Computed in the log domain (the only floating-point computation in this
/// crate); `stabilized` is false when the values still drift across the
/// window tail, which is how model mismatches such as a missing power-law
/// factor show up.
pub fn amplitude_estimate(
    coeffs: &QSeries,
    mu: &BigRational,
    window: RangeInclusive<usize>,
) -> Result<AmplitudeEstimate, Error> {
    let (lo, hi) = (*window.start(), *window.end());
    if hi > coeffs.order() {
        return Err(Error::InsufficientCoefficients(format!(
            "window reaches n = {} but the series has order {}",
            hi,
            coeffs.order()
        )));
    }
    if lo < 1 || hi < 20 || lo >= hi {
        return Err(Error::InsufficientCoefficients(format!(
            "window {lo}..={hi} is too small"
        )));
    }
    let ln_mu = ln_big(mu.numer()).ok_or_else(|| {
        Error::ModelViolated("growth rate must be positive".to_string())
    })? - ln_big(mu.denom()).ok_or_else(|| {
        Error::ModelViolated("growth rate must be positive".to_string())
    })?;

    let mut values = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        if coeffs.coeff(n).sign() != Sign::Plus {
            return Err(Error::ModelViolated(format!(
                "coefficient of q^{n} is not positive"
            )));
        }
        let ln_c = ln_big(coeffs.coeff(n)).expect("positive coefficient");
        let ln_a = ln_c - (n as f64) * ln_mu + 1.5 * (n as f64).ln();
        values.push(ln_a.exp());
    }

    // stabilized when the tail quarter of the window drifts by < 1%
    let tail = &values[values.len() - (values.len() / 4).max(2)..];
    let (min, max) = tail
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let stabilized = max - min <= 0.01 * max.abs();

    Ok(AmplitudeEstimate {
        amplitude: *values.last().unwrap(),
        stabilized,
        n_used: (lo, hi),
    })
}

/// Natural log of a positive big integer, exact to f64 precision even when
/// the value overflows f64 range.
fn ln_big(n: &BigInt) -> Option<f64> {
    if n.sign() != Sign::Plus {
        return None;
    }
    let bits = n.bits();
    if bits <= 52 {
        return Some(n.to_f64().unwrap().ln());
    }
    let shift = bits - 52;
    let top: BigInt = n >> shift;
    Some(top.to_f64().unwrap().ln() + (shift as f64) * std::f64::consts::LN_2)
}

fn rational_to_f64(r: &BigRational) -> f64 {
    match (ln_big(&r.numer().abs()), ln_big(r.denom())) {
        (Some(a), Some(b)) => {
            let mag = (a - b).exp();
            if r.numer().sign() == Sign::Minus {
                -mag
            } else {
                mag
            }
        }
        _ => 0.0,
    }
}

/// Decimal rendering truncated toward zero to `digits` fractional digits.
fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let sign = if r.numer().sign() == Sign::Minus { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let int_part = &num / &den;
    let rem = &num % &den;
    let scale = BigInt::from(10).pow(digits as u32);
    let frac = (rem * scale) / den;
    let mut frac_text = frac.to_string();
    while frac_text.len() < digits {
        frac_text.insert(0, '0');
    }
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_text}")
    }
}
