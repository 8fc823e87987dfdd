//! Estimate the exponential growth rate of the root coefficients.
//!
//! The coefficients follow `c_n ~ A mu^n n^(-3/2)` (a square-root
//! singularity); the estimator corrects the ratio sequence for the
//! power-law factor and extrapolates in 1/n with exact rational arithmetic.
//!
//! ```bash
//! cargo run --release --example growth_rate [ORDER]
//! ```

use theta_root::asymptotics::{amplitude_estimate, estimate_mu, MU_REFERENCE_DECIMAL};
use theta_root::theta::xi_via_theta;

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let lo = order / 3;

    let xi = xi_via_theta(order);
    let est = estimate_mu(&xi, lo..=order).expect("valid window");

    println!("coefficient window : n = {lo}..{order}");
    println!("mu estimate        : {}", est.mu_decimal(30));
    println!("reference          : {MU_REFERENCE_DECIMAL}");
    println!("residual           : {:.3e}", est.residual_f64());

    let reference: f64 = MU_REFERENCE_DECIMAL.parse().unwrap();
    println!("|estimate - ref|   : {:.3e}", (est.mu_f64() - reference).abs());

    let amp = amplitude_estimate(&xi, est.mu(), lo..=order).expect("valid window");
    println!(
        "amplitude readout  : {:.6} ({})",
        amp.amplitude,
        if amp.stabilized { "stabilized" } else { "not stabilized" }
    );
}
