//! Modular Ackermann maps `A_N(m, ·)` on `Z_N`.
//!
//! * [`ackermann`]: a literal reference oracle and a fast evaluator (closed
//!   forms for levels 0 to 3, stacked tables and cycle reduction above).
//! * [`funcgraph`]: tail/cycle decomposition of self-maps, constant-time
//!   iteration on cycles, orbit summaries and the tetration check.
//! * [`analysis`]: histograms, deviation from uniform, chi-square, avalanche
//!   coefficients, affine-relation detection, cross-level correlation.
//! * [`hashlab`]: depth-dependent hash constructions (single, dual XOR,
//!   iterated).
//! * [`experiment`]: the avalanche / deviation grid over `m ∈ {3, 4}` and
//!   `k ∈ {8, 10, 12}`.
//! * [`cli`]: the `modack` command-line front end.

pub mod ackermann;
pub mod analysis;
pub mod arith;
pub mod cli;
pub mod error;
pub mod evaluator;
pub mod experiment;
pub mod funcgraph;
pub mod hashlab;
pub mod modulus;

pub use error::{Error, Result};
pub use evaluator::{Evaluator, FnMap};
pub use modulus::Modulus;

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Formats `x` with six significant digits.
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::fmt_sig6;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_sig6(0.000683594), "0.000683594");
        assert_eq!(fmt_sig6(249.98046875), "249.980");
        assert_eq!(fmt_sig6(1016.0), "1016.00");
        assert_eq!(fmt_sig6(1234567.0), "1234567");
        assert_eq!(fmt_sig6(0.0), "0");
    }
}
