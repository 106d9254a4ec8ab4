//! The modular Ackermann map `A_N(m, n)`.
//!
//! ```text
//! A_N(0, n) = (n + 1) mod N
//! A_N(m, 0) = A_N(m - 1, 1)
//! A_N(m, n) = A_N(m - 1, A_N(m, n - 1))
//! ```
//!
//! Every intermediate value is reduced modulo `N`, so `n ↦ A_N(m, n)` is a
//! self-map of `Z_N` for each level `m`. For `m >= 4` this differs in general
//! from the classical `A(m, n) mod N`, because the classical function feeds
//! unreduced towers into lower levels.
//!
//! Unrolling the recursion gives `A_N(m, n) = f^(n+1)(1)` with `f =
//! A_N(m - 1, ·)`. Levels 0 through 3 have closed forms (`n + 1`, `n + 2`,
//! `2n + 3`, `2^(n+3) - 3`); deeper levels are tabulated one level at a time
//! and iterated through the functional graph of the level below when
//! `n >= N`.

mod closed_form;
mod hierarchy;
mod reference;
mod table;

pub use closed_form::closed_form_eval;
pub use hierarchy::{fast_eval, Hierarchy, LevelMap, DEFAULT_MAX_LEVEL};
pub use reference::{reference_eval, ReferenceOracle, REFERENCE_MAX_ARG, REFERENCE_MAX_LEVEL, REFERENCE_MAX_MODULUS};
pub use table::{build_level_table, LevelTable};
