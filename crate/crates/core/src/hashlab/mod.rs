//! Depth-dependent hash constructions over `Z_N`.
//!
//! * single: `H(x) = A_N(h1(x), h2(x))`
//! * dual: `H(x) = A_N(h1(x), h2(x)) ⊕ A_N(h3(x), h4(x))`
//! * iterated: `H^(t)(x) = H(H(... H(x)))`, `t` applications of single
//!
//! The level `h1(x)` is clamped to the spec's `level_cap`. The second
//! argument is passed unreduced; the evaluator accepts any 64-bit `n`.
//! No security property is claimed for any of these maps.

mod hash;
mod hmap;
mod spec;

pub use hash::{HashFunction, Probe};
pub use hmap::HMap;
pub use spec::{HashKind, HashSpec, DEFAULT_LEVEL_CAP};
