use serde::Serialize;

use crate::ackermann::LevelTable;
use crate::arith::{gcd, inv_mod, mul_mod, sub_mod};
use crate::error::{Error, Result};

pub const AFFINE_MAX_MODULUS: u64 = 1 << 20;

/// `tableB[n] = (a · tableA[n] + b) mod N` for every `n`.
///
/// `a` is determined modulo `a_period` (a divisor of `N`); when
/// `a_period < N` every `a + j · a_period` also works (with its own `b`).
/// The smallest nonnegative `a` is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineRelation {
    pub a: u64,
    pub b: u64,
    pub a_period: u64,
}

pub fn affine_holds(a_table: &LevelTable, b_table: &LevelTable, a: u64, b: u64) -> bool {
    let n = a_table.modulus().value();
    a_table
        .values()
        .iter()
        .zip(b_table.values())
        .all(|(&x, &y)| (mul_mod(a, x as u64, n) + b) % n == y as u64)
}

/// Finds an affine relation between two tables over the same ring, if any.
///
/// Every index gives a congruence `a · (A[n] − A[0]) ≡ B[n] − B[0]`; these
/// are solved and merged exactly (generalized CRT over divisors of `N`), then
/// `b = B[0] − a · A[0]` and the result is re-verified on every entry.
pub fn affine_relation(a_table: &LevelTable, b_table: &LevelTable) -> Result<Option<AffineRelation>> {
    let modulus = a_table.modulus();
    if modulus != b_table.modulus() {
        return Err(Error::ModulusMismatch(modulus.value(), b_table.modulus().value()));
    }
    modulus.require_table_size("affine probe size", AFFINE_MAX_MODULUS)?;
    let n = modulus.value();
    let (x0, y0) = (a_table.get(0), b_table.get(0));

    // Solution set a ≡ r (mod period).
    let mut r = 0u64;
    let mut period = 1u64;
    for (&x, &y) in a_table.values().iter().zip(b_table.values()) {
        let c = sub_mod(x as u64, x0, n);
        let d = sub_mod(y as u64, y0, n);
        let g = gcd(c, n);
        if !d.is_multiple_of(g) {
            return Ok(None);
        }
        let m_i = n / g;
        if m_i == 1 {
            continue;
        }
        let r_i = mul_mod(d / g, inv_mod(c / g, m_i).expect("coprime after dividing gcd"), m_i);
        // Merge a ≡ r (mod period) with a ≡ r_i (mod m_i).
        let g2 = gcd(period, m_i);
        let diff = sub_mod(r_i % m_i, r % m_i, m_i);
        if !diff.is_multiple_of(g2) {
            return Ok(None);
        }
        let step = m_i / g2;
        let s = if step == 1 { 0 } else { mul_mod(diff / g2, inv_mod((period / g2) % step, step).expect("coprime"), step) };
        let lcm = period / g2 * m_i;
        r = ((r as u128 + period as u128 * s as u128) % lcm as u128) as u64;
        period = lcm;
    }
    let a = r;
    let b = sub_mod(y0, mul_mod(a, x0, n), n);
    if !affine_holds(a_table, b_table, a, b) {
        return Ok(None);
    }
    Ok(Some(AffineRelation { a, b, a_period: period }))
}
