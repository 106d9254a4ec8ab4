use crate::arith::{pow2_shifted3, sub_mod};
use crate::error::{Error, Result};
use crate::modulus::Modulus;

/// `A_N(m, n)` for `m <= 3` from the closed forms, for any `n` and any `N`.
///
/// The first three levels are affine recurrences and level 3 is
/// `2^(n+3) - 3`, so per-step reduction commutes with the classical values.
pub fn closed_form_eval(modulus: Modulus, m: u32, n: u64) -> Result<u64> {
    let big_n = modulus.value() as u128;
    let n128 = n as u128;
    let r = match m {
        0 => ((n128 + 1) % big_n) as u64,
        1 => ((n128 + 2) % big_n) as u64,
        2 => ((2 * n128 + 3) % big_n) as u64,
        3 => sub_mod(pow2_shifted3(n, modulus.value()), 3, modulus.value()),
        _ => return Err(Error::NoClosedForm(m)),
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(closed_form_eval(md(1024), 3, 5).unwrap(), 253);
        assert_eq!(closed_form_eval(md(16), 2, 5).unwrap(), 13);
        assert_eq!(closed_form_eval(md(16), 3, 2).unwrap(), 13);
        assert_eq!(closed_form_eval(md(16), 1, 2).unwrap(), 4);
        assert_eq!(closed_form_eval(md(256), 3, 50).unwrap(), 253);
    }

    #[test]
    fn level_four_has_no_closed_form() {
        assert_eq!(closed_form_eval(md(16), 4, 0), Err(Error::NoClosedForm(4)));
    }

    #[test]
    fn extreme_arguments() {
        let big = md(u64::MAX);
        assert_eq!(closed_form_eval(big, 0, u64::MAX).unwrap(), 1);
        assert_eq!(closed_form_eval(big, 1, u64::MAX).unwrap(), 2);
        assert_eq!(closed_form_eval(big, 2, u64::MAX).unwrap(), 3);
        assert_eq!(closed_form_eval(md(2), 3, 0).unwrap(), 1);
        assert_eq!(closed_form_eval(md(1 << 63), 3, u64::MAX).unwrap(), (1 << 63) - 3);
    }
}
