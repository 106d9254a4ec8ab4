use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn one() -> u64 {
    1
}

/// Auxiliary input map `h(x) = ((a·x + b) div d) mod c`.
///
/// Arithmetic is done in 128 bits. A missing `c` means reduction modulo
/// `2^64`, i.e. the quotient is kept as is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HMap {
    #[serde(default = "one")]
    pub a: u64,
    #[serde(default)]
    pub b: u64,
    #[serde(default = "one")]
    pub d: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
}

impl HMap {
    pub fn new(a: u64, b: u64, d: u64, c: Option<u64>) -> Result<Self> {
        let h = Self { a, b, d, c };
        h.validate()?;
        Ok(h)
    }

    /// `x mod c`.
    pub fn modulo(c: u64) -> Self {
        Self { a: 1, b: 0, d: 1, c: Some(c) }
    }

    /// `⌊x / d⌋`.
    pub fn div(d: u64) -> Self {
        Self { a: 1, b: 0, d, c: None }
    }

    /// `(x + b) mod c`.
    pub fn offset_modulo(b: u64, c: u64) -> Self {
        Self { a: 1, b, d: 1, c: Some(c) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidArgument("h-map divisor d must be >= 1".into()));
        }
        if self.c == Some(0) {
            return Err(Error::InvalidArgument("h-map modulus c must be >= 1".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let q = (self.a as u128 * x as u128 + self.b as u128) / self.d as u128;
        match self.c {
            Some(c) => (q % c as u128) as u64,
            None => q as u64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_maps() {
        assert_eq!(HMap::modulo(4).apply(5), 1);
        assert_eq!(HMap::div(2).apply(5), 2);
        assert_eq!(HMap::offset_modulo(1, 3).apply(1), 2);
        assert_eq!(HMap::div(3).apply(8), 2);
    }

    #[test]
    fn wide_arithmetic() {
        let h = HMap { a: u64::MAX, b: u64::MAX, d: u64::MAX, c: None };
        assert_eq!(h.apply(u64::MAX), u64::MAX.wrapping_add(1));
        let h = HMap { a: u64::MAX, b: 0, d: 1, c: Some(1000) };
        assert_eq!(h.apply(u64::MAX), ((u64::MAX as u128 * u64::MAX as u128) % 1000) as u64);
    }

    #[test]
    fn json_defaults_and_strictness() {
        let h: HMap = serde_json::from_str(r#"{"d": 2}"#).unwrap();
        assert_eq!(h, HMap::div(2));
        assert!(serde_json::from_str::<HMap>(r#"{"d": 2, "e": 1}"#).is_err());
        assert!(HMap::new(1, 0, 0, None).is_err());
        assert!(HMap::new(1, 0, 1, Some(0)).is_err());
    }
}
