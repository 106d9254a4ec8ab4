use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ring size for which dense per-residue structures (level tables,
/// functional graphs, full-domain histograms) are built.
pub const MAX_TABLE_SIZE: u64 = 1 << 26;

/// Ring size `N >= 2` of `Z_N`, remembering `k` when `N = 2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus {
    value: u64,
    pow2: Option<u32>,
}

impl Modulus {
    pub fn new(value: u64) -> Result<Self> {
        if value < 2 {
            return Err(Error::InvalidModulus(value));
        }
        let pow2 = value.is_power_of_two().then(|| value.trailing_zeros());
        Ok(Self { value, pow2 })
    }

    /// `Z_{2^k}` for `1 <= k <= 63`.
    pub fn pow2(k: u32) -> Result<Self> {
        if k == 0 || k > 63 {
            return Err(Error::InvalidArgument(format!("power-of-two exponent {k} outside 1..=63")));
        }
        Self::new(1u64 << k)
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    /// `k` with `N = 2^k`, if `N` is a power of two.
    #[inline]
    pub fn pow2_exponent(self) -> Option<u32> {
        self.pow2
    }

    /// `k`, or [`Error::NotPowerOfTwo`].
    pub fn require_pow2(self) -> Result<u32> {
        self.pow2.ok_or(Error::NotPowerOfTwo(self.value))
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.value
    }

    #[inline]
    pub fn contains(self, x: u64) -> bool {
        x < self.value
    }

    pub fn check_residue(self, x: u64) -> Result<u64> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::OutOfDomain { value: x, modulus: self.value })
        }
    }

    /// Fails unless dense `N`-sized structures fit under `limit`.
    pub fn require_table_size(self, what: &'static str, limit: u64) -> Result<usize> {
        if self.value > limit {
            Err(Error::Infeasible { what, size: self.value, limit })
        } else {
            Ok(self.value as usize)
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for Modulus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value)
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = u64::deserialize(d)?;
        Modulus::new(v).map_err(serde::de::Error::custom)
    }
}
