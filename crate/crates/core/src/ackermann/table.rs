use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::modulus::{Modulus, MAX_TABLE_SIZE};

use super::hierarchy::DEFAULT_MAX_LEVEL;

/// The full map `x ↦ A_N(m, x)` over `Z_N` at one level.
///
/// Stored densely as `u32`, since tables are capped at `N <= 2^26`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTable {
    modulus: Modulus,
    level: u32,
    values: Vec<u32>,
}

impl LevelTable {
    /// Level 0 to 3 from the closed-form recurrences.
    pub(crate) fn closed(modulus: Modulus, level: u32) -> Result<Self> {
        let n = modulus.require_table_size("level table size", MAX_TABLE_SIZE)?;
        let big_n = n as u64;
        let values: Vec<u32> = match level {
            0 => (0..big_n).map(|x| ((x + 1) % big_n) as u32).collect(),
            1 => (0..big_n).map(|x| ((x + 2) % big_n) as u32).collect(),
            2 => (0..big_n).map(|x| ((2 * x + 3) % big_n) as u32).collect(),
            3 => {
                // 2^(n+3) - 3 satisfies v(n) = 2 v(n-1) + 3 with v(0) = 5.
                let mut v = Vec::with_capacity(n);
                let mut cur = 5 % big_n;
                for _ in 0..n {
                    v.push(cur as u32);
                    cur = (2 * cur + 3) % big_n;
                }
                v
            }
            _ => return Err(Error::NoClosedForm(level)),
        };
        Ok(Self { modulus, level, values })
    }

    /// Level `m + 1` from level `m`: `values[0] = f(1)`, `values[n] = f(values[n-1])`.
    pub(crate) fn next_level(prev: &LevelTable) -> Self {
        let n = prev.values.len();
        let mut values = Vec::with_capacity(n);
        let mut cur = prev.values[1];
        for _ in 0..n {
            values.push(cur);
            cur = prev.values[cur as usize];
        }
        Self { modulus: prev.modulus, level: prev.level + 1, values }
    }

    /// Wraps arbitrary table contents; every entry must lie in `Z_N`.
    pub fn from_values(modulus: Modulus, level: u32, values: Vec<u32>) -> Result<Self> {
        if values.len() as u64 != modulus.value() {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                values.len(),
                modulus.value()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| !modulus.contains(v as u64)) {
            return Err(Error::OutOfDomain { value: bad as u64, modulus: modulus.value() });
        }
        Ok(Self { modulus, level, values })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    #[inline]
    pub fn get(&self, x: u64) -> u64 {
        self.values[x as usize] as u64
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// CSV with header `n,value`, rows ordered by `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 12 + 8);
        out.push_str("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{n},{v}");
        }
        out
    }
}

/// Builds the level-`m` table by stacking levels `3, 4, ..., m`.
pub fn build_level_table(modulus: Modulus, m: u32) -> Result<LevelTable> {
    if m > DEFAULT_MAX_LEVEL {
        return Err(Error::LevelOutOfRange { level: m, max: DEFAULT_MAX_LEVEL });
    }
    if m <= 3 {
        return LevelTable::closed(modulus, m);
    }
    let mut table = LevelTable::closed(modulus, 3)?;
    while table.level < m {
        table = LevelTable::next_level(&table);
    }
    Ok(table)
}
