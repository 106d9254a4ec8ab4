use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::modulus::{Modulus, MAX_TABLE_SIZE};

/// Largest number of inputs a single measurement will visit.
pub const MAX_DOMAIN_SIZE: u64 = 1 << 32;

/// SplitMix64: add the golden-ratio increment, then mix.
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// out = z ^ (z >> 31)
/// ```
///
/// Draws in `[0, N)` use the widening multiply `(out · N) >> 64`. Both steps
/// are part of the reproducibility contract of sample-mode statistics.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn next_below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Which inputs a measurement visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainSpec {
    /// Every residue of `Z_N`.
    Full,
    /// `start..=end`; may extend past `N` for maps defined on all integers.
    Range { start: u64, end: u64 },
    /// `count` draws from `Z_N` with [`SplitMix64`].
    Sample { count: u64, seed: u64 },
}

impl DomainSpec {
    pub fn range(start: u64, end: u64) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidArgument(format!("empty range {start}..{end}")));
        }
        Ok(DomainSpec::Range { start, end })
    }

    pub fn sample(count: u64, seed: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidArgument("sample count must be at least 1".into()));
        }
        Ok(DomainSpec::Sample { count, seed })
    }

    pub fn size(&self, modulus: Modulus) -> u64 {
        match *self {
            DomainSpec::Full => modulus.value(),
            DomainSpec::Range { start, end } => (end - start).saturating_add(1),
            DomainSpec::Sample { count, .. } => count,
        }
    }

    pub fn iter(&self, modulus: Modulus) -> Result<DomainIter> {
        match *self {
            DomainSpec::Full => {
                modulus.require_table_size("full domain size", MAX_TABLE_SIZE)?;
                Ok(DomainIter::Range { next: 0, last: modulus.value() - 1, done: false })
            }
            DomainSpec::Range { start, end } => {
                let size = self.size(modulus);
                if size > MAX_DOMAIN_SIZE {
                    return Err(Error::Infeasible { what: "domain size", size, limit: MAX_DOMAIN_SIZE });
                }
                Ok(DomainIter::Range { next: start, last: end, done: start > end })
            }
            DomainSpec::Sample { count, seed } => {
                if count > MAX_DOMAIN_SIZE {
                    return Err(Error::Infeasible { what: "sample count", size: count, limit: MAX_DOMAIN_SIZE });
                }
                Ok(DomainIter::Sample { rng: SplitMix64::new(seed), remaining: count, bound: modulus.value() })
            }
        }
    }
}

/// Parses `full`, `range:A..B` (inclusive) or `sample:S[@SEED]`. A sample
/// without an explicit seed uses seed 0; see [`DomainSpec::with_seed`].
impl FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad domain '{s}' (full | range:A..B | sample:S[@SEED])"));
        if s == "full" {
            return Ok(DomainSpec::Full);
        }
        if let Some(r) = s.strip_prefix("range:") {
            let (a, b) = r.split_once("..").ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            return DomainSpec::range(a, b);
        }
        if let Some(r) = s.strip_prefix("sample:") {
            let (count, seed) = match r.split_once('@') {
                Some((c, sd)) => (c, sd.parse().map_err(|_| bad())?),
                None => (r, 0),
            };
            return DomainSpec::sample(count.parse().map_err(|_| bad())?, seed);
        }
        Err(bad())
    }
}

impl DomainSpec {
    /// Replaces the seed of a sample domain; other modes are unchanged.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            DomainSpec::Sample { count, .. } => DomainSpec::Sample { count, seed },
            other => other,
        }
    }
}

impl Serialize for DomainSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RangeParams {
            start: u64,
            end: u64,
        }
        #[derive(Serialize)]
        struct SampleParams {
            count: u64,
        }
        let mut map = s.serialize_map(Some(3))?;
        match *self {
            DomainSpec::Full => {
                map.serialize_entry("mode", "full")?;
                map.serialize_entry("params", &serde_json::Value::Null)?;
                map.serialize_entry("seed", &None::<u64>)?;
            }
            DomainSpec::Range { start, end } => {
                map.serialize_entry("mode", "range")?;
                map.serialize_entry("params", &RangeParams { start, end })?;
                map.serialize_entry("seed", &None::<u64>)?;
            }
            DomainSpec::Sample { count, seed } => {
                map.serialize_entry("mode", "sample")?;
                map.serialize_entry("params", &SampleParams { count })?;
                map.serialize_entry("seed", &Some(seed))?;
            }
        }
        map.end()
    }
}

pub enum DomainIter {
    Range { next: u64, last: u64, done: bool },
    Sample { rng: SplitMix64, remaining: u64, bound: u64 },
}

impl Iterator for DomainIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self {
            DomainIter::Range { next, last, done } => {
                if *done {
                    return None;
                }
                let v = *next;
                if v == *last {
                    *done = true;
                } else {
                    *next += 1;
                }
                Some(v)
            }
            DomainIter::Sample { rng, remaining, bound } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                Some(rng.next_below(*bound))
            }
        }
    }
}
