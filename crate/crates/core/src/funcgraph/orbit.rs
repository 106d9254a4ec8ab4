use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::selfmap::SelfMap;

/// Cap on the number of tail / cycle members kept in an [`OrbitSummary`].
pub const DEFAULT_MEMBER_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub start: u64,
    /// Steps before the first cycle node.
    pub preperiod: u64,
    pub period: u64,
    /// Orbit elements at steps `0..preperiod`, truncated to the cap.
    pub tail: Vec<u64>,
    /// Cycle elements starting at step `preperiod`, truncated to the cap.
    pub cycle_members: Vec<u64>,
    pub truncated: bool,
}

impl OrbitSummary {
    /// `x0 x1 ... (x_mu)`: the orbit up to its first repeated state, which is
    /// shown in parentheses.
    pub fn listing(&self) -> String {
        let mut parts: Vec<String> = self
            .tail
            .iter()
            .chain(self.cycle_members.iter())
            .map(|v| v.to_string())
            .collect();
        if self.truncated {
            parts.push("...".into());
        }
        parts.push(format!("({})", self.cycle_members[0]));
        parts.join(" ")
    }
}

/// Preperiod and period of the orbit of `start` by Brent's method.
///
/// Uses O(1) extra memory and only evaluates the map, so it also works on
/// rings too large to tabulate.
pub fn orbit_summary(map: &SelfMap, start: u64, member_cap: usize) -> Result<OrbitSummary> {
    map.modulus().check_residue(start)?;
    let f = |x: u64| map.apply(x);

    let mut power = 1u64;
    let mut period = 1u64;
    let mut tortoise = start;
    let mut hare = f(start);
    while tortoise != hare {
        if power == period {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        hare = f(hare);
        period += 1;
    }

    let mut tortoise = start;
    let mut hare = start;
    for _ in 0..period {
        hare = f(hare);
    }
    let mut preperiod = 0u64;
    let mut tail = Vec::new();
    while tortoise != hare {
        if tail.len() < member_cap {
            tail.push(tortoise);
        }
        tortoise = f(tortoise);
        hare = f(hare);
        preperiod += 1;
    }

    let mut cycle_members = Vec::new();
    let mut x = tortoise;
    for _ in 0..period.min(member_cap as u64) {
        cycle_members.push(x);
        x = f(x);
    }
    let truncated = preperiod > member_cap as u64 || period > member_cap as u64;

    Ok(OrbitSummary { start, preperiod, period, tail, cycle_members, truncated })
}
