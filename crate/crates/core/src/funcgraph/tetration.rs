use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modulus::Modulus;
use crate::SCHEMA_VERSION;

use super::graph::FunctionalGraph;
use super::selfmap::SelfMap;

pub const TETRATION_MAX_K: u32 = 26;

/// Measured structure of `x ↦ 2^x mod 2^k` next to the stabilization claims
/// (one cycle of length `k + 1`, entered within two steps).
///
/// The claims are reported, not assumed: for `k = 4` the arithmetic forces
/// `2^4 ≡ 0`, so the cycle is `0 → 1 → 2 → 4 → 0` of length 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetrationReport {
    pub schema_version: u32,
    pub k: u32,
    pub modulus: u64,
    pub cycle_count: usize,
    /// Cycle through 0, in orbit order.
    pub measured_cycle: Vec<u64>,
    pub measured_cycle_length: u64,
    pub max_preperiod: u64,
    /// A start node attaining `max_preperiod`.
    pub max_preperiod_witness: u64,
    pub all_orbits_enter_zero_cycle: bool,
    pub claimed_cycle_length: u64,
    pub claimed_max_entry: u64,
    pub cycle_length_agrees: bool,
    /// Measured length is at most `k + 1`.
    pub cycle_length_within_bound: bool,
    pub max_entry_agrees: bool,
}

pub fn tetration_check(k: u32) -> Result<TetrationReport> {
    if k > TETRATION_MAX_K {
        return Err(Error::Infeasible { what: "tetration exponent k", size: k as u64, limit: TETRATION_MAX_K as u64 });
    }
    let modulus = Modulus::pow2(k)?;
    let g = FunctionalGraph::build(&SelfMap::tetration(modulus))?;
    let zero_cycle = g.cycle_id(0);
    let measured_cycle: Vec<u64> = g.cycle_members(zero_cycle).iter().map(|&v| v as u64).collect();
    let all_enter = (0..modulus.value()).all(|x| g.cycle_id(x) == zero_cycle);
    let max_preperiod = g.max_preperiod();
    let witness = (0..modulus.value()).find(|&x| g.tail_length(x) == max_preperiod).unwrap_or(0);
    let claim_len = k as u64 + 1;
    let claim_entry = 2;
    Ok(TetrationReport {
        schema_version: SCHEMA_VERSION,
        k,
        modulus: modulus.value(),
        cycle_count: g.cycles().len(),
        measured_cycle_length: measured_cycle.len() as u64,
        measured_cycle,
        max_preperiod,
        max_preperiod_witness: witness,
        all_orbits_enter_zero_cycle: all_enter,
        claimed_cycle_length: claim_len,
        claimed_max_entry: claim_entry,
        cycle_length_agrees: g.cycles()[zero_cycle].length == claim_len,
        cycle_length_within_bound: g.cycles()[zero_cycle].length <= claim_len,
        max_entry_agrees: max_preperiod <= claim_entry,
    })
}
