use std::ops::RangeInclusive;

use serde::Serialize;

use crate::ackermann::Hierarchy;
use crate::error::Result;

pub const CYCLE_STATS_MAX_MODULUS: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelCycleStats {
    pub level: u32,
    pub cycle_count: usize,
    pub min_cycle_length: u64,
    pub max_cycle_length: u64,
    pub mean_cycle_length: f64,
    pub max_preperiod: u64,
    /// Size of the largest basin and its cycle's representative.
    pub largest_component: u64,
    pub largest_component_representative: u64,
}

/// Cycle-length distribution of `x ↦ A_N(m, x)` for each level in range.
pub fn cycle_stats_by_level(hierarchy: &Hierarchy, levels: RangeInclusive<u32>) -> Result<Vec<LevelCycleStats>> {
    hierarchy.modulus().require_table_size("cycle statistics size", CYCLE_STATS_MAX_MODULUS)?;
    levels
        .map(|m| {
            let g = hierarchy.graph(m)?;
            let cycles = g.cycles();
            let lengths = cycles.iter().map(|c| c.length);
            let largest = cycles.iter().max_by_key(|c| (c.component_size, std::cmp::Reverse(c.representative))).unwrap();
            Ok(LevelCycleStats {
                level: m,
                cycle_count: cycles.len(),
                min_cycle_length: lengths.clone().min().unwrap(),
                max_cycle_length: lengths.clone().max().unwrap(),
                mean_cycle_length: lengths.sum::<u64>() as f64 / cycles.len() as f64,
                max_preperiod: g.max_preperiod(),
                largest_component: largest.component_size,
                largest_component_representative: largest.representative,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulus::Modulus;

    #[test]
    fn mod_16_levels() {
        let h = Hierarchy::new(Modulus::new(16).unwrap());
        let stats = cycle_stats_by_level(&h, 0..=4).unwrap();
        assert_eq!(stats[0].cycle_count, 1);
        assert_eq!(stats[0].max_cycle_length, 16);
        assert!(h.graph(3).unwrap().is_cycle_node(13));
        assert_eq!(h.graph(3).unwrap().cycle_of(13).length, 1);
        assert_eq!(stats[4].cycle_count, 1);
        assert_eq!(stats[4].max_cycle_length, 1);
        assert_eq!(stats[4].largest_component, 16);
        assert_eq!(stats[4].largest_component_representative, 13);
    }

    #[test]
    fn size_limit() {
        let h = Hierarchy::new(Modulus::new((1 << 22) + 1).unwrap());
        assert!(cycle_stats_by_level(&h, 0..=0).is_err());
    }
}
