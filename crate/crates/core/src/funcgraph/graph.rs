use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::modulus::{Modulus, MAX_TABLE_SIZE};
use crate::SCHEMA_VERSION;

use super::selfmap::SelfMap;

const UNSEEN: u32 = u32::MAX;
const ON_PATH: u32 = u32::MAX - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub length: u64,
    /// Smallest node on the cycle; positions are counted from it.
    pub representative: u64,
    /// Number of nodes (cycle plus tails) draining into this cycle.
    pub component_size: u64,
}

/// Rho-shape decomposition of a self-map on `Z_N`.
///
/// Cycles are numbered by increasing representative. For a cycle node,
/// `cycle_position` is its index along the cycle starting at the
/// representative; for a tail node it is the position of the cycle node the
/// tail enters.
#[derive(Debug, Clone)]
pub struct FunctionalGraph {
    modulus: Modulus,
    descriptor: String,
    succ: Vec<u32>,
    tail_length: Vec<u32>,
    cycle_id: Vec<u32>,
    cycle_position: Vec<u32>,
    cycles: Vec<Cycle>,
    cycle_offsets: Vec<usize>,
    cycle_nodes: Vec<u32>,
}

/// Serializable summary of a [`FunctionalGraph`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphCensus {
    pub schema_version: u32,
    pub modulus: u64,
    pub map_descriptor: String,
    pub cycles: Vec<Cycle>,
    pub max_preperiod: u64,
    /// `preperiod_histogram[p]` = number of nodes with tail length `p`.
    pub preperiod_histogram: Vec<u64>,
}

impl FunctionalGraph {
    /// Iterative O(N) sweep over all starting points.
    pub fn build(map: &SelfMap) -> Result<Self> {
        let modulus = map.modulus();
        let n = modulus.require_table_size("functional graph size", MAX_TABLE_SIZE)?;
        let succ: Vec<u32> = (0..n as u64).map(|x| map.apply(x) as u32).collect();

        let mut tail_length = vec![0u32; n];
        let mut cycle_id = vec![UNSEEN; n];
        let mut cycle_position = vec![0u32; n];
        let mut raw_cycles: Vec<Vec<u32>> = Vec::new();
        let mut path: Vec<u32> = Vec::new();

        for s in 0..n as u32 {
            if cycle_id[s as usize] != UNSEEN {
                continue;
            }
            path.clear();
            let mut x = s;
            while cycle_id[x as usize] == UNSEEN {
                cycle_id[x as usize] = ON_PATH;
                path.push(x);
                x = succ[x as usize];
            }
            if cycle_id[x as usize] == ON_PATH {
                let start = path.iter().rposition(|&p| p == x).expect("cycle entry on path");
                let mut nodes = path.split_off(start);
                let min_at = nodes.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i).unwrap();
                nodes.rotate_left(min_at);
                let id = raw_cycles.len() as u32;
                for (i, &v) in nodes.iter().enumerate() {
                    cycle_id[v as usize] = id;
                    tail_length[v as usize] = 0;
                    cycle_position[v as usize] = i as u32;
                }
                raw_cycles.push(nodes);
            }
            for &v in path.iter().rev() {
                let w = succ[v as usize] as usize;
                cycle_id[v as usize] = cycle_id[w];
                tail_length[v as usize] = tail_length[w] + 1;
                cycle_position[v as usize] = cycle_position[w];
            }
        }

        // Renumber cycles by representative.
        let mut order: Vec<usize> = (0..raw_cycles.len()).collect();
        order.sort_by_key(|&i| raw_cycles[i][0]);
        let mut remap = vec![0u32; raw_cycles.len()];
        for (new_id, &old) in order.iter().enumerate() {
            remap[old] = new_id as u32;
        }
        for id in cycle_id.iter_mut() {
            *id = remap[*id as usize];
        }
        let mut component = vec![0u64; raw_cycles.len()];
        for &id in &cycle_id {
            component[id as usize] += 1;
        }
        let mut cycles = Vec::with_capacity(raw_cycles.len());
        let mut cycle_offsets = Vec::with_capacity(raw_cycles.len() + 1);
        let mut cycle_nodes = Vec::new();
        for (new_id, &old) in order.iter().enumerate() {
            let nodes = &raw_cycles[old];
            cycle_offsets.push(cycle_nodes.len());
            cycles.push(Cycle {
                length: nodes.len() as u64,
                representative: nodes[0] as u64,
                component_size: component[new_id],
            });
            cycle_nodes.extend_from_slice(nodes);
        }
        cycle_offsets.push(cycle_nodes.len());

        Ok(Self {
            modulus,
            descriptor: map.descriptor(),
            succ,
            tail_length,
            cycle_id,
            cycle_position,
            cycles,
            cycle_offsets,
            cycle_nodes,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    #[inline]
    pub fn successor(&self, x: u64) -> u64 {
        self.succ[x as usize] as u64
    }

    #[inline]
    pub fn tail_length(&self, x: u64) -> u64 {
        self.tail_length[x as usize] as u64
    }

    #[inline]
    pub fn cycle_id(&self, x: u64) -> usize {
        self.cycle_id[x as usize] as usize
    }

    #[inline]
    pub fn cycle_position(&self, x: u64) -> u64 {
        self.cycle_position[x as usize] as u64
    }

    pub fn is_cycle_node(&self, x: u64) -> bool {
        self.tail_length[x as usize] == 0
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Cycle of `x` (the one it drains into).
    pub fn cycle_of(&self, x: u64) -> &Cycle {
        &self.cycles[self.cycle_id(x)]
    }

    /// Nodes of cycle `id` in order, starting at its representative.
    pub fn cycle_members(&self, id: usize) -> &[u32] {
        &self.cycle_nodes[self.cycle_offsets[id]..self.cycle_offsets[id + 1]]
    }

    /// `f^t(x)`. Constant time once on the cycle; tail steps are walked.
    pub fn iterate(&self, x: u64, t: u64) -> Result<u64> {
        self.modulus.check_residue(x)?;
        let tail = self.tail_length(x);
        if t < tail {
            let mut y = x as u32;
            for _ in 0..t {
                y = self.succ[y as usize];
            }
            return Ok(y as u64);
        }
        let id = self.cycle_id(x);
        let len = self.cycles[id].length;
        let pos = (self.cycle_position(x) + (t - tail) % len) % len;
        Ok(self.cycle_nodes[self.cycle_offsets[id] + pos as usize] as u64)
    }

    pub fn max_preperiod(&self) -> u64 {
        self.tail_length.iter().copied().max().unwrap_or(0) as u64
    }

    pub fn preperiod_histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.max_preperiod() as usize + 1];
        for &t in &self.tail_length {
            hist[t as usize] += 1;
        }
        hist
    }

    pub fn census(&self) -> GraphCensus {
        GraphCensus {
            schema_version: SCHEMA_VERSION,
            modulus: self.modulus.value(),
            map_descriptor: self.descriptor.clone(),
            cycles: self.cycles.clone(),
            max_preperiod: self.max_preperiod(),
            preperiod_histogram: self.preperiod_histogram(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ackermann::build_level_table;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn naive(map: &SelfMap, mut x: u64, t: u64) -> u64 {
        for _ in 0..t {
            x = map.apply(x);
        }
        x
    }

    #[test]
    fn tetration_mod_16() {
        let g = FunctionalGraph::build(&SelfMap::tetration(md(16))).unwrap();
        assert_eq!(g.cycles().len(), 1);
        assert_eq!(g.cycles()[0].length, 4);
        assert_eq!(g.cycles()[0].representative, 0);
        assert_eq!(g.cycle_members(0), &[0, 1, 2, 4]);
        assert_eq!(g.tail_length(8), 1);
        assert_eq!(g.tail_length(3), 2);
        assert_eq!(g.cycles()[0].component_size, 16);
    }

    #[test]
    fn level_three_mod_16() {
        let map = SelfMap::level(Arc::new(build_level_table(md(16), 3).unwrap()));
        let g = FunctionalGraph::build(&map).unwrap();
        assert!(g.is_cycle_node(13));
        assert_eq!(g.cycle_of(13).length, 1);
        assert_eq!(g.successor(0), 5);
        assert_eq!(g.successor(5), 13);
        assert_eq!(g.tail_length(0), 2);
    }

    #[test]
    fn identity_has_n_fixed_points() {
        let g = FunctionalGraph::build(&SelfMap::affine(md(16), 1, 0)).unwrap();
        assert_eq!(g.cycles().len(), 16);
        assert!(g.cycles().iter().all(|c| c.length == 1 && c.component_size == 1));
        assert_eq!(g.max_preperiod(), 0);
    }

    #[test]
    fn iterate_examples() {
        let tet = SelfMap::tetration(md(16));
        let g = FunctionalGraph::build(&tet).unwrap();
        assert_eq!(g.iterate(3, 0).unwrap(), 3);
        assert_eq!(g.iterate(3, 100).unwrap(), naive(&tet, 3, 100));
        assert_eq!(g.iterate(3, 100).unwrap(), 2);
        assert!(g.iterate(16, 1).is_err());

        let lvl = SelfMap::level(Arc::new(build_level_table(md(16), 3).unwrap()));
        let g = FunctionalGraph::build(&lvl).unwrap();
        assert_eq!(g.iterate(0, 5).unwrap(), 13);
        assert_eq!(g.iterate(0, u64::MAX).unwrap(), 13);
    }

    #[test]
    fn iterate_matches_naive_on_affine_maps() {
        for (a, b) in [(3u64, 1u64), (2, 5), (5, 0), (4, 4)] {
            let map = SelfMap::affine(md(100), a, b);
            let g = FunctionalGraph::build(&map).unwrap();
            for x in 0..100 {
                for t in 0..250 {
                    assert_eq!(g.iterate(x, t).unwrap(), naive(&map, x, t));
                }
            }
        }
    }

    #[test]
    fn census_shape() {
        let g = FunctionalGraph::build(&SelfMap::tetration(md(16))).unwrap();
        let c = g.census();
        assert_eq!(c.modulus, 16);
        assert_eq!(c.map_descriptor, "tetration");
        assert_eq!(c.max_preperiod, 2);
        assert_eq!(c.preperiod_histogram.iter().sum::<u64>(), 16);
        assert_eq!(c.preperiod_histogram, vec![4, 11, 1]);
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["cycles"][0]["length"], 4);
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
    }
}
