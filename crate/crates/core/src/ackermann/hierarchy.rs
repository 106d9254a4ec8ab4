use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::funcgraph::{FunctionalGraph, SelfMap};
use crate::modulus::Modulus;

use super::closed_form::closed_form_eval;
use super::table::LevelTable;

pub const DEFAULT_MAX_LEVEL: u32 = 8;

/// Fast evaluator for every level `0..=max_level` over one ring.
///
/// Tables and functional graphs are built lazily on first use and are then
/// shared read-only, so a `Hierarchy` can be queried from several threads.
pub struct Hierarchy {
    modulus: Modulus,
    max_level: u32,
    tables: Vec<OnceLock<Arc<LevelTable>>>,
    graphs: Vec<OnceLock<Arc<FunctionalGraph>>>,
}

impl Hierarchy {
    pub fn new(modulus: Modulus) -> Self {
        Self::with_max_level(modulus, DEFAULT_MAX_LEVEL)
    }

    pub fn with_max_level(modulus: Modulus, max_level: u32) -> Self {
        let slots = max_level as usize + 1;
        Self {
            modulus,
            max_level,
            tables: (0..slots).map(|_| OnceLock::new()).collect(),
            graphs: (0..slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    fn check_level(&self, m: u32) -> Result<()> {
        if m > self.max_level {
            Err(Error::LevelOutOfRange { level: m, max: self.max_level })
        } else {
            Ok(())
        }
    }

    /// Level-`m` table, building any missing lower levels.
    pub fn table(&self, m: u32) -> Result<&Arc<LevelTable>> {
        self.check_level(m)?;
        if let Some(t) = self.tables[m as usize].get() {
            return Ok(t);
        }
        let built = if m <= 3 {
            LevelTable::closed(self.modulus, m)?
        } else {
            LevelTable::next_level(self.table(m - 1)?)
        };
        let _ = self.tables[m as usize].set(Arc::new(built));
        Ok(self.tables[m as usize].get().expect("table just set"))
    }

    /// Functional graph of the level-`m` map `x ↦ A_N(m, x)`.
    pub fn graph(&self, m: u32) -> Result<&Arc<FunctionalGraph>> {
        self.check_level(m)?;
        if let Some(g) = self.graphs[m as usize].get() {
            return Ok(g);
        }
        let map = SelfMap::level(Arc::clone(self.table(m)?));
        let g = FunctionalGraph::build(&map)?;
        let _ = self.graphs[m as usize].set(Arc::new(g));
        Ok(self.graphs[m as usize].get().expect("graph just set"))
    }

    /// `A_N(m, n)` for any 64-bit `n`.
    pub fn eval(&self, m: u32, n: u64) -> Result<u64> {
        self.check_level(m)?;
        if m <= 3 {
            return closed_form_eval(self.modulus, m, n);
        }
        let table = self.table(m)?;
        if self.modulus.contains(n) {
            return Ok(table.get(n));
        }
        // A_N(m, n) = f^n(A_N(m, 0)) with f the level below.
        let below = self.graph(m - 1)?;
        below.iterate(table.get(0), n)
    }

    pub fn level_map(&self, m: u32) -> Result<LevelMap<'_>> {
        self.check_level(m)?;
        Ok(LevelMap { hierarchy: self, level: m })
    }
}

/// One level of a [`Hierarchy`] viewed as an [`Evaluator`].
#[derive(Clone, Copy)]
pub struct LevelMap<'a> {
    hierarchy: &'a Hierarchy,
    level: u32,
}

impl LevelMap<'_> {
    pub fn level(&self) -> u32 {
        self.level
    }
}

impl Evaluator for LevelMap<'_> {
    fn modulus(&self) -> Modulus {
        self.hierarchy.modulus
    }
    fn eval(&self, n: u64) -> Result<u64> {
        self.hierarchy.eval(self.level, n)
    }
    fn descriptor(&self) -> String {
        format!("level:{}", self.level)
    }
}

/// One-shot `A_N(m, n)`: closed forms for `m <= 3`, otherwise tables and
/// cycle reduction. Prefer a [`Hierarchy`] for repeated queries.
pub fn fast_eval(modulus: Modulus, m: u32, n: u64) -> Result<u64> {
    if m <= 3 {
        return closed_form_eval(modulus, m, n);
    }
    Hierarchy::new(modulus).eval(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ackermann::{reference_eval, ReferenceOracle};

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(fast_eval(md(16), 1, 2).unwrap(), 4);
        assert_eq!(fast_eval(md(16), 4, 1_000_000_000).unwrap(), 13);
        assert_eq!(fast_eval(md(256), 3, 50).unwrap(), 253);
        assert_eq!(fast_eval(md(16), 4, u64::MAX).unwrap(), 13);
    }

    #[test]
    fn beyond_the_ring_matches_reference() {
        for n in [7u64, 16, 31, 64] {
            let h = Hierarchy::new(md(n));
            let mut oracle = ReferenceOracle::new(md(n)).unwrap();
            for m in 4..=6 {
                for arg in (0..5 * n).chain([1 << 16]) {
                    assert_eq!(h.eval(m, arg).unwrap(), oracle.eval(m, arg).unwrap(), "N={n} m={m} arg={arg}");
                }
            }
        }
    }

    #[test]
    fn level_cap_is_enforced() {
        let h = Hierarchy::with_max_level(md(16), 4);
        assert!(h.eval(4, 3).is_ok());
        assert_eq!(h.eval(5, 3), Err(Error::LevelOutOfRange { level: 5, max: 4 }));
        assert!(matches!(fast_eval(md(16), 9, 0), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn closed_form_levels_need_no_table() {
        let huge = md(1 << 62);
        assert_eq!(fast_eval(huge, 3, 4).unwrap(), 125);
        assert!(matches!(fast_eval(huge, 4, 0), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn shared_across_threads() {
        let h = Hierarchy::new(md(4096));
        let expect = reference_eval(md(4096), 5, 100).unwrap();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(h.eval(5, 100).unwrap(), expect));
            }
        });
    }
}
