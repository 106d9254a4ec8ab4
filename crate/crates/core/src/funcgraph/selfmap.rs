use std::sync::Arc;

use crate::ackermann::LevelTable;
use crate::arith::{mul_mod, pow2_shifted3, pow_mod, sub_mod};
use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::modulus::Modulus;

#[derive(Debug, Clone)]
pub enum MapKind {
    /// `x ↦ A_N(m, x)` from a built table.
    Level(Arc<LevelTable>),
    /// `x ↦ 2^x mod N`.
    Tetration,
    /// `x ↦ (a·x + b) mod N`.
    Affine { a: u64, b: u64 },
    /// `x ↦ (2^(x+3) - 3) mod N`, the step map iterated by level 4.
    Shifted3,
    /// Arbitrary successor table.
    Table(Arc<[u32]>),
}

/// A self-map of `Z_N`.
#[derive(Debug, Clone)]
pub struct SelfMap {
    modulus: Modulus,
    kind: MapKind,
}

impl SelfMap {
    pub fn level(table: Arc<LevelTable>) -> Self {
        Self { modulus: table.modulus(), kind: MapKind::Level(table) }
    }

    pub fn tetration(modulus: Modulus) -> Self {
        Self { modulus, kind: MapKind::Tetration }
    }

    pub fn affine(modulus: Modulus, a: u64, b: u64) -> Self {
        Self { modulus, kind: MapKind::Affine { a: a % modulus.value(), b: b % modulus.value() } }
    }

    pub fn shifted3(modulus: Modulus) -> Self {
        Self { modulus, kind: MapKind::Shifted3 }
    }

    pub fn from_table(modulus: Modulus, succ: Vec<u32>) -> Result<Self> {
        if succ.len() as u64 != modulus.value() {
            return Err(Error::InvalidArgument(format!(
                "successor table has {} entries, expected {}",
                succ.len(),
                modulus.value()
            )));
        }
        if let Some(&bad) = succ.iter().find(|&&v| !modulus.contains(v as u64)) {
            return Err(Error::OutOfDomain { value: bad as u64, modulus: modulus.value() });
        }
        Ok(Self { modulus, kind: MapKind::Table(succ.into()) })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    /// `f(x)` for `x ∈ Z_N`.
    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let n = self.modulus.value();
        debug_assert!(x < n);
        match &self.kind {
            MapKind::Level(t) => t.get(x),
            MapKind::Tetration => pow_mod(2, x, n),
            MapKind::Affine { a, b } => ((mul_mod(*a, x, n) as u128 + *b as u128) % n as u128) as u64,
            MapKind::Shifted3 => sub_mod(pow2_shifted3(x, n), 3, n),
            MapKind::Table(t) => t[x as usize] as u64,
        }
    }

    pub fn descriptor(&self) -> String {
        match &self.kind {
            MapKind::Level(t) => format!("level:{}", t.level()),
            MapKind::Tetration => "tetration".into(),
            MapKind::Affine { a, b } => format!("affine:{a},{b}"),
            MapKind::Shifted3 => "shifted3".into(),
            MapKind::Table(_) => "table".into(),
        }
    }
}

impl Evaluator for SelfMap {
    fn modulus(&self) -> Modulus {
        self.modulus
    }
    fn eval(&self, n: u64) -> Result<u64> {
        Ok(self.apply(self.modulus.reduce(n)))
    }
    fn descriptor(&self) -> String {
        SelfMap::descriptor(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ackermann::build_level_table;

    #[test]
    fn kinds_evaluate() {
        let m = Modulus::new(16).unwrap();
        assert_eq!(SelfMap::tetration(m).apply(3), 8);
        assert_eq!(SelfMap::tetration(m).apply(4), 0);
        assert_eq!(SelfMap::affine(m, 3, 5).apply(7), 10);
        assert_eq!(SelfMap::shifted3(m).apply(0), 5);
        assert_eq!(SelfMap::shifted3(m).apply(13), 13);
        let lvl = SelfMap::level(Arc::new(build_level_table(m, 3).unwrap()));
        for x in 0..16 {
            assert_eq!(lvl.apply(x), SelfMap::shifted3(m).apply(x));
        }
        assert_eq!(lvl.descriptor(), "level:3");
    }

    #[test]
    fn table_validation() {
        let m = Modulus::new(3).unwrap();
        assert!(SelfMap::from_table(m, vec![0, 1, 3]).is_err());
        assert!(SelfMap::from_table(m, vec![0, 1]).is_err());
        assert_eq!(SelfMap::from_table(m, vec![2, 0, 1]).unwrap().apply(0), 2);
    }
}
