//! Reproduction of the avalanche / deviation grid over `A_{2^k}(m, ·)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::ackermann::Hierarchy;
use crate::analysis::{avalanche, output_distribution, DomainSpec, Neighbor};
use crate::error::{Error, Result};
use crate::fmt_sig6;
use crate::modulus::Modulus;

/// Largest `k` accepted by the grid (dense tables over `Z_{2^k}`).
pub const EXPERIMENT_MAX_K: u32 = 26;

/// Upper end of the restricted domain `[0, 50]` used for levels `m >= 4`.
pub const DEEP_LEVEL_DOMAIN_END: u64 = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub id: String,
    pub levels: Vec<u32>,
    pub exponents: Vec<u32>,
    pub seed: u64,
}

impl ExperimentConfig {
    /// `m ∈ {3, 4}`, `k ∈ {8, 10, 12}`.
    pub fn table1(seed: u64) -> Self {
        Self { id: "table1".into(), levels: vec![3, 4], exponents: vec![8, 10, 12], seed }
    }

    /// Full `Z_N` for `m <= 3`, `[0, 50]` above.
    pub fn domain_for(&self, m: u32) -> DomainSpec {
        if m <= 3 {
            DomainSpec::Full
        } else {
            DomainSpec::Range { start: 0, end: DEEP_LEVEL_DOMAIN_END }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.id != "table1" {
            return Err(Error::InvalidArgument(format!("unknown experiment '{}'", self.id)));
        }
        if let Some(&k) = self.exponents.iter().find(|&&k| k > EXPERIMENT_MAX_K) {
            return Err(Error::Infeasible { what: "experiment exponent k", size: k as u64, limit: EXPERIMENT_MAX_K as u64 });
        }
        if let Some(&k) = self.exponents.iter().find(|&&k| k == 0) {
            return Err(Error::InvalidArgument(format!("exponent k = {k} must be >= 1")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Row {
    pub m: u32,
    pub k: u32,
    pub dev_max_abs: f64,
    pub dev_max_norm: f64,
    pub avalanche_xor1: f64,
    pub avalanche_succ: f64,
}

/// Rows ordered by `m`, then `k`.
pub fn reproduce(config: &ExperimentConfig) -> Result<Vec<Table1Row>> {
    config.validate()?;
    let mut rows = Vec::new();
    for &m in &config.levels {
        for &k in &config.exponents {
            let hierarchy = Hierarchy::new(Modulus::pow2(k)?);
            let map = hierarchy.level_map(m)?;
            let domain = config.domain_for(m);
            let dist = output_distribution(&map, &domain)?;
            rows.push(Table1Row {
                m,
                k,
                dev_max_abs: dist.dev_max_abs,
                dev_max_norm: dist.dev_max_norm,
                avalanche_xor1: avalanche(&map, Neighbor::Xor1, &domain)?,
                avalanche_succ: avalanche(&map, Neighbor::Succ, &domain)?,
            });
        }
    }
    Ok(rows)
}

/// CSV with a `#`-prefixed metadata header, then
/// `m,k,dev_max_abs,dev_max_norm,avalanche_xor1,avalanche_succ`.
pub fn rows_to_csv(config: &ExperimentConfig, rows: &[Table1Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# experiment: {}", config.id);
    out.push_str("# map: A_N(m,n) with every intermediate value reduced mod N = 2^k\n");
    let _ = writeln!(out, "# domain: m <= 3 full Z_N; m >= 4 n in [0,{DEEP_LEVEL_DOMAIN_END}]");
    out.push_str("# dev_max_abs = max_v |count(v) - S/N|; dev_max_norm = dev_max_abs * N / S\n");
    out.push_str("# avalanche = mean wt(A(n) xor A(n'))/k; xor1: n' = n xor 1; succ: n' = n + 1 (integer successor)\n");
    let _ = writeln!(out, "# seed: {}", config.seed);
    out.push_str("m,k,dev_max_abs,dev_max_norm,avalanche_xor1,avalanche_succ\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.m,
            r.k,
            fmt_sig6(r.dev_max_abs),
            fmt_sig6(r.dev_max_norm),
            fmt_sig6(r.avalanche_xor1),
            fmt_sig6(r.avalanche_succ)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_three_rows() {
        let rows = reproduce(&ExperimentConfig::table1(0)).unwrap();
        assert_eq!(rows.len(), 6);
        let r = &rows[0];
        assert_eq!((r.m, r.k), (3, 8));
        assert_eq!(r.avalanche_xor1, 6.0 / 2048.0);
        assert_eq!(r.dev_max_abs, 250.0);
        let r = &rows[1];
        assert_eq!(r.avalanche_succ, 7.0 / 10240.0);
    }

    #[test]
    fn level_four_rows_on_restricted_domain() {
        // A_256(4, ·): 13 at n = 0, then 2^16 − 3 ≡ 253, fixed by level 3.
        let rows = reproduce(&ExperimentConfig::table1(0)).unwrap();
        let r = &rows[3];
        assert_eq!((r.m, r.k), (4, 8));
        assert_eq!(r.dev_max_abs, 50.0 - 51.0 / 256.0);
        // 13 ⊕ 253 has four bits set; pairs (0,1) and (1,0).
        assert_eq!(r.avalanche_xor1, 8.0 / (8.0 * 51.0));
        assert_eq!(r.avalanche_succ, 4.0 / (8.0 * 51.0));
    }

    #[test]
    fn rejects_large_exponents() {
        let mut c = ExperimentConfig::table1(0);
        c.exponents = vec![27];
        assert!(matches!(reproduce(&c), Err(Error::Infeasible { .. })));
        c.id = "table2".into();
        assert!(reproduce(&c).is_err());
    }

    #[test]
    fn csv_layout() {
        let c = ExperimentConfig::table1(42);
        let csv = rows_to_csv(&c, &reproduce(&c).unwrap());
        let data: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data[0], "m,k,dev_max_abs,dev_max_norm,avalanche_xor1,avalanche_succ");
        assert_eq!(data.len(), 7);
        assert!(data[1].starts_with("3,8,250.000,250.000,0.00292969,"));
    }
}
