use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::evaluator::Evaluator;
use crate::modulus::MAX_TABLE_SIZE;
use crate::SCHEMA_VERSION;

use super::avalanche::{avalanche_summary, AvalancheSummary};
use super::domain::DomainSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HistogramRow {
    pub value: u64,
    pub count: u64,
}

/// Output histogram of one map over one domain, with deviation metrics.
///
/// With `S` inputs and expected count `S/N` per residue:
/// `dev_max_abs = max_v |count(v) − S/N|` over all `v ∈ Z_N`,
/// `dev_max_norm = dev_max_abs · N / S`, and
/// `chi_square = Σ_v (count(v) − S/N)² / (S/N)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub schema_version: u32,
    pub modulus: u64,
    pub level_or_map: String,
    pub domain: DomainSpec,
    pub sample_count: u64,
    /// Sparse, sorted by value; zero counts omitted.
    pub histogram: Vec<HistogramRow>,
    pub dev_max_abs: f64,
    pub dev_max_norm: f64,
    pub chi_square: f64,
    pub avalanche: Option<AvalancheSummary>,
}

impl StatsReport {
    pub fn count(&self, value: u64) -> u64 {
        self.histogram
            .binary_search_by_key(&value, |r| r.value)
            .map(|i| self.histogram[i].count)
            .unwrap_or(0)
    }

    pub fn support(&self) -> Vec<u64> {
        self.histogram.iter().map(|r| r.value).collect()
    }

    /// `value,count` rows for plotting.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("value,count\n");
        for r in &self.histogram {
            let _ = writeln!(out, "{},{}", r.value, r.count);
        }
        out
    }
}

fn count_outputs(eval: &impl Evaluator, domain: &DomainSpec) -> Result<(u64, Vec<HistogramRow>)> {
    let modulus = eval.modulus();
    let size = domain.size(modulus);
    let n = modulus.value();
    let mut total = 0u64;
    let rows = if n <= MAX_TABLE_SIZE && n <= size.saturating_mul(4) {
        let mut dense = vec![0u64; n as usize];
        for x in domain.iter(modulus)? {
            dense[eval.eval(x)? as usize] += 1;
            total += 1;
        }
        dense
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(v, count)| HistogramRow { value: v as u64, count })
            .collect()
    } else {
        let mut sparse: BTreeMap<u64, u64> = BTreeMap::new();
        for x in domain.iter(modulus)? {
            *sparse.entry(eval.eval(x)?).or_default() += 1;
            total += 1;
        }
        sparse.into_iter().map(|(value, count)| HistogramRow { value, count }).collect()
    };
    Ok((total, rows))
}

/// Exact output histogram and deviation metrics; no avalanche.
pub fn output_distribution(eval: &impl Evaluator, domain: &DomainSpec) -> Result<StatsReport> {
    let modulus = eval.modulus();
    let (s, histogram) = count_outputs(eval, domain)?;
    let n = modulus.value() as f64;
    let expected = s as f64 / n;
    let unseen = modulus.value() - histogram.len() as u64;

    let mut dev_max_abs = if unseen > 0 { expected } else { 0.0 };
    let mut chi_square = unseen as f64 * expected;
    for r in &histogram {
        let d = r.count as f64 - expected;
        dev_max_abs = dev_max_abs.max(d.abs());
        chi_square += d * d / expected;
    }

    Ok(StatsReport {
        schema_version: SCHEMA_VERSION,
        modulus: modulus.value(),
        level_or_map: eval.descriptor(),
        domain: *domain,
        sample_count: s,
        histogram,
        dev_max_abs,
        dev_max_norm: dev_max_abs * n / s as f64,
        chi_square,
        avalanche: None,
    })
}

/// [`output_distribution`] plus the avalanche summary when `N = 2^k`.
pub fn stats_report(eval: &impl Evaluator, domain: &DomainSpec) -> Result<StatsReport> {
    let mut report = output_distribution(eval, domain)?;
    if eval.modulus().pow2_exponent().is_some() {
        report.avalanche = Some(avalanche_summary(eval, domain)?);
    }
    Ok(report)
}
