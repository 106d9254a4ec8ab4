//! Statistical and structural measurements of maps on `Z_N`.

mod affine;
mod avalanche;
mod correlate;
mod cycles;
mod domain;
mod stats;

pub use affine::{affine_holds, affine_relation, AffineRelation, AFFINE_MAX_MODULUS};
pub use avalanche::{avalanche, avalanche_summary, AvalancheSummary, Neighbor};
pub use correlate::{correlate_levels, CorrelationReport, CORRELATE_MAX_MODULUS};
pub use cycles::{cycle_stats_by_level, LevelCycleStats, CYCLE_STATS_MAX_MODULUS};
pub use domain::{DomainIter, DomainSpec, SplitMix64, MAX_DOMAIN_SIZE};
pub use stats::{output_distribution, stats_report, HistogramRow, StatsReport};
