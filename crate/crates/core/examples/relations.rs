//! Affine relations, correlation and cycle statistics across levels.
use modack::ackermann::Hierarchy;
use modack::analysis::{affine_relation, correlate_levels, cycle_stats_by_level};
use modack::{fmt_sig6, Modulus};

fn main() -> modack::Result<()> {
    let h = Hierarchy::new(Modulus::pow2(10)?);
    for m in 0..6 {
        let (a, b) = (h.table(m)?, h.table(m + 1)?);
        let rel = match affine_relation(a, b)? {
            Some(r) => format!("A_{} = {}*A_{m} + {}", m + 1, r.a, r.b),
            None => "none".into(),
        };
        let c = correlate_levels(a, b)?;
        let pearson = c.pearson.map(fmt_sig6).unwrap_or_else(|| "undef".into());
        println!("{m}->{}: affine {rel:<22} pearson {pearson:<10} nmi {}", m + 1, fmt_sig6(c.nmi));
    }
    for s in cycle_stats_by_level(&h, 0..=6)? {
        println!(
            "level {}: {} cycles, lengths {}..{}, max preperiod {}",
            s.level, s.cycle_count, s.min_cycle_length, s.max_cycle_length, s.max_preperiod
        );
    }
    Ok(())
}
