//! Output distribution and avalanche scores by level.
use modack::ackermann::Hierarchy;
use modack::analysis::{stats_report, DomainSpec};
use modack::{fmt_sig6, Modulus};

fn main() -> modack::Result<()> {
    let h = Hierarchy::new(Modulus::pow2(12)?);
    println!("m  support  dev_norm   xor1      succ");
    for m in 0..=6 {
        let r = stats_report(&h.level_map(m)?, &DomainSpec::Full)?;
        let a = r.avalanche.as_ref().expect("power-of-two modulus");
        println!(
            "{m}  {:>7}  {:>9}  {:>8}  {:>8}",
            r.support().len(),
            fmt_sig6(r.dev_max_norm),
            fmt_sig6(a.xor1),
            fmt_sig6(a.succ)
        );
    }

    let sampled = stats_report(&h.level_map(4)?, &DomainSpec::sample(10_000, 42)?)?;
    println!("level 4 on 10000 samples: chi^2 = {}", fmt_sig6(sampled.chi_square));
    Ok(())
}
