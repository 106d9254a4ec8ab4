//! Orbit listings and cycle censuses of level maps.
use modack::ackermann::Hierarchy;
use modack::funcgraph::{orbit_summary, SelfMap};
use modack::Modulus;

fn main() -> modack::Result<()> {
    let h = Hierarchy::new(Modulus::new(360)?);
    for m in 1..=5 {
        let map = SelfMap::level(h.table(m)?.clone());
        let o = orbit_summary(&map, 0, 12)?;
        let g = h.graph(m)?;
        println!(
            "level {m}: orbit of 0 = {}  | {} cycles, max preperiod {}",
            o.listing(),
            g.cycles().len(),
            g.max_preperiod()
        );
    }
    let g = h.graph(2)?;
    println!("level 2 iterated 10^15 times from 1 -> {}", g.iterate(1, 1_000_000_000_000_000)?);
    Ok(())
}
