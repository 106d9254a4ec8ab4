//! Structure of x -> 2^x over Z_{2^k}.
use modack::funcgraph::tetration_check;

fn main() -> modack::Result<()> {
    println!(" k  cycles  cycle_len  max_preperiod  witness");
    for k in 1..=20 {
        let r = tetration_check(k)?;
        println!(
            "{k:>2}  {:>6}  {:>9}  {:>13}  {:>7}",
            r.cycle_count, r.measured_cycle_length, r.max_preperiod, r.max_preperiod_witness
        );
    }
    Ok(())
}
