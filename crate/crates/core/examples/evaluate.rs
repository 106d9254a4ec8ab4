//! Evaluate A_N(m, n) three ways and check they agree.
use modack::ackermann::{closed_form_eval, Hierarchy, ReferenceOracle};
use modack::Modulus;

fn main() -> modack::Result<()> {
    let n = Modulus::new(1000)?;
    let h = Hierarchy::new(n);
    let mut oracle = ReferenceOracle::new(n)?;

    println!("m  n      closed  fast  reference");
    for (m, arg) in [(0, 7), (1, 998), (2, 500), (3, 64), (4, 3), (5, 2)] {
        let closed = closed_form_eval(n, m, arg).map(|v| v.to_string()).unwrap_or_else(|_| "-".into());
        println!("{m}  {arg:<6} {closed:>6}  {:>4}  {:>9}", h.eval(m, arg)?, oracle.eval(m, arg)?);
    }

    // Arguments far beyond N only cost a graph walk.
    let big = Hierarchy::new(Modulus::pow2(20)?);
    println!("A_(2^20)(5, 10^18) = {}", big.eval(5, 1_000_000_000_000_000_000)?);
    Ok(())
}
