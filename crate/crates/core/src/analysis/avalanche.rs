use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evaluator::Evaluator;

use super::domain::DomainSpec;

/// Which input is paired with `n` when measuring output bit flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighbor {
    /// `n ⊕ 1`.
    Xor1,
    /// The integer successor `n + 1`. Level maps are evaluated at `n + 1`
    /// directly, so `n = N − 1` pairs with `A_N(m, N)` rather than wrapping.
    Succ,
    /// `n ⊕ 2^j`.
    Bit(u32),
}

impl Neighbor {
    fn of(self, n: u64) -> u64 {
        match self {
            Neighbor::Xor1 => n ^ 1,
            Neighbor::Succ => n.wrapping_add(1),
            Neighbor::Bit(j) => n ^ (1u64 << j),
        }
    }
}

impl fmt::Display for Neighbor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neighbor::Xor1 => write!(f, "xor1"),
            Neighbor::Succ => write!(f, "succ"),
            Neighbor::Bit(j) => write!(f, "bit:{j}"),
        }
    }
}

impl FromStr for Neighbor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xor1" => Ok(Neighbor::Xor1),
            "succ" => Ok(Neighbor::Succ),
            _ => {
                let j: u32 = s
                    .strip_prefix("bit:")
                    .and_then(|j| j.parse().ok())
                    .ok_or_else(|| Error::InvalidArgument(format!("bad neighbor '{s}' (xor1 | succ | bit:J)")))?;
                if j >= 64 {
                    return Err(Error::InvalidArgument(format!("bit index {j} >= 64")));
                }
                Ok(Neighbor::Bit(j))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AvalancheSummary {
    pub xor1: f64,
    pub succ: f64,
    /// `per_bit[j]` flips input bit `j`, for `j < k`.
    pub per_bit: Vec<f64>,
}

/// `E[ wt(A(n) ⊕ A(n')) / k ]` over the domain, with `n'` the chosen
/// neighbor of `n` and `N = 2^k`. Exact: integer popcount sum over the
/// domain, divided once at the end.
pub fn avalanche(eval: &impl Evaluator, neighbor: Neighbor, domain: &DomainSpec) -> Result<f64> {
    let modulus = eval.modulus();
    let k = modulus.require_pow2()?;
    if let Neighbor::Bit(j) = neighbor {
        if j >= 64 {
            return Err(Error::InvalidArgument(format!("bit index {j} >= 64")));
        }
    }
    let mut flipped = 0u64;
    let mut count = 0u64;
    for n in domain.iter(modulus)? {
        let a = eval.eval(n)?;
        let b = eval.eval(neighbor.of(n))?;
        flipped += (a ^ b).count_ones() as u64;
        count += 1;
    }
    Ok(flipped as f64 / (k as f64 * count as f64))
}

pub fn avalanche_summary(eval: &impl Evaluator, domain: &DomainSpec) -> Result<AvalancheSummary> {
    let k = eval.modulus().require_pow2()?;
    Ok(AvalancheSummary {
        xor1: avalanche(eval, Neighbor::Xor1, domain)?,
        succ: avalanche(eval, Neighbor::Succ, domain)?,
        per_bit: (0..k).map(|j| avalanche(eval, Neighbor::Bit(j), domain)).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ackermann::Hierarchy;
    use crate::evaluator::FnMap;
    use crate::modulus::Modulus;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn constant_map_has_no_avalanche() {
        for k in [1u32, 4, 12] {
            let c = FnMap::new(Modulus::pow2(k).unwrap(), "const", |_| 3);
            assert_eq!(avalanche(&c, Neighbor::Xor1, &DomainSpec::Full).unwrap(), 0.0);
        }
    }

    #[test]
    fn level_three_k8_xor1() {
        // Only (0,1), (2,3), (4,5) differ, by one bit each, counted from both sides.
        let h = Hierarchy::new(md(256));
        let a = avalanche(&h.level_map(3).unwrap(), Neighbor::Xor1, &DomainSpec::Full).unwrap();
        assert_eq!(a, 6.0 / (8.0 * 256.0));
    }

    #[test]
    fn level_three_k10_succ() {
        // Seven consecutive pairs among 5, 13, ..., 509, 1021 differ by one bit.
        let h = Hierarchy::new(md(1024));
        let a = avalanche(&h.level_map(3).unwrap(), Neighbor::Succ, &DomainSpec::Full).unwrap();
        assert_eq!(a, 7.0 / (10.0 * 1024.0));
    }

    #[test]
    fn identity_flips_exactly_one_bit() {
        let id = FnMap::new(md(64), "id", |x| x);
        for j in 0..6 {
            assert_eq!(avalanche(&id, Neighbor::Bit(j), &DomainSpec::Full).unwrap(), 1.0 / 6.0);
        }
    }

    #[test]
    fn requires_power_of_two() {
        let c = FnMap::new(md(12), "c", |x| x);
        assert_eq!(avalanche(&c, Neighbor::Xor1, &DomainSpec::Full), Err(Error::NotPowerOfTwo(12)));
    }

    #[test]
    fn parse_neighbors() {
        assert_eq!("xor1".parse::<Neighbor>().unwrap(), Neighbor::Xor1);
        assert_eq!("succ".parse::<Neighbor>().unwrap(), Neighbor::Succ);
        assert_eq!("bit:3".parse::<Neighbor>().unwrap(), Neighbor::Bit(3));
        assert!("bit:64".parse::<Neighbor>().is_err());
        assert!("left".parse::<Neighbor>().is_err());
    }
}
