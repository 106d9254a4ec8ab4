use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::modulus::Modulus;

pub const REFERENCE_MAX_MODULUS: u64 = 1 << 12;
pub const REFERENCE_MAX_LEVEL: u32 = 6;
pub const REFERENCE_MAX_ARG: u64 = 1 << 16;

enum Task {
    Eval { m: u32, n: u64 },
    /// Pops the inner value `v` and schedules `A(m, v)`.
    Outer { m: u32 },
    /// Records the value on top of the value stack as `A(m, n)`.
    Remember { m: u32, n: u64 },
}

/// Literal evaluator of the three-case recursion.
///
/// Runs on an explicit work stack instead of the call stack and memoizes
/// `(m, x)` for `x < N`. The memo persists across calls on the same oracle.
pub struct ReferenceOracle {
    modulus: Modulus,
    memo: HashMap<(u32, u64), u64>,
}

impl ReferenceOracle {
    pub fn new(modulus: Modulus) -> Result<Self> {
        if modulus.value() > REFERENCE_MAX_MODULUS {
            return Err(Error::ReferenceLimit(format!(
                "N = {} > {REFERENCE_MAX_MODULUS}",
                modulus.value()
            )));
        }
        Ok(Self { modulus, memo: HashMap::new() })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn eval(&mut self, m: u32, n: u64) -> Result<u64> {
        if m > REFERENCE_MAX_LEVEL {
            return Err(Error::ReferenceLimit(format!("m = {m} > {REFERENCE_MAX_LEVEL}")));
        }
        if n > REFERENCE_MAX_ARG {
            return Err(Error::ReferenceLimit(format!("n = {n} > {REFERENCE_MAX_ARG}")));
        }
        let big_n = self.modulus.value();
        let mut tasks = vec![Task::Eval { m, n }];
        let mut values: Vec<u64> = Vec::new();

        while let Some(task) = tasks.pop() {
            match task {
                Task::Eval { m, n } => {
                    if let Some(&v) = self.memo.get(&(m, n)) {
                        values.push(v);
                    } else if m == 0 {
                        values.push((n + 1) % big_n);
                    } else {
                        if n < big_n {
                            tasks.push(Task::Remember { m, n });
                        }
                        if n == 0 {
                            tasks.push(Task::Eval { m: m - 1, n: 1 });
                        } else {
                            tasks.push(Task::Outer { m: m - 1 });
                            tasks.push(Task::Eval { m, n: n - 1 });
                        }
                    }
                }
                Task::Outer { m } => {
                    let v = values.pop().expect("inner value");
                    tasks.push(Task::Eval { m, n: v });
                }
                Task::Remember { m, n } => {
                    let v = *values.last().expect("computed value");
                    self.memo.insert((m, n), v);
                }
            }
        }
        debug_assert_eq!(values.len(), 1);
        Ok(values[0])
    }
}

/// `A_N(m, n)` straight from the recursion. Limited to `N <= 2^12`,
/// `m <= 6`, `n <= 2^16`.
pub fn reference_eval(modulus: Modulus, m: u32, n: u64) -> Result<u64> {
    ReferenceOracle::new(modulus)?.eval(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(reference_eval(md(16), 0, 7).unwrap(), 8);
        assert_eq!(reference_eval(md(16), 3, 0).unwrap(), 5);
        assert_eq!(reference_eval(md(16), 3, 4).unwrap(), 13);
        assert_eq!(reference_eval(md(16), 4, 3).unwrap(), 13);
    }

    #[test]
    fn small_classical_values_survive_large_modulus() {
        // Classical A(2,3) = 9, A(3,3) = 61.
        assert_eq!(reference_eval(md(4096), 2, 3).unwrap(), 9);
        assert_eq!(reference_eval(md(4096), 3, 3).unwrap(), 61);
    }

    #[test]
    fn arguments_beyond_the_ring() {
        // A(1, n) = n + 2 holds for any n before reduction.
        assert_eq!(reference_eval(md(16), 1, 100).unwrap(), 102 % 16);
        assert_eq!(reference_eval(md(16), 0, 15).unwrap(), 0);
    }

    #[test]
    fn limits() {
        assert!(matches!(reference_eval(md(8192), 1, 0), Err(Error::ReferenceLimit(_))));
        assert!(matches!(reference_eval(md(16), 7, 0), Err(Error::ReferenceLimit(_))));
        assert!(matches!(reference_eval(md(16), 1, (1 << 16) + 1), Err(Error::ReferenceLimit(_))));
        assert!(reference_eval(md(16), 6, 1 << 16).is_ok());
    }

    #[test]
    fn memo_reuse_is_consistent() {
        let mut o = ReferenceOracle::new(md(64)).unwrap();
        let first: Vec<u64> = (0..64).map(|n| o.eval(5, n).unwrap()).collect();
        let fresh: Vec<u64> = (0..64).map(|n| reference_eval(md(64), 5, n).unwrap()).collect();
        assert_eq!(first, fresh);
    }
}
