use serde::Serialize;

use crate::ackermann::Hierarchy;
use crate::error::Result;
use crate::evaluator::Evaluator;
use crate::modulus::Modulus;

use super::hmap::HMap;
use super::spec::{HashKind, HashSpec};

/// One Ackermann evaluation performed while hashing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub level: u32,
    pub arg: u64,
    /// `h1(x)` exceeded the level cap and was lowered to it.
    pub clamped: bool,
}

/// A validated [`HashSpec`] with its own level hierarchy.
pub struct HashFunction {
    spec: HashSpec,
    hierarchy: Hierarchy,
}

impl HashFunction {
    pub fn new(spec: HashSpec) -> Result<Self> {
        spec.validate()?;
        let hierarchy = Hierarchy::with_max_level(spec.modulus, spec.level_cap);
        Ok(Self { spec, hierarchy })
    }

    pub fn spec(&self) -> &HashSpec {
        &self.spec
    }

    fn branch(&self, depth: &HMap, arg: &HMap, x: u64, trace: &mut Option<&mut Vec<Probe>>) -> Result<u64> {
        let raw = depth.apply(x);
        let level = raw.min(self.spec.level_cap as u64) as u32;
        let arg = arg.apply(x);
        if let Some(t) = trace.as_deref_mut() {
            t.push(Probe { level, arg, clamped: raw > self.spec.level_cap as u64 });
        }
        self.hierarchy.eval(level, arg)
    }

    fn single_step(&self, x: u64, trace: &mut Option<&mut Vec<Probe>>) -> Result<u64> {
        self.branch(&self.spec.h1, &self.spec.h2, x, trace)
    }

    fn eval_inner(&self, x: u64, mut trace: Option<&mut Vec<Probe>>) -> Result<u64> {
        match self.spec.kind {
            HashKind::Single => self.single_step(x, &mut trace),
            HashKind::Dual => {
                let (h3, h4) = (self.spec.h3.expect("validated"), self.spec.h4.expect("validated"));
                let left = self.single_step(x, &mut trace)?;
                let right = self.branch(&h3, &h4, x, &mut trace)?;
                Ok(self.spec.modulus.reduce(left ^ right))
            }
            HashKind::Iterated => self.compose_inner(x, self.spec.t.expect("validated"), &mut trace),
        }
    }

    fn compose_inner(&self, x: u64, t: u64, trace: &mut Option<&mut Vec<Probe>>) -> Result<u64> {
        if t == 0 {
            return Ok(self.spec.modulus.reduce(x));
        }
        let mut y = self.single_step(x, trace)?;
        for _ in 1..t {
            y = self.single_step(y, trace)?;
        }
        Ok(y)
    }

    /// `H(x)` for the spec's kind.
    pub fn hash(&self, x: u64) -> Result<u64> {
        self.eval_inner(x, None)
    }

    /// `H(x)` together with every `(level, arg)` evaluated.
    pub fn hash_traced(&self, x: u64) -> Result<(u64, Vec<Probe>)> {
        let mut probes = Vec::new();
        let v = self.eval_inner(x, Some(&mut probes))?;
        Ok((v, probes))
    }

    /// `t` applications of the single-depth map `A_N(h1(·), h2(·))`,
    /// regardless of the spec's kind; `t = 0` is `x mod N`.
    pub fn compose(&self, x: u64, t: u64) -> Result<u64> {
        self.compose_inner(x, t, &mut None)
    }
}

impl Evaluator for HashFunction {
    fn modulus(&self) -> Modulus {
        self.spec.modulus
    }
    fn eval(&self, n: u64) -> Result<u64> {
        self.hash(n)
    }
    fn descriptor(&self) -> String {
        match self.spec.kind {
            HashKind::Single => "hash:single".into(),
            HashKind::Dual => "hash:dual".into(),
            HashKind::Iterated => format!("hash:iterated:{}", self.spec.t.unwrap_or(0)),
        }
    }
}
