use serde::{Deserialize, Serialize};

use crate::ackermann::DEFAULT_MAX_LEVEL;
use crate::error::{Error, Result};
use crate::modulus::Modulus;

use super::hmap::HMap;

pub const DEFAULT_LEVEL_CAP: u32 = 6;

fn default_level_cap() -> u32 {
    DEFAULT_LEVEL_CAP
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HashKind {
    Single,
    Dual,
    Iterated,
}

/// Declarative hash construction; this is also the JSON file format.
///
/// ```json
/// {"modulus": 16, "kind": "single", "h1": {"c": 4}, "h2": {"d": 2}, "level_cap": 6}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HashSpec {
    pub modulus: Modulus,
    pub kind: HashKind,
    pub h1: HMap,
    pub h2: HMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h3: Option<HMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h4: Option<HMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(default = "default_level_cap")]
    pub level_cap: u32,
}

impl HashSpec {
    pub fn single(modulus: Modulus, h1: HMap, h2: HMap) -> Self {
        Self { modulus, kind: HashKind::Single, h1, h2, h3: None, h4: None, t: None, level_cap: DEFAULT_LEVEL_CAP }
    }

    pub fn dual(modulus: Modulus, h1: HMap, h2: HMap, h3: HMap, h4: HMap) -> Self {
        Self { kind: HashKind::Dual, h3: Some(h3), h4: Some(h4), ..Self::single(modulus, h1, h2) }
    }

    pub fn iterated(modulus: Modulus, h1: HMap, h2: HMap, t: u64) -> Self {
        Self { kind: HashKind::Iterated, t: Some(t), ..Self::single(modulus, h1, h2) }
    }

    pub fn with_level_cap(mut self, cap: u32) -> Self {
        self.level_cap = cap;
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: HashSpec = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("hash spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("hash spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("hash spec: {msg}")));
        if self.level_cap > DEFAULT_MAX_LEVEL {
            return bad(&format!("level_cap {} exceeds {DEFAULT_MAX_LEVEL}", self.level_cap));
        }
        self.h1.validate()?;
        self.h2.validate()?;
        let dual = self.kind == HashKind::Dual;
        if dual != (self.h3.is_some() && self.h4.is_some()) || (!dual && (self.h3.is_some() || self.h4.is_some())) {
            return bad("h3 and h4 are required for kind=dual and not allowed otherwise");
        }
        if let (Some(h3), Some(h4)) = (self.h3, self.h4) {
            h3.validate()?;
            h4.validate()?;
        }
        if (self.kind == HashKind::Iterated) != self.t.is_some() {
            return bad("t is required for kind=iterated and not allowed otherwise");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single() {
        let s = HashSpec::from_json(r#"{"modulus":16,"kind":"single","h1":{"c":4},"h2":{"d":2}}"#).unwrap();
        assert_eq!(s, HashSpec::single(Modulus::new(16).unwrap(), HMap::modulo(4), HMap::div(2)));
        assert_eq!(s.level_cap, DEFAULT_LEVEL_CAP);
    }

    #[test]
    fn round_trip() {
        let m = Modulus::new(16).unwrap();
        let s = HashSpec::dual(m, HMap::modulo(4), HMap::div(2), HMap::offset_modulo(1, 3), HMap::div(3));
        assert_eq!(HashSpec::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            r#"{"modulus":16,"kind":"single","h1":{},"h2":{},"extra":1}"#,
            r#"{"modulus":1,"kind":"single","h1":{},"h2":{}}"#,
            r#"{"modulus":16,"kind":"dual","h1":{},"h2":{}}"#,
            r#"{"modulus":16,"kind":"single","h1":{},"h2":{},"h3":{}}"#,
            r#"{"modulus":16,"kind":"iterated","h1":{},"h2":{}}"#,
            r#"{"modulus":16,"kind":"single","h1":{},"h2":{},"t":3}"#,
            r#"{"modulus":16,"kind":"single","h1":{},"h2":{},"level_cap":9}"#,
            r#"{"modulus":16,"kind":"single","h1":{"d":0},"h2":{}}"#,
            r#"{"modulus":16,"kind":"triple","h1":{},"h2":{}}"#,
        ] {
            assert!(HashSpec::from_json(bad).is_err(), "{bad}");
        }
    }
}
