use std::collections::HashMap;

use serde::Serialize;

use crate::ackermann::LevelTable;
use crate::error::{Error, Result};

pub const CORRELATE_MAX_MODULUS: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationReport {
    /// `None` when either table has zero variance.
    pub pearson: Option<f64>,
    /// `I(A;B) / sqrt(H(A)·H(B))` from the joint histogram; 0 when either
    /// marginal entropy vanishes.
    pub nmi: f64,
}

fn entropy(counts: impl Iterator<Item = u64>, total: f64) -> f64 {
    counts
        .filter(|&c| c > 0)
        .map(|c| {
            let p = c as f64 / total;
            -p * p.ln()
        })
        .sum()
}

pub fn correlate_levels(a_table: &LevelTable, b_table: &LevelTable) -> Result<CorrelationReport> {
    let modulus = a_table.modulus();
    if modulus != b_table.modulus() {
        return Err(Error::ModulusMismatch(modulus.value(), b_table.modulus().value()));
    }
    let n = modulus.require_table_size("correlation size", CORRELATE_MAX_MODULUS)?;
    let (xs, ys) = (a_table.values(), b_table.values());
    let total = n as f64;

    let mean_x = xs.iter().map(|&v| v as f64).sum::<f64>() / total;
    let mean_y = ys.iter().map(|&v| v as f64).sum::<f64>() / total;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x as f64 - mean_x, y as f64 - mean_y);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    let pearson = (sxx > 0.0 && syy > 0.0).then(|| (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0));

    let mut marg_x = vec![0u64; n];
    let mut marg_y = vec![0u64; n];
    let mut joint: HashMap<(u32, u32), u64> = HashMap::new();
    for (&x, &y) in xs.iter().zip(ys) {
        marg_x[x as usize] += 1;
        marg_y[y as usize] += 1;
        *joint.entry((x, y)).or_default() += 1;
    }
    let hx = entropy(marg_x.into_iter(), total);
    let hy = entropy(marg_y.into_iter(), total);
    let hxy = entropy(joint.into_values(), total);
    let nmi = if hx > 0.0 && hy > 0.0 { ((hx + hy - hxy) / (hx * hy).sqrt()).clamp(0.0, 1.0) } else { 0.0 };

    Ok(CorrelationReport { pearson, nmi })
}
