use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::ackermann::{
    build_level_table, reference_eval, Hierarchy, REFERENCE_MAX_ARG, REFERENCE_MAX_LEVEL, REFERENCE_MAX_MODULUS,
};
use crate::analysis::{avalanche, stats_report, DomainSpec, Neighbor};
use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::experiment::{reproduce, rows_to_csv, ExperimentConfig};
use crate::fmt_sig6;
use crate::funcgraph::{orbit_summary, tetration_check, FunctionalGraph, SelfMap};
use crate::hashlab::{HashFunction, HashSpec};
use crate::modulus::Modulus;
use crate::SCHEMA_VERSION;

use super::args::{Cli, Command, Format, Method};
use super::Failure;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    Failure::Lib(Error::InvalidArgument(format!("{cmd} does not support --format {f:?}").to_lowercase()))
}

/// `level:M`, `tetration`, `shifted3` or `affine:A,B`.
pub(crate) fn parse_map(modulus: Modulus, s: &str) -> Result<SelfMap> {
    let bad = || Error::InvalidArgument(format!("bad map '{s}' (level:M | tetration | shifted3 | affine:A,B)"));
    match s {
        "tetration" => Ok(SelfMap::tetration(modulus)),
        "shifted3" => Ok(SelfMap::shifted3(modulus)),
        _ => {
            if let Some(m) = s.strip_prefix("level:") {
                let m = m.parse().map_err(|_| bad())?;
                Ok(SelfMap::level(Arc::new(build_level_table(modulus, m)?)))
            } else if let Some(ab) = s.strip_prefix("affine:") {
                let (a, b) = ab.split_once(',').ok_or_else(bad)?;
                Ok(SelfMap::affine(modulus, a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
            } else {
                Err(bad())
            }
        }
    }
}

fn parse_domain(s: &str, seed: u64) -> Result<DomainSpec> {
    let d: DomainSpec = s.parse()?;
    Ok(if s.contains('@') { d } else { d.with_seed(seed) })
}

fn parse_scan(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::InvalidArgument(format!("bad scan range '{s}' (A..B)"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn in_oracle_domain(modulus: Modulus, m: u32, n: u64) -> bool {
    modulus.value() <= REFERENCE_MAX_MODULUS && m <= REFERENCE_MAX_LEVEL && n <= REFERENCE_MAX_ARG
}

/// Produces the command output and, for `reproduce`, the default file name.
fn render(cli: &Cli) -> std::result::Result<(String, Option<&'static str>), Failure> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Eval { modulus, level, arg, method } => {
            let modulus = Modulus::new(*modulus)?;
            let fast = || Hierarchy::new(modulus).eval(*level, *arg);
            let (value, other) = match method {
                Method::Fast => {
                    let v = fast()?;
                    let r = if in_oracle_domain(modulus, *level, *arg) {
                        Some(reference_eval(modulus, *level, *arg)?)
                    } else {
                        None
                    };
                    (v, r)
                }
                Method::Reference => (reference_eval(modulus, *level, *arg)?, Some(fast()?)),
            };
            if let Some(o) = other {
                if o != value {
                    let (f, r) = if *method == Method::Fast { (value, o) } else { (o, value) };
                    return Err(Failure::Mismatch(format!(
                        "mismatch: A_{modulus}({level}, {arg}) fast = {f}, reference = {r}"
                    )));
                }
            }
            match format.unwrap_or(Format::Text) {
                Format::Text => format!("{value}\n"),
                Format::Json => to_json(&with_schema(json!({
                    "modulus": modulus.value(),
                    "level": level,
                    "arg": arg,
                    "method": format!("{method:?}").to_lowercase(),
                    "value": value,
                }))),
                f => return Err(unsupported("eval", f)),
            }
        }
        Command::Table { modulus, level } => {
            let table = build_level_table(Modulus::new(*modulus)?, *level)?;
            match format.unwrap_or(Format::Csv) {
                Format::Csv | Format::Text => table.to_csv(),
                Format::Json => to_json(&with_schema(json!({
                    "modulus": modulus,
                    "level": level,
                    "values": table.values(),
                }))),
            }
        }
        Command::Orbit { modulus, map, start, cap } => {
            let modulus = Modulus::new(*modulus)?;
            let map = parse_map(modulus, map)?;
            let o = orbit_summary(&map, *start, *cap)?;
            match format.unwrap_or(Format::Text) {
                Format::Text => format!("{}\npreperiod {} period {}\n", o.listing(), o.preperiod, o.period),
                Format::Json => {
                    let mut v = serde_json::to_value(&o).expect("orbit serializes");
                    v["modulus"] = json!(modulus.value());
                    v["map_descriptor"] = json!(map.descriptor());
                    to_json(&with_schema(v))
                }
                f => return Err(unsupported("orbit", f)),
            }
        }
        Command::Graph { modulus, map } => {
            let map = parse_map(Modulus::new(*modulus)?, map)?;
            let census = FunctionalGraph::build(&map)?.census();
            match format.unwrap_or(Format::Json) {
                Format::Json => to_json(&census),
                Format::Csv | Format::Text => {
                    let mut s = String::from("length,representative,component_size\n");
                    for c in &census.cycles {
                        let _ = writeln!(s, "{},{},{}", c.length, c.representative, c.component_size);
                    }
                    s
                }
            }
        }
        Command::Stats { modulus, level, map, domain } => {
            let modulus = Modulus::new(*modulus)?;
            let domain = parse_domain(domain, cli.seed)?;
            let report = match (level, map) {
                (Some(m), _) => {
                    let h = Hierarchy::new(modulus);
                    stats_report(&h.level_map(*m)?, &domain)?
                }
                (None, Some(spec)) => stats_report(&parse_map(modulus, spec)?, &domain)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            match format.unwrap_or(Format::Json) {
                Format::Json => to_json(&report),
                Format::Csv => report.histogram_csv(),
                Format::Text => format!(
                    "{} over Z_{}: S={} dev_max_abs={} dev_max_norm={} chi_square={}\n",
                    report.level_or_map,
                    report.modulus,
                    report.sample_count,
                    fmt_sig6(report.dev_max_abs),
                    fmt_sig6(report.dev_max_norm),
                    fmt_sig6(report.chi_square)
                ),
            }
        }
        Command::Avalanche { modulus, level, map, neighbor, domain } => {
            let modulus = Modulus::new(*modulus)?;
            let neighbor: Neighbor = neighbor.parse()?;
            let domain = parse_domain(domain, cli.seed)?;
            let h;
            let eval: Box<dyn Evaluator + '_> = match (level, map) {
                (Some(m), _) => {
                    h = Hierarchy::new(modulus);
                    Box::new(h.level_map(*m)?)
                }
                (None, Some(spec)) => Box::new(parse_map(modulus, spec)?),
                (None, None) => unreachable!("clap requires a source"),
            };
            let a = avalanche(&eval, neighbor, &domain)?;
            match format.unwrap_or(Format::Text) {
                Format::Text => format!("{}\n", fmt_sig6(a)),
                Format::Json => to_json(&with_schema(json!({
                    "modulus": modulus.value(),
                    "level_or_map": eval.descriptor(),
                    "neighbor": neighbor.to_string(),
                    "domain": domain,
                    "coefficient": a,
                }))),
                Format::Csv => format!("neighbor,coefficient\n{},{}\n", neighbor, fmt_sig6(a)),
            }
        }
        Command::Hash { spec, input, scan } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", spec.display())))?;
            let h = HashFunction::new(HashSpec::from_json(&text)?)?;
            let (a, b) = match (input, scan) {
                (Some(x), _) => (*x, *x),
                (None, Some(r)) => parse_scan(r)?,
                (None, None) => unreachable!("clap requires an input"),
            };
            let results: Vec<(u64, u64)> = (a..=b).map(|x| h.hash(x).map(|v| (x, v))).collect::<Result<_>>()?;
            let single = input.is_some();
            match format.unwrap_or(if single { Format::Text } else { Format::Csv }) {
                Format::Text if single => format!("{}\n", results[0].1),
                Format::Text | Format::Csv => {
                    let mut s = String::from("x,hash\n");
                    for (x, v) in &results {
                        let _ = writeln!(s, "{x},{v}");
                    }
                    s
                }
                Format::Json => to_json(&with_schema(json!({
                    "modulus": h.spec().modulus.value(),
                    "kind": h.spec().kind,
                    "results": results.iter().map(|(x, v)| json!({"x": x, "hash": v})).collect::<Vec<_>>(),
                }))),
            }
        }
        Command::TetrationCheck { k } => {
            let r = tetration_check(*k)?;
            match format.unwrap_or(Format::Json) {
                Format::Json => to_json(&r),
                Format::Text => format!(
                    "k={} cycle={:?} length={} (claim {}: {}) max_preperiod={} (claim <= {}: {})\n",
                    r.k,
                    r.measured_cycle,
                    r.measured_cycle_length,
                    r.claimed_cycle_length,
                    if r.cycle_length_agrees { "agrees" } else { "disagrees" },
                    r.max_preperiod,
                    r.claimed_max_entry,
                    if r.max_entry_agrees { "agrees" } else { "disagrees" },
                ),
                f => return Err(unsupported("tetration-check", f)),
            }
        }
        Command::Reproduce { experiment, levels, k } => {
            let mut config = ExperimentConfig::table1(cli.seed);
            config.id = experiment.clone();
            if let Some(l) = levels {
                config.levels = l.clone();
            }
            if let Some(k) = k {
                config.exponents = k.clone();
            }
            let rows = reproduce(&config)?;
            let text = match format.unwrap_or(Format::Csv) {
                Format::Csv | Format::Text => rows_to_csv(&config, &rows),
                Format::Json => to_json(&with_schema(json!({
                    "experiment": config.id,
                    "seed": config.seed,
                    "rows": rows,
                }))),
            };
            let name = if matches!(format, Some(Format::Json)) { "table1.json" } else { "table1.csv" };
            return Ok((text, Some(name)));
        }
    };
    Ok((out, None))
}

pub(crate) fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> std::result::Result<(), Failure> {
    let (text, file_name) = render(cli)?;
    match &cli.out {
        None => stdout.write_all(text.as_bytes()).map_err(Error::from)?,
        Some(path) => {
            let target = match file_name {
                Some(name) => {
                    std::fs::create_dir_all(path).map_err(Error::from)?;
                    path.join(name)
                }
                None => path.clone(),
            };
            write_file(&target, &text)?;
            let _ = writeln!(stderr, "wrote {}", target.display());
        }
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_specs() {
        let m = Modulus::new(16).unwrap();
        assert_eq!(parse_map(m, "tetration").unwrap().descriptor(), "tetration");
        assert_eq!(parse_map(m, "level:3").unwrap().apply(0), 5);
        assert_eq!(parse_map(m, "affine:3,1").unwrap().apply(2), 7);
        assert!(parse_map(m, "level:x").is_err());
        assert!(parse_map(m, "cube").is_err());
        assert!(matches!(parse_map(m, "level:9"), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn scan_ranges() {
        assert_eq!(parse_scan("0..15").unwrap(), (0, 15));
        assert!(parse_scan("5..1").is_err());
        assert!(parse_scan("5").is_err());
    }
}
