use std::sync::Arc;

use modack::ackermann::{build_level_table, Hierarchy, LevelTable};
use modack::analysis::{
    affine_holds, affine_relation, avalanche, correlate_levels, output_distribution, DomainSpec, Neighbor,
};
use modack::funcgraph::{orbit_summary, FunctionalGraph, SelfMap};
use modack::hashlab::{HMap, HashFunction, HashSpec};
use modack::{FnMap, Modulus};
use proptest::prelude::*;

fn md(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

fn naive(succ: &[u32], mut x: u64, t: u64) -> u64 {
    for _ in 0..t {
        x = succ[x as usize] as u64;
    }
    x
}

fn random_map() -> impl Strategy<Value = (u64, Vec<u32>)> {
    (2u64..=300).prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n as u32, n as usize)))
}

#[test]
fn level_table_graphs_iterate_like_naive() {
    for n in [2u64, 16, 255, 256, 1000, 4096] {
        let h = Hierarchy::new(md(n));
        for m in 0..=6 {
            let g = h.graph(m).unwrap();
            let succ = h.table(m).unwrap().values().to_vec();
            for x in (0..n).step_by((n as usize / 64).max(1)) {
                for t in [0, 1, 2, 7, n - 1, n, 2 * n + 3] {
                    assert_eq!(g.iterate(x, t).unwrap(), naive(&succ, x, t), "N={n} m={m} x={x} t={t}");
                }
            }
            let total: u64 = g.cycles().iter().map(|c| c.component_size).sum();
            assert_eq!(total, n);
            for x in 0..n {
                if g.tail_length(x) > 0 {
                    assert_eq!(g.tail_length(succ[x as usize] as u64), g.tail_length(x) - 1);
                }
            }
        }
    }
}

#[test]
fn tetration_orbits_all_reach_zero_cycle() {
    for k in 1..=16 {
        let map = SelfMap::tetration(Modulus::pow2(k).unwrap());
        let g = FunctionalGraph::build(&map).unwrap();
        let zero = g.cycle_id(0);
        assert!((0..1u64 << k).all(|x| g.cycle_id(x) == zero), "k={k}");
    }
}

#[test]
fn affine_detector_matches_exhaustive_search_on_mixed_tables() {
    // Affine images of level tables plus a few scrambled ones.
    for n in [6u64, 12, 16, 30, 64] {
        let base = build_level_table(md(n), 2).unwrap();
        for (a, b) in [(0u64, 1u64), (3, 5), (4, 0), (n - 1, 2)] {
            let img: Vec<u32> = base.values().iter().map(|&v| ((a * v as u64 + b) % n) as u32).collect();
            let img = LevelTable::from_values(md(n), 99, img).unwrap();
            let rel = affine_relation(&base, &img).unwrap().unwrap();
            assert!(affine_holds(&base, &img, rel.a, rel.b));
        }
        let mut scrambled: Vec<u32> = base.values().to_vec();
        scrambled.swap(0, 1);
        scrambled[2] = (scrambled[2] + 1) % n as u32;
        let s = LevelTable::from_values(md(n), 99, scrambled).unwrap();
        let exhaustive = (0..n).any(|a| (0..n).any(|b| affine_holds(&base, &s, a, b)));
        assert_eq!(affine_relation(&base, &s).unwrap().is_some(), exhaustive);
    }
}

#[test]
fn level_three_and_four_share_no_information_mod_16() {
    let r = correlate_levels(&build_level_table(md(16), 3).unwrap(), &build_level_table(md(16), 4).unwrap()).unwrap();
    assert_eq!(r.nmi, 0.0);
    assert_eq!(r.pearson, None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_maps_iterate_like_naive((n, succ) in random_map(), queries in proptest::collection::vec((any::<u64>(), 0u64..2000), 32)) {
        let g = FunctionalGraph::build(&SelfMap::from_table(md(n), succ.clone()).unwrap()).unwrap();
        for (x, t) in queries {
            let x = x % n;
            prop_assert_eq!(g.iterate(x, t).unwrap(), naive(&succ, x, t));
        }
    }

    #[test]
    fn orbit_summary_agrees_with_graph((n, succ) in random_map(), start: u64) {
        let map = SelfMap::from_table(md(n), succ).unwrap();
        let g = FunctionalGraph::build(&map).unwrap();
        let x = start % n;
        let o = orbit_summary(&map, x, 8).unwrap();
        prop_assert_eq!(o.preperiod, g.tail_length(x));
        prop_assert_eq!(o.period, g.cycle_of(x).length);
        prop_assert!(g.cycle_members(g.cycle_id(x)).contains(&(o.cycle_members[0] as u32)));
    }

    #[test]
    fn histogram_counts_sum_to_domain_size((n, succ) in random_map(), end in 0u64..1000) {
        let map = SelfMap::from_table(md(n), succ).unwrap();
        let domain = DomainSpec::range(0, end).unwrap();
        let r = output_distribution(&map, &domain).unwrap();
        prop_assert_eq!(r.histogram.iter().map(|h| h.count).sum::<u64>(), end + 1);
        let grown = output_distribution(&map, &DomainSpec::range(0, end + 1).unwrap()).unwrap();
        let changed: Vec<_> = grown.histogram.iter().filter(|h| h.count != r.count(h.value)).collect();
        prop_assert_eq!(changed.len(), 1);
        prop_assert_eq!(changed[0].count, r.count(changed[0].value) + 1);
    }

    #[test]
    fn permutations_are_uniform(n in 2u64..500, a in 1u64..500, b: u64) {
        prop_assume!(modack::arith::gcd(a % n, n) == 1);
        let map = SelfMap::affine(md(n), a, b);
        let r = output_distribution(&map, &DomainSpec::Full).unwrap();
        prop_assert_eq!(r.dev_max_norm, 0.0);
    }

    #[test]
    fn avalanche_is_a_mean_over_the_domain(k in 2u32..=10, split_frac in 0.0f64..1.0, m in 0u32..=5) {
        let n = 1u64 << k;
        let h = Hierarchy::new(md(n));
        let map = h.level_map(m).unwrap();
        let split = ((n - 1) as f64 * split_frac) as u64;
        let whole = avalanche(&map, Neighbor::Xor1, &DomainSpec::Full).unwrap();
        let lo = avalanche(&map, Neighbor::Xor1, &DomainSpec::range(0, split).unwrap()).unwrap();
        let hi = if split + 1 < n { avalanche(&map, Neighbor::Xor1, &DomainSpec::range(split + 1, n - 1).unwrap()).unwrap() } else { 0.0 };
        let combined = (lo * (split + 1) as f64 + hi * (n - split - 1) as f64) / n as f64;
        prop_assert!((whole - combined).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&whole));
    }

    #[test]
    fn sample_statistics_are_reproducible(seed: u64, count in 1u64..2000) {
        let h = Hierarchy::new(md(1 << 12));
        let map = h.level_map(4).unwrap();
        let d = DomainSpec::sample(count, seed).unwrap();
        prop_assert_eq!(output_distribution(&map, &d).unwrap(), output_distribution(&map, &d).unwrap());
    }

    #[test]
    fn iterated_hash_is_a_semigroup(s in 0u64..=16, t in 0u64..=16, x in 0u64..16) {
        let h = HashFunction::new(HashSpec::single(md(16), HMap::modulo(4), HMap::div(2))).unwrap();
        prop_assert_eq!(h.compose(h.compose(x, t).unwrap(), s).unwrap(), h.compose(x, s + t).unwrap());
        let it = HashFunction::new(HashSpec::iterated(md(16), HMap::modulo(4), HMap::div(2), s)).unwrap();
        prop_assert_eq!(it.hash(x).unwrap(), h.compose(x, s).unwrap());
    }

    #[test]
    fn constant_map_deviation_is_n_minus_one(n in 2u64..2000, c: u64) {
        let map = FnMap::new(md(n), "const", move |_| c);
        prop_assert_eq!(output_distribution(&map, &DomainSpec::Full).unwrap().dev_max_norm, (n - 1) as f64);
    }
}

#[test]
fn level_maps_from_hierarchy_and_tables_agree() {
    let h = Hierarchy::new(md(500));
    for m in 0..=6 {
        let map = SelfMap::level(Arc::clone(h.table(m).unwrap()));
        for x in 0..500 {
            assert_eq!(map.apply(x), h.eval(m, x).unwrap());
        }
    }
}
