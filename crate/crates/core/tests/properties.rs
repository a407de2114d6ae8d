mod common;

use oneplane::analyze::vertex_connectivity;
use oneplane::generators::gen_random_seed;
use oneplane::maximality::{is_maximal, saturate, SaturationPolicy};
use oneplane::properties::{fuzz, fuzz_instance};
use proptest::prelude::*;

#[test]
fn seeded_batch_has_no_violations() {
    let report = fuzz(200, 5..=20, 2024).unwrap();
    let bad: Vec<String> = report
        .instances
        .iter()
        .flat_map(|i| {
            i.violations
                .iter()
                .map(move |v| format!("seed {} n {}: {v}", i.seed, i.n))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn batch_is_deterministic() {
    let a = fuzz(12, 6..=10, 3).unwrap();
    let b = fuzz(12, 6..=10, 3).unwrap();
    let key = |r: &oneplane::properties::FuzzReport| {
        r.instances
            .iter()
            .map(|i| (i.seed, i.n, i.crossings, i.edges))
            .collect::<Vec<_>>()
    };
    assert_eq!(key(&a), key(&b));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn saturated_drawings_satisfy_the_suite(n in 5usize..=14, seed in any::<u64>()) {
        let (_, violations) = fuzz_instance(n, seed).unwrap();
        prop_assert!(violations.is_empty(), "{:?}", violations);
    }

    #[test]
    fn maximality_agrees_with_brute_force(n in 4usize..=7, seed in any::<u64>(), steps in 0usize..6) {
        // walk partway towards saturation so both answers occur
        let mut g = gen_random_seed(n, seed).unwrap();
        for _ in 0..steps {
            match oneplane::maximality::maximality_witness(&g) {
                Some(c) => g = c.apply(&g).unwrap().0,
                None => break,
            }
        }
        if g.n() + g.crossing_count() <= 10 {
            prop_assert_eq!(is_maximal(&g), !common::brute_force_insertable(&g));
        }
    }

    #[test]
    fn connectivity_agrees_with_brute_force(n in 4usize..=12, seed in any::<u64>()) {
        let g = saturate(&gen_random_seed(n, seed).unwrap(), SaturationPolicy::Seeded(seed)).unwrap();
        let u = g.underlying();
        prop_assert_eq!(vertex_connectivity(&u).unwrap(), common::brute_force_connectivity(&u));
    }

    #[test]
    fn random_drawings_are_deterministic(n in 4usize..=16, seed in any::<u64>()) {
        let a = oneplane::format::serialize(&gen_random_seed(n, seed).unwrap());
        let b = oneplane::format::serialize(&gen_random_seed(n, seed).unwrap());
        prop_assert_eq!(a, b);
    }
}
