use std::collections::BTreeSet;

use proptest::prelude::*;
use vogan::{CheckOptions, Family, Lambda, Method, VoganDiagram};
use voganscan::record::Format;
use voganscan::{run_scan, ScanConfig, ScanRecord};

fn config(family: Family, min_rank: usize, max_rank: usize) -> ScanConfig {
    ScanConfig {
        families: vec![family],
        min_rank,
        max_rank,
        methods: vec![Method::Oracle, Method::Published],
        only_special: false,
        lambda: None,
        dedup: false,
        jobs: 2,
        format: Format::Jsonl,
        check: CheckOptions::default(),
    }
}

fn scan(config: &ScanConfig) -> Vec<ScanRecord> {
    let (_, bytes) = run_scan(config, Vec::new(), |_: &str| {}).unwrap();
    String::from_utf8(bytes).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

fn lambda() -> impl Strategy<Value = Option<Lambda>> {
    prop::option::of(prop::sample::select(vec![Lambda::Minus, Lambda::Zero, Lambda::Plus]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn filters_match_post_filtering(family in family(), span in 0usize..3, only_special: bool, lambda in lambda()) {
        let lo = family.min_rank();
        let full = scan(&config(family, lo, lo + span));
        let filtered = scan(&ScanConfig { only_special, lambda, ..config(family, lo, lo + span) });
        let expected: Vec<ScanRecord> = full
            .into_iter()
            .filter(|r| (!only_special || r.special) && lambda.is_none_or(|l| r.lambda == Some(l)))
            .collect();
        prop_assert_eq!(filtered, expected);
    }

    #[test]
    fn dedup_reexpands_to_full_scan(family in prop::sample::select(vec![Family::A, Family::D]), span in 0usize..3) {
        let lo = family.min_rank() + 1;
        let key = |r: &ScanRecord| (r.rank, r.painted.clone(), r.method);
        let full: BTreeSet<_> = scan(&config(family, lo, lo + span)).iter().map(key).collect();
        let mut expanded = BTreeSet::new();
        for r in scan(&ScanConfig { dedup: true, ..config(family, lo, lo + span) }) {
            let image = VoganDiagram::new(family, r.rank, r.painted.clone()).unwrap().automorphism_image().unwrap();
            expanded.insert((r.rank, image.painted().to_vec(), r.method));
            expanded.insert(key(&r));
        }
        prop_assert_eq!(expanded, full);
    }

    #[test]
    fn output_is_independent_of_jobs(family in family(), jobs in 1usize..9) {
        let lo = family.min_rank();
        let base = config(family, lo, lo + 2);
        let (_, one) = run_scan(&ScanConfig { jobs: 1, ..base.clone() }, Vec::new(), |_: &str| {}).unwrap();
        let (_, many) = run_scan(&ScanConfig { jobs, ..base }, Vec::new(), |_: &str| {}).unwrap();
        prop_assert_eq!(one, many);
    }
}
