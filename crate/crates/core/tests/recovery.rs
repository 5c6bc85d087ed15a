use aperiod::corpus::{gen_periodic, GenSpec};
use aperiod::kangaroo::RotationDistances;
use aperiod::naive::{brute_apr, ed_to_prefix};
use aperiod::recovery::{
    candidate_rotation_classes, canonical_rotation, feasible_lengths, primitive, recover,
    report_json, report_tsv, tau, RecoveryParams,
};
use proptest::prelude::*;

fn same_class(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|j| RotationDistances::rotation(a, j) == b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recovery_matches_brute_force(bits in prop::collection::vec(0u8..3, 1..=36)) {
        let s: Vec<u8> = bits.into_iter().map(|c| b'A' + c).collect();
        let params = RecoveryParams::default();
        let got: Vec<(Vec<u8>, usize)> = recover(&s, params).into_iter().map(|r| (r.word, r.distance)).collect();
        let want: Vec<(Vec<u8>, usize)> = brute_apr(&s, params).into_iter().collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        prop_assert_eq!(got_sorted, want);
    }

    #[test]
    fn reports_are_sound(seed in 0u64..1000, p in 1usize..6, edits in 0usize..4) {
        let spec = GenSpec { p, n: 80, edits, alphabet_size: 3, seed };
        let s = aperiod::corpus::generate(&spec).unwrap();
        let params = RecoveryParams::new(1, 10).unwrap();
        let out = recover(&s, params);
        for r in &out {
            prop_assert!(primitive(&r.word).unwrap());
            prop_assert_eq!(r.word.len(), r.p);
            prop_assert_eq!(r.tau, tau(s.len(), r.p, params));
            prop_assert!((r.distance as u64) < r.tau);
            prop_assert_eq!(ed_to_prefix(&s, &r.word).unwrap(), r.distance);
        }
        // Sorted by (p, word) with no repeats.
        for w in out.windows(2) {
            prop_assert!((w[0].p, &w[0].word) < (w[1].p, &w[1].word));
        }
    }

    #[test]
    fn classes_are_canonical(bits in prop::collection::vec(0u8..2, 8..=60)) {
        let s: Vec<u8> = bits.into_iter().map(|c| b'A' + c).collect();
        let params = RecoveryParams::default();
        for p in feasible_lengths(s.len(), params) {
            for c in candidate_rotation_classes(&s, p, params).unwrap() {
                prop_assert_eq!(canonical_rotation(&c.canonical), 0);
                prop_assert!(primitive(&c.canonical).unwrap());
                prop_assert_eq!(c.p(), p);
            }
        }
    }
}

#[test]
fn corrupted_block_keeps_true_class() {
    let spec = GenSpec {
        p: 5,
        n: 200,
        edits: 0,
        alphabet_size: 4,
        seed: 11,
    };
    let (clean, word) = aperiod::corpus::periodic_with_word(&spec).unwrap();
    let params = RecoveryParams::default();
    let t = tau(clean.len(), 5, params) as usize;
    let block_len = clean.len() / t;
    // Plant a substitution at the start of block 0 so its prefix is no longer
    // a rotation of the period.
    let mut s = clean.clone();
    s[0] = if s[0] == b'A' { b'B' } else { b'A' };
    let classes = candidate_rotation_classes(&s, 5, params).unwrap();
    assert!(classes.iter().any(|c| same_class(&c.canonical, &word)));
    assert!(block_len > 2 * 5);

    let out = recover(&s, params);
    let hit = out.iter().find(|r| r.word == word).unwrap();
    assert_eq!(hit.distance, 1);
}

#[test]
fn periodic_corpora_recover_their_period() {
    for seed in 0..20 {
        for p in [2usize, 3, 7] {
            let spec = GenSpec {
                p,
                n: 400,
                edits: 0,
                alphabet_size: 3,
                seed,
            };
            let (s, word) = aperiod::corpus::periodic_with_word(&spec).unwrap();
            let out = recover(&s, RecoveryParams::default());
            assert!(out.iter().any(|r| r.word == word && r.distance == 0), "seed {seed} p {p}");
        }
    }
}

#[test]
fn deterministic_output() {
    let s = gen_periodic(&GenSpec {
        p: 6,
        n: 300,
        edits: 0,
        alphabet_size: 2,
        seed: 3,
    })
    .unwrap();
    let s = aperiod::corpus::inject_edits(&s, 5, 3, b"AB").unwrap();
    let params = RecoveryParams::default();
    let a = recover(&s, params);
    let b = recover(&s, params);
    assert_eq!(report_json(s.len(), params, &a), report_json(s.len(), params, &b));
    assert_eq!(report_tsv(&a), report_tsv(&b));
}

#[test]
fn json_schema_shape() {
    let s = vec![b'A'; 64];
    let params = RecoveryParams::default();
    let v: serde_json::Value = serde_json::from_str(&report_json(64, params, &recover(&s, params))).unwrap();
    assert_eq!(v["n"], 64);
    assert_eq!(v["epsilon"], "1/20");
    let periods = v["periods"].as_array().unwrap();
    assert_eq!(periods.len(), 1);
    assert_eq!(periods[0]["word"], "A");
    assert_eq!(periods[0]["p"], 1);
    assert_eq!(periods[0]["distance"], 0);
    assert_eq!(periods[0]["tau"], tau(64, 1, params));
    let keys: Vec<&String> = periods[0].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
}
