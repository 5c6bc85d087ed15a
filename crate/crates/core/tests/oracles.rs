//! Cross-checks of every engine against independent brute-force routes.

use aperiod::kangaroo::{last_row_run, rotation_distances, RotationDistances};
use aperiod::lcp_index::{suffix_array_doubling, suffix_array_sais, CompositeText, LcpIndex};
use aperiod::naive::{ed_to_prefix, edit_distance};
use aperiod::recovery::{canonical_rotation, primitive, tau, RecoveryParams};
use aperiod::wraparound::{definition_check, full_table, WrapTable};
use proptest::prelude::*;

fn word(alphabet: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alphabet, 0..=max_len)
        .prop_map(|v| v.into_iter().map(|c| b'A' + c).collect())
}

fn nonempty_word(alphabet: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alphabet, 1..=max_len)
        .prop_map(|v| v.into_iter().map(|c| b'A' + c).collect())
}

fn periodic_scan(s: &[u8], p_word: &[u8], i: usize, j: usize) -> usize {
    let p = p_word.len();
    (0..s.len() - i)
        .take_while(|&t| s[i + t] == p_word[(j + t) % p])
        .count()
}

/// Deepest row on diagonal `j` with cost at most `d`, read off the full table.
fn frontier_from_table(t: &WrapTable, d: u32, j: usize) -> usize {
    let p = t.cols();
    (0..t.rows())
        .filter(|&i| t.get(i, (j + i) % p) <= d)
        .max()
        .unwrap()
}

fn brute_primitive(w: &[u8]) -> bool {
    let p = w.len();
    !(1..p).any(|q| p % q == 0 && w.chunks(q).all(|c| c == &w[..q]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn suffix_sorters_agree(s in word(3, 60), p in nonempty_word(3, 6)) {
        let text = CompositeText::new(&s, &p).unwrap();
        prop_assert_eq!(suffix_array_sais(&text), suffix_array_doubling(&text));
    }

    #[test]
    fn lcp_queries_match_scan(s in word(4, 80), p in nonempty_word(4, 7), a in 0usize..200, b in 0usize..200) {
        let idx = LcpIndex::build(&s, &p).unwrap();
        let m = idx.text().len();
        let (a, b) = (a % (m + 1), b % (m + 1));
        let text = idx.text();
        let naive = (0..)
            .take_while(|&h| a + h < m && b + h < m && text.symbol(a + h) == text.symbol(b + h))
            .count();
        let got = idx.lcp_suffixes(a, b).unwrap();
        prop_assert_eq!(got, naive);
        prop_assert_eq!(got, idx.lcp_suffixes(b, a).unwrap());
        if a < m && b < m {
            prop_assert_eq!(got > 0, text.symbol(a) == text.symbol(b));
        }
    }

    #[test]
    fn periodic_lcp_matches_scan(s in word(2, 120), p in nonempty_word(2, 9)) {
        let idx = LcpIndex::build(&s, &p).unwrap();
        for i in 0..=s.len() {
            for j in 0..p.len() {
                prop_assert_eq!(idx.lcp_text_vs_periodic(i, j).unwrap(), periodic_scan(&s, &p, i, j));
            }
        }
    }

    #[test]
    fn table_invariants(s in word(3, 25), p in nonempty_word(3, 6)) {
        let t = full_table(&s, &p).unwrap();
        let (n, q) = (s.len(), p.len());
        prop_assert!(t.satisfies_recurrence(&s, &p));
        for i in 0..=n {
            for j in 0..q {
                let next = (j + 1) % q;
                prop_assert!(t.get(i, next) <= t.get(i, j) + 1);
                if i < n {
                    prop_assert!(t.get(i + 1, (j + i + 1) % q) >= t.get(i, (j + i) % q));
                    prop_assert!(t.get(i + 1, j) <= t.get(i, j) + 1);
                    prop_assert!(t.get(i + 1, next) <= t.get(i, j) + 1);
                }
            }
        }
    }

    #[test]
    fn table_matches_definition(s in word(3, 9), p in nonempty_word(3, 4)) {
        let t = full_table(&s, &p).unwrap();
        for i in 0..=s.len() {
            for j in 0..p.len() {
                prop_assert_eq!(t.get(i, j), definition_check(&s, &p, i, j).unwrap());
            }
        }
    }

    #[test]
    fn min_over_rotations(s in word(3, 14), p in nonempty_word(3, 5)) {
        let t = full_table(&s, &p).unwrap();
        let best = (0..p.len())
            .map(|j| ed_to_prefix(&s, &RotationDistances::rotation(&p, j)).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(t.min_distance_any_rotation() as usize, best);
    }

    #[test]
    fn frontiers_match_table(s in word(3, 40), p in nonempty_word(3, 8), k in 0usize..7) {
        let t = full_table(&s, &p).unwrap();
        let run = last_row_run(&s, &p, k, true).unwrap();
        prop_assert_eq!(run.lcp_queries, ((k + 1) * p.len()) as u64);
        for (d, row) in run.frontiers.iter().enumerate() {
            prop_assert_eq!(row.d, d);
            for j in 0..p.len() {
                prop_assert_eq!(row.entries[j], frontier_from_table(&t, d as u32, j));
                if d > 0 {
                    prop_assert!(row.entries[j] >= run.frontiers[d - 1].entries[j]);
                }
            }
        }
        for (j, v) in run.outcome.per_column.iter().enumerate() {
            let exact = t.get(s.len(), j) as usize;
            match v {
                Some(d) => prop_assert_eq!(*d, exact),
                None => prop_assert!(exact > k),
            }
        }
    }

    #[test]
    fn rotations_match_naive(s in word(3, 30), p in nonempty_word(3, 6), k in 0usize..8) {
        let r = rotation_distances(&s, &p, k).unwrap();
        for j in 0..p.len() {
            let want = ed_to_prefix(&s, &RotationDistances::rotation(&p, j)).unwrap();
            prop_assert_eq!(r.per_rotation[j], (want <= k).then_some(want));
        }
    }

    #[test]
    fn edit_distance_is_a_metric(a in word(3, 12), b in word(3, 12), c in word(3, 12)) {
        prop_assert_eq!(edit_distance(&a, &b), edit_distance(&b, &a));
        prop_assert_eq!(edit_distance(&a, &a), 0);
        prop_assert_eq!(edit_distance(&a, &b) == 0, a == b);
        prop_assert!(edit_distance(&a, &c) <= edit_distance(&a, &b) + edit_distance(&b, &c));
    }

    #[test]
    fn prefix_distance_is_a_lower_bound(s in word(3, 12), u in nonempty_word(3, 4), len in 0usize..30) {
        let w: Vec<u8> = u.iter().cycle().take(len).copied().collect();
        prop_assert!(ed_to_prefix(&s, &u).unwrap() <= edit_distance(&s, &w));
    }

    #[test]
    fn least_rotation_by_scan(w in nonempty_word(3, 10)) {
        let p = w.len();
        let rots: Vec<Vec<u8>> = (0..p).map(|j| RotationDistances::rotation(&w, j)).collect();
        let least = rots.iter().min().unwrap();
        let first = rots.iter().position(|r| r == least).unwrap();
        prop_assert_eq!(canonical_rotation(&w), first);
    }

    #[test]
    fn primitivity_by_scan(w in nonempty_word(2, 12)) {
        prop_assert_eq!(primitive(&w).unwrap(), brute_primitive(&w));
    }

    #[test]
    fn tau_monotone(n in 1usize..5000, p in 1usize..200, num in 1u64..50, den in 1u64..50) {
        let params = RecoveryParams::new(num, den).unwrap();
        prop_assert!(tau(n, p + 1, params) <= tau(n, p, params));
        // A larger ε never raises the threshold.
        let bigger = RecoveryParams::new(num + 1, den).unwrap();
        prop_assert!(tau(n, p, bigger) <= tau(n, p, params));
    }
}

#[test]
fn periodic_lcp_exhaustive_small() {
    // Every binary text up to length 8 against every binary pattern up to 3.
    for n in 0..=8 {
        for sbits in 0..1u32 << n {
            let s: Vec<u8> = (0..n).map(|t| b'A' + ((sbits >> t) & 1) as u8).collect();
            for q in 1..=3 {
                for pbits in 0..1u32 << q {
                    let p: Vec<u8> = (0..q).map(|t| b'A' + ((pbits >> t) & 1) as u8).collect();
                    let idx = LcpIndex::build(&s, &p).unwrap();
                    for i in 0..=n {
                        for j in 0..q {
                            assert_eq!(idx.lcp_text_vs_periodic(i, j).unwrap(), periodic_scan(&s, &p, i, j));
                        }
                    }
                }
            }
        }
    }
}
