//! Acceptance suite: one test per release criterion, each printing a
//! `[PASS] criterion N` line with the measured numbers (visible with
//! `cargo test --test acceptance -- --nocapture`).

mod common;

use common::{example_db, labelled, random_db};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rup_core::dataset::{generate_synthetic, Database, DecayFactor, GeneratorParams};
use rup_core::eucs::build_eucs;
use rup_core::miner::{filter_promising_items, mine, recency_ratio, MinerConfig, Variant};
use rup_core::oracle::brute_rhups;
use rup_core::rulist::build_total_order;
use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

const ALL_VARIANTS: [Variant; 3] = [Variant::Baseline, Variant::Rup1, Variant::Rup2];

fn example_config(min_re: f64, min_util: f64, variant: Variant) -> MinerConfig {
    MinerConfig::new(DecayFactor::new(0.1).unwrap(), min_re, min_util, variant).unwrap()
}

/// 100 seeded random instances: database, delta, min_re, min_util.
fn random_corpus() -> Vec<(Database, DecayFactor, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac5e97);
    (0..100)
        .map(|_| {
            let db = random_db(&mut rng, 12, 30);
            let delta = DecayFactor::new([0.05, 0.1, 0.3][rng.gen_range(0..3)]).unwrap();
            let min_re = rng.gen_range(0.0..3.0);
            let min_util = rng.gen_range(0.0..0.4);
            (db, delta, min_re, min_util)
        })
        .collect()
}

#[test]
fn criterion_1_running_example_rhups() {
    let db = example_db();
    // expected utilities computed by hand from the example database;
    // recencies are the time-decay sums under the tid-difference exponent
    let expected: [(&str, u64, f64); 10] = [
        ("e", 35, 2.6248869),
        ("a", 66, 3.238351489),
        ("c", 100, 4.026158389),
        ("d", 112, 4.847377699),
        ("eb", 34, 1.7248869),
        ("bd", 69, 1.83095721),
        ("ac", 140, 2.647861489),
        ("ad", 111, 2.706910489),
        ("cd", 119, 3.016420489),
        ("acd", 137, 2.116420489),
    ];
    let oracle = brute_rhups(&db, DecayFactor::new(0.1).unwrap(), 1.5, 0.10).unwrap();
    for variant in ALL_VARIANTS {
        let (results, stats) = mine(&db, &example_config(1.5, 0.10, variant));
        assert_eq!(results.len(), 10, "{variant:?}");
        for (r, o, (name, utility, recency)) in
            results.iter().zip(&oracle).zip(&expected).map(|((r, o), e)| (r, o, e))
        {
            let got: Vec<&str> = r.items.iter().map(|&i| db.items().label(i)).collect();
            assert_eq!(got.join(""), *name, "{variant:?}");
            assert_eq!(r.utility, *utility, "{variant:?} {name}");
            assert!((r.recency - recency).abs() <= 1e-6, "{variant:?} {name}");
            assert!((r.recency - o.recency).abs() <= 1e-6, "{variant:?} {name} vs oracle");
        }
        assert!(stats.elapsed < Duration::from_secs(1), "{variant:?} too slow");
    }
    println!("[PASS] criterion 1: all variants return the 10 expected patterns with exact utilities, recencies within 1e-6, under 1s");
}

#[test]
fn criterion_2_running_example_hups() {
    let db = example_db();
    let expected: [(&str, u64); 17] = [
        ("e", 35),
        ("a", 66),
        ("c", 100),
        ("d", 112),
        ("eb", 34),
        ("ec", 45),
        ("ed", 57),
        ("bd", 69),
        ("ac", 140),
        ("ad", 111),
        ("cd", 119),
        ("ebd", 36),
        ("ead", 39),
        ("ecd", 34),
        ("bad", 37),
        ("acd", 137),
        ("ebad", 42),
    ];
    for variant in ALL_VARIANTS {
        let (results, stats) = mine(&db, &example_config(0.0, 0.10, variant));
        let got = labelled(&db, &results);
        let want: Vec<(String, u64)> = expected.iter().map(|&(n, u)| (n.to_string(), u)).collect();
        assert_eq!(got, want, "{variant:?}");
        assert!(stats.elapsed < Duration::from_secs(1), "{variant:?} too slow");
    }
    println!("[PASS] criterion 2: minRe=0 yields the 17 high-utility patterns with the expected utilities (u(abd)=37), under 1s");
}

#[test]
fn criterion_3_promising_items_and_total_order() {
    let db = example_db();
    let config = example_config(1.5, 0.10, Variant::Rup2);
    let (promising, twu, _) = filter_promising_items(&db, &config);
    assert_eq!(promising.len(), 5);
    let by_label: HashMap<&str, u64> = promising
        .iter()
        .map(|&i| (db.items().label(i), twu[i.index()]))
        .collect();
    assert_eq!(by_label["e"], 112);
    assert_eq!(by_label["b"], 116);
    assert_eq!(by_label["a"], 217);
    assert_eq!(by_label["c"], 236);
    assert_eq!(by_label["d"], 251);
    let order = build_total_order(&promising.iter().map(|&i| (i, twu[i.index()])).collect::<HashMap<_, _>>());
    let labels: Vec<&str> = order.items().iter().map(|&i| db.items().label(i)).collect();
    assert_eq!(labels, ["e", "b", "a", "c", "d"]);
    println!("[PASS] criterion 3: promising filter keeps all five items with the expected TWUs and order e<b<a<c<d");
}

#[test]
fn criterion_4_eucs_pair_twus_are_exact() {
    let db = example_db();
    let promising: HashSet<_> = db.items().ids().collect();
    let eucs = build_eucs(&db, &promising);
    let expected = [
        ("a", "b", 42),
        ("a", "c", 175),
        ("a", "d", 179),
        ("a", "e", 42),
        ("b", "c", 27),
        ("b", "d", 80),
        ("b", "e", 78),
        ("c", "d", 171),
        ("c", "e", 61),
        ("d", "e", 76),
    ];
    for (a, b, twu) in expected {
        let ia = db.items().get(a).unwrap();
        let ib = db.items().get(b).unwrap();
        assert_eq!(eucs.pair_twu(ia, ib), twu, "({a},{b})");
    }
    assert_eq!(eucs.len(), 10);
    println!("[PASS] criterion 4: EUCS holds exactly the 10 expected pair TWUs");
}

#[test]
fn criterion_5_oracle_equivalence_on_random_corpus() {
    let start = Instant::now();
    let corpus = random_corpus();
    for (case, (db, delta, min_re, min_util)) in corpus.iter().enumerate() {
        let want = brute_rhups(db, *delta, *min_re, *min_util).unwrap();
        for variant in ALL_VARIANTS {
            let config = MinerConfig::new(*delta, *min_re, *min_util, variant).unwrap();
            let (got, _) = mine(db, &config);
            common::assert_same_patterns(&format!("case {case} {variant:?}"), &got, &want);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "suite took {elapsed:?}");
    println!(
        "[PASS] criterion 5: 100 random databases, all variants set-equal to the brute-force oracle (exact utilities, recencies within 1e-9) in {elapsed:?}"
    );
}

#[test]
fn criterion_6_pruning_monotonicity() {
    for (case, (db, delta, min_re, min_util)) in random_corpus().iter().enumerate() {
        let mut visited = Vec::new();
        for variant in ALL_VARIANTS {
            let config = MinerConfig::new(*delta, *min_re, *min_util, variant).unwrap();
            let (_, stats) = mine(db, &config);
            let bound = (1u64 << db.item_count()) - 1;
            assert!(
                stats.visited_nodes <= bound,
                "case {case} {variant:?}: {} > {bound}",
                stats.visited_nodes
            );
            visited.push(stats.visited_nodes);
        }
        assert!(
            visited[0] >= visited[1] && visited[1] >= visited[2],
            "case {case}: N1={} N2={} N3={}",
            visited[0],
            visited[1],
            visited[2]
        );
    }
    let db = example_db();
    let (_, stats) = mine(&db, &example_config(1.5, 0.10, Variant::Rup2));
    assert!(stats.visited_nodes < 31);
    println!(
        "[PASS] criterion 6: N1 >= N2 >= N3 with visited <= 2^m - 1 on all 100 cases; running example rup2 visits {} < 31 nodes",
        stats.visited_nodes
    );
}

#[test]
fn criterion_7_threshold_monotonicity() {
    let db = example_db();
    let sets = |min_re: f64, min_util: f64| -> HashSet<Vec<_>> {
        let (results, _) = mine(&db, &example_config(min_re, min_util, Variant::Rup2));
        results.into_iter().map(|r| r.items).collect()
    };
    let mut previous = sets(0.0, 0.10);
    for min_re in [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0] {
        let next = sets(min_re, 0.10);
        assert!(next.is_subset(&previous), "minRe={min_re} grew the output");
        previous = next;
    }
    let mut previous = sets(1.5, 0.0);
    for min_util in [0.05, 0.10, 0.20, 0.30, 0.50, 1.0] {
        let next = sets(1.5, min_util);
        assert!(next.is_subset(&previous), "minUtil={min_util} grew the output");
        previous = next;
    }
    let (rhups, _) = mine(&db, &example_config(0.0, 0.10, Variant::Rup2));
    let (hups, _) = mine(&db, &example_config(0.0, 0.10, Variant::Rup2));
    let ratio = recency_ratio(rhups.len(), hups.len()).unwrap();
    assert_eq!(ratio, 100.0);
    println!("[PASS] criterion 7: output shrinks monotonically in both thresholds; recencyRatio at minRe=0 is 100%");
}

#[test]
fn criterion_8_scalability_smoke() {
    let start = Instant::now();
    let delta = DecayFactor::new(0.001).unwrap();
    let config = MinerConfig::new(delta, 1.0, 0.008, Variant::Rup2).unwrap();

    let mine_time = |n: usize, seed: u64| -> Duration {
        let params = GeneratorParams {
            n_transactions: n,
            n_items: 1000,
            avg_transaction_length: 10,
            seed,
        };
        let (db, _) = generate_synthetic(&params).unwrap();
        // best of two runs, so scheduler noise does not skew the ratio
        let (_, s1) = mine(&db, &config);
        let (_, s2) = mine(&db, &config);
        s1.elapsed.min(s2.elapsed)
    };

    let t10k = mine_time(10_000, 8101);
    let t20k = mine_time(20_000, 8102);
    let ratio = t20k.as_secs_f64() / t10k.as_secs_f64().max(1e-9);
    assert!(
        ratio <= 4.0,
        "doubling the data grew runtime {ratio:.2}x (10K: {t10k:?}, 20K: {t20k:?})"
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "smoke took {elapsed:?}");
    println!(
        "[PASS] criterion 8: rup2 mined 10K in {t10k:?} and 20K in {t20k:?} (ratio {ratio:.2} <= 4), total {elapsed:?}"
    );
}
