//! Shared fixtures and helpers for the integration test suites.

#![allow(dead_code)]

use rup_core::dataset::{parse_profit_table, parse_transactions, Database};
use rup_core::miner::PatternResult;

pub const EXAMPLE_PROFITS: &str = "a 6\nb 1\nc 10\nd 7\ne 5\n";
pub const EXAMPLE_TRANSACTIONS: &str = "\
a:2 c:1 d:2
b:1 d:2
b:2 c:1 e:3
a:3 c:2
a:1 b:3 d:4 e:1
b:4 e:1
a:3 c:3 d:2
b:2 d:3
c:1 d:2 e:2
a:2 c:2 d:1
";

/// The ten-transaction running-example database.
pub fn example_db() -> Database {
    let ptable = parse_profit_table(EXAMPLE_PROFITS).unwrap();
    parse_transactions(EXAMPLE_TRANSACTIONS, &ptable).unwrap()
}

/// Renders results as `(joined labels, utility)` pairs for compact asserts.
pub fn labelled(db: &Database, results: &[PatternResult]) -> Vec<(String, u64)> {
    results
        .iter()
        .map(|r| {
            let labels: Vec<&str> = r.items.iter().map(|&i| db.items().label(i)).collect();
            (labels.join(""), r.utility)
        })
        .collect()
}

/// Items + utility must match exactly, recency within `1e-9`.
pub fn assert_same_patterns(context: &str, got: &[PatternResult], want: &[PatternResult]) {
    assert_eq!(
        got.len(),
        want.len(),
        "{context}: {} vs {} patterns",
        got.len(),
        want.len()
    );
    for (g, w) in got.iter().zip(want) {
        assert_eq!(g.items, w.items, "{context}: item mismatch");
        assert_eq!(g.utility, w.utility, "{context}: utility mismatch for {:?}", g.items);
        assert!(
            (g.recency - w.recency).abs() <= 1e-9,
            "{context}: recency {} vs {} for {:?}",
            g.recency,
            w.recency,
            g.items
        );
    }
}

/// Seeded random database over at most `max_items` items and
/// `max_transactions` transactions, built through the native parsers.
pub fn random_db(rng: &mut impl rand::Rng, max_items: usize, max_transactions: usize) -> Database {
    use std::fmt::Write as _;
    let m = rng.gen_range(1..=max_items);
    let n = rng.gen_range(1..=max_transactions);
    let mut profit_text = String::new();
    for i in 0..m {
        let _ = writeln!(profit_text, "x{i} {}", rng.gen_range(0..=10u64));
    }
    let mut tx_text = String::new();
    for _ in 0..n {
        let len = rng.gen_range(1..=m.min(6));
        let mut line = Vec::new();
        for _ in 0..len {
            line.push(format!("x{}:{}", rng.gen_range(0..m), rng.gen_range(1..=5u64)));
        }
        let _ = writeln!(tx_text, "{}", line.join(" "));
    }
    let ptable = parse_profit_table(&profit_text).unwrap();
    parse_transactions(&tx_text, &ptable).unwrap()
}
