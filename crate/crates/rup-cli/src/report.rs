//! Deterministic machine-readable output.
//!
//! All JSON is written by hand with a stable key order and floats fixed to
//! six decimals, so that re-parsing and re-serializing a report is
//! byte-identical.

use rup_core::dataset::Database;
use rup_core::miner::{MinerConfig, MiningStats, PatternResult};
use std::fmt::Write as _;

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn float6(x: f64) -> String {
    format!("{x:.6}")
}

/// One pattern as a JSON object with the item labels in canonical order.
fn pattern_json(db: &Database, p: &PatternResult) -> String {
    let items: Vec<String> = p
        .items
        .iter()
        .map(|&i| format!("\"{}\"", json_escape(db.items().label(i))))
        .collect();
    format!(
        "{{\"items\":[{}],\"utility\":{},\"recency\":{}}}",
        items.join(","),
        p.utility,
        float6(p.recency)
    )
}

/// The pattern list as a JSON array, one pattern per line.
pub fn patterns_json(db: &Database, patterns: &[PatternResult]) -> String {
    if patterns.is_empty() {
        return "[]\n".to_string();
    }
    let rows: Vec<String> = patterns.iter().map(|p| format!("  {}", pattern_json(db, p))).collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

/// The pattern list as CSV with a header row; items are space-joined labels.
pub fn patterns_csv(db: &Database, patterns: &[PatternResult]) -> String {
    let mut out = String::from("items,utility,recency\n");
    for p in patterns {
        let labels: Vec<&str> = p.items.iter().map(|&i| db.items().label(i)).collect();
        let _ = writeln!(out, "{},{},{}", labels.join(" "), p.utility, float6(p.recency));
    }
    out
}

/// Search statistics as a flat JSON object.
pub fn stats_json(stats: &MiningStats) -> String {
    format!(
        "{{\n  \"promising_items\": {},\n  \"visited_nodes\": {},\n  \"rulists_built\": {},\n  \"eucp_skips\": {},\n  \"recency_prunes\": {},\n  \"ub_prunes\": {},\n  \"empty_list_skips\": {},\n  \"elapsed_ms\": {}\n}}\n",
        stats.promising_items,
        stats.visited_nodes,
        stats.rulists_built,
        stats.eucp_skips,
        stats.recency_prunes,
        stats.ub_prunes,
        stats.empty_list_skips,
        stats.elapsed.as_millis()
    )
}

fn config_json(config: &MinerConfig) -> String {
    let abs = match config.abs_util {
        Some(a) => float6(a),
        None => "null".to_string(),
    };
    format!(
        "{{\"delta\":{},\"min_re\":{},\"min_util\":{},\"abs_util\":{},\"algo\":\"{}\"}}",
        float6(config.delta.value()),
        float6(config.min_re),
        float6(config.min_util),
        abs,
        config.variant.name()
    )
}

/// Run summary printed by `mine`: the echoed configuration, the pattern
/// count and the statistics.
pub fn mine_report_json(config: &MinerConfig, patterns: &[PatternResult], stats: &MiningStats) -> String {
    format!(
        "{{\n  \"config\": {},\n  \"counts\": {{\"rhups\":{}}},\n  \"stats\": {}}}\n",
        config_json(config),
        patterns.len(),
        stats_json(stats).trim_end().replace('\n', "\n  ")
    )
}

/// Comparison summary printed by `compare`. The ratio is the string
/// `"undefined"` when there are no high-utility patterns at all.
pub fn compare_report_json(
    config: &MinerConfig,
    rhups: usize,
    hups: usize,
    recency_ratio: Option<f64>,
) -> String {
    let (ratio, outdated) = match recency_ratio {
        Some(r) => (float6(r), float6(100.0 - r)),
        None => ("\"undefined\"".to_string(), "\"undefined\"".to_string()),
    };
    format!(
        "{{\n  \"config\": {},\n  \"counts\": {{\"rhups\":{rhups},\"hups\":{hups},\"recency_ratio\":{ratio},\"outdated_ratio\":{outdated}}}\n}}\n",
        config_json(config)
    )
}
