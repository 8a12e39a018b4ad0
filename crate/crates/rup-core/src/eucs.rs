//! The estimated-utility co-occurrence structure: a sparse symmetric map
//! from item pairs to the pair's TWU, built in one database pass over the
//! promising items. A pair's TWU upper-bounds the utility of every superset
//! of the pair, which is what the co-occurrence pruning strategy exploits.
//!
//! The map is sparse rather than a dense triangular matrix: an absent pair
//! never co-occurs and reads as 0.

use crate::dataset::{transaction_utility, Database, ItemId, ItemTable, Money};
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

#[derive(Clone, Debug, Default)]
pub struct Eucs {
    pairs: HashMap<(ItemId, ItemId), Money>,
}

fn key(a: ItemId, b: ItemId) -> (ItemId, ItemId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Eucs {
    /// TWU of the 2-pattern `{a, b}`; 0 when the pair never co-occurs.
    pub fn pair_twu(&self, a: ItemId, b: ItemId) -> Money {
        self.pairs.get(&key(a, b)).copied().unwrap_or(0)
    }

    /// Number of co-occurring pairs stored.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Debug dump as `a,b,twu` CSV rows, sorted by item id pair.
    pub fn to_csv(&self, items: &ItemTable) -> String {
        let mut rows: Vec<(&(ItemId, ItemId), &Money)> = self.pairs.iter().collect();
        rows.sort();
        let mut out = String::from("a,b,twu\n");
        for (&(a, b), &twu) in rows {
            let _ = writeln!(out, "{},{},{}", items.label(a), items.label(b), twu);
        }
        out
    }
}

/// Builds the EUCS over the promising items in a single database pass: every
/// promising pair in a transaction accumulates that transaction's utility.
pub fn build_eucs(db: &Database, promising: &HashSet<ItemId>) -> Eucs {
    let mut pairs: HashMap<(ItemId, ItemId), Money> = HashMap::new();
    let mut kept: Vec<ItemId> = Vec::new();
    for t in db.transactions() {
        let tu = transaction_utility(t);
        kept.clear();
        kept.extend(t.entries().iter().map(|e| e.item).filter(|i| promising.contains(i)));
        for (i, &a) in kept.iter().enumerate() {
            for &b in &kept[i + 1..] {
                *pairs.entry(key(a, b)).or_insert(0) += tu;
            }
        }
    }
    Eucs { pairs }
}

/// The co-occurrence check: `true` when the pair's TWU reaches the absolute
/// utility threshold. `false` means the extension pairing `a` with `b` and
/// all its descendants may be skipped.
pub fn eucp_pass(a: ItemId, b: ItemId, min_util_abs: f64, eucs: &Eucs) -> bool {
    eucs.pair_twu(a, b) as f64 >= min_util_abs
}
