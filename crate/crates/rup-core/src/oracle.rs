//! Exhaustive ground-truth enumeration for desk-scale correctness testing.
//!
//! Instead of iterating all `2^m` item subsets, each transaction's power set
//! is expanded into a hash accumulator, so sparse databases with many items
//! but short transactions stay tractable. The guard therefore applies to the
//! longest transaction. Deliberately naive otherwise.

use crate::dataset::{
    compute_item_twu, total_utility, transaction_recency, transaction_utility, Database,
    DecayFactor, ItemId, Money,
};
use crate::miner::{recency_ge, PatternResult};
use std::collections::HashMap;
use thiserror::Error;

/// Longest transaction the enumerator accepts.
pub const MAX_TRANSACTION_LEN: usize = 20;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("transaction {tid} has {len} items; enumeration is capped at {MAX_TRANSACTION_LEN} items per transaction")]
    TransactionTooLong { tid: u32, len: usize },
}

/// Ground-truth measures of one supported pattern, computed by direct
/// summation with no pruning.
#[derive(Clone, Debug, PartialEq)]
pub struct PatternTruth {
    /// Items in ascending id order.
    pub items: Vec<ItemId>,
    pub utility: Money,
    pub recency: f64,
    pub twu: Money,
    /// Ascending tids of the containing transactions.
    pub support_tids: Vec<u32>,
}

/// Enumerates every itemset with non-empty support, with its utility,
/// recency, TWU and supporting tids.
pub fn enumerate_all(db: &Database, delta: DecayFactor) -> Result<Vec<PatternTruth>, OracleError> {
    for t in db.transactions() {
        if t.len() > MAX_TRANSACTION_LEN {
            return Err(OracleError::TransactionTooLong {
                tid: t.tid(),
                len: t.len(),
            });
        }
    }

    struct Acc {
        utility: Money,
        recency: f64,
        twu: Money,
        tids: Vec<u32>,
    }
    let mut acc: HashMap<Vec<ItemId>, Acc> = HashMap::new();
    let n = db.n();
    for t in db.transactions() {
        let rec = transaction_recency(n, t.tid(), delta).expect("tid in range by construction");
        let tu = transaction_utility(t);
        let entries = t.entries();
        for mask in 1u32..(1u32 << entries.len()) {
            let mut items = Vec::with_capacity(mask.count_ones() as usize);
            let mut utility = 0;
            for (bit, e) in entries.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    items.push(e.item);
                    utility += e.utility;
                }
            }
            let slot = acc.entry(items).or_insert(Acc {
                utility: 0,
                recency: 0.0,
                twu: 0,
                tids: Vec::new(),
            });
            slot.utility += utility;
            slot.recency += rec;
            slot.twu += tu;
            slot.tids.push(t.tid());
        }
    }

    let mut truths: Vec<PatternTruth> = acc
        .into_iter()
        .map(|(items, a)| PatternTruth {
            items,
            utility: a.utility,
            recency: a.recency,
            twu: a.twu,
            support_tids: a.tids,
        })
        .collect();
    truths.sort_by(|a, b| a.items.len().cmp(&b.items.len()).then_with(|| a.items.cmp(&b.items)));
    Ok(truths)
}

/// Brute-force reference for the miner: every supported pattern whose
/// utility reaches `min_util * TU` and whose recency reaches `min_re`,
/// in the miner's canonical order (ascending length, then lexicographic in
/// ascending (TWU, id) item order).
pub fn brute_rhups(
    db: &Database,
    delta: DecayFactor,
    min_re: f64,
    min_util: f64,
) -> Result<Vec<PatternResult>, OracleError> {
    let threshold = min_util * total_utility(db) as f64;
    let twu = compute_item_twu(db);
    let rank = |i: ItemId| (twu[i.index()], i);
    let mut out: Vec<PatternResult> = enumerate_all(db, delta)?
        .into_iter()
        .filter(|t| t.utility as f64 >= threshold && recency_ge(t.recency, min_re))
        .map(|t| {
            let mut items = t.items;
            items.sort_by_key(|&i| rank(i));
            PatternResult {
                items,
                utility: t.utility,
                recency: t.recency,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.items.len().cmp(&b.items.len()).then_with(|| {
            let ra = a.items.iter().map(|&i| rank(i));
            let rb = b.items.iter().map(|&i| rank(i));
            ra.cmp(rb)
        })
    });
    Ok(out)
}
