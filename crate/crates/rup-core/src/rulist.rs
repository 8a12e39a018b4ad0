//! The vertical recency-utility list.
//!
//! An `RuList` stores, for one pattern, an entry per containing transaction
//! with the transaction's recency, the pattern's utility in it (`iu`), and
//! the utility of the items that follow the pattern in the total order
//! (`ru`). Lists for single items are built in one database pass; the list
//! of a (k+1)-pattern is produced by joining two k-pattern lists that extend
//! the same prefix. Lists are immutable once built, entries are kept in flat
//! arrays sorted by tid, and joins are linear two-pointer intersections.

use crate::dataset::{transaction_recency, Database, DecayFactor, ItemId, Money};
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum JoinError {
    #[error("join inputs do not extend the same prefix")]
    MismatchedPrefixes,
    #[error("prefix list has no entry for tid {0} shared by both extensions")]
    MissingPrefixEntry(u32),
}

/// Total order on items: ascending transaction-weighted utilization, ties
/// broken by ascending item id.
#[derive(Clone, Debug)]
pub struct TotalOrder {
    items: Vec<ItemId>,
    rank: HashMap<ItemId, u32>,
}

impl TotalOrder {
    /// Items in ascending order.
    pub fn items(&self) -> &[ItemId] {
        &self.items
    }

    /// 0-based position of `item`, `None` when the item is not ordered
    /// (i.e. was not promising).
    pub fn rank(&self, item: ItemId) -> Option<u32> {
        self.rank.get(&item).copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Sorts a pattern's items into ascending order. All items must be
    /// ranked.
    pub fn sort_pattern(&self, pattern: &mut [ItemId]) {
        pattern.sort_by_key(|&i| self.rank(i).expect("pattern item must be ranked"));
    }
}

/// Builds the total order from per-item TWU values.
pub fn build_total_order(twu: &HashMap<ItemId, Money>) -> TotalOrder {
    let mut items: Vec<ItemId> = twu.keys().copied().collect();
    items.sort_by_key(|&i| (twu[&i], i));
    let rank = items
        .iter()
        .enumerate()
        .map(|(pos, &i)| (i, pos as u32))
        .collect();
    TotalOrder { items, rank }
}

/// One transaction's worth of information about a pattern.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RuEntry {
    pub tid: u32,
    pub rec: f64,
    pub iu: Money,
    pub ru: Money,
}

/// The recency-utility list of one pattern, with cached RE/IU/RU sums.
#[derive(Clone, Debug)]
pub struct RuList {
    pattern: Vec<ItemId>,
    entries: Vec<RuEntry>,
    re: f64,
    iu: Money,
    ru: Money,
}

impl RuList {
    pub fn new(pattern: Vec<ItemId>, entries: Vec<RuEntry>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].tid < w[1].tid));
        let mut re = 0.0;
        let mut iu = 0;
        let mut ru = 0;
        for e in &entries {
            re += e.rec;
            iu += e.iu;
            ru += e.ru;
        }
        Self {
            pattern,
            entries,
            re,
            iu,
            ru,
        }
    }

    /// The pattern's items in ascending total order.
    pub fn pattern(&self) -> &[ItemId] {
        &self.pattern
    }

    pub fn last_item(&self) -> ItemId {
        *self.pattern.last().expect("pattern is non-empty")
    }

    pub fn entries(&self) -> &[RuEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cached `(RE, IU, RU)` aggregates.
    pub fn summarize(&self) -> (f64, Money, Money) {
        (self.re, self.iu, self.ru)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn iu(&self) -> Money {
        self.iu
    }

    pub fn ru(&self) -> Money {
        self.ru
    }

    /// Debug dump, one `tid rec iu ru` line per entry.
    pub fn dump_entries(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{} {:.6} {} {}", e.tid, e.rec, e.iu, e.ru);
        }
        out
    }
}

/// Builds the RU-lists of all promising single items in one database pass.
///
/// Returned lists are aligned with `order.items()`. Non-promising items are
/// ignored entirely: they contribute to neither `iu` nor `ru`.
pub fn build_initial_rulists(
    db: &Database,
    promising: &HashSet<ItemId>,
    order: &TotalOrder,
    delta: DecayFactor,
) -> Vec<RuList> {
    let mut lists: Vec<Vec<RuEntry>> = vec![Vec::new(); order.len()];
    let n = db.n();
    let mut ranked: Vec<(u32, Money)> = Vec::new();
    for t in db.transactions() {
        let rec = transaction_recency(n, t.tid(), delta).expect("tid in range by construction");
        ranked.clear();
        for e in t.entries() {
            if promising.contains(&e.item) {
                let rank = order.rank(e.item).expect("promising items are ordered");
                ranked.push((rank, e.utility));
            }
        }
        ranked.sort_unstable_by_key(|&(rank, _)| rank);
        let mut remaining: Money = 0;
        for &(rank, utility) in ranked.iter().rev() {
            lists[rank as usize].push(RuEntry {
                tid: t.tid(),
                rec,
                iu: utility,
                ru: remaining,
            });
            remaining += utility;
        }
    }
    order
        .items()
        .iter()
        .zip(lists)
        .map(|(&item, entries)| RuList::new(vec![item], entries))
        .collect()
}

/// Joins the lists of two 1-item extensions `xa`, `xb` of the same prefix
/// into the list of the combined pattern, where `xa`'s last item precedes
/// `xb`'s in the total order. `prefix` is the shared prefix's list, absent
/// for 1-pattern inputs.
///
/// The result has entries only for tids present in both inputs; recency is
/// carried from `xa` (both parents agree on it), `ru` from `xb`, and the
/// prefix's utility is subtracted once so shared items are not double
/// counted. An empty intersection yields a concrete empty list.
pub fn join(prefix: Option<&RuList>, xa: &RuList, xb: &RuList) -> Result<RuList, JoinError> {
    let k = xa.pattern.len();
    if k == 0
        || xb.pattern.len() != k
        || xa.pattern[..k - 1] != xb.pattern[..k - 1]
        || xa.pattern[k - 1] == xb.pattern[k - 1]
    {
        return Err(JoinError::MismatchedPrefixes);
    }
    if let Some(p) = prefix {
        if p.pattern[..] != xa.pattern[..k - 1] {
            return Err(JoinError::MismatchedPrefixes);
        }
    }

    let mut pattern = xa.pattern.clone();
    pattern.push(xb.pattern[k - 1]);

    let mut entries = Vec::new();
    let (mut i, mut j, mut p) = (0, 0, 0);
    while i < xa.entries.len() && j < xb.entries.len() {
        let ea = &xa.entries[i];
        let eb = &xb.entries[j];
        if ea.tid == eb.tid {
            let iu = match prefix {
                Some(px) => {
                    while p < px.entries.len() && px.entries[p].tid < ea.tid {
                        p += 1;
                    }
                    if p == px.entries.len() || px.entries[p].tid != ea.tid {
                        return Err(JoinError::MissingPrefixEntry(ea.tid));
                    }
                    ea.iu + eb.iu - px.entries[p].iu
                }
                None => ea.iu + eb.iu,
            };
            entries.push(RuEntry {
                tid: ea.tid,
                rec: ea.rec,
                iu,
                ru: eb.ru,
            });
            i += 1;
            j += 1;
        } else if ea.tid < eb.tid {
            i += 1;
        } else {
            j += 1;
        }
    }
    Ok(RuList::new(pattern, entries))
}
