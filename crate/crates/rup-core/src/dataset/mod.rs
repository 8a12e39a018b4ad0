//! Quantitative temporal transaction databases and their scoring measures.
//!
//! Transactions are stored in chronological order and identified by 1-based
//! TIDs; the TID sequence position is the sole time axis. Utilities are
//! integers (smallest money unit) so that utility comparisons are exact;
//! recency is a 64-bit float.

mod gen;
mod parse;

pub use gen::{generate_synthetic, GeneratorError, GeneratorParams};
pub use parse::{parse_profit_table, parse_transactions, parse_utility_format, ParseError};

use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

/// Utility amounts in the smallest indivisible money unit.
pub type Money = u64;

#[derive(Debug, Error, PartialEq)]
pub enum DatasetError {
    #[error("time-decay factor must be in (0, 1], got {0}")]
    InvalidDecayFactor(f64),
    #[error("tid {tid} out of range 1..={n}")]
    TidOutOfRange { tid: u32, n: usize },
    #[error("item \"{0}\" does not appear in the transaction")]
    ItemNotInTransaction(String),
}

/// Compact identifier for an interned item. Ids are dense `0..m-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(pub u32);

impl ItemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Bijective mapping between external item labels and dense [`ItemId`]s.
#[derive(Clone, Debug, Default)]
pub struct ItemTable {
    labels: Vec<String>,
    by_label: HashMap<String, ItemId>,
}

impl ItemTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `label`, interning it on first sight.
    pub fn intern(&mut self, label: &str) -> ItemId {
        if let Some(&id) = self.by_label.get(label) {
            return id;
        }
        let id = ItemId(self.labels.len() as u32);
        self.labels.push(label.to_string());
        self.by_label.insert(label.to_string(), id);
        id
    }

    pub fn get(&self, label: &str) -> Option<ItemId> {
        self.by_label.get(label).copied()
    }

    pub fn label(&self, id: ItemId) -> &str {
        &self.labels[id.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ItemId> {
        (0..self.labels.len() as u32).map(ItemId)
    }
}

/// Per-item external unit profits, together with the item interning they
/// were parsed with.
#[derive(Clone, Debug, Default)]
pub struct ProfitTable {
    items: ItemTable,
    profits: Vec<Money>,
}

impl ProfitTable {
    pub fn new(items: ItemTable, profits: Vec<Money>) -> Self {
        assert_eq!(items.len(), profits.len());
        Self { items, profits }
    }

    pub fn items(&self) -> &ItemTable {
        &self.items
    }

    pub fn profit(&self, id: ItemId) -> Money {
        self.profits[id.index()]
    }

    pub fn profits(&self) -> &[Money] {
        &self.profits
    }

    pub fn len(&self) -> usize {
        self.profits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profits.is_empty()
    }
}

/// One `(item, quantity)` occurrence with its precomputed utility.
///
/// For natively parsed data `utility = quantity * profit`; for
/// utility-annotated input the utility is taken verbatim and the quantity is
/// a placeholder 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub item: ItemId,
    pub quantity: u64,
    pub utility: Money,
}

/// A quantity transaction. Entries are distinct per item and kept sorted by
/// item id.
#[derive(Clone, Debug)]
pub struct Transaction {
    tid: u32,
    entries: Vec<Entry>,
}

impl Transaction {
    pub fn new(tid: u32, mut entries: Vec<Entry>) -> Self {
        entries.sort_by_key(|e| e.item);
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.windows(2).all(|w| w[0].item < w[1].item));
        Self { tid, entries }
    }

    /// 1-based position in the database's chronological order.
    pub fn tid(&self) -> u32 {
        self.tid
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, item: ItemId) -> Option<&Entry> {
        self.entries
            .binary_search_by_key(&item, |e| e.item)
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn contains(&self, item: ItemId) -> bool {
        self.entry(item).is_some()
    }

    pub fn contains_all(&self, items: &[ItemId]) -> bool {
        items.iter().all(|&i| self.contains(i))
    }
}

/// A chronologically ordered quantitative transaction database.
///
/// `T_current` equals the transaction count `n`; tids are exactly `1..=n`.
#[derive(Clone, Debug)]
pub struct Database {
    transactions: Vec<Transaction>,
    items: ItemTable,
    profits: Option<Vec<Money>>,
}

impl Database {
    pub fn new(transactions: Vec<Transaction>, items: ItemTable, profits: Option<Vec<Money>>) -> Self {
        debug_assert!(transactions
            .iter()
            .enumerate()
            .all(|(i, t)| t.tid() as usize == i + 1));
        Self {
            transactions,
            items,
            profits,
        }
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    /// Number of transactions; doubles as the current timestamp.
    pub fn n(&self) -> usize {
        self.transactions.len()
    }

    pub fn items(&self) -> &ItemTable {
        &self.items
    }

    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    /// Unit profits, absent when per-item utilities were given directly.
    pub fn profits(&self) -> Option<&[Money]> {
        self.profits.as_deref()
    }
}

/// User-specified time-decay factor, restricted to `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayFactor(f64);

impl DecayFactor {
    pub fn new(delta: f64) -> Result<Self, DatasetError> {
        if delta.is_finite() && delta > 0.0 && delta <= 1.0 {
            Ok(Self(delta))
        } else {
            Err(DatasetError::InvalidDecayFactor(delta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Recency of transaction `tid` in a database of `n` transactions:
/// `(1 - delta)^(n - tid)`.
pub fn transaction_recency(n: usize, tid: u32, delta: DecayFactor) -> Result<f64, DatasetError> {
    if tid == 0 || tid as usize > n {
        return Err(DatasetError::TidOutOfRange { tid, n });
    }
    Ok((1.0 - delta.value()).powi(n as i32 - tid as i32))
}

/// Utility of an item in one transaction (quantity times unit profit).
pub fn item_utility(item: ItemId, t: &Transaction) -> Result<Money, DatasetError> {
    t.entry(item)
        .map(|e| e.utility)
        .ok_or_else(|| DatasetError::ItemNotInTransaction(format!("#{}", item.0)))
}

/// Utility of a pattern over the whole database: the sum, over transactions
/// containing every item of the pattern, of the items' utilities. Zero when
/// the pattern occurs nowhere.
pub fn pattern_utility(pattern: &[ItemId], db: &Database) -> Money {
    db.transactions()
        .iter()
        .filter(|t| t.contains_all(pattern))
        .map(|t| pattern.iter().map(|&i| t.entry(i).unwrap().utility).sum::<Money>())
        .sum()
}

/// Transaction utility `tu(T)`: the sum of the utilities of all its items.
pub fn transaction_utility(t: &Transaction) -> Money {
    t.entries().iter().map(|e| e.utility).sum()
}

/// Total utility `TU` of the database.
pub fn total_utility(db: &Database) -> Money {
    db.transactions().iter().map(transaction_utility).sum()
}

/// Transaction-weighted utilization per item: `TWU(i)` is the sum of `tu`
/// over transactions containing `i`. Indexed by item id; items occurring in
/// no transaction get 0.
pub fn compute_item_twu(db: &Database) -> Vec<Money> {
    let mut twu = vec![0; db.item_count()];
    for t in db.transactions() {
        let tu = transaction_utility(t);
        for e in t.entries() {
            twu[e.item.index()] += tu;
        }
    }
    twu
}

/// Time-decayed recency per item: `r(i)` is the sum of transaction
/// recencies over transactions containing `i`.
pub fn compute_item_recency(db: &Database, delta: DecayFactor) -> Vec<f64> {
    let mut rec = vec![0.0; db.item_count()];
    let n = db.n();
    for t in db.transactions() {
        let r = transaction_recency(n, t.tid(), delta).expect("tid in range by construction");
        for e in t.entries() {
            rec[e.item.index()] += r;
        }
    }
    rec
}

/// Renders the database in the native transaction format, one
/// `label:qty ...` line per transaction in chronological order.
pub fn to_native_transactions(db: &Database) -> String {
    let mut out = String::new();
    for t in db.transactions() {
        let mut first = true;
        for e in t.entries() {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{}:{}", db.items().label(e.item), e.quantity);
        }
        out.push('\n');
    }
    out
}

/// Renders the profit table in the native `label profit` format, in item id
/// order. `None` when the database carries no profit table.
pub fn to_native_profits(db: &Database) -> Option<String> {
    let profits = db.profits()?;
    let mut out = String::new();
    for id in db.items().ids() {
        let _ = writeln!(out, "{} {}", db.items().label(id), profits[id.index()]);
    }
    Some(out)
}
