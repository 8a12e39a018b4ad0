//! Parsers for the native and utility-annotated input formats.
//!
//! Native format: a profit file with `label profit` lines plus a transaction
//! file with `label:qty ...` lines in chronological order. Utility-annotated
//! format: `labels...:tu:utilities...` per line. All formats are UTF-8,
//! tolerate CRLF, skip blank lines (without consuming a tid) and `#` comment
//! lines; reported line numbers are physical 1-based positions.

use super::{Database, Entry, ItemId, ItemTable, Money, ProfitTable, Transaction};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: duplicate item \"{label}\"")]
    DuplicateItem { line: usize, label: String },
    #[error("line {line}: invalid profit \"{value}\" for item \"{label}\" (expected a non-negative integer)")]
    InvalidProfit {
        line: usize,
        label: String,
        value: String,
    },
    #[error("line {line}: expected `<label> <profit>`")]
    MalformedProfitLine { line: usize },
    #[error("line {line}: unknown item \"{label}\"")]
    UnknownItem { line: usize, label: String },
    #[error("line {line}: invalid quantity \"{value}\" for item \"{label}\" (expected a positive integer)")]
    InvalidQuantity {
        line: usize,
        label: String,
        value: String,
    },
    #[error("line {line}: malformed entry \"{token}\" (expected `<label>:<qty>`)")]
    MalformedEntry { line: usize, token: String },
    #[error("line {line}: expected `<labels>:<tu>:<utilities>`")]
    MalformedUtilityLine { line: usize },
    #[error("line {line}: {labels} item(s) but {utilities} utility value(s)")]
    CountMismatch {
        line: usize,
        labels: usize,
        utilities: usize,
    },
    #[error("line {line}: invalid utility \"{value}\" (expected a non-negative integer)")]
    InvalidUtility { line: usize, value: String },
    #[error("line {line}: stated transaction utility {stated} does not match item utility sum {actual}")]
    TransactionUtilityMismatch {
        line: usize,
        stated: Money,
        actual: Money,
    },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a profit file with one `label profit` line per item.
pub fn parse_profit_table(text: &str) -> Result<ProfitTable, ParseError> {
    let mut items = ItemTable::new();
    let mut profits: Vec<Money> = Vec::new();
    for (line, content) in content_lines(text) {
        let mut fields = content.split_whitespace();
        let (label, value) = match (fields.next(), fields.next(), fields.next()) {
            (Some(label), Some(value), None) => (label, value),
            _ => return Err(ParseError::MalformedProfitLine { line }),
        };
        if items.get(label).is_some() {
            return Err(ParseError::DuplicateItem {
                line,
                label: label.to_string(),
            });
        }
        let profit: Money = value.parse().map_err(|_| ParseError::InvalidProfit {
            line,
            label: label.to_string(),
            value: value.to_string(),
        })?;
        items.intern(label);
        profits.push(profit);
    }
    Ok(ProfitTable::new(items, profits))
}

/// Parses a native transaction file against an already parsed profit table.
///
/// Lines are taken in chronological order; the tid is the 1-based index of
/// the transaction among non-blank, non-comment lines. Duplicate items
/// within a line are merged by summing quantities.
pub fn parse_transactions(text: &str, ptable: &ProfitTable) -> Result<Database, ParseError> {
    let mut transactions = Vec::new();
    for (line, content) in content_lines(text) {
        let tid = transactions.len() as u32 + 1;
        let mut entries: Vec<Entry> = Vec::new();
        for token in content.split_whitespace() {
            let mut parts = token.split(':');
            let (label, value) = match (parts.next(), parts.next(), parts.next()) {
                (Some(label), Some(value), None) if !label.is_empty() => (label, value),
                _ => {
                    return Err(ParseError::MalformedEntry {
                        line,
                        token: token.to_string(),
                    })
                }
            };
            let item = ptable.items().get(label).ok_or_else(|| ParseError::UnknownItem {
                line,
                label: label.to_string(),
            })?;
            let quantity: u64 = match value.parse() {
                Ok(q) if q > 0 => q,
                _ => {
                    return Err(ParseError::InvalidQuantity {
                        line,
                        label: label.to_string(),
                        value: value.to_string(),
                    })
                }
            };
            merge_entry(&mut entries, item, quantity, quantity * ptable.profit(item));
        }
        transactions.push(Transaction::new(tid, entries));
    }
    Ok(Database::new(
        transactions,
        ptable.items().clone(),
        Some(ptable.profits().to_vec()),
    ))
}

/// Parses the utility-annotated format `labels...:tu:utilities...`.
///
/// Per-item utilities are taken verbatim (no profit table); the stated
/// transaction utility must equal their sum.
pub fn parse_utility_format(text: &str) -> Result<Database, ParseError> {
    let mut items = ItemTable::new();
    let mut transactions = Vec::new();
    for (line, content) in content_lines(text) {
        let tid = transactions.len() as u32 + 1;
        let mut sections = content.split(':');
        let (labels, stated, utilities) = match (
            sections.next(),
            sections.next(),
            sections.next(),
            sections.next(),
        ) {
            (Some(labels), Some(stated), Some(utilities), None) => (labels, stated, utilities),
            _ => return Err(ParseError::MalformedUtilityLine { line }),
        };
        let labels: Vec<&str> = labels.split_whitespace().collect();
        let values: Vec<&str> = utilities.split_whitespace().collect();
        if labels.is_empty() || labels.len() != values.len() {
            return Err(ParseError::CountMismatch {
                line,
                labels: labels.len(),
                utilities: values.len(),
            });
        }
        let stated: Money = stated
            .trim()
            .parse()
            .map_err(|_| ParseError::InvalidUtility {
                line,
                value: stated.trim().to_string(),
            })?;
        let mut entries: Vec<Entry> = Vec::new();
        let mut sum: Money = 0;
        for (label, value) in labels.iter().zip(&values) {
            let utility: Money = value.parse().map_err(|_| ParseError::InvalidUtility {
                line,
                value: value.to_string(),
            })?;
            sum += utility;
            let item = items.intern(label);
            merge_entry(&mut entries, item, 1, utility);
        }
        if sum != stated {
            return Err(ParseError::TransactionUtilityMismatch {
                line,
                stated,
                actual: sum,
            });
        }
        transactions.push(Transaction::new(tid, entries));
    }
    Ok(Database::new(transactions, items, None))
}

fn merge_entry(entries: &mut Vec<Entry>, item: ItemId, quantity: u64, utility: Money) {
    if let Some(existing) = entries.iter_mut().find(|e| e.item == item) {
        existing.quantity += quantity;
        existing.utility += utility;
    } else {
        entries.push(Entry {
            item,
            quantity,
            utility,
        });
    }
}
