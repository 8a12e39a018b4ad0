//! Seeded synthetic database generation.
//!
//! Quantities, unit profits and transaction lengths are drawn from
//! log-normal distributions centred on the midpoint of their target range
//! (`mu = ln(midpoint)`, `sigma = 0.5`), rounded to the nearest integer and
//! clamped. Runs are deterministic for a fixed seed.

use super::{Database, Entry, ItemTable, Money, ProfitTable, Transaction};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, LogNormal};
use thiserror::Error;

/// Quantities are drawn in this inclusive range.
pub const QUANTITY_RANGE: (u64, u64) = (1, 5);
/// Unit profits are drawn in this inclusive range.
pub const PROFIT_RANGE: (Money, Money) = (1, 1000);

const SIGMA: f64 = 0.5;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("{0} must be positive")]
    NonPositiveParam(&'static str),
    #[error("avg_transaction_length ({avg_len}) must not exceed n_items ({n_items})")]
    AvgLengthExceedsItems { avg_len: usize, n_items: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct GeneratorParams {
    pub n_transactions: usize,
    pub n_items: usize,
    pub avg_transaction_length: usize,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.n_transactions == 0 {
            return Err(GeneratorError::NonPositiveParam("n_transactions"));
        }
        if self.n_items == 0 {
            return Err(GeneratorError::NonPositiveParam("n_items"));
        }
        if self.avg_transaction_length == 0 {
            return Err(GeneratorError::NonPositiveParam("avg_transaction_length"));
        }
        if self.avg_transaction_length > self.n_items {
            return Err(GeneratorError::AvgLengthExceedsItems {
                avg_len: self.avg_transaction_length,
                n_items: self.n_items,
            });
        }
        Ok(())
    }
}

fn draw_clamped(rng: &mut ChaCha8Rng, dist: LogNormal<f64>, lo: u64, hi: u64) -> u64 {
    (dist.sample(rng).round() as i64).clamp(lo as i64, hi as i64) as u64
}

/// Generates a database of `n_transactions` over `n_items` distinct items,
/// deterministically for the given seed.
pub fn generate_synthetic(params: &GeneratorParams) -> Result<(Database, ProfitTable), GeneratorError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut items = ItemTable::new();
    for k in 1..=params.n_items {
        items.intern(&format!("i{k}"));
    }

    let profit_mid = (PROFIT_RANGE.0 + PROFIT_RANGE.1) as f64 / 2.0;
    let profit_dist = LogNormal::new(profit_mid.ln(), SIGMA).expect("finite parameters");
    let profits: Vec<Money> = (0..params.n_items)
        .map(|_| draw_clamped(&mut rng, profit_dist, PROFIT_RANGE.0, PROFIT_RANGE.1))
        .collect();

    let len_dist = LogNormal::new((params.avg_transaction_length as f64).ln(), SIGMA)
        .expect("finite parameters");
    let qty_mid = (QUANTITY_RANGE.0 + QUANTITY_RANGE.1) as f64 / 2.0;
    let qty_dist = LogNormal::new(qty_mid.ln(), SIGMA).expect("finite parameters");

    let mut transactions = Vec::with_capacity(params.n_transactions);
    for tid in 1..=params.n_transactions {
        let len = draw_clamped(&mut rng, len_dist, 1, params.n_items as u64) as usize;
        let mut chosen = rand::seq::index::sample(&mut rng, params.n_items, len).into_vec();
        chosen.sort_unstable();
        let entries = chosen
            .into_iter()
            .map(|idx| {
                let quantity = draw_clamped(&mut rng, qty_dist, QUANTITY_RANGE.0, QUANTITY_RANGE.1);
                let item = super::ItemId(idx as u32);
                Entry {
                    item,
                    quantity,
                    utility: quantity * profits[idx],
                }
            })
            .collect();
        transactions.push(Transaction::new(tid as u32, entries));
    }

    let ptable = ProfitTable::new(items.clone(), profits.clone());
    let db = Database::new(transactions, items, Some(profits));
    Ok((db, ptable))
}
