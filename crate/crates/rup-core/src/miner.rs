//! Depth-first mining of recent high-utility patterns over the conceptual
//! set-enumeration tree.
//!
//! Three variants share the same output and differ only in how much of the
//! tree they visit:
//!
//! - `baseline`: unpromising items are dropped up front (TWU + recency
//!   filter), subtrees are cut when the node's recency is below threshold or
//!   when `IU + RU` cannot reach the utility threshold;
//! - `rup1`: additionally skips joining sibling pairs whose pairwise TWU in
//!   the [`crate::eucs::Eucs`] is below the utility threshold;
//! - `rup2`: additionally discards freshly joined lists that are empty or
//!   whose recency is below threshold, before they enter the search.
//!
//! A node counts as visited when its RU-list is examined at the top of the
//! search loop; single-item lists count. This makes the visited-node counts
//! monotone across variants on every input.

use crate::dataset::{
    compute_item_recency, compute_item_twu, total_utility, Database, DecayFactor, ItemId, Money,
};
use crate::eucs::{build_eucs, eucp_pass, Eucs};
use crate::rulist::{build_initial_rulists, build_total_order, join, RuList, TotalOrder};
use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Absolute tolerance for recency threshold comparisons, guarding against
/// float accumulation order.
pub const RECENCY_EPS: f64 = 1e-9;

/// `x >= threshold` up to [`RECENCY_EPS`].
pub fn recency_ge(x: f64, threshold: f64) -> bool {
    x >= threshold - RECENCY_EPS
}

#[derive(Debug, Error, PartialEq)]
pub enum MinerError {
    #[error("minimum recency threshold must be finite and non-negative, got {0}")]
    InvalidMinRecency(f64),
    #[error("minimum utility must be a fraction in [0, 1], got {0}")]
    InvalidMinUtil(f64),
    #[error("recency ratio is undefined when there are no high-utility patterns")]
    UndefinedRatio,
}

/// Which pruning strategies run. The TWU+recency item filter, the recency
/// subtree cut and the `IU + RU` upper bound are constitutive and always on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Baseline,
    Rup1,
    Rup2,
}

impl Variant {
    pub fn uses_eucp(self) -> bool {
        matches!(self, Variant::Rup1 | Variant::Rup2)
    }

    pub fn uses_list_check(self) -> bool {
        matches!(self, Variant::Rup2)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Baseline => "baseline",
            Variant::Rup1 => "rup1",
            Variant::Rup2 => "rup2",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "baseline" => Ok(Variant::Baseline),
            "rup1" => Ok(Variant::Rup1),
            "rup2" => Ok(Variant::Rup2),
            other => Err(format!("unknown algorithm \"{other}\" (expected baseline, rup1 or rup2)")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MinerConfig {
    pub delta: DecayFactor,
    pub min_re: f64,
    /// Utility threshold as a fraction of the database's total utility.
    pub min_util: f64,
    /// Absolute utility threshold overriding `min_util` when set.
    pub abs_util: Option<f64>,
    pub variant: Variant,
}

impl MinerConfig {
    pub fn new(delta: DecayFactor, min_re: f64, min_util: f64, variant: Variant) -> Result<Self, MinerError> {
        if !min_re.is_finite() || min_re < 0.0 {
            return Err(MinerError::InvalidMinRecency(min_re));
        }
        if !min_util.is_finite() || !(0.0..=1.0).contains(&min_util) {
            return Err(MinerError::InvalidMinUtil(min_util));
        }
        Ok(Self {
            delta,
            min_re,
            min_util,
            abs_util: None,
            variant,
        })
    }

    pub fn with_abs_util(mut self, abs_util: f64) -> Self {
        self.abs_util = Some(abs_util);
        self
    }

    /// The absolute utility threshold for a database of total utility `tu`.
    pub fn min_util_abs(&self, tu: Money) -> f64 {
        self.abs_util.unwrap_or(self.min_util * tu as f64)
    }
}

/// A discovered recent high-utility pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct PatternResult {
    /// Items in ascending total order.
    pub items: Vec<ItemId>,
    pub utility: Money,
    pub recency: f64,
}

/// Search instrumentation. `elapsed` aside, identical inputs produce
/// identical stats.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MiningStats {
    pub promising_items: usize,
    pub visited_nodes: u64,
    pub rulists_built: u64,
    pub eucp_skips: u64,
    pub recency_prunes: u64,
    pub ub_prunes: u64,
    pub empty_list_skips: u64,
    pub elapsed: Duration,
}

impl MiningStats {
    /// Equality ignoring wall-clock time.
    pub fn same_counts(&self, other: &MiningStats) -> bool {
        let a = (
            self.promising_items,
            self.visited_nodes,
            self.rulists_built,
            self.eucp_skips,
            self.recency_prunes,
            self.ub_prunes,
            self.empty_list_skips,
        );
        let b = (
            other.promising_items,
            other.visited_nodes,
            other.rulists_built,
            other.eucp_skips,
            other.recency_prunes,
            other.ub_prunes,
            other.empty_list_skips,
        );
        a == b
    }
}

/// Everything the recursive search needs besides the lists themselves.
pub struct SearchContext<'a> {
    pub min_util_abs: f64,
    pub min_re: f64,
    pub use_eucp: bool,
    pub use_list_check: bool,
    pub eucs: Option<&'a Eucs>,
}

/// Keeps item `i` iff `TWU(i)` reaches the absolute utility threshold and
/// `r(i)` reaches the recency threshold (the single-item recent high
/// transaction-weighted utilization patterns). Returns the kept items in id
/// order together with the full per-item TWU and recency maps.
pub fn filter_promising_items(
    db: &Database,
    config: &MinerConfig,
) -> (Vec<ItemId>, Vec<Money>, Vec<f64>) {
    let threshold = config.min_util_abs(total_utility(db));
    let twu = compute_item_twu(db);
    let recency = compute_item_recency(db, config.delta);
    let promising = db
        .items()
        .ids()
        .filter(|i| twu[i.index()] as f64 >= threshold && recency_ge(recency[i.index()], config.min_re))
        .collect();
    (promising, twu, recency)
}

/// The recursive search over one prefix's extensions.
///
/// For each extension the pattern is output when both thresholds hold; its
/// subtree is explored only when the recency threshold and the `IU + RU`
/// upper bound allow it. Child lists are produced by joining with later
/// siblings, subject to the co-occurrence check and, for `rup2`, the
/// freshly-joined-list check. Recursion depth is bounded by the number of
/// promising items.
pub fn rhup_search(
    prefix: Option<&RuList>,
    extensions: &[RuList],
    ctx: &SearchContext<'_>,
    stats: &mut MiningStats,
    out: &mut Vec<PatternResult>,
) {
    for (idx, xa) in extensions.iter().enumerate() {
        stats.visited_nodes += 1;
        let (re, iu, ru) = xa.summarize();
        if !xa.is_empty() && iu as f64 >= ctx.min_util_abs && recency_ge(re, ctx.min_re) {
            out.push(PatternResult {
                items: xa.pattern().to_vec(),
                utility: iu,
                recency: re,
            });
        }
        if !recency_ge(re, ctx.min_re) {
            stats.recency_prunes += 1;
            continue;
        }
        if ((iu + ru) as f64) < ctx.min_util_abs {
            stats.ub_prunes += 1;
            continue;
        }
        let mut children = Vec::new();
        for xb in &extensions[idx + 1..] {
            if ctx.use_eucp {
                let eucs = ctx.eucs.expect("EUCS is built whenever EUCP is enabled");
                if !eucp_pass(xa.last_item(), xb.last_item(), ctx.min_util_abs, eucs) {
                    stats.eucp_skips += 1;
                    continue;
                }
            }
            let child = join(prefix, xa, xb).expect("siblings extend the same prefix");
            if ctx.use_list_check {
                if child.is_empty() {
                    stats.empty_list_skips += 1;
                    continue;
                }
                if !recency_ge(child.re(), ctx.min_re) {
                    stats.recency_prunes += 1;
                    continue;
                }
            }
            stats.rulists_built += 1;
            children.push(child);
        }
        if !children.is_empty() {
            rhup_search(Some(xa), &children, ctx, stats, out);
        }
    }
}

/// Mines the complete set of recent high-utility patterns.
///
/// The result is exactly the set of supported patterns whose utility reaches
/// `minUtil * TU` and whose recency reaches `minRe`, sorted by length and
/// then lexicographically in the total order; it is identical for all three
/// variants.
pub fn mine(db: &Database, config: &MinerConfig) -> (Vec<PatternResult>, MiningStats) {
    let start = Instant::now();
    let mut stats = MiningStats::default();

    let min_util_abs = config.min_util_abs(total_utility(db));
    let (promising, twu, _) = filter_promising_items(db, config);
    stats.promising_items = promising.len();

    let twu_map: HashMap<ItemId, Money> = promising.iter().map(|&i| (i, twu[i.index()])).collect();
    let order = build_total_order(&twu_map);
    let promising_set: HashSet<ItemId> = promising.into_iter().collect();
    let initial = build_initial_rulists(db, &promising_set, &order, config.delta);
    stats.rulists_built += initial.len() as u64;
    let eucs = config
        .variant
        .uses_eucp()
        .then(|| build_eucs(db, &promising_set));

    let ctx = SearchContext {
        min_util_abs,
        min_re: config.min_re,
        use_eucp: config.variant.uses_eucp(),
        use_list_check: config.variant.uses_list_check(),
        eucs: eucs.as_ref(),
    };
    let mut out = Vec::new();
    rhup_search(None, &initial, &ctx, &mut stats, &mut out);

    sort_canonically(&mut out, &order);
    stats.elapsed = start.elapsed();
    (out, stats)
}

/// Ascending length, then lexicographic in the total order.
pub fn sort_canonically(results: &mut [PatternResult], order: &TotalOrder) {
    results.sort_by(|a, b| {
        a.items.len().cmp(&b.items.len()).then_with(|| {
            let ra = a.items.iter().map(|&i| order.rank(i).expect("result items are ranked"));
            let rb = b.items.iter().map(|&i| order.rank(i).expect("result items are ranked"));
            ra.cmp(rb)
        })
    });
}

/// `|RHUPs| / |HUPs| * 100`, in percent. Errors when there are no HUPs.
pub fn recency_ratio(rhups: usize, hups: usize) -> Result<f64, MinerError> {
    if hups == 0 {
        return Err(MinerError::UndefinedRatio);
    }
    debug_assert!(rhups <= hups);
    Ok(rhups as f64 / hups as f64 * 100.0)
}
