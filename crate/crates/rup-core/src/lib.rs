//! Mining of recent high-utility patterns (RHUPs) in temporal quantitative
//! transaction databases.
//!
//! A pattern is a recent high-utility pattern when its utility reaches a
//! minimum fraction of the database's total utility *and* its time-decayed
//! recency reaches a minimum recency threshold. Transaction identifiers act
//! as logical timestamps: the recency of transaction `T_q` in a database of
//! `n` transactions is `(1 - delta)^(n - q)` for a user-chosen decay factor
//! `delta` in `(0, 1]`.
//!
//! The crate is organised around the mining pipeline:
//!
//! - [`dataset`]: databases, profit tables, parsing, scoring (utility, TWU,
//!   recency) and a seeded synthetic generator.
//! - [`rulist`]: the vertical recency-utility list, its construction for
//!   single items and the join producing k-item lists.
//! - [`eucs`]: the pairwise TWU co-occurrence structure used for
//!   co-occurrence pruning.
//! - [`miner`]: the depth-first search over the set-enumeration tree with
//!   the five pruning strategies and search statistics.
//! - [`oracle`]: an exhaustive enumerator used as ground truth in tests.

pub mod dataset;
pub mod eucs;
pub mod miner;
pub mod oracle;
pub mod rulist;
