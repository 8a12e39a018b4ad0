//! `rup` — mine recent high-utility patterns from temporal transaction
//! databases, generate synthetic data, and compare recent against
//! unrestricted high-utility patterns.

mod report;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rup_core::dataset::{
    generate_synthetic, parse_profit_table, parse_transactions, parse_utility_format,
    to_native_profits, to_native_transactions, Database, DecayFactor, GeneratorParams,
};
use rup_core::miner::{mine, recency_ratio, MinerConfig, Variant};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rup", version, about = "Recent high-utility pattern mining")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine recent high-utility patterns from a database
    Mine(MineArgs),
    /// Mine twice (given min-rec, and min-rec 0) and report the recency ratio
    Compare(CompareArgs),
    /// Generate a seeded synthetic database in the native format
    Gen(GenArgs),
}

#[derive(Args)]
struct DataArgs {
    /// Transaction database file
    #[arg(long)]
    db: PathBuf,
    /// Input format of the database file
    #[arg(long, value_parser = ["native", "utility"])]
    format: String,
    /// Profit table file (required with --format native)
    #[arg(long)]
    profits: Option<PathBuf>,
    /// Time-decay factor in (0, 1]
    #[arg(long)]
    delta: f64,
    /// Minimum recency threshold (>= 0)
    #[arg(long)]
    min_rec: f64,
    /// Minimum utility threshold as a fraction of the total utility
    #[arg(long)]
    min_util: f64,
    /// Absolute minimum utility, overriding --min-util
    #[arg(long)]
    abs_util: Option<f64>,
    /// Algorithm variant
    #[arg(long, default_value = "rup2")]
    algo: Variant,
}

#[derive(Args)]
struct MineArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Write the discovered patterns to this file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the search statistics (JSON) to this file
    #[arg(long)]
    stats_out: Option<PathBuf>,
    /// Write patterns as CSV instead of JSON
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Write the comparison report (JSON) to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    transactions: usize,
    #[arg(long)]
    items: usize,
    #[arg(long)]
    avg_len: usize,
    #[arg(long)]
    seed: u64,
    /// Output path for the transaction file
    #[arg(long)]
    out_db: PathBuf,
    /// Output path for the profit file
    #[arg(long)]
    out_profits: PathBuf,
}

impl DataArgs {
    fn load(&self) -> Result<Database> {
        let text = fs::read_to_string(&self.db)
            .with_context(|| format!("reading {}", self.db.display()))?;
        match self.format.as_str() {
            "native" => {
                // --profits presence is validated before loading
                let path = self.profits.as_ref().expect("validated");
                let profit_text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let ptable = parse_profit_table(&profit_text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                Ok(parse_transactions(&text, &ptable)
                    .with_context(|| format!("parsing {}", self.db.display()))?)
            }
            "utility" => Ok(parse_utility_format(&text)
                .with_context(|| format!("parsing {}", self.db.display()))?),
            other => bail!("unknown format {other}"),
        }
    }

    fn config(&self) -> Result<MinerConfig> {
        let delta = DecayFactor::new(self.delta)?;
        let mut config = MinerConfig::new(delta, self.min_rec, self.min_util, self.algo)?;
        if let Some(abs) = self.abs_util {
            if !abs.is_finite() || abs < 0.0 {
                bail!("--abs-util must be finite and non-negative");
            }
            config = config.with_abs_util(abs);
        }
        Ok(config)
    }
}

const EXIT_USAGE: u8 = 2;

/// Flag combinations clap cannot express are usage errors (exit 2), checked
/// before any I/O.
fn validate_usage(data: &DataArgs) -> Result<(), String> {
    if data.format == "native" && data.profits.is_none() {
        return Err("--format native requires --profits".to_string());
    }
    if !(0.0..=1.0).contains(&data.min_util) {
        return Err(format!(
            "--min-util must be a fraction in [0, 1], got {}",
            data.min_util
        ));
    }
    if data.min_rec < 0.0 || !data.min_rec.is_finite() {
        return Err(format!("--min-rec must be non-negative, got {}", data.min_rec));
    }
    Ok(())
}

fn write_or_print(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_mine(args: &MineArgs) -> Result<()> {
    let db = args.data.load()?;
    let config = args.data.config()?;
    let (patterns, stats) = mine(&db, &config);
    let rendered = if args.csv {
        report::patterns_csv(&db, &patterns)
    } else {
        report::patterns_json(&db, &patterns)
    };
    write_or_print(args.out.as_deref(), &rendered)?;
    if let Some(path) = &args.stats_out {
        fs::write(path, report::stats_json(&stats))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if args.out.is_some() {
        print!("{}", report::mine_report_json(&config, &patterns, &stats));
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<()> {
    let db = args.data.load()?;
    let config = args.data.config()?;
    let (rhups, _) = mine(&db, &config);
    let hup_config = MinerConfig {
        min_re: 0.0,
        ..config
    };
    let (hups, _) = mine(&db, &hup_config);
    let ratio = recency_ratio(rhups.len(), hups.len()).ok();
    let rendered = report::compare_report_json(&config, rhups.len(), hups.len(), ratio);
    write_or_print(args.out.as_deref(), &rendered)
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let params = GeneratorParams {
        n_transactions: args.transactions,
        n_items: args.items,
        avg_transaction_length: args.avg_len,
        seed: args.seed,
    };
    let (db, _) = generate_synthetic(&params)?;
    fs::write(&args.out_db, to_native_transactions(&db))
        .with_context(|| format!("writing {}", args.out_db.display()))?;
    let profits = to_native_profits(&db).expect("generated databases carry profits");
    fs::write(&args.out_profits, profits)
        .with_context(|| format!("writing {}", args.out_profits.display()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Mine(args) => match validate_usage(&args.data) {
            Err(msg) => {
                eprintln!("usage error: {msg}");
                return ExitCode::from(EXIT_USAGE);
            }
            Ok(()) => cmd_mine(args),
        },
        Command::Compare(args) => match validate_usage(&args.data) {
            Err(msg) => {
                eprintln!("usage error: {msg}");
                return ExitCode::from(EXIT_USAGE);
            }
            Ok(()) => cmd_compare(args),
        },
        Command::Gen(args) => {
            let params_ok = args.transactions > 0 && args.items > 0 && args.avg_len > 0 && args.avg_len <= args.items;
            if !params_ok {
                eprintln!(
                    "usage error: --transactions, --items and --avg-len must be positive and --avg-len <= --items"
                );
                return ExitCode::from(EXIT_USAGE);
            }
            cmd_gen(args)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
