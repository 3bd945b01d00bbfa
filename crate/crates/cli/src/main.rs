use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use ttlink::{
    braids_equal, reduction_identity_pair, twisted_torus_braid, unlink_consistent, unlink_verdict,
    BraidWord, TwistedTorusParams, DEFAULT_STRAND_LIMIT,
};
use ttlink_cli::{braid_svg, run_scan, ScanConfig};

/// Build, probe and classify twisted torus links T(p,q,r,s).
#[derive(Parser)]
#[command(name = "ttlink", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the braid word whose closure is T(p,q,r,s)
    Braid {
        /// Parameters p,q,r,s (for example 5,2,3,-1)
        params: String,
        /// Also write an SVG strand diagram to this file
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Component count, linking matrix and Jones unlink comparison, as JSON
    Invariants {
        /// Parameters p,q,r,s of a twisted torus link
        params: Option<String>,
        /// A raw braid word such as "3: 1 2 -1" instead of parameters
        #[arg(long, conflicts_with = "params")]
        word: Option<String>,
        /// Strand limit above which the Jones comparison is skipped
        #[arg(long)]
        jones_limit: Option<usize>,
    },
    /// Arithmetic unlink verdict for T(p,q,r,s), as JSON
    Classify {
        /// Parameters p,q,r,s of a twisted torus link
        params: String,
    },
    /// Cross-check the classifier against the invariant oracle over a box
    Scan {
        #[arg(long, default_value_t = 8)]
        p_max: i64,
        #[arg(long, default_value_t = -4, allow_negative_numbers = true)]
        s_min: i64,
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        s_max: i64,
        #[arg(long, default_value_t = 2)]
        gcd_min: i64,
        /// Extend the block range from r <= p to r <= p + q
        #[arg(long)]
        r_beyond_p: bool,
        /// Strand limit above which the Jones comparison is skipped
        #[arg(long)]
        jones_limit: Option<usize>,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Emit a JSON line for every tuple, not just the findings
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two braid words are the same group element
    Equal {
        left: String,
        right: String,
    },
    /// Certify the telescoping reduction identity on 2n+2 strands
    VerifyLemma {
        n: usize,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

/// Strand limit for Jones computations: flag, then the TTLINK_JONES_LIMIT
/// environment variable, then the library default.
fn jones_limit(flag: Option<usize>) -> anyhow::Result<usize> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var("TTLINK_JONES_LIMIT") {
        Ok(text) => text
            .parse()
            .map_err(|_| anyhow::anyhow!("TTLINK_JONES_LIMIT must be an integer, got {text:?}")),
        Err(_) => Ok(DEFAULT_STRAND_LIMIT),
    }
}

fn dispatch(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::Braid { params, svg } => {
            let params: TwistedTorusParams = params.parse()?;
            let braid = twisted_torus_braid(&params);
            println!("{braid}");
            if let Some(path) = svg {
                std::fs::write(&path, braid_svg(&braid))?;
            }
            Ok(0)
        }
        Command::Invariants {
            params,
            word,
            jones_limit: flag,
        } => {
            let braid = match (params, word) {
                (Some(p), None) => twisted_torus_braid(&p.parse::<TwistedTorusParams>()?),
                (None, Some(w)) => w.parse::<BraidWord>()?,
                _ => anyhow::bail!("give either p,q,r,s or --word"),
            };
            let report = unlink_consistent(&braid, jones_limit(flag)?)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(0)
        }
        Command::Classify { params } => {
            let verdict = unlink_verdict(&params.parse::<TwistedTorusParams>()?)?;
            println!("{}", serde_json::to_string(&verdict)?);
            Ok(0)
        }
        Command::Scan {
            p_max,
            s_min,
            s_max,
            gcd_min,
            r_beyond_p,
            jones_limit: flag,
            jobs,
            json,
        } => {
            let config = ScanConfig {
                p_max,
                s_min,
                s_max,
                gcd_min,
                r_beyond_p,
                jones_limit: jones_limit(flag)?,
                jobs,
            };
            let report = run_scan(&config)?;
            for record in &report.records {
                if json || record.finding.is_some() {
                    println!("{}", serde_json::to_string(record)?);
                }
            }
            println!("{}", report.summary_json());
            Ok(if report.real_discrepancies > 0 { 2 } else { 0 })
        }
        Command::Equal { left, right } => {
            let a: BraidWord = left.parse()?;
            let b: BraidWord = right.parse()?;
            println!(
                "{}",
                if braids_equal(&a, &b)? {
                    "equal"
                } else {
                    "different"
                }
            );
            Ok(0)
        }
        Command::VerifyLemma { n } => {
            if n == 0 {
                anyhow::bail!("n must be at least 1");
            }
            let mut all_ok = true;
            for k in 0..=(2 * n - 1) {
                let (lhs, rhs) = reduction_identity_pair(n, k)?;
                let ok = braids_equal(&lhs, &rhs)?;
                all_ok &= ok;
                println!(
                    "n={n} k={k}: {}",
                    if ok { "certified" } else { "FAILED" }
                );
            }
            Ok(if all_ok { 0 } else { 2 })
        }
    }
}
