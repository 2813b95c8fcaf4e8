//! `pisot`: enumerate Pisot numbers in intervals and certify or refute
//! additive relations among their conjugates, with exact arithmetic end to
//! end.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use pisot_core::interval::RationalInterval;
use pisot_core::relations::{test_relation, RelationType};

use pisot_cli::format::{
    parse_rational, poly_from_coeff_str, poly_line, record_line, verdict_line, VerdictJson,
};
use pisot_cli::pipeline::{run_pipeline, verify_paper_tables, Family, PipelineConfig};

/// Worker-count environment variable consulted when --jobs is absent.
const WORKERS_ENV: &str = "PISOT_WORKERS";

#[derive(Parser)]
#[command(
    name = "pisot",
    version,
    about = "Exact enumeration of Pisot numbers and certification of additive \
             relations among their conjugates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all Pisot numbers of one degree in a closed interval [A, B].
    Enumerate {
        /// Degree of the minimal polynomials to search.
        #[arg(long)]
        degree: usize,
        /// Interval endpoints, inclusive; rationals as p/q, decimals, or integers.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        interval: Vec<String>,
        /// Output file for the record lines.
        #[arg(long)]
        out: PathBuf,
    },
    /// Exactly test additive relations among the conjugates of a polynomial.
    Check {
        /// Descending integer coefficients, e.g. "1 -2 0 0 1 -1".
        #[arg(long)]
        poly: String,
        /// One of sum3zero, eqsum2, paireq, eqsum3, sum4zero, or all.
        #[arg(long)]
        relation: String,
        /// Emit a JSON object instead of verdict lines.
        #[arg(long)]
        json: bool,
    },
    /// Run the enumeration, sieve, prefilter, and exact-test pipeline.
    Pipeline {
        /// Relation family: three, four, or both.
        #[arg(long)]
        family: String,
        /// Largest degree to enumerate (clipped to the height bound).
        #[arg(long)]
        max_degree: usize,
        /// Worker threads; defaults to PISOT_WORKERS or the CPU count.
        #[arg(long)]
        jobs: Option<usize>,
        /// Skip the documented degree restrictions (slower, same results).
        #[arg(long)]
        no_combinatorial: bool,
        /// Output directory for reports and record files.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the desk-scale pipeline and compare against the embedded
    /// reference tables; exits 2 on any mismatch.
    VerifyPaper {
        /// Largest degree to verify (at least 3; 8 covers every gated table).
        #[arg(long)]
        max_degree: usize,
        /// Worker threads; defaults to PISOT_WORKERS or the CPU count.
        #[arg(long)]
        jobs: Option<usize>,
        /// Artifact directory; a temporary directory when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    match real_main() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn real_main() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate {
            degree,
            interval,
            out,
        } => {
            let lo = parse_rational(&interval[0])?;
            let hi = parse_rational(&interval[1])?;
            let one = num_rational::BigRational::from_integer(1.into());
            if hi <= one {
                bail!("bad interval: Pisot numbers exceed 1, nothing to find at or below it");
            }
            // Every Pisot number exceeds 1, so clip the requested range to
            // the open side of 1 and keep the endpoints inclusive otherwise.
            let (lo, lo_closed) = if lo <= one { (one, false) } else { (lo, true) };
            let iv = RationalInterval::new(lo, hi, lo_closed, true)
                .map_err(|e| anyhow!("bad interval: {e}"))?;
            let records = pisot_core::enumerate::enumerate_pisot(degree, &iv)
                .map_err(|e| anyhow!("enumeration failed: {e}"))?;
            let mut lines = String::new();
            for rec in &records {
                lines.push_str(&record_line(rec));
                lines.push('\n');
            }
            std::fs::write(&out, lines)
                .with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {} records to {}", records.len(), out.display());
            Ok(0)
        }
        Command::Check {
            poly,
            relation,
            json,
        } => {
            let p = poly_from_coeff_str(&poly)?;
            let d = p.deg();
            let relations: Vec<RelationType> = if relation == "all" {
                RelationType::ALL
                    .into_iter()
                    .filter(|r| r.arity() <= d)
                    .collect()
            } else {
                let r = RelationType::from_tag(&relation)
                    .ok_or_else(|| anyhow!("unknown relation {relation:?}"))?;
                if r.arity() > d {
                    bail!(
                        "degree below the relation arity: {} needs {} conjugates, \
                         a degree-{d} polynomial has {d}",
                        r.tag(),
                        r.arity()
                    );
                }
                vec![r]
            };
            if relations.is_empty() {
                bail!("degree {d} is below the arity of every relation");
            }
            let mut verdicts = Vec::new();
            for r in relations {
                verdicts.push(
                    test_relation(&p, r)
                        .map_err(|e| anyhow!("testing {} failed: {e}", r.tag()))?,
                );
            }
            if json {
                let mirror: Vec<VerdictJson> = verdicts.iter().map(VerdictJson::from).collect();
                let obj = serde_json::json!({
                    "poly": poly_line(&p),
                    "degree": d,
                    "verdicts": mirror,
                });
                println!("{}", serde_json::to_string_pretty(&obj)?);
            } else {
                println!("{}", poly_line(&p));
                for v in &verdicts {
                    println!("{}", verdict_line(v));
                }
            }
            Ok(0)
        }
        Command::Pipeline {
            family,
            max_degree,
            jobs,
            no_combinatorial,
            out,
        } => {
            let families = parse_family(&family)?;
            let cfg = PipelineConfig {
                families,
                max_degree,
                workers: worker_count(jobs)?,
                use_combinatorial: !no_combinatorial,
                out_dir: out,
            };
            let (report, _timings) = run_pipeline(&cfg)?;
            for (name, fam) in &report.families {
                println!(
                    "{name}-term family: degrees {:?}, {} records after the exact sieve",
                    fam.degrees, fam.total
                );
                for (tag, sols) in &fam.solutions {
                    println!(
                        "  {tag}: {} survivor(s), {} solution(s){}",
                        fam.exact_tests.get(tag).copied().unwrap_or(0),
                        sols.len(),
                        if sols.is_empty() {
                            String::new()
                        } else {
                            format!(" [{}]", sols.join("; "))
                        }
                    );
                }
            }
            println!("report written to {}", cfg.out_dir.join("report.json").display());
            Ok(0)
        }
        Command::VerifyPaper {
            max_degree,
            jobs,
            out,
        } => {
            if max_degree < 3 {
                bail!("--max-degree must be at least 3 to verify any table");
            }
            let out_dir = out.unwrap_or_else(|| {
                std::env::temp_dir().join(format!("pisot-verify-{}", std::process::id()))
            });
            let mut families = vec![Family::Three];
            if max_degree >= 4 {
                families.push(Family::Four);
            }
            let cfg = PipelineConfig {
                families,
                max_degree,
                workers: worker_count(jobs)?,
                use_combinatorial: true,
                out_dir,
            };
            let (report, _timings) = run_pipeline(&cfg)?;
            let checks = verify_paper_tables(&report, &cfg.out_dir)?;
            let mut failed = 0usize;
            for check in &checks {
                println!(
                    "{}: {} ({})",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    check.detail
                );
                if !check.pass {
                    failed += 1;
                }
            }
            println!(
                "{} of {} table checks passed; artifacts in {}",
                checks.len() - failed,
                checks.len(),
                cfg.out_dir.display()
            );
            Ok(if failed == 0 { 0 } else { 2 })
        }
    }
}

fn parse_family(s: &str) -> Result<Vec<Family>> {
    match s {
        "three" => Ok(vec![Family::Three]),
        "four" => Ok(vec![Family::Four]),
        "both" => Ok(vec![Family::Three, Family::Four]),
        other => bail!("unknown family {other:?}; use three, four, or both"),
    }
}

fn worker_count(flag: Option<usize>) -> Result<usize> {
    if let Some(n) = flag {
        if n == 0 {
            bail!("--jobs must be at least 1");
        }
        return Ok(n);
    }
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .with_context(|| format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("{WORKERS_ENV} must be at least 1");
        }
        return Ok(n);
    }
    Ok(std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1))
}
