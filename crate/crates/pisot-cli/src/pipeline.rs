//! End-to-end orchestration: degree bounds, target intervals, shard
//! planning, parallel enumeration with a resume journal, the exact interval
//! sieve, degree admissibility, the numeric prefilter, exact relation
//! tests, and deterministic artifact files.
//!
//! Artifact layout under the output directory:
//!   report.json, timings.json, counts.csv
//!   <family>/journal.txt
//!   <family>/shards/<job_id>.txt       raw enumeration per shard
//!   <family>/records/dNN.txt           sieved records per degree
//!   <family>/survivors-<tag>.txt       prefilter-flagged records
//!   <family>/verdicts-<tag>.txt        record + verdict line pairs
//!   <family>/solutions-<tag>.txt       records whose exact test holds
//!
//! Everything except timings.json is byte-deterministic: shard outputs
//! depend only on the job, and all merges are sorted canonically.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::{BufRead, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::BigRational;
use pisot_core::enumerate::enumerate_pisot;
use pisot_core::pisot::PisotRecord;
use pisot_core::plan::{
    admissible_degrees, default_shard_base, degree_bound, shard_plan, target_interval, AlphaMax,
    ShardJob, TargetInterval,
};
use pisot_core::relations::{
    checked_resultants, default_prefilter_threshold, numeric_prefilter, test_relation_with,
    RelationType, RelationVerdict,
};

use crate::format::{parse_record_line, poly_line, record_line, verdict_line};
use crate::report::{write_atomic, FamilyReport, PipelineReport, Timings};
use crate::tables;

/// A relation family: the three-term relations searched below 2, or the
/// four-term relations searched below 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Three,
    Four,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Three => "three",
            Family::Four => "four",
        }
    }

    pub fn terms(self) -> u32 {
        match self {
            Family::Three => 3,
            Family::Four => 4,
        }
    }

    pub fn alpha_max_int(self) -> u32 {
        match self {
            Family::Three => 2,
            Family::Four => 3,
        }
    }

    pub fn alpha_max(self) -> BigRational {
        BigRational::from_integer(self.alpha_max_int().into())
    }

    pub fn relations(self) -> &'static [RelationType] {
        match self {
            Family::Three => &[RelationType::Sum3Zero, RelationType::EqSum2],
            Family::Four => &[
                RelationType::PairEq,
                RelationType::EqSum3,
                RelationType::Sum4Zero,
            ],
        }
    }

    /// Smallest degree worth enumerating: the minimum relation arity.
    pub fn min_degree(self) -> usize {
        match self {
            Family::Three => 3,
            Family::Four => 4,
        }
    }
}

/// Configuration for one pipeline invocation.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub families: Vec<Family>,
    pub max_degree: usize,
    pub workers: usize,
    pub use_combinatorial: bool,
    pub out_dir: PathBuf,
}

/// Runs the full pipeline and writes all artifacts. The returned report is
/// the same object serialized to report.json.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<(PipelineReport, Timings)> {
    if cfg.workers == 0 {
        bail!("worker count must be at least 1");
    }
    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))?;
    let mut timings = Timings {
        workers: cfg.workers,
        ..Timings::default()
    };
    let mut families = BTreeMap::new();
    for &family in &cfg.families {
        let report = run_family(cfg, family, &mut timings)?;
        families.insert(family.name().to_string(), report);
    }
    let report = PipelineReport { families };
    write_atomic(&cfg.out_dir.join("report.json"), &report.to_json())?;
    write_atomic(&cfg.out_dir.join("counts.csv"), &report.counts_csv())?;
    let timings_json = serde_json::to_string_pretty(&timings).expect("timings serialize");
    write_atomic(&cfg.out_dir.join("timings.json"), &(timings_json + "\n"))?;
    Ok((report, timings))
}

fn run_family(cfg: &PipelineConfig, family: Family, timings: &mut Timings) -> Result<FamilyReport> {
    let terms = family.terms();
    let alpha = family.alpha_max();
    let alpha_enum = AlphaMax::from_u32(family.alpha_max_int());
    let bound = degree_bound(terms, &alpha_enum).expect("family bound is well defined");
    if cfg.max_degree < family.min_degree() {
        bail!(
            "--max-degree {} is below the {}-term family's smallest degree {}",
            cfg.max_degree,
            terms,
            family.min_degree()
        );
    }
    let degrees: Vec<usize> = (family.min_degree()..=cfg.max_degree.min(bound)).collect();

    let mut targets: BTreeMap<usize, TargetInterval> = BTreeMap::new();
    for &d in &degrees {
        targets.insert(d, target_interval(d, terms, &alpha)?);
    }
    let covers: Vec<_> = degrees
        .iter()
        .map(|d| (*d, targets[d].cover.clone()))
        .collect();
    let jobs = shard_plan(&covers, &default_shard_base())?;

    let fam_dir = cfg.out_dir.join(family.name());
    let shards_dir = fam_dir.join("shards");
    let records_dir = fam_dir.join("records");
    fs::create_dir_all(&shards_dir)?;
    fs::create_dir_all(&records_dir)?;

    // Journal: append-only list of completed job ids under a config header.
    let header = format!(
        "# pisot-journal v1 family={} terms={} alpha_max={} max_degree={} base=1/10",
        family.name(),
        terms,
        family.alpha_max_int(),
        degrees.last().copied().unwrap_or(0),
    );
    let journal_path = fam_dir.join("journal.txt");
    let completed = read_journal(&journal_path, &header)?;

    // Parallel enumeration over the shard queue.
    let t0 = Instant::now();
    let in_memory = enumerate_shards(&jobs, &completed, cfg.workers, &shards_dir, &journal_path)?;
    timings.seconds.insert(
        format!("{}/enumerate", family.name()),
        t0.elapsed().as_secs_f64(),
    );

    // Deterministic merge plus exact interval sieve, one degree at a time.
    let t1 = Instant::now();
    let mut sieved: BTreeMap<usize, Vec<PisotRecord>> = BTreeMap::new();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &d in &degrees {
        let mut all: Vec<PisotRecord> = Vec::new();
        for (idx, job) in jobs.iter().enumerate() {
            if job.degree != d {
                continue;
            }
            match &in_memory[idx] {
                Some(records) => all.extend(records.iter().cloned()),
                None => all.extend(read_shard_file(&shards_dir, job)?),
            }
        }
        all.sort_by(|a, b| a.poly.cmp_desc_lex(&b.poly));
        all.dedup_by(|a, b| a.poly == b.poly);
        let target = &targets[&d];
        let mut kept = Vec::new();
        for rec in all {
            if target
                .contains_exact(&rec)
                .map_err(|e| anyhow!("exact sieve at degree {d}: {e}"))?
            {
                kept.push(rec);
            }
        }
        let mut lines = String::new();
        for rec in &kept {
            lines.push_str(&record_line(rec));
            lines.push('\n');
        }
        write_atomic(&records_dir.join(format!("d{d:02}.txt")), &lines)?;
        counts.insert(d, kept.len() as u64);
        sieved.insert(d, kept);
    }
    timings.seconds.insert(
        format!("{}/sieve", family.name()),
        t1.elapsed().as_secs_f64(),
    );

    // Admissible degrees per relation, clipped to what was enumerated.
    let mut admissible: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for &r in family.relations() {
        let degs: Vec<usize> = admissible_degrees(r, &alpha_enum, cfg.use_combinatorial)?
            .into_iter()
            .filter(|d| degrees.contains(d))
            .collect();
        admissible.insert(r.tag().to_string(), degs);
    }

    // Prefilter plus exact tests, fanned out across records.
    let t2 = Instant::now();
    let tasks: Vec<(&PisotRecord, Vec<RelationType>)> = degrees
        .iter()
        .flat_map(|d| {
            let rels: Vec<RelationType> = family
                .relations()
                .iter()
                .copied()
                .filter(|r| admissible[r.tag()].contains(d))
                .collect();
            sieved[d]
                .iter()
                .map(move |rec| (rec, rels.clone()))
                .collect::<Vec<_>>()
        })
        .filter(|(_, rels)| !rels.is_empty())
        .collect();
    let outcomes = test_records(&tasks, cfg.workers)?;
    timings.seconds.insert(
        format!("{}/relations", family.name()),
        t2.elapsed().as_secs_f64(),
    );

    // Collect survivor and solution files in task order (degree ascending,
    // then canonical polynomial order within a degree).
    let mut survivors: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut solutions: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut exact_tests: BTreeMap<String, u64> = BTreeMap::new();
    let mut survivor_lines: BTreeMap<String, String> = BTreeMap::new();
    let mut verdict_lines: BTreeMap<String, String> = BTreeMap::new();
    let mut solution_lines: BTreeMap<String, String> = BTreeMap::new();
    for &r in family.relations() {
        let tag = r.tag().to_string();
        survivors.insert(tag.clone(), Vec::new());
        solutions.insert(tag.clone(), Vec::new());
        exact_tests.insert(tag.clone(), 0);
        survivor_lines.insert(tag.clone(), String::new());
        verdict_lines.insert(tag.clone(), String::new());
        solution_lines.insert(tag, String::new());
    }
    for (task_idx, per_record) in outcomes.iter().enumerate() {
        let (rec, _) = &tasks[task_idx];
        for (flagged, verdict) in per_record {
            let tag = verdict.relation.tag().to_string();
            if !*flagged {
                continue;
            }
            survivors.get_mut(&tag).unwrap().push(poly_line(&rec.poly));
            survivor_lines
                .get_mut(&tag)
                .unwrap()
                .push_str(&format!("{}\n", record_line(rec)));
            *exact_tests.get_mut(&tag).unwrap() += 1;
            let pair = format!("{}\n{}\n", record_line(rec), verdict_line(verdict));
            verdict_lines.get_mut(&tag).unwrap().push_str(&pair);
            if verdict.holds {
                solutions.get_mut(&tag).unwrap().push(poly_line(&rec.poly));
                solution_lines.get_mut(&tag).unwrap().push_str(&pair);
            }
        }
    }
    for &r in family.relations() {
        let tag = r.tag();
        write_atomic(
            &fam_dir.join(format!("survivors-{tag}.txt")),
            &survivor_lines[tag],
        )?;
        write_atomic(
            &fam_dir.join(format!("verdicts-{tag}.txt")),
            &verdict_lines[tag],
        )?;
        write_atomic(
            &fam_dir.join(format!("solutions-{tag}.txt")),
            &solution_lines[tag],
        )?;
    }

    let total = counts.values().sum();
    Ok(FamilyReport {
        family: family.name().to_string(),
        terms,
        alpha_max: family.alpha_max_int().to_string(),
        max_degree: degrees.last().copied().unwrap_or(0),
        combinatorial_filters: cfg.use_combinatorial,
        degrees,
        counts,
        total,
        admissible,
        survivors,
        solutions,
        exact_tests,
        shard_jobs: jobs.len() as u64,
    })
}

/// Reads or initializes the journal; errors when an existing journal was
/// written under a different configuration.
fn read_journal(path: &Path, header: &str) -> Result<HashSet<String>> {
    let mut completed = HashSet::new();
    if path.exists() {
        let file = fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
        let mut lines = BufReader::new(file).lines();
        let first = lines
            .next()
            .transpose()?
            .ok_or_else(|| anyhow!("journal {} is empty", path.display()))?;
        if first != header {
            bail!(
                "journal {} was written by a different configuration; use a fresh output \
                 directory (found {:?}, expected {:?})",
                path.display(),
                first,
                header
            );
        }
        for line in lines {
            let line = line?;
            if let Some(id) = line.strip_prefix("done ") {
                completed.insert(id.to_string());
            }
        }
    } else {
        fs::write(path, format!("{header}\n"))
            .with_context(|| format!("creating {}", path.display()))?;
    }
    Ok(completed)
}

/// Enumerates all pending shards on a worker pool. Completed jobs are
/// skipped; their records are read back from their shard files later.
/// Returns, per job index, the in-memory records for jobs run this time.
fn enumerate_shards(
    jobs: &[ShardJob],
    completed: &HashSet<String>,
    workers: usize,
    shards_dir: &Path,
    journal_path: &Path,
) -> Result<Vec<Option<Vec<PisotRecord>>>> {
    let journal = Mutex::new(
        fs::OpenOptions::new()
            .append(true)
            .open(journal_path)
            .with_context(|| format!("opening journal {}", journal_path.display()))?,
    );
    let cursor = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Vec<PisotRecord>>>> =
        jobs.iter().map(|_| Mutex::new(None)).collect();
    let failures: Mutex<Vec<(String, String)>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..workers.min(jobs.len()).max(1) {
            scope.spawn(|| loop {
                let idx = cursor.fetch_add(1, Ordering::SeqCst);
                if idx >= jobs.len() {
                    return;
                }
                let job = &jobs[idx];
                if completed.contains(&job.job_id) {
                    continue;
                }
                match run_shard(job, shards_dir) {
                    Ok(records) => {
                        *slots[idx].lock().unwrap() = Some(records);
                        let mut j = journal.lock().unwrap();
                        // The shard file is in place before the journal
                        // line, so a crash can only lose work, not corrupt.
                        if writeln!(j, "done {}", job.job_id)
                            .and_then(|_| j.flush())
                            .is_err()
                        {
                            failures
                                .lock()
                                .unwrap()
                                .push((job.job_id.clone(), "journal write failed".into()));
                        }
                    }
                    Err(e) => failures
                        .lock()
                        .unwrap()
                        .push((job.job_id.clone(), e.to_string())),
                }
            });
        }
    });

    let failures = failures.into_inner().unwrap();
    if let Some((job_id, msg)) = failures.first() {
        bail!("shard {job_id} failed: {msg}");
    }
    Ok(slots.into_iter().map(|s| s.into_inner().unwrap()).collect())
}

fn run_shard(job: &ShardJob, shards_dir: &Path) -> Result<Vec<PisotRecord>> {
    let mut records = enumerate_pisot(job.degree, &job.interval)
        .map_err(|e| anyhow!("enumeration error: {e}"))?;
    records.sort_by(|a, b| a.poly.cmp_desc_lex(&b.poly));
    let mut lines = String::new();
    for rec in &records {
        lines.push_str(&record_line(rec));
        lines.push('\n');
    }
    write_atomic(&shards_dir.join(format!("{}.txt", job.job_id)), &lines)?;
    Ok(records)
}

fn read_shard_file(shards_dir: &Path, job: &ShardJob) -> Result<Vec<PisotRecord>> {
    let path = shards_dir.join(format!("{}.txt", job.job_id));
    let contents = fs::read_to_string(&path)
        .with_context(|| format!("shard {} listed in journal but unreadable", job.job_id))?;
    let mut records = Vec::new();
    for line in contents.lines() {
        if line.is_empty() {
            continue;
        }
        records.push(
            parse_record_line(line).with_context(|| format!("in shard file {}", path.display()))?,
        );
    }
    Ok(records)
}

/// Prefilters each record for its relation list and runs the exact test on
/// every flagged relation. Returns, per task, (flagged, verdict) pairs in
/// the family's relation order. Unflagged relations carry a negative
/// verdict without an exact test, mirroring the staged design: the exact
/// test only ever runs on prefilter survivors.
#[allow(clippy::type_complexity)]
fn test_records(
    tasks: &[(&PisotRecord, Vec<RelationType>)],
    workers: usize,
) -> Result<Vec<Vec<(bool, RelationVerdict)>>> {
    let threshold = default_prefilter_threshold();
    let cursor = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Vec<(bool, RelationVerdict)>>>> =
        tasks.iter().map(|_| Mutex::new(None)).collect();
    let failures: Mutex<Vec<String>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..workers.min(tasks.len()).max(1) {
            scope.spawn(|| loop {
                let idx = cursor.fetch_add(1, Ordering::SeqCst);
                if idx >= tasks.len() {
                    return;
                }
                let (rec, rels) = &tasks[idx];
                match test_one_record(rec, rels, &threshold) {
                    Ok(v) => *slots[idx].lock().unwrap() = Some(v),
                    Err(e) => failures
                        .lock()
                        .unwrap()
                        .push(format!("{}: {e}", poly_line(&rec.poly))),
                }
            });
        }
    });

    let failures = failures.into_inner().unwrap();
    if let Some(msg) = failures.first() {
        bail!("relation testing failed for {msg}");
    }
    Ok(slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("all tasks ran"))
        .collect())
}

fn test_one_record(
    rec: &PisotRecord,
    rels: &[RelationType],
    threshold: &BigRational,
) -> Result<Vec<(bool, RelationVerdict)>> {
    let outcomes = numeric_prefilter(&rec.poly, rels, threshold)
        .map_err(|e| anyhow!("prefilter: {e}"))?;
    let mut resultants: Option<(pisot_core::IntPoly, pisot_core::IntPoly)> = None;
    let mut out = Vec::new();
    for o in outcomes {
        if !o.flagged {
            out.push((
                false,
                RelationVerdict {
                    relation: o.relation,
                    holds: false,
                    witness: None,
                    residual: None,
                },
            ));
            continue;
        }
        if resultants.is_none() {
            resultants =
                Some(checked_resultants(&rec.poly, o.relation).map_err(|e| anyhow!("{e}"))?);
        }
        let (g, h) = resultants.as_ref().unwrap();
        let verdict =
            test_relation_with(&rec.poly, o.relation, g, h).map_err(|e| anyhow!("{e}"))?;
        out.push((true, verdict));
    }
    Ok(out)
}

/// One table-verification check: name, pass flag, and mismatch detail.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Compares a pipeline's artifacts against the embedded reference tables.
/// Only degrees the run actually covered are checked.
pub fn verify_paper_tables(report: &PipelineReport, out_dir: &Path) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    if let Some(fam) = report.families.get("three") {
        for degree in [3usize, 6, 8] {
            if !fam.degrees.contains(&degree) {
                continue;
            }
            let reference = tables::reference_list(degree).expect("embedded list");
            let path = out_dir
                .join("three")
                .join("records")
                .join(format!("d{degree:02}.txt"));
            let contents = fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            let mut got = Vec::new();
            for line in contents.lines() {
                got.push(parse_record_line(line)?.poly);
            }
            checks.push(set_check(
                &format!("degree-{degree} record list"),
                &reference,
                &got,
            ));
        }
        for (degree, want) in tables::COUNTS_THREE {
            if let Some(count) = fam.counts.get(&degree) {
                checks.push(count_check("three", degree, want, *count));
            }
        }
        checks.push(solution_check(
            fam,
            "sum3zero",
            if fam.degrees.contains(&3) {
                Some(tables::SOLUTION_SUM3ZERO)
            } else {
                None
            },
        ));
        checks.push(solution_check(fam, "eqsum2", None));
    }

    if let Some(fam) = report.families.get("four") {
        for (degree, want) in tables::COUNTS_FOUR {
            if let Some(count) = fam.counts.get(&degree) {
                checks.push(count_check("four", degree, want, *count));
            }
        }
        checks.push(solution_check(
            fam,
            "paireq",
            if fam.degrees.contains(&4) {
                Some(tables::SOLUTION_PAIREQ)
            } else {
                None
            },
        ));
        checks.push(solution_check(fam, "eqsum3", None));
        checks.push(solution_check(fam, "sum4zero", None));
    }

    Ok(checks)
}

fn set_check(name: &str, reference: &[pisot_core::IntPoly], got: &[pisot_core::IntPoly]) -> Check {
    let mut want_sorted = reference.to_vec();
    tables::sort_polys(&mut want_sorted);
    let mut got_sorted = got.to_vec();
    tables::sort_polys(&mut got_sorted);
    if want_sorted == got_sorted {
        return Check {
            name: name.to_string(),
            pass: true,
            detail: format!("{} records, exact match", got_sorted.len()),
        };
    }
    let missing: Vec<String> = want_sorted
        .iter()
        .filter(|p| !got_sorted.contains(p))
        .map(|p| p.pretty())
        .collect();
    let extra: Vec<String> = got_sorted
        .iter()
        .filter(|p| !want_sorted.contains(p))
        .map(|p| p.pretty())
        .collect();
    Check {
        name: name.to_string(),
        pass: false,
        detail: format!("missing: [{}]; extra: [{}]", missing.join(", "), extra.join(", ")),
    }
}

fn count_check(family: &str, degree: usize, want: u64, got: u64) -> Check {
    Check {
        name: format!("{family}-family degree-{degree} count"),
        pass: want == got,
        detail: if want == got {
            format!("{got}")
        } else {
            format!("expected {want}, got {got}")
        },
    }
}

fn solution_check(fam: &FamilyReport, tag: &str, expected: Option<&[i64]>) -> Check {
    let want: Vec<String> = expected
        .map(|coeffs| vec![poly_line(&pisot_core::IntPoly::from_descending_i64(coeffs))])
        .unwrap_or_default();
    let got = fam.solutions.get(tag).cloned().unwrap_or_default();
    Check {
        name: format!("{} solution set ({}-family)", tag, fam.family),
        pass: want == got,
        detail: if want == got {
            if got.is_empty() {
                "empty as expected".to_string()
            } else {
                got.join("; ")
            }
        } else {
            format!("expected [{}], got [{}]", want.join("; "), got.join("; "))
        },
    }
}
