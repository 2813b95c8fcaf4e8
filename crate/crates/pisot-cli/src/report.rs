//! Pipeline report structures and their serialized forms.
//!
//! `report.json` is fully deterministic: map keys are ordered, lists are
//! canonically sorted, and nothing time- or host-dependent is included, so
//! reports from runs at different parallelism levels compare byte for byte.
//! Wall-clock measurements go to a separate `timings.json`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

/// Report for one relation family run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyReport {
    /// "three" or "four".
    pub family: String,
    /// Number of summands in the relations of this family.
    pub terms: u32,
    /// Right endpoint of every target interval, as `p/q` or an integer.
    pub alpha_max: String,
    /// Largest degree enumerated after clipping to the height bound.
    pub max_degree: usize,
    /// Whether the documented degree restrictions were applied before the
    /// exact tests.
    pub combinatorial_filters: bool,
    /// Degrees enumerated, ascending.
    pub degrees: Vec<usize>,
    /// Per-degree record counts after the exact interval sieve.
    pub counts: BTreeMap<usize, u64>,
    /// Sum of all per-degree counts.
    pub total: u64,
    /// Degrees whose records were tested, per relation tag.
    pub admissible: BTreeMap<String, Vec<usize>>,
    /// Records flagged by the numeric prefilter, per relation tag, as
    /// `<degree> <coeffs>` strings in canonical order.
    pub survivors: BTreeMap<String, Vec<String>>,
    /// Records whose exact test holds, per relation tag.
    pub solutions: BTreeMap<String, Vec<String>>,
    /// Number of exact tests run per relation tag (equals the survivor
    /// count: only flagged records are tested).
    pub exact_tests: BTreeMap<String, u64>,
    /// Number of shard jobs in the plan.
    pub shard_jobs: u64,
}

/// Top-level report: one entry per family run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PipelineReport {
    pub families: BTreeMap<String, FamilyReport>,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).context("malformed report JSON")
    }

    /// CSV count summary, one row per family and degree.
    pub fn counts_csv(&self) -> String {
        let mut out = String::from("family,degree,count\n");
        for (name, fam) in &self.families {
            for (degree, count) in &fam.counts {
                out.push_str(&format!("{name},{degree},{count}\n"));
            }
        }
        out
    }
}

/// Wall-clock measurements, kept out of the deterministic report.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Timings {
    /// Seconds per labeled phase, e.g. "three/enumerate".
    pub seconds: BTreeMap<String, f64>,
    /// Worker threads used.
    pub workers: usize,
}

/// Writes a file atomically: to a sibling temporary path, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)
            .with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(contents.as_bytes())
            .with_context(|| format!("writing {}", tmp.display()))?;
        f.sync_all().ok();
    }
    std::fs::rename(&tmp, path)
        .with_context(|| format!("renaming into place: {}", path.display()))?;
    Ok(())
}
