//! Batch evaluation of map corpora.
//!
//! Input is either a JSON array of objects `{"fiber": ..., "base": ...,
//! "var": ...}` (only `fiber` is required) or plain text with one map per
//! line, written `FIBER` or `FIBER ; BASE`. Blank lines and lines starting
//! with `#` are skipped.

use std::collections::BTreeMap;

use jonq_core::parser::MapSource;
use jonq_core::Error;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exit::{self, ErrorRecord};
use crate::report::{build_report, InputEcho, Options, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchEntry {
    pub fiber: String,
    #[serde(default)]
    pub base: Option<String>,
    #[serde(default)]
    pub var: Option<String>,
}

/// Defaults applied to entries that leave out `base` or `var`.
#[derive(Clone, Debug)]
pub struct EntryDefaults {
    pub base: Option<String>,
    pub var: String,
}

impl BatchEntry {
    pub fn source(&self, defaults: &EntryDefaults) -> MapSource {
        MapSource {
            fiber: self.fiber.clone(),
            base: self.base.clone().or_else(|| defaults.base.clone()),
            var: self.var.clone().unwrap_or_else(|| defaults.var.clone()),
        }
    }
}

/// Splits the input into entries. Only a malformed JSON array is an error.
pub fn parse_input(text: &str) -> Result<Vec<BatchEntry>, Error> {
    let trimmed = text.trim_start();
    let is_json = trimmed
        .strip_prefix('[')
        .map(|rest| matches!(rest.trim_start().chars().next(), Some('{') | Some(']')))
        .unwrap_or(false);
    if is_json {
        return serde_json::from_str(text).map_err(|e| {
            let pos = line_col_offset(text, e.line(), e.column());
            Error::Parse {
                pos,
                msg: format!("batch file: {e}"),
            }
        });
    }
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once(';') {
            Some((fiber, base)) => BatchEntry {
                fiber: fiber.trim().into(),
                base: Some(base.trim().into()),
                var: None,
            },
            None => BatchEntry {
                fiber: l.into(),
                base: None,
                var: None,
            },
        })
        .collect())
}

fn line_col_offset(text: &str, line: usize, col: usize) -> usize {
    let start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (start + col.saturating_sub(1)).min(text.len())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchRecord {
    pub index: usize,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub reports: usize,
    pub errors: usize,
    pub mismatches: usize,
    pub cases: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchOutput {
    pub records: Vec<BatchRecord>,
    pub summary: Summary,
}

impl BatchOutput {
    /// Exit code under `--strict` (first failing entry decides) or
    /// `--keep-going`. A mismatch gives 4 in both modes.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if strict {
            if let Some(e) = self.records.iter().find_map(|r| r.error.as_ref()) {
                return e.exit_code;
            }
        }
        if self.summary.mismatches > 0 {
            exit::MISMATCH
        } else {
            exit::OK
        }
    }
}

fn evaluate(
    index: usize,
    entry: &BatchEntry,
    defaults: &EntryDefaults,
    opts: &Options,
) -> BatchRecord {
    let src = entry.source(defaults);
    let input = InputEcho::from(&src);
    match build_report(&src, opts) {
        Ok(report) => BatchRecord {
            index,
            input,
            report: Some(report),
            error: None,
        },
        Err(e) => BatchRecord {
            index,
            input,
            report: None,
            error: Some(ErrorRecord::from(&e)),
        },
    }
}

/// Evaluates every entry; `jobs == 1` runs on the calling thread, otherwise
/// on a pool of `jobs` threads (0 picks the number of cores). Records keep
/// input order.
pub fn run_batch(
    entries: &[BatchEntry],
    defaults: &EntryDefaults,
    opts: &Options,
    jobs: usize,
) -> BatchOutput {
    let records: Vec<BatchRecord> = if jobs == 1 {
        entries
            .iter()
            .enumerate()
            .map(|(i, e)| evaluate(i, e, defaults, opts))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            entries
                .par_iter()
                .enumerate()
                .map(|(i, e)| evaluate(i, e, defaults, opts))
                .collect()
        })
    };
    let mut summary = Summary {
        total: records.len(),
        ..Default::default()
    };
    for r in &records {
        match (&r.report, &r.error) {
            (Some(rep), _) => {
                summary.reports += 1;
                if !rep.consistent {
                    summary.mismatches += 1;
                }
                if let Some(tag) = &rep.case_tag {
                    *summary.cases.entry(tag.clone()).or_default() += 1;
                }
            }
            (None, _) => summary.errors += 1,
        }
    }
    BatchOutput { records, summary }
}
