//! File formats, reports and subcommands behind the `cytop` binary.

pub mod format;
pub mod report;

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use cy_topology::Error;

use crate::format::{format_polytope, parse_partition, parse_polytope, parse_records, PolytopeRecord};
use crate::report::{analyze, face_lab, reflexive_polytope, summary_line};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid NEF partition: {0}")]
    Partition(Error),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for unreadable or malformed input, 2 for geometry errors such as a
    /// non-reflexive polytope, 3 for an invalid partition.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) | CliError::Core(Error::Parse { .. }) => 1,
            CliError::Partition(Error::Parse { .. }) => 1,
            CliError::Partition(_) => 3,
            CliError::Core(_) => 2,
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn to_json<T: serde::Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.expect("reports serialize")
}

/// `analyze <file> [--nef <file>]`.
pub fn cmd_analyze(text: &str, partition: Option<&str>, summary: bool) -> Result<String, CliError> {
    let record = parse_polytope(text)?;
    let parts = partition
        .map(|t| parse_partition(t).map_err(CliError::Partition))
        .transpose()?;
    let report = analyze(&record.vertices, parts.as_deref())?;
    Ok(if summary {
        summary_line(&report)
    } else {
        to_json(&report, true)
    })
}

fn batch_entry(index: usize, record: &Result<PolytopeRecord, Error>, summary: bool) -> String {
    #[derive(serde::Serialize)]
    struct Entry<'a> {
        record: usize,
        line: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        report: Option<&'a report::Report>,
        #[serde(skip_serializing_if = "Option::is_none")]
        error: Option<String>,
    }
    let (line, result) = match record {
        Ok(r) => (r.line, analyze(&r.vertices, None)),
        Err(e) => (
            match e {
                Error::Parse { line, .. } => *line,
                _ => 0,
            },
            Err(CliError::Core(e.clone())),
        ),
    };
    if summary {
        match result {
            Ok(r) => format!("{index} line {line}: {}", summary_line(&r)),
            Err(e) => format!("{index} line {line}: error: {e}"),
        }
    } else {
        let (report, error) = match &result {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(e.to_string())),
        };
        to_json(
            &Entry {
                record: index,
                line,
                report,
                error,
            },
            false,
        )
    }
}

/// `batch <file> [-j N] [--summary]`: one output line per record, in input
/// order, whatever the parallelism.
pub fn cmd_batch(text: &str, jobs: Option<usize>, summary: bool) -> Result<String, CliError> {
    let records = parse_records(text);
    let run = || -> Vec<String> {
        records
            .par_iter()
            .enumerate()
            .map(|(i, r)| batch_entry(i, r, summary))
            .collect()
    };
    let lines = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(lines.iter().map(|l| format!("{l}\n")).collect())
}

/// `face-lab <file> --face <i> [--flips K --seed S]`.
pub fn cmd_face_lab(text: &str, face: usize, flips: Option<(usize, u64)>) -> Result<String, CliError> {
    let record = parse_polytope(text)?;
    Ok(to_json(&face_lab(&record.vertices, face, flips)?, true))
}

/// `polar <file>`.
pub fn cmd_polar(text: &str) -> Result<String, CliError> {
    let record = parse_polytope(text)?;
    let p = reflexive_polytope(&record.vertices)?;
    Ok(format_polytope(p.polar()?.vertices()))
}
