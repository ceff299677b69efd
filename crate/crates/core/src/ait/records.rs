//! Append-only record files so long enumerations can resume.
//!
//! ```text
//! # machine simple steps 10000
//! 0<TAB>12<TAB><output bits><TAB><output term>
//! # done 1
//! ```

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use thiserror::Error;

use crate::bits::BitString;

use super::enumerate::{enumerate_length, ChaitinMachine, HaltingRecord};
use super::omega::OmegaBound;

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("record file was written for `{found}`, not `{expected}`")]
    Mismatch { expected: String, found: String },
}

pub fn format_record(r: &HaltingRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}",
        r.codeword, r.steps, r.output_bits, r.output_term
    )
}

pub fn parse_record(line: &str) -> Result<HaltingRecord, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [codeword, steps, bits, term] = fields[..] else {
        return Err(format!(
            "expected 4 tab-separated fields, found {}",
            fields.len()
        ));
    };
    let bit = |s: &str| s.parse::<BitString>().map_err(|e| e.to_string());
    Ok(HaltingRecord {
        codeword: bit(codeword)?,
        steps: steps.parse().map_err(|e| format!("steps: {e}"))?,
        output_bits: bit(bits)?,
        output_term: term.to_string(),
    })
}

/// Contents of a record file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecordFile {
    pub header: Option<String>,
    pub records: Vec<HaltingRecord>,
    pub done: HashSet<usize>,
}

pub fn read_records(path: &Path) -> Result<RecordFile, RecordError> {
    let mut out = RecordFile::default();
    let mut seen = HashSet::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(n) = comment.strip_prefix("done ") {
                let n = n.trim().parse().map_err(|_| RecordError::Malformed {
                    line: i + 1,
                    reason: format!("bad progress marker `{line}`"),
                })?;
                out.done.insert(n);
            } else if comment.starts_with("machine ") && out.header.is_none() {
                out.header = Some(comment.to_string());
            }
            continue;
        }
        let r = parse_record(&line).map_err(|reason| RecordError::Malformed {
            line: i + 1,
            reason,
        })?;
        if seen.insert(r.codeword.clone()) {
            out.records.push(r);
        }
    }
    out.records
        .sort_by(|a, b| (a.codeword.len(), &a.codeword).cmp(&(b.codeword.len(), &b.codeword)));
    Ok(out)
}

fn header_for(machine: &ChaitinMachine, step_limit: u64) -> String {
    format!("machine {machine} steps {step_limit}")
}

/// Enumerates up to `max_len`, appending to `path` and skipping lengths the
/// file already marks as done.
pub fn omega_resumable(
    machine: &ChaitinMachine,
    max_len: usize,
    step_limit: u64,
    workers: usize,
    path: &Path,
) -> Result<OmegaBound, RecordError> {
    let header = header_for(machine, step_limit);
    let existing = if path.exists() {
        read_records(path)?
    } else {
        RecordFile::default()
    };
    if let Some(found) = &existing.header {
        if *found != header {
            return Err(RecordError::Mismatch {
                expected: header,
                found: found.clone(),
            });
        }
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    if existing.header.is_none() {
        writeln!(file, "# {header}")?;
        writeln!(file, "# codeword\tsteps\toutput_bits\toutput_term")?;
    }
    let known: HashSet<BitString> = existing
        .records
        .iter()
        .map(|r| r.codeword.clone())
        .collect();
    let mut records: Vec<HaltingRecord> = existing
        .records
        .into_iter()
        .filter(|r| r.codeword.len() <= max_len)
        .collect();
    let mut step_limited = 0;
    for len in 1..=max_len {
        if existing.done.contains(&len) {
            continue;
        }
        let e = enumerate_length(machine, len, step_limit, workers);
        step_limited += e.step_limited;
        for r in e.records {
            if !known.contains(&r.codeword) {
                writeln!(file, "{}", format_record(&r))?;
                records.push(r);
            }
        }
        writeln!(file, "# done {len}")?;
        file.flush()?;
    }
    records.sort_by(|a, b| (a.codeword.len(), &a.codeword).cmp(&(b.codeword.len(), &b.codeword)));
    Ok(OmegaBound::from_records(
        records,
        max_len,
        step_limit,
        step_limited,
    ))
}
