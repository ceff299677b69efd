//! Exhaustive codeword search over Chaitin machines.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bits::BitString;
use crate::curried::print_lenient;
use crate::eliminator::{eliminate, BemError, BemMachine, ElimLimits};
use crate::keraia::pf_keraia_eval;
use crate::languages::chaitin::extended_eval;
use crate::languages::simple_chaitin_eval;
use crate::languages::{LanguageError, LanguageId};
use crate::runtime::{Divergence, RunOutcome};
use crate::term::Term;

/// Machines whose halting inputs are meant to be prefix-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChaitinMachine {
    Simple,
    Extended(Term),
    PfKeraia,
    Eliminated(BemMachine),
}

impl ChaitinMachine {
    pub fn from_language(language: &LanguageId) -> Option<Self> {
        match language {
            LanguageId::SimpleChaitin => Some(ChaitinMachine::Simple),
            LanguageId::Extended(u) => Some(ChaitinMachine::Extended(u.clone())),
            LanguageId::PfKeraia => Some(ChaitinMachine::PfKeraia),
            _ => None,
        }
    }

    pub fn run(&self, codeword: &BitString, step_limit: u64) -> RunOutcome {
        match self {
            ChaitinMachine::Simple => simple_chaitin_eval(codeword, step_limit),
            ChaitinMachine::Extended(u) => {
                extended_eval(u, codeword, step_limit).expect("extension of a closed combinator")
            }
            ChaitinMachine::PfKeraia => pf_keraia_eval(codeword, step_limit),
            ChaitinMachine::Eliminated(m) => {
                eliminate(*m, ElimLimits::uniform(step_limit)).run(codeword)
            }
        }
    }
}

impl FromStr for ChaitinMachine {
    type Err = String;

    /// `simple`, `ext`, `pf-keraia`, or `elim-<bem>` for an eliminated endmarker machine.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(bem) = s.strip_prefix("elim-") {
            return bem
                .parse()
                .map(ChaitinMachine::Eliminated)
                .map_err(|e: BemError| e.to_string());
        }
        let language: LanguageId = s.parse().map_err(|e: LanguageError| e.to_string())?;
        ChaitinMachine::from_language(&language).ok_or_else(|| {
            format!("`{s}` is not prefix-free; use simple, ext, pf-keraia or elim-<keraia|zot|blc|fixed3|parity|echo>")
        })
    }
}

impl fmt::Display for ChaitinMachine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChaitinMachine::Simple => f.write_str("simple"),
            ChaitinMachine::Extended(u) => write!(f, "ext[{}]", print_lenient(u)),
            ChaitinMachine::PfKeraia => f.write_str("pf-keraia"),
            ChaitinMachine::Eliminated(m) => write!(f, "elim-{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HaltingRecord {
    pub codeword: BitString,
    pub steps: u64,
    pub output_bits: BitString,
    pub output_term: String,
}

impl HaltingRecord {
    fn from_outcome(codeword: BitString, outcome: &RunOutcome) -> Option<Self> {
        outcome.halted().map(|h| HaltingRecord {
            codeword,
            steps: h.steps,
            output_bits: h.bits.clone(),
            output_term: h.serialized.clone(),
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub records: Vec<HaltingRecord>,
    /// Runs stopped by the step budget; they might halt with more steps.
    pub step_limited: usize,
    pub examined: usize,
}

/// All codewords of exactly `len` bits, in lexicographic order.
pub fn enumerate_length(
    machine: &ChaitinMachine,
    len: usize,
    step_limit: u64,
    workers: usize,
) -> Enumeration {
    let candidates: Vec<BitString> = BitString::all_of_length(len).collect();
    let examine = |c: &BitString| {
        let out = machine.run(c, step_limit);
        let limited = out == RunOutcome::Diverged(Divergence::StepLimit);
        (HaltingRecord::from_outcome(c.clone(), &out), limited)
    };
    let results: Vec<(Option<HaltingRecord>, bool)> = if workers <= 1 {
        candidates.iter().map(examine).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .stack_size(64 << 20)
            .build()
            .expect("worker pool");
        // Collecting an indexed parallel iterator keeps candidate order.
        pool.install(|| candidates.par_iter().map(examine).collect())
    };
    let mut e = Enumeration {
        examined: candidates.len(),
        ..Default::default()
    };
    for (record, limited) in results {
        e.step_limited += usize::from(limited);
        e.records.extend(record);
    }
    e
}

/// Every halting codeword of length 1 to `max_len`, in length-lexicographic order.
pub fn enumerate_halting(
    machine: &ChaitinMachine,
    max_len: usize,
    step_limit: u64,
) -> Vec<HaltingRecord> {
    enumerate_with(machine, max_len, step_limit, 1).records
}

pub fn enumerate_with(
    machine: &ChaitinMachine,
    max_len: usize,
    step_limit: u64,
    workers: usize,
) -> Enumeration {
    let mut total = Enumeration::default();
    for len in 1..=max_len {
        let e = enumerate_length(machine, len, step_limit, workers);
        total.records.extend(e.records);
        total.step_limited += e.step_limited;
        total.examined += e.examined;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_names() {
        assert_eq!(
            "simple".parse::<ChaitinMachine>(),
            Ok(ChaitinMachine::Simple)
        );
        assert_eq!(
            "elim-fixed3".parse::<ChaitinMachine>(),
            Ok(ChaitinMachine::Eliminated(BemMachine::Fixed3))
        );
        assert!("iota".parse::<ChaitinMachine>().is_err());
        assert!("elim-iota".parse::<ChaitinMachine>().is_err());
    }

    #[test]
    fn simple_up_to_three() {
        let codewords: Vec<String> = enumerate_halting(&ChaitinMachine::Simple, 3, 10_000)
            .iter()
            .map(|r| r.codeword.to_string())
            .collect();
        assert_eq!(codewords, ["0", "100"]);
    }

    #[test]
    fn simple_length_one() {
        let r = enumerate_halting(&ChaitinMachine::Simple, 1, 10_000);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].codeword.to_string(), "0");
    }

    #[test]
    fn pf_keraia_includes_identity_program() {
        let r = enumerate_halting(&ChaitinMachine::PfKeraia, 4, 10_000);
        assert!(r.iter().any(|r| r.codeword.to_string() == "1001"));
    }

    #[test]
    fn workers_do_not_change_order() {
        let a = enumerate_with(&ChaitinMachine::PfKeraia, 9, 10_000, 1);
        let b = enumerate_with(&ChaitinMachine::PfKeraia, 9, 10_000, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn eliminated_fixed3() {
        let r = enumerate_halting(&ChaitinMachine::Eliminated(BemMachine::Fixed3), 6, 10_000);
        assert_eq!(r.len(), 8);
        assert!(r.iter().all(|r| r.codeword.len() == 3));
    }
}
