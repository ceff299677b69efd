//! Sender, pipe and receiver: every run either halts with a drained pipe or
//! diverges for a diagnosed reason.

use std::fmt;

use crate::bits::BitString;
use crate::boollist::decode_bool_list;
use crate::curried::print_lenient;
use crate::pipe::Pipe;
use crate::reduce::{reduce, Outcome};
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Divergence {
    /// The machine waits on an empty pipe.
    Underflow,
    /// The machine halted but the sender still holds bits.
    Overflow,
    /// No complete program description at the front of the input.
    SyntaxError,
    /// The step budget ran out. Diagnostic only: the modeled machine just keeps running.
    StepLimit,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Divergence::Underflow => "underflow",
            Divergence::Overflow => "overflow",
            Divergence::SyntaxError => "syntax error",
            Divergence::StepLimit => "step limit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halted {
    pub term: Term,
    pub serialized: String,
    pub bits: BitString,
    pub steps: u64,
}

impl Halted {
    pub fn new(term: Term, steps: u64) -> Self {
        Halted {
            serialized: print_lenient(&term),
            bits: decode_bool_list(&term),
            term,
            steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome {
    Halted(Halted),
    Diverged(Divergence),
}

impl RunOutcome {
    pub fn halted(&self) -> Option<&Halted> {
        match self {
            RunOutcome::Halted(h) => Some(h),
            RunOutcome::Diverged(_) => None,
        }
    }

    pub fn is_halted(&self) -> bool {
        matches!(self, RunOutcome::Halted(_))
    }

    pub fn exit_code(&self) -> i32 {
        classify_divergence(match self {
            RunOutcome::Halted(_) => None,
            RunOutcome::Diverged(d) => Some(*d),
        })
    }

    /// Applies `f` to the output term of a halted run.
    pub fn map_term(self, f: impl FnOnce(&Term) -> Term) -> RunOutcome {
        match self {
            RunOutcome::Halted(h) => RunOutcome::Halted(Halted::new(f(&h.term), h.steps)),
            d => d,
        }
    }
}

/// Process exit code for an outcome; `None` is a halt.
pub fn classify_divergence(reason: Option<Divergence>) -> i32 {
    match reason {
        None => 0,
        Some(Divergence::Underflow) => 10,
        Some(Divergence::Overflow) => 11,
        Some(Divergence::SyntaxError) => 12,
        Some(Divergence::StepLimit) => 13,
    }
}

pub fn run_with_pipe(program: &Term, input: &BitString, step_limit: u64) -> RunOutcome {
    let mut pipe = Pipe::new(input.clone());
    let result = reduce(program, step_limit, &mut pipe);
    match result.outcome {
        Outcome::NormalForm(t) if pipe.is_empty() => {
            RunOutcome::Halted(Halted::new(t, result.steps_used))
        }
        Outcome::NormalForm(_) => RunOutcome::Diverged(Divergence::Overflow),
        Outcome::InputUnderflow(_) => RunOutcome::Diverged(Divergence::Underflow),
        Outcome::StepLimit(_) => RunOutcome::Diverged(Divergence::StepLimit),
    }
}
