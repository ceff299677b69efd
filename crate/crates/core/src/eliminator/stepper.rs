//! Resumable machines that ask for one symbol at a time.

use crate::bits::{BitString, Symbol};
use crate::boollist::{decode_bool_list, encode_bool_list};
use crate::reduce::normalize;
use crate::term::Term;

/// What a halted stepper produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BemOutput {
    pub term: Term,
    pub bits: BitString,
}

impl BemOutput {
    pub fn from_term(term: Term) -> Self {
        BemOutput {
            bits: decode_bool_list(&term),
            term,
        }
    }

    /// A bit-only output; the term is the normalized boolean list.
    pub fn from_bits(bits: BitString) -> Self {
        let term = normalize(&encode_bool_list(&bits), 10_000).expect("lists normalize");
        BemOutput { term, bits }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepResult<S> {
    Running(S),
    /// The machine waits for a symbol; continue with [`MachineStepper::resume`].
    NeedInput(S),
    Halted(BemOutput),
}

/// A deterministic machine over `{0, 1, ◇}`. States are cloneable snapshots
/// so speculative branches never share mutable state.
pub trait MachineStepper {
    type State: Clone;

    fn start(&self) -> Self::State;

    fn step(&self, state: Self::State) -> StepResult<Self::State>;

    /// Delivers `symbol` to a state returned in [`StepResult::NeedInput`].
    fn resume(&self, state: Self::State, symbol: Symbol) -> Self::State;
}

/// Outcome of feeding a fixed symbol sequence directly to a stepper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectRun {
    /// Halted after consuming exactly the given symbols.
    Halted(BemOutput),
    /// Halted with symbols left over.
    HaltedEarly {
        output: BemOutput,
        unread: usize,
    },
    /// Asked for a symbol after the sequence was exhausted.
    Starved,
    StepLimit,
}

/// Runs `machine` on `symbols`, handing them out on request.
pub fn run_direct<M: MachineStepper>(
    machine: &M,
    symbols: &[Symbol],
    step_limit: u64,
) -> DirectRun {
    let mut state = machine.start();
    let mut next = 0;
    for _ in 0..step_limit {
        match machine.step(state) {
            StepResult::Running(s) => state = s,
            StepResult::NeedInput(s) => {
                let Some(&sym) = symbols.get(next) else {
                    return DirectRun::Starved;
                };
                next += 1;
                state = machine.resume(s, sym);
            }
            StepResult::Halted(output) => {
                return if next == symbols.len() {
                    DirectRun::Halted(output)
                } else {
                    DirectRun::HaltedEarly {
                        output,
                        unread: symbols.len() - next,
                    }
                };
            }
        }
    }
    DirectRun::StepLimit
}

/// `bits` followed by the endmarker.
pub fn with_endmarker(bits: &BitString) -> Vec<Symbol> {
    bits.iter()
        .map(Symbol::from_bit)
        .chain(std::iter::once(Symbol::End))
        .collect()
}
