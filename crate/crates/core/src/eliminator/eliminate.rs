//! Turns an endmarker machine into a prefix-free one over `{0, 1}` by
//! speculating on every possible next symbol.
//!
//! Rules, applied after each dovetailed round:
//! (a) a machine halting before its first read halts iff the input is empty;
//! (c) if all three branches halted with identical output, halt without reading;
//! (d) otherwise, once any branch is at a read or halted, perform the real read
//!     and keep the branch for the bit actually read;
//! (e) a speculation exceeding its round budget is a step limit.

use crate::bits::{BitString, Symbol};
use crate::pipe::Pipe;
use crate::runtime::{Divergence, Halted, RunOutcome};

use super::machines::BemMachine;
use super::stepper::{BemOutput, MachineStepper, StepResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElimLimits {
    /// Rounds allowed per speculation (one step per live branch per round).
    pub per_round: u64,
    /// Total machine steps across all branches.
    pub total: u64,
}

impl ElimLimits {
    pub fn uniform(steps: u64) -> Self {
        ElimLimits {
            per_round: steps,
            total: steps.saturating_mul(3),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Status<S> {
    Stepping(S),
    AtRead(S),
    AtHalt(BemOutput),
}

impl<S> Status<S> {
    fn settled(&self) -> bool {
        !matches!(self, Status::Stepping(_))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ElimStats {
    pub real_reads: usize,
    pub max_branches: usize,
    pub steps: u64,
    pub rounds: u64,
}

/// A stepper wrapped as a Chaitin machine.
#[derive(Debug, Clone)]
pub struct Eliminated<M> {
    machine: M,
    limits: ElimLimits,
}

pub fn eliminate<M: MachineStepper>(machine: M, limits: ElimLimits) -> Eliminated<M> {
    Eliminated { machine, limits }
}

fn halted(output: BemOutput, steps: u64) -> RunOutcome {
    RunOutcome::Halted(Halted::new(output.term, steps))
}

/// A halt seen by the machine: fine only if every input bit was consumed.
fn finish(output: BemOutput, pipe: &Pipe, steps: u64) -> RunOutcome {
    if pipe.is_empty() {
        halted(output, steps)
    } else {
        RunOutcome::Diverged(Divergence::Overflow)
    }
}

impl<M: MachineStepper> Eliminated<M> {
    pub fn machine(&self) -> &M {
        &self.machine
    }

    pub fn run(&self, input: &BitString) -> RunOutcome {
        self.run_with_stats(input).0
    }

    pub fn run_with_stats(&self, input: &BitString) -> (RunOutcome, ElimStats) {
        let mut stats = ElimStats::default();
        let outcome = self.drive(input, &mut stats);
        (outcome, stats)
    }

    /// Steps a single branch until it reads or halts.
    fn settle(&self, state: M::State, stats: &mut ElimStats) -> Option<Status<M::State>> {
        let mut status = Status::Stepping(state);
        let mut local = 0;
        while let Status::Stepping(s) = status {
            if local >= self.limits.per_round || stats.steps >= self.limits.total {
                return None;
            }
            local += 1;
            stats.steps += 1;
            status = self.advance(s);
        }
        Some(status)
    }

    fn advance(&self, state: M::State) -> Status<M::State> {
        match self.machine.step(state) {
            StepResult::Running(s) => Status::Stepping(s),
            StepResult::NeedInput(s) => Status::AtRead(s),
            StepResult::Halted(out) => Status::AtHalt(out),
        }
    }

    fn drive(&self, input: &BitString, stats: &mut ElimStats) -> RunOutcome {
        let mut pipe = Pipe::new(input.clone());
        // (a)
        let mut waiting = match self.settle(self.machine.start(), stats) {
            None => return RunOutcome::Diverged(Divergence::StepLimit),
            Some(Status::AtHalt(out)) => return finish(out, &pipe, stats.steps),
            Some(Status::AtRead(s)) => s,
            Some(Status::Stepping(_)) => unreachable!(),
        };
        loop {
            let mut branches: Vec<(Symbol, Status<M::State>)> = Symbol::ALL
                .iter()
                .map(|&sym| {
                    (
                        sym,
                        Status::Stepping(self.machine.resume(waiting.clone(), sym)),
                    )
                })
                .collect();
            stats.max_branches = stats.max_branches.max(branches.len());
            let mut rounds = 0;
            loop {
                if rounds >= self.limits.per_round || stats.steps >= self.limits.total {
                    return RunOutcome::Diverged(Divergence::StepLimit);
                }
                rounds += 1;
                stats.rounds += 1;
                for (_, status) in branches.iter_mut() {
                    if let Status::Stepping(s) = status {
                        stats.steps += 1;
                        *status = self.advance(s.clone());
                    }
                }
                // (c)
                if let Some(out) = unanimous_halt(&branches) {
                    return finish(out, &pipe, stats.steps);
                }
                // (d)
                if branches.iter().any(|(_, s)| s.settled()) {
                    break;
                }
            }
            let Some(bit) = pipe.take() else {
                return RunOutcome::Diverged(Divergence::Underflow);
            };
            stats.real_reads += 1;
            let want = Symbol::from_bit(bit);
            let (_, chosen) = branches
                .into_iter()
                .find(|(sym, _)| *sym == want)
                .expect("branch per symbol");
            let settled = match chosen {
                Status::Stepping(s) => match self.settle(s, stats) {
                    Some(st) => st,
                    None => return RunOutcome::Diverged(Divergence::StepLimit),
                },
                other => other,
            };
            match settled {
                Status::AtHalt(out) => return finish(out, &pipe, stats.steps),
                Status::AtRead(s) => waiting = s,
                Status::Stepping(_) => unreachable!(),
            }
        }
    }
}

fn unanimous_halt<S>(branches: &[(Symbol, Status<S>)]) -> Option<BemOutput> {
    let mut first: Option<&BemOutput> = None;
    for (_, status) in branches {
        let Status::AtHalt(out) = status else {
            return None;
        };
        match first {
            None => first = Some(out),
            Some(f) if f == out => {}
            Some(_) => return None,
        }
    }
    first.cloned()
}

/// Runs a named endmarker machine through the eliminator.
pub fn run_eliminated(machine: BemMachine, input: &BitString, limits: ElimLimits) -> RunOutcome {
    eliminate(machine, limits).run(input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eliminator::stepper::{run_direct, with_endmarker, DirectRun};
    use crate::keraia::keraia_eval;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn run(m: BemMachine, s: &str) -> RunOutcome {
        run_eliminated(m, &bits(s), ElimLimits::uniform(100_000))
    }

    #[test]
    fn fixed3_examples() {
        assert_eq!(
            run(BemMachine::Fixed3, "010").halted().unwrap().bits,
            bits("1")
        );
        assert_eq!(
            run(BemMachine::Fixed3, "01"),
            RunOutcome::Diverged(Divergence::Underflow)
        );
        assert_eq!(
            run(BemMachine::Fixed3, "0101"),
            RunOutcome::Diverged(Divergence::Overflow)
        );
    }

    #[test]
    fn fixed3_domain_is_length_three() {
        for len in 0..=6 {
            for x in BitString::all_of_length(len) {
                assert_eq!(
                    run(BemMachine::Fixed3, &x.to_string()).is_halted(),
                    len == 3,
                    "{x}"
                );
            }
        }
    }

    #[test]
    fn parity_never_halts() {
        for len in 0..=6 {
            for x in BitString::all_of_length(len) {
                assert!(!run(BemMachine::Parity, &x.to_string()).is_halted(), "{x}");
            }
        }
    }

    #[test]
    fn keraia_identity() {
        let out = run(BemMachine::Keraia, "11000");
        assert_eq!(
            out.halted().unwrap().term,
            keraia_eval(&bits("11000"), 1000).halted().unwrap().term
        );
    }

    #[test]
    fn keraia_incomplete_does_not_halt() {
        assert!(!run(BemMachine::Keraia, "1").is_halted());
    }

    #[test]
    fn blc_constant_program_halts() {
        assert!(run(BemMachine::Blc, "000010").is_halted());
        // The identity returns its input list, so the endmarker read matters.
        assert_eq!(
            run(BemMachine::Blc, "0010"),
            RunOutcome::Diverged(Divergence::Underflow)
        );
    }

    #[test]
    fn zot_never_halts() {
        assert!(!run(BemMachine::Zot, "").is_halted());
        assert!(!run(BemMachine::Zot, "10").is_halted());
    }

    #[test]
    fn soundness_replay() {
        for m in BemMachine::ALL {
            for len in 0..=7 {
                for x in BitString::all_of_length(len) {
                    let e = run_eliminated(m, &x, ElimLimits::uniform(20_000));
                    if let RunOutcome::Halted(h) = e {
                        let DirectRun::Halted(out) = run_direct(&m, &with_endmarker(&x), 1_000_000)
                        else {
                            panic!("{m} {x}: replay did not halt")
                        };
                        assert_eq!(out.term, h.term, "{m} {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn at_most_three_branches() {
        let e = eliminate(BemMachine::Keraia, ElimLimits::uniform(10_000));
        let (_, stats) = e.run_with_stats(&bits("1100110101000"));
        assert_eq!(stats.max_branches, 3);
        assert_eq!(stats.real_reads, 13);
    }
}
