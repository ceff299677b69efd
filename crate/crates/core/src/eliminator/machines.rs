//! Endmarker machines exposed as steppers: Keraia, Zot, BLC and a few toys.
//!
//! Keraia and BLC finish with one extra read whose value is ignored, so
//! whether they halt never depends on that final symbol. Zot and the toys
//! `parity` and `echo` need the endmarker to know they are done.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abstraction::to_combinators;
use crate::bits::{BitString, Symbol};
use crate::boollist::encode_bit;
use crate::keraia::{keraia_translate, LeafMeaning};
use crate::languages::blc::blc_parse;
use crate::languages::zot::{zot_bit, zot_start};
use crate::languages::LanguageId;
use crate::reduce::{step, InputSource, Step, Strategy};
use crate::term::{abs, app, apply_all, k_i, var, Prim, Term};
use crate::tree::{complete_prefix_len, parse_tree};

use super::stepper::{BemOutput, MachineStepper, StepResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BemError {
    #[error("`{0}` has no endmarker form (expected keraia, zot, blc, fixed3, parity or echo)")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BemMachine {
    Keraia,
    Zot,
    Blc,
    /// Reads three symbols and one more, all ignored, then outputs `1`.
    Fixed3,
    /// Reads until the endmarker and outputs the number of 1s mod 2.
    Parity,
    /// Reads until the endmarker and outputs the bits read.
    Echo,
}

impl BemMachine {
    pub const ALL: [BemMachine; 6] = [
        BemMachine::Keraia,
        BemMachine::Zot,
        BemMachine::Blc,
        BemMachine::Fixed3,
        BemMachine::Parity,
        BemMachine::Echo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BemMachine::Keraia => "keraia",
            BemMachine::Zot => "zot",
            BemMachine::Blc => "blc",
            BemMachine::Fixed3 => "fixed3",
            BemMachine::Parity => "parity",
            BemMachine::Echo => "echo",
        }
    }
}

impl FromStr for BemMachine {
    type Err = BemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BemMachine::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| BemError::Unsupported(s.to_string()))
    }
}

impl fmt::Display for BemMachine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The endmarker stepper for a language.
pub fn as_bem(language: &LanguageId) -> Result<BemMachine, BemError> {
    match language {
        LanguageId::Keraia => Ok(BemMachine::Keraia),
        LanguageId::Zot => Ok(BemMachine::Zot),
        LanguageId::Blc => Ok(BemMachine::Blc),
        other => Err(BemError::Unsupported(other.name().to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BemState {
    /// Waiting for the next program bit.
    ReadingBits(BitString),
    /// Zot's accumulated fold.
    Folding(Term),
    Reducing {
        term: Term,
        tape: Vec<Symbol>,
        finish: Finish,
    },
    /// BLC blocked on input cell `tape.len()`.
    AwaitingTape {
        term: Term,
        tape: Vec<Symbol>,
    },
    /// One more read whose value is ignored.
    FinalRead(BemOutput),
    Done(BemOutput),
    Counting(u32),
    /// Syntax error: runs forever.
    Stuck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finish {
    Keraia,
    Zot,
    Blc,
}

/// BLC input cells: position `n` holds `P b Stream(n+1)` in normal form, or nil.
struct Tape<'a>(&'a [Symbol]);

fn tape_cell(symbol: Symbol, index: usize) -> Term {
    match symbol.bit() {
        Some(b) => abs(apply_all(
            var(0),
            [encode_bit(b), Term::Prim(Prim::Stream(index + 1))],
        )),
        None => k_i(),
    }
}

impl InputSource for Tape<'_> {
    fn take_bit(&mut self) -> Option<bool> {
        None
    }

    fn stream_cell(&mut self, index: usize) -> Option<Term> {
        self.0.get(index).map(|&s| tape_cell(s, index))
    }
}

/// Replaces every inert `Stream(n)` whose symbol is known. `Err(())` when an
/// unknown cell is present.
fn force_streams(term: &Term, tape: &[Symbol]) -> Result<Option<Term>, ()> {
    match term {
        Term::Prim(Prim::Stream(n)) => match tape.get(*n) {
            Some(&s) => Ok(Some(tape_cell(s, *n))),
            None => Err(()),
        },
        Term::Var(_) | Term::Prim(_) => Ok(None),
        Term::Abs(b) => Ok(force_streams(b, tape)?.map(abs)),
        Term::App(f, a) => {
            let nf = force_streams(f, tape);
            let na = force_streams(a, tape);
            match (nf, na) {
                (Ok(None), Ok(None)) => Ok(None),
                (Ok(x), Ok(y)) => Ok(Some(app(
                    x.unwrap_or_else(|| (**f).clone()),
                    y.unwrap_or_else(|| (**a).clone()),
                ))),
                // An earlier known cell is still progress.
                (Ok(Some(x)), Err(())) => Ok(Some(app(x, (**a).clone()))),
                (Err(()), Ok(Some(y))) => Ok(Some(app((**f).clone(), y))),
                _ => Err(()),
            }
        }
    }
}

fn has_stream(term: &Term) -> bool {
    term.contains_prim(&|p| matches!(p, Prim::Stream(_)))
}

impl MachineStepper for BemMachine {
    type State = BemState;

    fn start(&self) -> BemState {
        match self {
            BemMachine::Keraia | BemMachine::Blc | BemMachine::Echo => {
                BemState::ReadingBits(BitString::new())
            }
            BemMachine::Zot => BemState::Folding(zot_start()),
            BemMachine::Fixed3 | BemMachine::Parity => BemState::Counting(0),
        }
    }

    fn step(&self, state: BemState) -> StepResult<BemState> {
        match state {
            BemState::ReadingBits(_)
            | BemState::Folding(_)
            | BemState::AwaitingTape { .. }
            | BemState::FinalRead(_) => StepResult::NeedInput(state),
            BemState::Counting(n) => {
                if *self == BemMachine::Fixed3 && n == 4 {
                    StepResult::Halted(BemOutput::from_bits("1".parse().unwrap()))
                } else {
                    StepResult::NeedInput(state)
                }
            }
            BemState::Done(out) => StepResult::Halted(out),
            BemState::Stuck => StepResult::Running(BemState::Stuck),
            BemState::Reducing { term, tape, finish } => {
                match step(&term, Strategy::LeftmostOutermost, &mut Tape(&tape)) {
                    Step::Contracted(next) => StepResult::Running(BemState::Reducing {
                        term: next,
                        tape,
                        finish,
                    }),
                    Step::Blocked => StepResult::NeedInput(BemState::AwaitingTape { term, tape }),
                    Step::NormalForm => match finish {
                        Finish::Keraia => StepResult::Running(BemState::FinalRead(
                            BemOutput::from_term(to_combinators(&term)),
                        )),
                        Finish::Zot => {
                            StepResult::Running(BemState::Done(BemOutput::from_term(term)))
                        }
                        Finish::Blc => {
                            if !has_stream(&term) {
                                let out = BemOutput::from_term(term);
                                return StepResult::Running(if tape.last() == Some(&Symbol::End) {
                                    BemState::Done(out)
                                } else {
                                    BemState::FinalRead(out)
                                });
                            }
                            match force_streams(&term, &tape) {
                                Ok(Some(t)) => StepResult::Running(BemState::Reducing {
                                    term: t,
                                    tape,
                                    finish,
                                }),
                                Ok(None) => unreachable!("stream cells present but none replaced"),
                                Err(()) => {
                                    StepResult::NeedInput(BemState::AwaitingTape { term, tape })
                                }
                            }
                        }
                    },
                }
            }
        }
    }

    fn resume(&self, state: BemState, symbol: Symbol) -> BemState {
        match (self, state) {
            (BemMachine::Keraia, BemState::ReadingBits(mut bits)) => match symbol.bit() {
                None => BemState::Stuck,
                Some(b) => {
                    bits.push(b);
                    if complete_prefix_len(bits.as_slice()).is_some() {
                        let tree = parse_tree(&bits).expect("complete tree").tree;
                        let term = keraia_translate(&tree, LeafMeaning::InterpretConst);
                        BemState::Reducing {
                            term,
                            tape: Vec::new(),
                            finish: Finish::Keraia,
                        }
                    } else {
                        BemState::ReadingBits(bits)
                    }
                }
            },
            (BemMachine::Blc, BemState::ReadingBits(mut bits)) => match symbol.bit() {
                None => BemState::Stuck,
                Some(b) => {
                    bits.push(b);
                    match blc_parse(&bits) {
                        Ok((program, _)) => BemState::Reducing {
                            term: app(program, Term::Prim(Prim::Stream(0))),
                            tape: Vec::new(),
                            finish: Finish::Blc,
                        },
                        Err(_) => BemState::ReadingBits(bits),
                    }
                }
            },
            (BemMachine::Echo, BemState::ReadingBits(mut bits)) => match symbol.bit() {
                None => BemState::Done(BemOutput::from_bits(bits)),
                Some(b) => {
                    bits.push(b);
                    BemState::ReadingBits(bits)
                }
            },
            (BemMachine::Zot, BemState::Folding(acc)) => match symbol.bit() {
                None => BemState::Reducing {
                    term: acc,
                    tape: Vec::new(),
                    finish: Finish::Zot,
                },
                Some(b) => BemState::Folding(app(acc, zot_bit(b))),
            },
            (_, BemState::AwaitingTape { term, mut tape }) => {
                tape.push(symbol);
                BemState::Reducing {
                    term,
                    tape,
                    finish: Finish::Blc,
                }
            }
            (_, BemState::FinalRead(out)) => BemState::Done(out),
            (BemMachine::Fixed3, BemState::Counting(n)) => BemState::Counting(n + 1),
            (BemMachine::Parity, BemState::Counting(n)) => match symbol {
                Symbol::End => BemState::Done(BemOutput::from_bits(BitString::from_bools(vec![
                    n % 2 == 1,
                ]))),
                Symbol::One => BemState::Counting(n + 1),
                Symbol::Zero => BemState::Counting(n),
            },
            (_, other) => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eliminator::stepper::{run_direct, with_endmarker, DirectRun};
    use crate::keraia::keraia_eval;
    use crate::languages::blc::blc_eval;
    use crate::languages::zot::zot_eval;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn direct(m: BemMachine, s: &str) -> DirectRun {
        run_direct(&m, &with_endmarker(&bits(s)), 100_000)
    }

    #[test]
    fn keraia_matches_direct_evaluation() {
        for p in ["11000", "1100110101000", "100"] {
            let DirectRun::Halted(out) = direct(BemMachine::Keraia, p) else {
                panic!("{p} did not halt")
            };
            assert_eq!(
                out.term,
                keraia_eval(&bits(p), 100_000).halted().unwrap().term
            );
        }
    }

    #[test]
    fn keraia_incomplete_tree_never_halts() {
        assert_eq!(direct(BemMachine::Keraia, "1"), DirectRun::StepLimit);
    }

    #[test]
    fn zot_empty_program() {
        let DirectRun::Halted(out) = direct(BemMachine::Zot, "") else {
            panic!()
        };
        assert_eq!(out.term, zot_eval(&bits(""), 100).halted().unwrap().term);
    }

    #[test]
    fn zot_matches_fold() {
        for p in ["0", "10", "1100"] {
            let r = direct(BemMachine::Zot, p);
            let DirectRun::Halted(out) = r else {
                panic!("{p}: {r:?}")
            };
            assert_eq!(
                out.term,
                zot_eval(&bits(p), 100_000).halted().unwrap().term,
                "{p}"
            );
        }
    }

    #[test]
    fn blc_matches_list_semantics() {
        for p in ["0010", "00100", "001011", "000010", "01 0010 0010 10"] {
            let r = direct(BemMachine::Blc, p);
            let DirectRun::Halted(out) = r else {
                panic!("{p}: {r:?}")
            };
            let expected = blc_eval(&bits(p), 100_000);
            let h = expected.halted().unwrap();
            assert_eq!(out.bits, h.bits, "{p}");
            assert!(crate::reduce::equivalent(&out.term, &h.term, 10_000), "{p}");
        }
    }

    #[test]
    fn blc_ignoring_input_reads_only_the_final_symbol() {
        // λλ0 ignores its list: halts after one extra read, whatever it is.
        assert!(matches!(
            direct(BemMachine::Blc, "000010"),
            DirectRun::Halted(_)
        ));
        let r = run_direct(
            &BemMachine::Blc,
            &with_endmarker(&bits("0000101"))[..7],
            1000,
        );
        assert!(matches!(r, DirectRun::Halted(_)));
    }

    #[test]
    fn toys() {
        let DirectRun::Halted(out) = direct(BemMachine::Fixed3, "010") else {
            panic!()
        };
        assert_eq!(out.bits, bits("1"));
        assert_eq!(direct(BemMachine::Fixed3, "01"), DirectRun::Starved);
        let DirectRun::Halted(out) = direct(BemMachine::Parity, "1101") else {
            panic!()
        };
        assert_eq!(out.bits, bits("1"));
        let DirectRun::Halted(out) = direct(BemMachine::Echo, "1101") else {
            panic!()
        };
        assert_eq!(out.bits, bits("1101"));
    }

    #[test]
    fn as_bem_support() {
        assert_eq!(as_bem(&LanguageId::Keraia), Ok(BemMachine::Keraia));
        assert!(as_bem(&LanguageId::Iota).is_err());
        assert_eq!("parity".parse::<BemMachine>(), Ok(BemMachine::Parity));
    }
}
