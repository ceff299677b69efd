//! Zot: the continuation `λc.cI` is applied to one combinator per input bit.

use std::collections::HashMap;

use crate::bits::BitString;
use crate::curried::parse_curried_with;
use crate::reduce::{reduce, NoInput, Outcome};
use crate::runtime::{Divergence, Halted, RunOutcome};
use crate::term::{app, Term};

use super::iota::iota_combinator;

/// `λc.cI`
pub fn zot_start() -> Term {
    parse_curried_with("``^c `c I", &HashMap::new()).unwrap()
}

/// `λc.cι` for 0, `λcL.L(λlR.R(λr.c(lr)))` for 1.
pub fn zot_bit(bit: bool) -> Term {
    let mut defs = HashMap::new();
    defs.insert("iota".to_string(), iota_combinator());
    let src = if bit {
        "``^c ``^L `L ``^l ``^R `R ``^r `c `l r"
    } else {
        "``^c `c iota"
    };
    parse_curried_with(src, &defs).unwrap()
}

/// The left fold of the bit terms onto the start continuation, unreduced.
pub fn zot_program(bits: &BitString) -> Term {
    bits.iter().fold(zot_start(), |acc, b| app(acc, zot_bit(b)))
}

pub fn zot_eval(bits: &BitString, step_limit: u64) -> RunOutcome {
    let r = reduce(&zot_program(bits), step_limit, &mut NoInput);
    match r.outcome {
        Outcome::NormalForm(t) => RunOutcome::Halted(Halted::new(t, r.steps_used)),
        Outcome::StepLimit(_) => RunOutcome::Diverged(Divergence::StepLimit),
        Outcome::InputUnderflow(_) => unreachable!("Zot terms contain no readers"),
    }
}
