//! Binary lambda calculus.
//!
//! ```text
//! 00 F      abstraction
//! 01 F G    application
//! 1^k 0     variable, de Bruijn index k-1 (k ≥ 1, 0 = innermost)
//! ```
//!
//! Bits after the program become a boolean list the program is applied to.

use thiserror::Error;

use crate::bits::BitString;
use crate::boollist::apply_to_list;
use crate::reduce::{reduce, NoInput, Outcome};
use crate::runtime::{Divergence, Halted, RunOutcome};
use crate::term::{abs, app, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("truncated binary lambda term")]
pub struct BlcTruncated;

fn parse_at(bits: &[bool], pos: &mut usize) -> Result<Term, BlcTruncated> {
    let mut next = || -> Result<bool, BlcTruncated> {
        let b = *bits.get(*pos).ok_or(BlcTruncated)?;
        *pos += 1;
        Ok(b)
    };
    if next()? {
        let mut k = 1;
        while next()? {
            k += 1;
        }
        return Ok(Term::Var(k - 1));
    }
    if next()? {
        let f = parse_at(bits, pos)?;
        let a = parse_at(bits, pos)?;
        Ok(app(f, a))
    } else {
        Ok(abs(parse_at(bits, pos)?))
    }
}

/// Parses one term from the front of `bits` and returns the unconsumed rest.
pub fn blc_parse(bits: &BitString) -> Result<(Term, BitString), BlcTruncated> {
    let mut pos = 0;
    let t = parse_at(bits.as_slice(), &mut pos)?;
    Ok((t, bits.split_at(pos).1))
}

/// Encodes a term back into its bits.
pub fn blc_encode(term: &Term) -> Option<BitString> {
    let mut out = BitString::new();
    fn go(t: &Term, out: &mut BitString) -> Option<()> {
        match t {
            Term::Var(i) => {
                for _ in 0..=*i {
                    out.push(true);
                }
                out.push(false);
            }
            Term::Abs(b) => {
                out.push(false);
                out.push(false);
                go(b, out)?;
            }
            Term::App(f, a) => {
                out.push(false);
                out.push(true);
                go(f, out)?;
                go(a, out)?;
            }
            Term::Prim(_) => return None,
        }
        Some(())
    }
    go(term, &mut out)?;
    Some(out)
}

pub fn blc_eval(bits: &BitString, step_limit: u64) -> RunOutcome {
    let Ok((program, rest)) = blc_parse(bits) else {
        return RunOutcome::Diverged(Divergence::SyntaxError);
    };
    let r = reduce(&apply_to_list(program, &rest), step_limit, &mut NoInput);
    match r.outcome {
        Outcome::NormalForm(t) => RunOutcome::Halted(Halted::new(t, r.steps_used)),
        Outcome::StepLimit(_) => RunOutcome::Diverged(Divergence::StepLimit),
        Outcome::InputUnderflow(_) => unreachable!("BLC terms contain no readers"),
    }
}
