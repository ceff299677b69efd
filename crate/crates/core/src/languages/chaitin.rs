//! Chaitin-universal combinator machines: a program is the first complete
//! tree of the codeword, every leaf is one combinator, and the remaining bits
//! are fed through the pipe to `R`.

use std::collections::HashMap;

use crate::bits::BitString;
use crate::curried::parse_curried_with;
use crate::runtime::{run_with_pipe, Divergence, RunOutcome};
use crate::term::{pair, Term};
use crate::tree::split_tree_prefix;

use super::iota::tree_to_term;
use super::LanguageError;

fn define(defs: &mut HashMap<String, Term>, name: &str, source: &str) {
    let t = parse_curried_with(source, defs).expect("built-in definition parses");
    defs.insert(name.to_string(), t);
}

/// The combinator `0 = λx. x C A (K I) S` where
/// `A = K (K R)`, `B = K (K (K (K (K (K (K K))))))` and `C = λx. x B`.
pub fn zero_combinator() -> Term {
    let mut defs = HashMap::new();
    define(&mut defs, "A", "`K `K R");
    define(&mut defs, "B", "`K `K `K `K `K `K `K K");
    define(&mut defs, "C", "``^x `x B");
    define(&mut defs, "0", "``^x ````x C A `K I S");
    defs.remove("0").unwrap()
}

/// `Pair (λxyz.U) R`: a Chaitin-universal leaf built from a universal combinator `U`.
pub fn extend_universal(universal: &Term) -> Result<Term, LanguageError> {
    if !universal.is_closed() {
        return Err(LanguageError::OpenUniversal);
    }
    let mut defs = HashMap::new();
    defs.insert("Pair".to_string(), pair());
    defs.insert("U".to_string(), universal.clone());
    Ok(parse_curried_with("``Pair ``^x ``^y ``^z U R", &defs).expect("built-in definition parses"))
}

/// Splits the codeword, builds the program from `leaf` and runs it on the rest.
pub fn chaitin_eval_with_leaf(codeword: &BitString, leaf: &Term, step_limit: u64) -> RunOutcome {
    match split_tree_prefix(codeword) {
        Ok((program, input)) => {
            run_with_pipe(&tree_to_term(&program.tree, leaf), &input, step_limit)
        }
        Err(_) => RunOutcome::Diverged(Divergence::SyntaxError),
    }
}

pub fn simple_chaitin_eval(codeword: &BitString, step_limit: u64) -> RunOutcome {
    chaitin_eval_with_leaf(codeword, &zero_combinator(), step_limit)
}

pub fn extended_eval(
    universal: &Term,
    codeword: &BitString,
    step_limit: u64,
) -> Result<RunOutcome, LanguageError> {
    Ok(chaitin_eval_with_leaf(
        codeword,
        &extend_universal(universal)?,
        step_limit,
    ))
}
