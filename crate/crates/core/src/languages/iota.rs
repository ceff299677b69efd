//! Iota: full binary trees whose leaves are one universal combinator and
//! whose internal nodes are applications.

use crate::bits::BitString;
use crate::runtime::{run_with_pipe, Divergence, RunOutcome};
use crate::term::{abs, app, apply_all, lambdas, var, Term, S};
use crate::tree::{parse_tree, BitTree};

/// `λf.fSK`
pub fn iota_combinator() -> Term {
    abs(apply_all(var(0), [S, crate::term::K]))
}

/// `λf.fS(λxyz.x)`
pub fn fokker_combinator() -> Term {
    abs(apply_all(var(0), [S, lambdas(3, var(2))]))
}

/// Leaves become `leaf`, internal nodes become applications.
pub fn tree_to_term(tree: &BitTree, leaf: &Term) -> Term {
    tree.fold(&|| leaf.clone(), &|l, r| app(l, r))
}

/// Evaluates a single tree with no input; trailing bits are a syntax error.
pub fn eval_tree_language(bits: &BitString, leaf: &Term, step_limit: u64) -> RunOutcome {
    match parse_tree(bits) {
        Ok(p) => run_with_pipe(&tree_to_term(&p.tree, leaf), &BitString::new(), step_limit),
        Err(_) => RunOutcome::Diverged(Divergence::SyntaxError),
    }
}

pub fn iota_eval(bits: &BitString, step_limit: u64) -> RunOutcome {
    eval_tree_language(bits, &iota_combinator(), step_limit)
}

pub fn fokker_eval(bits: &BitString, step_limit: u64) -> RunOutcome {
    eval_tree_language(bits, &fokker_combinator(), step_limit)
}
