//! Keraia: a full binary tree read as applications of a curried lambda.
//!
//! A subtree `1 1 0 P B` (a node whose left child is a leaf paired with a
//! pattern `P`) binds a fresh variable over `B`; inside `B`, any subtree
//! shaped exactly like `P` is an occurrence of that variable. Translation
//! checks, at every subtree:
//!
//! 1. the innermost binder whose pattern has this exact shape → variable;
//! 2. binder syntax, unless the left child is itself a variable occurrence → abstraction;
//! 3. otherwise a node is an application;
//! 4. a remaining leaf is a constant (`Interpret`, or `R` in prefix-free mode).
//!
//! The translated term is reduced to normal form and any remaining binders
//! are abstracted into S, K and I.

use crate::abstraction::to_combinators;
use crate::bits::BitString;
use crate::reduce::{reduce, NoInput, Outcome};
use crate::runtime::{run_with_pipe, Divergence, RunOutcome};
use crate::term::{abs, app, Term, INTERPRET, R};
use crate::tree::{parse_tree, split_tree_prefix, BitTree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafMeaning {
    /// Plain Keraia: unmatched leaves are the inert `Interpret` constant.
    InterpretConst,
    /// Prefix-free Keraia: unmatched leaves read input.
    RConst,
}

impl LeafMeaning {
    fn term(self) -> Term {
        match self {
            LeafMeaning::InterpretConst => INTERPRET,
            LeafMeaning::RConst => R,
        }
    }
}

/// Binder patterns in scope, innermost last.
#[derive(Debug, Clone, Default)]
pub struct MarkEnv {
    patterns: Vec<BitTree>,
}

impl MarkEnv {
    fn lookup(&self, tree: &BitTree) -> Option<usize> {
        self.patterns
            .iter()
            .rposition(|p| p == tree)
            .map(|pos| self.patterns.len() - 1 - pos)
    }
}

fn translate(tree: &BitTree, env: &mut MarkEnv, leaf: LeafMeaning) -> Term {
    if let Some(index) = env.lookup(tree) {
        return Term::Var(index);
    }
    match tree {
        BitTree::Leaf => leaf.term(),
        BitTree::Node(left, right) => {
            if let BitTree::Node(marker, pattern) = &**left {
                if **marker == BitTree::Leaf && env.lookup(left).is_none() {
                    env.patterns.push((**pattern).clone());
                    let body = translate(right, env, leaf);
                    env.patterns.pop();
                    return abs(body);
                }
            }
            app(translate(left, env, leaf), translate(right, env, leaf))
        }
    }
}

/// The lambda term a tree denotes, before any reduction.
pub fn keraia_translate(tree: &BitTree, leaf: LeafMeaning) -> Term {
    translate(tree, &mut MarkEnv::default(), leaf)
}

/// Translates, reduces with no input and abstracts the result into a combinator.
/// With [`LeafMeaning::RConst`] a read from the empty pipe is an underflow.
pub fn keraia_interpret(
    tree: &BitTree,
    leaf: LeafMeaning,
    step_limit: u64,
) -> Result<Term, Divergence> {
    let r = reduce(&keraia_translate(tree, leaf), step_limit, &mut NoInput);
    match r.outcome {
        Outcome::NormalForm(t) => Ok(to_combinators(&t)),
        Outcome::StepLimit(_) => Err(Divergence::StepLimit),
        Outcome::InputUnderflow(_) => Err(Divergence::Underflow),
    }
}

/// Plain Keraia on one complete tree; the endmarker is implied by the end of `bits`.
pub fn keraia_eval(bits: &BitString, step_limit: u64) -> RunOutcome {
    match parse_tree(bits) {
        Ok(p) => run_with_pipe(
            &keraia_translate(&p.tree, LeafMeaning::InterpretConst),
            &BitString::new(),
            step_limit,
        )
        .map_term(to_combinators),
        Err(_) => RunOutcome::Diverged(Divergence::SyntaxError),
    }
}

/// The program term and pipe contents of a prefix-free Keraia codeword.
pub fn pf_keraia_program(codeword: &BitString) -> Result<(Term, BitString), TreeError> {
    let (program, rest) = split_tree_prefix(codeword)?;
    Ok((keraia_translate(&program.tree, LeafMeaning::RConst), rest))
}

pub fn pf_keraia_eval(codeword: &BitString, step_limit: u64) -> RunOutcome {
    match pf_keraia_program(codeword) {
        Ok((program, input)) => {
            run_with_pipe(&program, &input, step_limit).map_term(to_combinators)
        }
        Err(_) => RunOutcome::Diverged(Divergence::SyntaxError),
    }
}

/// Bit strings of the worked examples.
pub mod examples {
    pub const I: &str = "11000";
    pub const K: &str = "1100110101000";
    /// K with the long variable pattern on the outer binder.
    pub const K_ALT: &str = "11010100110010100";
    pub const S: &str =
        concat!("110", "10100", "110", "11000", "110", "0", "11", "10100", "0", "1", "11000", "0");
    /// Applies the identity to whatever tree follows.
    pub const SELF_INTERPRETER: &str = "111000";
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curried::parse_curried_with;
    use crate::reduce::equivalent;
    use crate::term::*;
    use std::collections::HashMap;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> BitTree {
        parse_tree(&bits(s)).unwrap().tree
    }

    fn eval(s: &str) -> Term {
        keraia_eval(&bits(s), 10_000).halted().unwrap().term.clone()
    }

    /// Textual marking exactly as the reference JavaScript does it: variable
    /// occurrences are rewritten to the digits 2/3 before parsing.
    fn textual_parse(x: &str) -> String {
        if !x.contains('1') {
            return format!("_{x} ");
        }
        let chars: Vec<char> = x.chars().collect();
        let scan = |mut pos: usize| {
            let mut count = 0i32;
            while count >= 0 && pos < chars.len() {
                count += if chars[pos] == '1' || chars[pos] == '3' {
                    1
                } else {
                    -1
                };
                pos += 1;
            }
            pos
        };
        let mid = scan(1);
        let end = scan(mid);
        let left: String = chars[1..mid].iter().collect();
        let right: String = chars[mid..end].iter().collect();
        if let Some(pattern) = left.strip_prefix("10") {
            let arg = pattern.replace('0', "2").replace('1', "3");
            return format!("``^_{arg} {}", textual_parse(&right.replace(pattern, &arg)));
        }
        format!("`{}{}", textual_parse(&left), textual_parse(&right))
    }

    fn textual_translate(x: &str) -> Term {
        let mut defs = HashMap::new();
        defs.insert("_0".to_string(), INTERPRET);
        parse_curried_with(&textual_parse(x), &defs).unwrap()
    }

    #[test]
    fn identity() {
        assert_eq!(
            keraia_translate(&tree(examples::I), LeafMeaning::InterpretConst),
            abs(var(0))
        );
        assert_eq!(eval(examples::I), I);
    }

    #[test]
    fn k_from_table() {
        assert_eq!(
            keraia_translate(&tree(examples::K), LeafMeaning::InterpretConst),
            k_lambda()
        );
        assert!(equivalent(&eval(examples::K), &K, 1000));
    }

    #[test]
    fn k_alternative_encoding() {
        assert_eq!(
            keraia_translate(&tree(examples::K_ALT), LeafMeaning::InterpretConst),
            k_lambda()
        );
        assert!(equivalent(&eval(examples::K_ALT), &K, 1000));
    }

    #[test]
    fn s_from_table() {
        assert_eq!(
            keraia_translate(&tree(examples::S), LeafMeaning::InterpretConst),
            s_lambda()
        );
        assert!(equivalent(&eval(examples::S), &S, 1000));
    }

    #[test]
    fn textual_marking_agrees_where_patterns_do_not_collide() {
        for x in [examples::I, examples::K_ALT] {
            assert_eq!(
                textual_translate(x),
                keraia_translate(&tree(x), LeafMeaning::InterpretConst),
                "{x}"
            );
        }
    }

    #[test]
    fn textual_marking_breaks_on_table_k() {
        // The outer pattern "0" rewrites the inner binder marker, so the
        // textual route no longer yields K here.
        let t = textual_translate(examples::K);
        assert_ne!(t, k_lambda());
    }

    #[test]
    fn self_interpreting_prefix() {
        for p in [examples::I, examples::K, examples::S] {
            let prefixed = format!("{}{}", examples::SELF_INTERPRETER, p);
            assert!(equivalent(&eval(&prefixed), &eval(p), 10_000), "{p}");
        }
    }

    #[test]
    fn leftover_leaves_are_interpret() {
        assert_eq!(eval("0"), INTERPRET);
        assert_eq!(eval("100"), app(INTERPRET, INTERPRET));
    }

    #[test]
    fn incomplete_tree_is_syntax_error() {
        assert_eq!(
            keraia_eval(&bits("11"), 100),
            RunOutcome::Diverged(Divergence::SyntaxError)
        );
    }

    #[test]
    fn pf_examples() {
        let out = pf_keraia_eval(&bits("1001"), 1000);
        assert_eq!(out.halted().unwrap().term, I);
        let out = pf_keraia_eval(&bits("111010010100110001"), 1000);
        assert_eq!(out.halted().unwrap().term, I);
    }

    #[test]
    fn pf_worked_translation() {
        // ((λx. R x) I)
        let (p, rest) = pf_keraia_program(&bits("111010010100110001")).unwrap();
        assert_eq!(p, app(abs(app(R, var(0))), abs(var(0))));
        assert_eq!(rest, bits("1"));
    }

    #[test]
    fn pf_errors() {
        assert_eq!(
            pf_keraia_eval(&bits("11101001010011000"), 1000),
            RunOutcome::Diverged(Divergence::Underflow)
        );
        assert_eq!(
            pf_keraia_eval(&bits("1110100101001100011"), 1000),
            RunOutcome::Diverged(Divergence::Overflow)
        );
        assert_eq!(
            pf_keraia_eval(&bits("11"), 1000),
            RunOutcome::Diverged(Divergence::SyntaxError)
        );
    }

    #[test]
    fn interpret_reports_underflow_for_readers() {
        assert_eq!(
            keraia_interpret(&tree("100"), LeafMeaning::RConst, 100),
            Err(Divergence::Underflow)
        );
        assert_eq!(
            keraia_interpret(&tree(examples::I), LeafMeaning::RConst, 100),
            Ok(I)
        );
    }
}
