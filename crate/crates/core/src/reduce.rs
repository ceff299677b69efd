//! Normal-order reduction with primitive contraction rules and lazy input reads.
//!
//! One step is one contraction: a beta contraction or one of
//!
//! ```text
//! S x y z  →  x z (y z)
//! K x y    →  x
//! I x      →  x
//! R x      →  K x      (next pipe bit 0)
//! R x      →  K I x    (next pipe bit 1)
//! ```
//!
//! `R` without an argument is inert. [`reduce`] is the production path; it
//! contracts head redexes in place and then normalizes arguments left to
//! right, which visits redexes in exactly leftmost-outermost order.
//! [`step`] re-scans from the root each time and is used for tracing, for the
//! resumable BEM steppers and as a cross-check.

use crate::pipe::Pipe;
use crate::term::{app, apply_all, k_i, Prim, Term, K};

/// Where `R` and stream cells get their data.
pub trait InputSource {
    /// Next bit, or `None` without consuming anything when none is available.
    fn take_bit(&mut self) -> Option<bool>;

    /// The list cell for BEM input position `index`, if that symbol is known.
    fn stream_cell(&mut self, _index: usize) -> Option<Term> {
        None
    }
}

impl InputSource for Pipe {
    fn take_bit(&mut self) -> Option<bool> {
        self.take()
    }
}

/// An input source that never has data.
pub struct NoInput;

impl InputSource for NoInput {
    fn take_bit(&mut self) -> Option<bool> {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NormalForm(Term),
    /// The step budget ran out; carries the term reached so far.
    StepLimit(Term),
    /// The leftmost-outermost redex needs input that is not there.
    InputUnderflow(Term),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub outcome: Outcome,
    pub steps_used: u64,
}

impl ReductionResult {
    pub fn normal_form(&self) -> Option<&Term> {
        match &self.outcome {
            Outcome::NormalForm(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostOutermost,
    /// Leftmost redex that contains no other redex.
    LeftmostInnermost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Contracted(Term),
    NormalForm,
    Blocked,
}

fn redex_arity(head: &Term) -> Option<usize> {
    match head {
        Term::Abs(_) => Some(1),
        Term::Prim(p) => p.arity(),
        Term::Var(_) | Term::App(..) => None,
    }
}

/// Contracts `head args` where `args.len()` equals the head's arity.
fn fire(head: &Term, args: &[Term], input: &mut dyn InputSource) -> Option<Term> {
    Some(match head {
        Term::Abs(body) => body.instantiate(&args[0]),
        Term::Prim(Prim::S) => app(
            app(args[0].clone(), args[2].clone()),
            app(args[1].clone(), args[2].clone()),
        ),
        Term::Prim(Prim::K) | Term::Prim(Prim::I) => args[0].clone(),
        Term::Prim(Prim::R) => {
            if input.take_bit()? {
                app(k_i(), args[0].clone())
            } else {
                app(K, args[0].clone())
            }
        }
        Term::Prim(Prim::Stream(n)) => app(input.stream_cell(*n)?, args[0].clone()),
        _ => unreachable!("fire called on a non-redex"),
    })
}

fn unwind(t: &Term) -> (Term, Vec<Term>) {
    let mut args = Vec::new();
    let mut cur = t.clone();
    while let Term::App(f, a) = cur {
        args.push((*a).clone());
        cur = (*f).clone();
    }
    args.reverse();
    (cur, args)
}

enum Stop {
    Limit,
    Blocked,
}

struct Normalizer<'a> {
    input: &'a mut dyn InputSource,
    steps: u64,
    limit: u64,
    stop: Option<Stop>,
}

impl Normalizer<'_> {
    // Returns the reduced term, or the partial term reached when `self.stop` is set.
    fn normalize(&mut self, term: Term) -> Term {
        let mut cur = term;
        loop {
            let (head, mut args) = unwind(&cur);
            if let Some(n) = redex_arity(&head) {
                if args.len() >= n {
                    if self.steps >= self.limit {
                        self.stop = Some(Stop::Limit);
                        return cur;
                    }
                    match fire(&head, &args[..n], self.input) {
                        Some(contracted) => {
                            self.steps += 1;
                            cur = apply_all(contracted, args.drain(n..));
                            continue;
                        }
                        None => {
                            self.stop = Some(Stop::Blocked);
                            return cur;
                        }
                    }
                }
            }
            return match head {
                Term::Abs(body) => Term::Abs(std::sync::Arc::new(self.normalize((*body).clone()))),
                _ => {
                    let mut out = head;
                    for a in args {
                        let a = if self.stop.is_some() {
                            a
                        } else {
                            self.normalize(a)
                        };
                        out = app(out, a);
                    }
                    out
                }
            };
        }
    }
}

/// Leftmost-outermost reduction to normal form, at most `step_limit` contractions.
pub fn reduce(term: &Term, step_limit: u64, pipe: &mut dyn InputSource) -> ReductionResult {
    let mut n = Normalizer {
        input: pipe,
        steps: 0,
        limit: step_limit,
        stop: None,
    };
    let t = n.normalize(term.clone());
    let outcome = match n.stop {
        None => Outcome::NormalForm(t),
        Some(Stop::Limit) => Outcome::StepLimit(t),
        Some(Stop::Blocked) => Outcome::InputUnderflow(t),
    };
    ReductionResult {
        outcome,
        steps_used: n.steps,
    }
}

enum Found {
    Redex(Term),
    None,
    Blocked,
}

fn contract_node(t: &Term, input: &mut dyn InputSource) -> Found {
    if !matches!(t, Term::App(..)) {
        return Found::None;
    }
    let (head, args) = unwind(t);
    match redex_arity(&head) {
        Some(n) if args.len() == n => match fire(&head, &args, input) {
            Some(r) => Found::Redex(r),
            None => Found::Blocked,
        },
        _ => Found::None,
    }
}

fn search(t: &Term, strategy: Strategy, input: &mut dyn InputSource) -> Found {
    if strategy == Strategy::LeftmostOutermost {
        match contract_node(t, input) {
            Found::None => {}
            other => return other,
        }
    }
    let inner = match t {
        Term::Var(_) | Term::Prim(_) => Found::None,
        Term::Abs(b) => match search(b, strategy, input) {
            Found::Redex(nb) => Found::Redex(crate::term::abs(nb)),
            other => other,
        },
        Term::App(f, a) => match search(f, strategy, input) {
            Found::Redex(nf) => Found::Redex(Term::App(std::sync::Arc::new(nf), a.clone())),
            Found::Blocked => Found::Blocked,
            Found::None => match search(a, strategy, input) {
                Found::Redex(na) => Found::Redex(Term::App(f.clone(), std::sync::Arc::new(na))),
                other => other,
            },
        },
    };
    match inner {
        Found::None if strategy == Strategy::LeftmostInnermost => contract_node(t, input),
        other => other,
    }
}

/// Performs exactly one contraction chosen by `strategy`.
pub fn step(term: &Term, strategy: Strategy, input: &mut dyn InputSource) -> Step {
    match search(term, strategy, input) {
        Found::Redex(t) => Step::Contracted(t),
        Found::None => Step::NormalForm,
        Found::Blocked => Step::Blocked,
    }
}

/// Reduction by repeated [`step`]; `on_step` sees every intermediate term.
pub fn reduce_stepwise(
    term: &Term,
    strategy: Strategy,
    step_limit: u64,
    input: &mut dyn InputSource,
    mut on_step: impl FnMut(u64, &Term),
) -> ReductionResult {
    let mut cur = term.clone();
    let mut steps = 0;
    loop {
        if steps >= step_limit {
            // Still report a normal form reached exactly at the limit.
            if step(&cur, strategy, &mut NoInput) == Step::NormalForm {
                return ReductionResult {
                    outcome: Outcome::NormalForm(cur),
                    steps_used: steps,
                };
            }
            return ReductionResult {
                outcome: Outcome::StepLimit(cur),
                steps_used: steps,
            };
        }
        match step(&cur, strategy, input) {
            Step::Contracted(next) => {
                steps += 1;
                on_step(steps, &next);
                cur = next;
            }
            Step::NormalForm => {
                return ReductionResult {
                    outcome: Outcome::NormalForm(cur),
                    steps_used: steps,
                }
            }
            Step::Blocked => {
                return ReductionResult {
                    outcome: Outcome::InputUnderflow(cur),
                    steps_used: steps,
                }
            }
        }
    }
}

/// Normal form with no input available, or `None`.
pub fn normalize(term: &Term, step_limit: u64) -> Option<Term> {
    match reduce(term, step_limit, &mut NoInput).outcome {
        Outcome::NormalForm(t) => Some(t),
        _ => None,
    }
}

/// Extensional check used for golden comparisons: expand S, K, I to their
/// lambda definitions, normalize both sides, then compare de Bruijn forms.
pub fn equivalent(a: &Term, b: &Term, step_limit: u64) -> bool {
    match (
        normalize(&a.expand_primitives(), step_limit),
        normalize(&b.expand_primitives(), step_limit),
    ) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}
