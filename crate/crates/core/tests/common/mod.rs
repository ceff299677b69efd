#![allow(dead_code)]

use ait_core::bits::BitString;
use ait_core::term::{abs, app, Prim, Term};
use proptest::prelude::*;

pub fn bits(s: &str) -> BitString {
    s.parse().unwrap()
}

#[derive(Debug, Clone)]
pub enum Shape {
    Leaf(u8),
    Abs(Box<Shape>),
    App(Box<Shape>, Box<Shape>),
}

pub fn shape(depth: u32, size: u32) -> impl Strategy<Value = Shape> {
    any::<u8>()
        .prop_map(Shape::Leaf)
        .prop_recursive(depth, size, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|b| Shape::Abs(Box::new(b))),
                (inner.clone(), inner).prop_map(|(f, a)| Shape::App(Box::new(f), Box::new(a))),
            ]
        })
}

/// Leaves become bound variables when a binder is in scope, else S, K or I.
pub fn close(shape: &Shape, depth: usize) -> Term {
    match shape {
        Shape::Leaf(n) => {
            let n = *n as usize;
            if depth > 0 && n.is_multiple_of(2) {
                Term::Var((n / 2) % depth)
            } else {
                Term::Prim([Prim::S, Prim::K, Prim::I][n % 3])
            }
        }
        Shape::Abs(b) => abs(close(b, depth + 1)),
        Shape::App(f, a) => app(close(f, depth), close(a, depth)),
    }
}

pub fn closed_term(depth: u32, size: u32) -> impl Strategy<Value = Term> {
    shape(depth, size).prop_map(|s| close(&s, 0))
}

/// Beta redexes plus saturated S/K/I heads, one per application spine.
pub fn count_redexes(t: &Term) -> usize {
    let (head, args) = t.spine();
    let here = match head {
        Term::Abs(_) => usize::from(!args.is_empty()),
        Term::Prim(p @ (Prim::S | Prim::K | Prim::I)) => {
            usize::from(args.len() >= p.arity().unwrap())
        }
        _ => 0,
    };
    let in_head = match head {
        Term::Abs(b) => count_redexes(b),
        _ => 0,
    };
    here + in_head + args.iter().map(|a| count_redexes(a)).sum::<usize>()
}

/// Closed terms with at least two redexes.
pub fn multi_redex_term(depth: u32, size: u32) -> impl Strategy<Value = Term> {
    closed_term(depth, size).prop_filter("at least two redexes", |t| count_redexes(t) >= 2)
}
