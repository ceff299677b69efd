//! Lambda/combinator terms in de Bruijn form.
//!
//! Variables are de Bruijn indices with `0` naming the innermost enclosing
//! binder. Indices at or beyond the binder depth are free; tests use them as
//! inert marker constants. Primitive constants carry their own contraction
//! rules (see [`crate::reduce`]) and are never equal to their lambda
//! expansions under [`alpha_eq`].

use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prim {
    S,
    K,
    I,
    /// Reads one bit from the pipe when applied: `R x` becomes `K x` on 0, `K I x` on 1.
    R,
    /// Inert constant standing for unmatched Keraia leaves.
    Interpret,
    /// Cell `n` of a lazily read BEM input list. Only produced by the BLC stepper.
    Stream(usize),
}

impl Prim {
    /// Number of arguments needed before the primitive contracts, if it ever does.
    pub fn arity(self) -> Option<usize> {
        match self {
            Prim::S => Some(3),
            Prim::K => Some(2),
            Prim::I | Prim::R | Prim::Stream(_) => Some(1),
            Prim::Interpret => None,
        }
    }

    pub fn name(self) -> String {
        match self {
            Prim::S => "S".into(),
            Prim::K => "K".into(),
            Prim::I => "I".into(),
            Prim::R => "R".into(),
            Prim::Interpret => "Interpret".into(),
            Prim::Stream(n) => format!("Stream{n}"),
        }
    }

    pub fn from_name(name: &str) -> Option<Prim> {
        match name {
            "S" => Some(Prim::S),
            "K" => Some(Prim::K),
            "I" => Some(Prim::I),
            "R" => Some(Prim::R),
            "Interpret" => Some(Prim::Interpret),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Abs(Arc<Term>),
    App(Arc<Term>, Arc<Term>),
    Prim(Prim),
}

pub fn var(index: usize) -> Term {
    Term::Var(index)
}

pub fn abs(body: Term) -> Term {
    Term::Abs(Arc::new(body))
}

pub fn app(function: Term, argument: Term) -> Term {
    Term::App(Arc::new(function), Arc::new(argument))
}

/// Left-associated application `f a1 a2 ...`.
pub fn apply_all(function: Term, args: impl IntoIterator<Item = Term>) -> Term {
    args.into_iter().fold(function, app)
}

/// `n` nested abstractions around `body`.
pub fn lambdas(n: usize, body: Term) -> Term {
    (0..n).fold(body, |b, _| abs(b))
}

pub const S: Term = Term::Prim(Prim::S);
pub const K: Term = Term::Prim(Prim::K);
pub const I: Term = Term::Prim(Prim::I);
pub const R: Term = Term::Prim(Prim::R);
pub const INTERPRET: Term = Term::Prim(Prim::Interpret);

/// Structural equality of de Bruijn forms.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b
}

impl Term {
    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Prim(_) => 1,
            Term::Abs(b) => 1 + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// True when every variable is bound.
    pub fn is_closed(&self) -> bool {
        self.free_bound() == 0
    }

    /// Smallest depth at which the term would be closed (one more than the
    /// largest free index, or 0).
    pub fn free_bound(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Prim(_) => 0,
            Term::Abs(b) => b.free_bound().saturating_sub(1),
            Term::App(f, a) => f.free_bound().max(a.free_bound()),
        }
    }

    /// True when index `index` (relative to this term's root) occurs free.
    pub fn has_free(&self, index: usize) -> bool {
        match self {
            Term::Var(i) => *i == index,
            Term::Prim(_) => false,
            Term::Abs(b) => b.has_free(index + 1),
            Term::App(f, a) => f.has_free(index) || a.has_free(index),
        }
    }

    pub fn contains_prim(&self, pred: &impl Fn(Prim) -> bool) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Prim(p) => pred(*p),
            Term::Abs(b) => b.contains_prim(pred),
            Term::App(f, a) => f.contains_prim(pred) || a.contains_prim(pred),
        }
    }

    /// True when the term has no abstractions and no variables.
    pub fn is_combinator(&self) -> bool {
        match self {
            Term::Var(_) | Term::Abs(_) => false,
            Term::Prim(_) => true,
            Term::App(f, a) => f.is_combinator() && a.is_combinator(),
        }
    }

    /// Head and arguments of the application spine, arguments in order.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut cur = self;
        while let Term::App(f, a) = cur {
            args.push(&**a);
            cur = f;
        }
        args.reverse();
        (cur, args)
    }

    /// Adds `by` to every free index at or above `cutoff`.
    pub fn shift(&self, by: usize, cutoff: usize) -> Term {
        if by == 0 {
            return self.clone();
        }
        shift_opt(self, by, cutoff).unwrap_or_else(|| self.clone())
    }

    /// Substitutes `arg` for index 0 in `self` (seen as the body of an
    /// abstraction) and lowers the remaining free indices by one.
    pub fn instantiate(&self, arg: &Term) -> Term {
        let arg_closed = arg.is_closed();
        instantiate_opt(self, arg, arg_closed, 0).unwrap_or_else(|| self.clone())
    }

    /// Replaces S, K and I by their lambda definitions; other primitives are kept.
    pub fn expand_primitives(&self) -> Term {
        match self {
            Term::Prim(Prim::S) => s_lambda(),
            Term::Prim(Prim::K) => k_lambda(),
            Term::Prim(Prim::I) => i_lambda(),
            Term::Var(_) | Term::Prim(_) => self.clone(),
            Term::Abs(b) => abs(b.expand_primitives()),
            Term::App(f, a) => app(f.expand_primitives(), a.expand_primitives()),
        }
    }
}

fn shift_opt(t: &Term, by: usize, cutoff: usize) -> Option<Term> {
    match t {
        Term::Var(i) if *i >= cutoff => Some(Term::Var(i + by)),
        Term::Var(_) | Term::Prim(_) => None,
        Term::Abs(b) => shift_opt(b, by, cutoff + 1).map(abs),
        Term::App(f, a) => {
            let nf = shift_opt(f, by, cutoff);
            let na = shift_opt(a, by, cutoff);
            if nf.is_none() && na.is_none() {
                return None;
            }
            Some(Term::App(
                nf.map(Arc::new).unwrap_or_else(|| f.clone()),
                na.map(Arc::new).unwrap_or_else(|| a.clone()),
            ))
        }
    }
}

// `None` means the subterm is unchanged and can be shared.
fn instantiate_opt(t: &Term, arg: &Term, arg_closed: bool, depth: usize) -> Option<Term> {
    match t {
        Term::Var(i) => {
            if *i == depth {
                Some(if arg_closed {
                    arg.clone()
                } else {
                    arg.shift(depth, 0)
                })
            } else if *i > depth {
                Some(Term::Var(i - 1))
            } else {
                None
            }
        }
        Term::Prim(_) => None,
        Term::Abs(b) => instantiate_opt(b, arg, arg_closed, depth + 1).map(abs),
        Term::App(f, a) => {
            let nf = instantiate_opt(f, arg, arg_closed, depth);
            let na = instantiate_opt(a, arg, arg_closed, depth);
            if nf.is_none() && na.is_none() {
                return None;
            }
            Some(Term::App(
                nf.map(Arc::new).unwrap_or_else(|| f.clone()),
                na.map(Arc::new).unwrap_or_else(|| a.clone()),
            ))
        }
    }
}

/// `λxyz.xz(yz)`
pub fn s_lambda() -> Term {
    lambdas(3, app(app(var(2), var(0)), app(var(1), var(0))))
}

/// `λxy.x`
pub fn k_lambda() -> Term {
    lambdas(2, var(1))
}

/// `λx.x`
pub fn i_lambda() -> Term {
    abs(var(0))
}

/// The pairing combinator `λxyz.zxy`.
pub fn pair() -> Term {
    lambdas(3, app(app(var(0), var(2)), var(1)))
}

/// `K I`, the second projection; also the boolean-list terminator.
pub fn k_i() -> Term {
    app(K, I)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::curried::print_lenient(self))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({})", self)
    }
}
