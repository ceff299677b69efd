//! Bracket abstraction into S, K and I.
//!
//! Rules, tried in this order for `abstract(v, X)`:
//!
//! 1. `X` does not mention `v`  →  `K X`
//! 2. `X` is `v`                →  `I`
//! 3. `X = Y Z`                 →  `S abstract(v, Y) abstract(v, Z)`
//!
//! Abstractions inside `X` are eliminated first, innermost binder first. No
//! eta shortcut is taken, so `λxy.yx` becomes `S(K(SI))(S(KK)I)`.

use crate::curried::{to_named, NamedTerm};
use crate::term::{app, Prim, Term};

fn k(x: NamedTerm) -> NamedTerm {
    NamedTerm::app(NamedTerm::Prim(Prim::K), x)
}

/// Removes `variable` from a lambda-free or lambda-containing named term.
pub fn lambda_abstract(variable: &str, term: &NamedTerm) -> NamedTerm {
    if !term.mentions(variable) {
        return k(eliminate_lambdas(term));
    }
    match term {
        NamedTerm::Var(_) => NamedTerm::Prim(Prim::I),
        NamedTerm::App(f, a) => NamedTerm::app(
            NamedTerm::app(NamedTerm::Prim(Prim::S), lambda_abstract(variable, f)),
            lambda_abstract(variable, a),
        ),
        NamedTerm::Lam(..) => lambda_abstract(variable, &eliminate_lambdas(term)),
        NamedTerm::Prim(_) => unreachable!("primitives mention no variables"),
    }
}

/// Rewrites every abstraction in `term` into S/K/I combinations.
pub fn eliminate_lambdas(term: &NamedTerm) -> NamedTerm {
    match term {
        NamedTerm::Var(_) | NamedTerm::Prim(_) => term.clone(),
        NamedTerm::App(f, a) => NamedTerm::app(eliminate_lambdas(f), eliminate_lambdas(a)),
        NamedTerm::Lam(x, body) => lambda_abstract(x, &eliminate_lambdas(body)),
    }
}

/// De Bruijn wrapper around [`eliminate_lambdas`]. Free indices stay free.
pub fn to_combinators(term: &Term) -> Term {
    fn back(t: &NamedTerm) -> Term {
        match t {
            NamedTerm::Prim(p) => Term::Prim(*p),
            NamedTerm::App(f, a) => app(back(f), back(a)),
            NamedTerm::Var(v) => {
                let k = v
                    .strip_prefix("free")
                    .and_then(|n| n.parse().ok())
                    .expect("bound variable survived abstraction");
                Term::Var(k)
            }
            NamedTerm::Lam(..) => unreachable!("abstraction left a lambda"),
        }
    }
    back(&eliminate_lambdas(&to_named(term)))
}
