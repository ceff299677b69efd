//! Minimal prefix-free universal machines on a shared lambda/combinator core.
//!
//! Programs are bit strings. Each language turns a codeword into a term, the
//! term is reduced in normal order while reading further bits from a pipe,
//! and the run ends halted (normal form, pipe drained) or diverged
//! (underflow, overflow, syntax error or an exhausted step budget).

pub mod abstraction;
pub mod ait;
pub mod bits;
pub mod boollist;
pub mod cli;
pub mod curried;
pub mod eliminator;
pub mod keraia;
pub mod languages;
pub mod pipe;
pub mod reduce;
pub mod runtime;
pub mod term;
pub mod tree;

pub use bits::{BitString, Symbol};
pub use languages::LanguageId;
pub use runtime::{Divergence, Halted, RunOutcome};
pub use term::{Prim, Term};
