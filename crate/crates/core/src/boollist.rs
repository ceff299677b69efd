//! Boolean lists built with `P = λxyz.zxy`.
//!
//! Bit 0 is `K`, bit 1 is `K I`, and the empty list is `K I` as well (it is
//! only ever seen in tail position). A term that is not exactly such a list
//! decodes to the empty bit string.

use crate::bits::BitString;
use crate::reduce::normalize;
use crate::term::{app, apply_all, k_i, pair, var, Term, K};

/// Steps allowed when normalizing the lambda expansion of a candidate list.
pub const DECODE_STEP_LIMIT: u64 = 10_000;

fn nil_shape() -> Term {
    // λxy.y
    crate::term::lambdas(2, var(0))
}

fn zero_shape() -> Term {
    crate::term::k_lambda()
}

pub fn encode_bit(bit: bool) -> Term {
    if bit {
        k_i()
    } else {
        K
    }
}

/// `P b1 (P b2 (… nil))`, unreduced.
pub fn encode_bool_list(bits: &BitString) -> Term {
    bits.as_slice()
        .iter()
        .rev()
        .fold(k_i(), |tail, &b| apply_all(pair(), [encode_bit(b), tail]))
}

pub fn decode_bool_list(term: &Term) -> BitString {
    let Some(mut cur) = normalize(&term.expand_primitives(), DECODE_STEP_LIMIT) else {
        return BitString::new();
    };
    let nil = nil_shape();
    let zero = zero_shape();
    let mut out = BitString::new();
    loop {
        if cur == nil {
            return out;
        }
        // λz. z X Y with z not free in X or Y
        let Term::Abs(body) = &cur else {
            return BitString::new();
        };
        let (head, args) = body.spine();
        if head != &var(0) || args.len() != 2 || args[0].has_free(0) || args[1].has_free(0) {
            return BitString::new();
        }
        let x = args[0].instantiate(&var(0));
        let y = args[1].instantiate(&var(0));
        if x == zero {
            out.push(false);
        } else if x == nil {
            out.push(true);
        } else {
            return BitString::new();
        }
        cur = y;
    }
}

/// `t` applied to the list of `bits`.
pub fn apply_to_list(t: Term, bits: &BitString) -> Term {
    app(t, encode_bool_list(bits))
}
