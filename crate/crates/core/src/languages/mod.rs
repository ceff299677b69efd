//! Program encodings and their evaluators.

pub mod blc;
pub mod chaitin;
pub mod iota;
pub mod zot;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bits::BitString;
use crate::boollist::apply_to_list;
use crate::keraia::{
    keraia_eval, keraia_translate, pf_keraia_eval, pf_keraia_program, LeafMeaning,
};
use crate::runtime::{Divergence, RunOutcome};
use crate::term::Term;
use crate::tree::{parse_tree, split_tree_prefix};

pub use blc::{blc_encode, blc_eval, blc_parse};
pub use chaitin::{extend_universal, simple_chaitin_eval, zero_combinator};
pub use iota::{fokker_combinator, fokker_eval, iota_combinator, iota_eval};
pub use zot::zot_eval;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error("the universal combinator must be closed")]
    OpenUniversal,
    #[error("unknown language `{0}` (expected one of iota, fokker, simple, ext, zot, blc, keraia, pf-keraia)")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageId {
    Iota,
    FokkerIota,
    SimpleChaitin,
    /// The extension of a closed universal combinator.
    Extended(Term),
    Zot,
    Blc,
    Keraia,
    PfKeraia,
}

impl LanguageId {
    pub fn extended(universal: Term) -> Result<Self, LanguageError> {
        if !universal.is_closed() {
            return Err(LanguageError::OpenUniversal);
        }
        Ok(LanguageId::Extended(universal))
    }

    pub fn name(&self) -> &'static str {
        match self {
            LanguageId::Iota => "iota",
            LanguageId::FokkerIota => "fokker",
            LanguageId::SimpleChaitin => "simple",
            LanguageId::Extended(_) => "ext",
            LanguageId::Zot => "zot",
            LanguageId::Blc => "blc",
            LanguageId::Keraia => "keraia",
            LanguageId::PfKeraia => "pf-keraia",
        }
    }

    /// True for the machines whose halting inputs form a prefix-free set.
    pub fn is_chaitin_machine(&self) -> bool {
        matches!(
            self,
            LanguageId::SimpleChaitin | LanguageId::Extended(_) | LanguageId::PfKeraia
        )
    }

    /// The initial term and pipe contents for `bits`, before any reduction.
    /// Keraia outputs are additionally abstracted into combinators after reduction.
    pub fn program(&self, bits: &BitString) -> Result<(Term, BitString), Divergence> {
        let tree_program = |leaf: &Term| match split_tree_prefix(bits) {
            Ok((p, rest)) => Ok((iota::tree_to_term(&p.tree, leaf), rest)),
            Err(_) => Err(Divergence::SyntaxError),
        };
        let whole_tree = |leaf: &Term| match parse_tree(bits) {
            Ok(p) => Ok((iota::tree_to_term(&p.tree, leaf), BitString::new())),
            Err(_) => Err(Divergence::SyntaxError),
        };
        match self {
            LanguageId::Iota => whole_tree(&iota_combinator()),
            LanguageId::FokkerIota => whole_tree(&fokker_combinator()),
            LanguageId::SimpleChaitin => tree_program(&zero_combinator()),
            LanguageId::Extended(u) => tree_program(
                &extend_universal(u)
                    .expect("Extended is only constructed with a closed combinator"),
            ),
            LanguageId::Zot => Ok((zot::zot_program(bits), BitString::new())),
            LanguageId::Blc => match blc_parse(bits) {
                Ok((p, rest)) => Ok((apply_to_list(p, &rest), BitString::new())),
                Err(_) => Err(Divergence::SyntaxError),
            },
            LanguageId::Keraia => match parse_tree(bits) {
                Ok(p) => Ok((
                    keraia_translate(&p.tree, LeafMeaning::InterpretConst),
                    BitString::new(),
                )),
                Err(_) => Err(Divergence::SyntaxError),
            },
            LanguageId::PfKeraia => pf_keraia_program(bits).map_err(|_| Divergence::SyntaxError),
        }
    }

    /// Runs one input. For the endmarker languages (Zot, BLC, Keraia) the
    /// endmarker is implied at the end of `bits`.
    pub fn run(&self, bits: &BitString, step_limit: u64) -> RunOutcome {
        match self {
            LanguageId::Iota => iota_eval(bits, step_limit),
            LanguageId::FokkerIota => fokker_eval(bits, step_limit),
            LanguageId::SimpleChaitin => simple_chaitin_eval(bits, step_limit),
            LanguageId::Extended(u) => chaitin::extended_eval(u, bits, step_limit)
                .expect("Extended is only constructed with a closed combinator"),
            LanguageId::Zot => zot_eval(bits, step_limit),
            LanguageId::Blc => blc_eval(bits, step_limit),
            LanguageId::Keraia => keraia_eval(bits, step_limit),
            LanguageId::PfKeraia => pf_keraia_eval(bits, step_limit),
        }
    }
}

impl FromStr for LanguageId {
    type Err = LanguageError;

    /// `ext` uses Iota's combinator; build other extensions with [`LanguageId::extended`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "iota" => LanguageId::Iota,
            "fokker" => LanguageId::FokkerIota,
            "simple" => LanguageId::SimpleChaitin,
            "ext" => LanguageId::Extended(iota_combinator()),
            "zot" => LanguageId::Zot,
            "blc" => LanguageId::Blc,
            "keraia" => LanguageId::Keraia,
            "pf-keraia" => LanguageId::PfKeraia,
            other => return Err(LanguageError::Unknown(other.to_string())),
        })
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
