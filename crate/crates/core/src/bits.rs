//! Bit strings and the three-symbol BEM alphabet.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitParseError {
    #[error("invalid character {0:?} in bit string (expected '0' or '1')")]
    InvalidChar(char),
}

/// A finite sequence of bits. Text form is ASCII `0`/`1`; whitespace is ignored on input.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new() -> Self {
        BitString(Vec::new())
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    /// The `len`-bit big-endian binary representation of `value`.
    pub fn from_index(value: u64, len: usize) -> Self {
        BitString((0..len).rev().map(|i| (value >> i) & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn split_at(&self, mid: usize) -> (BitString, BitString) {
        let (a, b) = self.0.split_at(mid);
        (BitString(a.to_vec()), BitString(b.to_vec()))
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BitString(v)
    }

    /// True when `self` is a prefix of `other` (including equality).
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Every bit string of exactly `len` bits in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BitString> {
        assert!(len < 64, "enumeration length too large");
        (0..(1u64 << len)).map(move |i| BitString::from_index(i, len))
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<T: IntoIterator<Item = bool>>(iter: T) -> Self {
        BitString(iter.into_iter().collect())
    }
}

impl FromStr for BitString {
    type Err = BitParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(BitParseError::InvalidChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{}\")", self)
    }
}

/// An element of the BEM alphabet `{0, 1, ◇}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    End,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::End];

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn bit(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::End => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::End => "◇",
        })
    }
}
