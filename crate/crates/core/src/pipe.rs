//! The shared input channel between sender and machine.

use crate::bits::BitString;

/// Bits the sender has not yet delivered, plus a count of those already taken.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Pipe {
    bits: BitString,
    cursor: usize,
}

impl Pipe {
    pub fn new(bits: BitString) -> Self {
        Pipe { bits, cursor: 0 }
    }

    pub fn empty() -> Self {
        Pipe::default()
    }

    /// Takes the next bit, or `None` on an empty pipe (nothing is consumed).
    pub fn take(&mut self) -> Option<bool> {
        let bit = self.bits.get(self.cursor)?;
        self.cursor += 1;
        Some(bit)
    }

    pub fn is_empty(&self) -> bool {
        self.cursor >= self.bits.len()
    }

    pub fn consumed(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> BitString {
        self.bits.split_at(self.cursor).1
    }
}
