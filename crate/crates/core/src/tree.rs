//! Full binary trees written as preorder bit strings: `1` is an internal
//! node followed by its two subtrees, `0` is a leaf.

use std::fmt;

use thiserror::Error;

use crate::bits::BitString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("incomplete tree traversal")]
    Truncated,
    #[error("trailing bits after a complete tree")]
    TrailingBits,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BitTree {
    Leaf,
    Node(Box<BitTree>, Box<BitTree>),
}

impl BitTree {
    pub fn node(left: BitTree, right: BitTree) -> BitTree {
        BitTree::Node(Box::new(left), Box::new(right))
    }

    pub fn bits(&self) -> BitString {
        let mut out = BitString::new();
        self.write_bits(&mut out);
        out
    }

    fn write_bits(&self, out: &mut BitString) {
        match self {
            BitTree::Leaf => out.push(false),
            BitTree::Node(l, r) => {
                out.push(true);
                l.write_bits(out);
                r.write_bits(out);
            }
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            BitTree::Leaf => 1,
            BitTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Folds leaves and internal nodes into another structure.
    pub fn fold<T>(&self, leaf: &impl Fn() -> T, node: &impl Fn(T, T) -> T) -> T {
        match self {
            BitTree::Leaf => leaf(),
            BitTree::Node(l, r) => node(l.fold(leaf, node), r.fold(leaf, node)),
        }
    }
}

impl fmt::Display for BitTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits())
    }
}

impl fmt::Debug for BitTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitTree({})", self.bits())
    }
}

/// A bit string that is exactly one full preorder traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProgram {
    pub bits: BitString,
    pub tree: BitTree,
}

/// Length of the shortest prefix that completes a tree: the first position
/// where the running count (+1 per `1`, −1 per `0`) reaches −1.
pub fn complete_prefix_len(bits: &[bool]) -> Option<usize> {
    let mut count: i64 = 0;
    for (i, &b) in bits.iter().enumerate() {
        count += if b { 1 } else { -1 };
        if count < 0 {
            return Some(i + 1);
        }
    }
    None
}

fn build(bits: &[bool], pos: &mut usize) -> BitTree {
    let b = bits[*pos];
    *pos += 1;
    if b {
        let l = build(bits, pos);
        let r = build(bits, pos);
        BitTree::node(l, r)
    } else {
        BitTree::Leaf
    }
}

pub fn parse_tree(bits: &BitString) -> Result<TreeProgram, TreeError> {
    match complete_prefix_len(bits.as_slice()) {
        None => Err(TreeError::Truncated),
        Some(n) if n < bits.len() => Err(TreeError::TrailingBits),
        Some(_) => Ok(TreeProgram {
            bits: bits.clone(),
            tree: build(bits.as_slice(), &mut 0),
        }),
    }
}

/// Splits off the shortest prefix that is a complete tree.
pub fn split_tree_prefix(bits: &BitString) -> Result<(TreeProgram, BitString), TreeError> {
    let n = complete_prefix_len(bits.as_slice()).ok_or(TreeError::Truncated)?;
    let (program, rest) = bits.split_at(n);
    let tree = build(program.as_slice(), &mut 0);
    Ok((
        TreeProgram {
            bits: program,
            tree,
        },
        rest,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn two_leaves() {
        let p = parse_tree(&bits("100")).unwrap();
        assert_eq!(p.tree, BitTree::node(BitTree::Leaf, BitTree::Leaf));
        assert_eq!(p.tree.leaves(), 2);
    }

    #[test]
    fn single_leaf() {
        assert_eq!(parse_tree(&bits("0")).unwrap().tree, BitTree::Leaf);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_tree(&bits("1")), Err(TreeError::Truncated));
        assert_eq!(parse_tree(&bits("")), Err(TreeError::Truncated));
        assert_eq!(parse_tree(&bits("00")), Err(TreeError::TrailingBits));
    }

    #[test]
    fn split_examples() {
        let (p, rest) = split_tree_prefix(&bits("1001")).unwrap();
        assert_eq!(p.bits, bits("100"));
        assert_eq!(rest, bits("1"));
        let (p, rest) = split_tree_prefix(&bits("111010010100110001")).unwrap();
        assert_eq!(p.bits.len(), 17);
        assert_eq!(rest, bits("1"));
        assert_eq!(split_tree_prefix(&bits("11")), Err(TreeError::Truncated));
    }

    #[test]
    fn bits_round_trip() {
        let p = parse_tree(&bits("1101000")).unwrap();
        assert_eq!(p.tree.bits(), bits("1101000"));
    }
}
