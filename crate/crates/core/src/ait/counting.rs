//! Counting full binary trees.

use crate::bits::BitString;
use crate::tree::parse_tree;

/// The `n`th Catalan number, exact for `n ≤ 60`.
pub fn catalan(n: u32) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Number of `len`-bit strings that are exactly one preorder tree traversal.
pub fn count_trees(len: usize) -> u64 {
    if len.is_multiple_of(2) {
        return 0;
    }
    BitString::all_of_length(len)
        .filter(|b| parse_tree(b).is_ok())
        .count() as u64
}

/// `4^n / √(π n³)`.
pub fn catalan_asymptotic(n: u32) -> f64 {
    let n = f64::from(n);
    4f64.powf(n) / (std::f64::consts::PI * n.powi(3)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(catalan(0), 1);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(10), 16796);
        assert_eq!(count_trees(7), 5);
        assert_eq!(count_trees(6), 0);
    }

    #[test]
    fn asymptotic_ratio() {
        let r = catalan(16) as f64 / catalan_asymptotic(16);
        assert!((0.9..=1.1).contains(&r), "{r}");
    }
}
