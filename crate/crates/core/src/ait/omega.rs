//! Exact dyadic lower bounds on halting probabilities, Kraft checks and
//! program-size upper bounds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bits::BitString;
use crate::curried::print_lenient;
use crate::term::Term;

use super::enumerate::{enumerate_with, ChaitinMachine, HaltingRecord};

/// `numerator / 2^precision`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub numerator: BigUint,
    pub precision: usize,
}

impl Dyadic {
    pub fn zero(precision: usize) -> Self {
        Dyadic {
            numerator: BigUint::zero(),
            precision,
        }
    }

    /// Σ 2^(−|c|) over the codewords, at the precision of the longest one
    /// (or `min_precision`, whichever is larger).
    pub fn kraft_sum<'a>(
        codewords: impl IntoIterator<Item = &'a BitString>,
        min_precision: usize,
    ) -> Self {
        let codewords: Vec<&BitString> = codewords.into_iter().collect();
        let precision = codewords
            .iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0)
            .max(min_precision);
        let mut numerator = BigUint::zero();
        for c in codewords {
            numerator += BigUint::one() << (precision - c.len());
        }
        Dyadic {
            numerator,
            precision,
        }
    }

    pub fn at_most_one(&self) -> bool {
        self.numerator <= BigUint::one() << self.precision
    }

    /// Binary expansion after the point, `precision` digits (or the integer part if ≥ 1).
    pub fn binary_expansion(&self) -> String {
        let one = BigUint::one() << self.precision;
        let int = &self.numerator / &one;
        let frac = &self.numerator % &one;
        let mut digits = format!("{frac:b}");
        while digits.len() < self.precision {
            digits.insert(0, '0');
        }
        if self.precision == 0 {
            format!("{int}")
        } else {
            format!("{int:b}.{digits}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(self.precision as i32)
    }

    fn cmp_value(&self, other: &Dyadic) -> std::cmp::Ordering {
        let p = self.precision.max(other.precision);
        let a = &self.numerator << (p - self.precision);
        let b = &other.numerator << (p - other.precision);
        a.cmp(&b)
    }

    pub fn value_eq(&self, other: &Dyadic) -> bool {
        self.cmp_value(other).is_eq()
    }

    pub fn value_le(&self, other: &Dyadic) -> bool {
        self.cmp_value(other).is_le()
    }

    /// True when the value is exactly `num / 2^k`.
    pub fn equals_fraction(&self, num: u64, k: usize) -> bool {
        self.value_eq(&Dyadic {
            numerator: BigUint::from(num),
            precision: k,
        })
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.precision)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaBound {
    pub lower: Dyadic,
    pub max_len: usize,
    pub step_limit: u64,
    pub records: Vec<HaltingRecord>,
    pub step_limited: usize,
}

impl OmegaBound {
    pub fn from_records(
        records: Vec<HaltingRecord>,
        max_len: usize,
        step_limit: u64,
        step_limited: usize,
    ) -> Self {
        let lower = Dyadic::kraft_sum(records.iter().map(|r| &r.codeword), max_len);
        OmegaBound {
            lower,
            max_len,
            step_limit,
            records,
            step_limited,
        }
    }
}

impl fmt::Display for OmegaBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lower, self.lower.binary_expansion())
    }
}

pub fn omega_lower_bound(machine: &ChaitinMachine, max_len: usize, step_limit: u64) -> OmegaBound {
    omega_lower_bound_with(machine, max_len, step_limit, 1)
}

pub fn omega_lower_bound_with(
    machine: &ChaitinMachine,
    max_len: usize,
    step_limit: u64,
    workers: usize,
) -> OmegaBound {
    let e = enumerate_with(machine, max_len, step_limit, workers);
    OmegaBound::from_records(e.records, max_len, step_limit, e.step_limited)
}

/// What a complexity search looks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutputTarget {
    /// Output decoded as a boolean list.
    Bits(BitString),
    /// Output term, up to alpha-equivalence.
    Term(Term),
}

impl OutputTarget {
    pub fn matches(&self, record: &HaltingRecord) -> bool {
        match self {
            OutputTarget::Bits(b) => &record.output_bits == b,
            // Serialization names binders by depth, so equal text is alpha-equivalence.
            OutputTarget::Term(t) => record.output_term == print_lenient(t),
        }
    }
}

/// Length of the shortest enumerated codeword producing `target`.
pub fn complexity_upper_bound(
    machine: &ChaitinMachine,
    target: &OutputTarget,
    max_len: usize,
    step_limit: u64,
) -> Option<usize> {
    shortest_in(
        &enumerate_with(machine, max_len, step_limit, 1).records,
        target,
    )
}

pub fn shortest_in(records: &[HaltingRecord], target: &OutputTarget) -> Option<usize> {
    records
        .iter()
        .filter(|r| target.matches(r))
        .map(|r| r.codeword.len())
        .min()
}

/// No codeword is a proper prefix of another and the Kraft sum is at most 1.
pub fn kraft_prefix_check<'a>(codewords: impl IntoIterator<Item = &'a BitString>) -> bool {
    let mut sorted: Vec<&BitString> = codewords.into_iter().collect();
    sorted.sort();
    // In lexicographic order a prefix sorts directly before some extension of it.
    let prefix_free = sorted
        .windows(2)
        .all(|w| !w[0].is_prefix_of(w[1]) || w[0] == w[1]);
    prefix_free && Dyadic::kraft_sum(sorted.iter().copied(), 0).at_most_one()
}

pub fn kraft_prefix_check_records(records: &[HaltingRecord]) -> bool {
    kraft_prefix_check(records.iter().map(|r| &r.codeword))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::K;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn kraft_examples() {
        assert!(kraft_prefix_check(&[bits("0"), bits("10")]));
        assert!(!kraft_prefix_check(&[bits("0"), bits("01")]));
        assert!(kraft_prefix_check(std::iter::empty()));
    }

    #[test]
    fn dyadic_display() {
        let d = Dyadic::kraft_sum(&[bits("0"), bits("100")], 3);
        assert_eq!(d.to_string(), "5/2^3");
        assert_eq!(d.binary_expansion(), "0.101");
        assert!(d.equals_fraction(5, 3));
        assert!(d.equals_fraction(10, 4));
    }

    #[test]
    fn simple_bound_to_three() {
        let b = omega_lower_bound(&ChaitinMachine::Simple, 3, 10_000);
        assert!(b.lower.equals_fraction(5, 3), "{b}");
    }

    #[test]
    fn zero_length_bound_is_zero() {
        let b = omega_lower_bound(&ChaitinMachine::Simple, 0, 10_000);
        assert!(b.lower.numerator.is_zero());
    }

    #[test]
    fn monotone_in_length() {
        let a = omega_lower_bound(&ChaitinMachine::Simple, 8, 10_000);
        let b = omega_lower_bound(&ChaitinMachine::Simple, 10, 10_000);
        assert!(a.lower.value_le(&b.lower));
    }

    #[test]
    fn k_has_complexity_three() {
        let t = OutputTarget::Term(K);
        assert_eq!(
            complexity_upper_bound(&ChaitinMachine::Simple, &t, 3, 10_000),
            Some(3)
        );
        let t = OutputTarget::Bits(bits("1111"));
        assert_eq!(
            complexity_upper_bound(&ChaitinMachine::Simple, &t, 3, 10_000),
            None
        );
    }

    #[test]
    fn identity_in_pf_keraia() {
        let t = OutputTarget::Term(crate::term::I);
        assert_eq!(
            complexity_upper_bound(&ChaitinMachine::PfKeraia, &t, 4, 10_000),
            Some(4)
        );
    }
}
