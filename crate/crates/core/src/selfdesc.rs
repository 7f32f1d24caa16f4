//! Autobiographical (self-descriptive) numbers.
//!
//! A number is autobiographical when it is one of its own biographies:
//! its digit at position `i` counts the occurrences of `i` in itself.

use serde::Serialize;

use crate::biography::{is_biography, MAX_BIOGRAPHY_LEN};
use crate::digits::DigitString;

pub fn is_autobiographical(n: &DigitString) -> bool {
    n.is_legitimate() && is_biography(n, n)
}

/// All autobiographical numbers, ascending by length then lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutobioCatalog {
    members: Vec<DigitString>,
}

impl AutobioCatalog {
    pub fn members(&self) -> &[DigitString] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Constrained search over every length `1..=10`.
///
/// A candidate of length `L` is its own tally vector, so the search walks
/// tally vectors `(c_0, .., c_{L-1})` with `c_0 >= 1` and `sum = L`. The
/// sum bound prunes the tree; the final filter is [`is_autobiographical`]
/// alone, so pruning only affects speed.
pub fn enumerate_autobiographical() -> AutobioCatalog {
    let mut members = Vec::new();
    let mut buf = Vec::with_capacity(MAX_BIOGRAPHY_LEN);
    for len in 1..=MAX_BIOGRAPHY_LEN {
        for first in 1..=len.min(9) {
            buf.clear();
            buf.push(first as u8);
            extend(&mut buf, len, len - first, &mut members);
        }
    }
    members.sort();
    AutobioCatalog { members }
}

fn extend(buf: &mut Vec<u8>, len: usize, remaining: usize, out: &mut Vec<DigitString>) {
    if buf.len() == len {
        if remaining == 0 {
            let candidate = DigitString::from_digits(buf.clone()).expect("digits");
            if is_autobiographical(&candidate) {
                out.push(candidate);
            }
        }
        return;
    }
    for value in 0..=remaining.min(9) {
        buf.push(value as u8);
        extend(buf, len, remaining - value, out);
        buf.pop();
    }
}

/// Structural facts every autobiographical number satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZoominReport {
    /// Digit sum equals length.
    pub digit_sum_is_length: bool,
    /// Leading digit (the zero count) is nonzero.
    pub first_digit_nonzero: bool,
    /// Apart from the first position, the nonzero digits are one 2 and
    /// some number of 1s.
    pub rest_is_one_two_and_ones: bool,
    /// The count of ones is 0, 1 or 2.
    pub ones_at_most_two: bool,
    /// Members that broke at least one fact.
    pub violators: Vec<DigitString>,
}

impl ZoominReport {
    pub fn all_pass(&self) -> bool {
        self.digit_sum_is_length
            && self.first_digit_nonzero
            && self.rest_is_one_two_and_ones
            && self.ones_at_most_two
    }
}

fn facts(n: &DigitString) -> [bool; 4] {
    let rest: Vec<u8> = n.digits()[1..]
        .iter()
        .copied()
        .filter(|&d| d != 0)
        .collect();
    let twos = rest.iter().filter(|&&d| d == 2).count();
    [
        n.digit_sum() == n.len(),
        n.first() >= 1,
        twos == 1 && rest.iter().all(|&d| d == 1 || d == 2),
        n.count_vector().get(1) <= 2,
    ]
}

/// Checks the structural facts on every member of `catalog`.
pub fn check_zoomin_facts(catalog: &AutobioCatalog) -> ZoominReport {
    check_members(catalog.members())
}

pub(crate) fn check_members(members: &[DigitString]) -> ZoominReport {
    let mut pass = [true; 4];
    let mut violators = Vec::new();
    for n in members {
        let f = facts(n);
        for (p, ok) in pass.iter_mut().zip(f) {
            *p &= ok;
        }
        if f.contains(&false) {
            violators.push(n.clone());
        }
    }
    ZoominReport {
        digit_sum_is_length: pass[0],
        first_digit_nonzero: pass[1],
        rest_is_one_two_and_ones: pass[2],
        ones_at_most_two: pass[3],
        violators,
    }
}
