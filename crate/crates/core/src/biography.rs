//! The biography relation.
//!
//! `M` is a biography of `N` when position `i` of `M` holds the number of
//! times digit `i` occurs in `N`, and every digit of `N` has a position in
//! `M`. A biography never exceeds ten digits. The shortest one is the
//! curriculum vitae (CV), the longest (always ten digits) the complete life
//! story (CLS); every other biography is the CV padded with trailing zeros.

use crate::digits::{CountVector, DigitString};

/// Longest possible biography: one position per decimal digit.
pub const MAX_BIOGRAPHY_LEN: usize = 10;

/// Raised when a digit occurs more than nine times, so its tally does not
/// fit in a single position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("digit {offending_digit} occurs {multiplicity} times")]
pub struct BiographyFailure {
    pub offending_digit: u8,
    pub multiplicity: usize,
}

fn check(counts: &CountVector) -> Result<(), BiographyFailure> {
    match counts.first_overflow() {
        Some((offending_digit, multiplicity)) => Err(BiographyFailure {
            offending_digit,
            multiplicity,
        }),
        None => Ok(()),
    }
}

fn tally_prefix(counts: &CountVector, len: usize) -> DigitString {
    let digits = counts.counts()[..len].iter().map(|&c| c as u8).collect();
    DigitString::from_digits(digits).expect("biographable counts are digits")
}

/// Whether `m` is a biography of `n`.
pub fn is_biography(m: &DigitString, n: &DigitString) -> bool {
    if m.len() > MAX_BIOGRAPHY_LEN {
        return false;
    }
    let counts = n.count_vector();
    let (covered, rest) = counts.counts().split_at(m.len());
    covered
        .iter()
        .zip(m.digits())
        .all(|(&c, &d)| c == d as usize)
        && rest.iter().all(|&c| c == 0)
}

/// Shortest biography of `n`: length `max_digit(n) + 1`.
pub fn cv(n: &DigitString) -> Result<DigitString, BiographyFailure> {
    let counts = n.count_vector();
    check(&counts)?;
    Ok(tally_prefix(&counts, n.max_digit() as usize + 1))
}

/// Longest biography of `n`: always ten digits.
pub fn cls(n: &DigitString) -> Result<DigitString, BiographyFailure> {
    let counts = n.count_vector();
    check(&counts)?;
    Ok(tally_prefix(&counts, MAX_BIOGRAPHY_LEN))
}

/// Every biography of `n`, shortest (the CV) first and the CLS last.
pub fn biographies(n: &DigitString) -> Result<Vec<DigitString>, BiographyFailure> {
    let counts = n.count_vector();
    check(&counts)?;
    let shortest = n.max_digit() as usize + 1;
    Ok((shortest..=MAX_BIOGRAPHY_LEN)
        .map(|len| tally_prefix(&counts, len))
        .collect())
}
