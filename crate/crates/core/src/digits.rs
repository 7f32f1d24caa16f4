//! Digit strings and their per-digit tallies.
//!
//! A [`DigitString`] is a finite, non-empty sequence of decimal digits in
//! which leading zeros are significant: `"011"` and `"11"` are different
//! values. Ordering is by length first, then lexicographic, which is the
//! canonical order used throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors produced when parsing the canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty digit string")]
    EmptyInput,
    #[error("invalid digit {ch:?} at position {position}")]
    InvalidDigit { ch: char, position: usize },
}

/// A non-empty sequence of base-10 digits, possibly with leading zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u8>,
}

impl DigitString {
    /// Builds a digit string from raw digit values.
    ///
    /// Returns `None` if `digits` is empty or any value exceeds 9.
    pub fn from_digits(digits: Vec<u8>) -> Option<Self> {
        if digits.is_empty() || digits.iter().any(|&d| d > 9) {
            return None;
        }
        Some(Self { digits })
    }

    /// Decimal rendering of an integer, without leading zeros.
    pub fn from_u64(mut value: u64) -> Self {
        let mut digits = Vec::with_capacity(20);
        loop {
            digits.push((value % 10) as u8);
            value /= 10;
            if value == 0 {
                break;
            }
        }
        digits.reverse();
        Self { digits }
    }

    /// `count` copies of `digit`.
    ///
    /// # Panics
    /// If `digit > 9` or `count == 0`.
    pub fn repdigit(digit: u8, count: usize) -> Self {
        assert!(
            digit <= 9 && count > 0,
            "invalid repdigit {digit} x {count}"
        );
        Self {
            digits: vec![digit; count],
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn first(&self) -> u8 {
        self.digits[0]
    }

    pub fn last(&self) -> u8 {
        self.digits[self.digits.len() - 1]
    }

    /// True iff the first digit is nonzero, i.e. the string is a genuine
    /// decimal number.
    pub fn is_legitimate(&self) -> bool {
        self.first() != 0
    }

    pub fn max_digit(&self) -> u8 {
        self.digits.iter().copied().max().unwrap_or(0)
    }

    pub fn digit_sum(&self) -> usize {
        self.digits.iter().map(|&d| d as usize).sum()
    }

    pub fn count_vector(&self) -> CountVector {
        let mut counts = [0usize; 10];
        for &d in &self.digits {
            counts[d as usize] += 1;
        }
        CountVector { counts }
    }

    /// True iff every digit is the same.
    pub fn is_repdigit(&self) -> bool {
        self.digits.iter().all(|&d| d == self.digits[0])
    }

    pub fn contains_digit(&self, digit: u8) -> bool {
        self.digits.contains(&digit)
    }

    /// Length of the string, or the largest digit plus one, whichever is
    /// bigger.
    pub fn height(&self) -> usize {
        self.len().max(self.max_digit() as usize + 1)
    }
}

/// Parses the canonical text form. Equivalent to `text.parse()`.
pub fn parse(text: &str) -> Result<DigitString, ParseError> {
    text.parse()
}

impl FromStr for DigitString {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.is_empty() {
            return Err(ParseError::EmptyInput);
        }
        let digits = text
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                '0'..='9' => Ok(ch as u8 - b'0'),
                _ => Err(ParseError::InvalidDigit { ch, position }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { digits })
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.digits.iter().map(|&d| (b'0' + d) as char).collect();
        f.pad(&text)
    }
}

impl fmt::Debug for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Ord for DigitString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.digits.cmp(&other.digits))
    }
}

impl PartialOrd for DigitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for DigitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DigitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiplicity of each decimal digit in some source string.
///
/// Entries are unbounded: a twenty-digit repdigit tallies 20.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CountVector {
    counts: [usize; 10],
}

impl CountVector {
    pub fn counts(&self) -> &[usize; 10] {
        &self.counts
    }

    pub fn get(&self, digit: u8) -> usize {
        self.counts[digit as usize]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// True iff no digit occurs more than nine times.
    pub fn is_biographable(&self) -> bool {
        self.counts.iter().all(|&c| c <= 9)
    }

    /// The smallest digit with multiplicity above nine, with its count.
    pub fn first_overflow(&self) -> Option<(u8, usize)> {
        self.counts
            .iter()
            .enumerate()
            .find(|(_, &c)| c > 9)
            .map(|(d, &c)| (d as u8, c))
    }
}
