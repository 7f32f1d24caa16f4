//! Mutually-praising pairs: two distinct digit strings, each a biography
//! of the other.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::biography::{is_biography, MAX_BIOGRAPHY_LEN};
use crate::digits::DigitString;

/// An unordered pair, stored with the smaller member (by length, then
/// lexicographic) in `a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PraisingPair {
    pub a: DigitString,
    pub b: DigitString,
    pub both_legitimate: bool,
}

impl PraisingPair {
    /// Canonical pair from two members in either order. Returns `None`
    /// unless the two are mutually praising.
    pub fn new(x: DigitString, y: DigitString) -> Option<Self> {
        if !is_mutually_praising(&x, &y) {
            return None;
        }
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        let both_legitimate = a.is_legitimate() && b.is_legitimate();
        Some(Self {
            a,
            b,
            both_legitimate,
        })
    }

    pub fn max_len(&self) -> usize {
        self.a.len().max(self.b.len())
    }
}

pub fn is_mutually_praising(a: &DigitString, b: &DigitString) -> bool {
    a != b && is_biography(a, b) && is_biography(b, a)
}

/// Every mutually-praising pair, in canonical order.
///
/// Each member of a pair is a biography, so both have at most ten digits
/// and a digit sum equal to the other's length. The search walks candidate
/// `b` over all strings of length at most ten with digit sum in `1..=10`,
/// derives each possible partner `a` from the tallies of `b`, and keeps
/// the pairs that check out both ways.
pub fn find_praising_pairs() -> Vec<PraisingPair> {
    let found: BTreeSet<PraisingPair> = (1..=MAX_BIOGRAPHY_LEN)
        .into_par_iter()
        .flat_map_iter(|len| {
            let mut out = Vec::new();
            let mut buf = Vec::with_capacity(len);
            walk(&mut buf, len, MAX_BIOGRAPHY_LEN, &mut out);
            out
        })
        .collect();
    found.into_iter().collect()
}

fn walk(buf: &mut Vec<u8>, len: usize, budget: usize, out: &mut Vec<PraisingPair>) {
    if buf.len() == len {
        if budget < MAX_BIOGRAPHY_LEN {
            let b = DigitString::from_digits(buf.clone()).expect("digits");
            out.extend(partners(&b).filter_map(|a| PraisingPair::new(a, b.clone())));
        }
        return;
    }
    for d in 0..=budget.min(9) {
        buf.push(d as u8);
        walk(buf, len, budget - d, out);
        buf.pop();
    }
}

/// Strings `a` of every admissible length whose digits are the tallies of
/// `b`; exactly the biographies of `b` when `b` is biographable.
fn partners(b: &DigitString) -> impl Iterator<Item = DigitString> + '_ {
    let counts = *b.count_vector().counts();
    let ok = counts.iter().all(|&c| c <= 9);
    let shortest = b.max_digit() as usize + 1;
    (shortest..=MAX_BIOGRAPHY_LEN)
        .filter(move |_| ok)
        .map(move |len| {
            DigitString::from_digits(counts[..len].iter().map(|&c| c as u8).collect())
                .expect("tallies below ten")
        })
}

/// Outcome of the two structural checks on legitimate pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PraiseReport {
    /// Both members of every legitimate pair contain a zero.
    pub both_have_zeroes: bool,
    /// Every legitimate pair has a member ending in zero.
    pub one_ends_in_zero: bool,
    pub violators: Vec<PraisingPair>,
}

impl PraiseReport {
    pub fn all_pass(&self) -> bool {
        self.both_have_zeroes && self.one_ends_in_zero
    }
}

pub fn check_praise_properties(pairs: &[PraisingPair]) -> PraiseReport {
    let mut report = PraiseReport {
        both_have_zeroes: true,
        one_ends_in_zero: true,
        violators: Vec::new(),
    };
    for p in pairs.iter().filter(|p| p.both_legitimate) {
        let zeroes = p.a.contains_digit(0) && p.b.contains_digit(0);
        let ends = p.a.last() == 0 || p.b.last() == 0;
        report.both_have_zeroes &= zeroes;
        report.one_ends_in_zero &= ends;
        if !(zeroes && ends) {
            report.violators.push(p.clone());
        }
    }
    report
}
