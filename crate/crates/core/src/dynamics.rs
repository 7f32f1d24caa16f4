//! Iterated CV and CLS maps.
//!
//! Starting from a seed `N`, the sequence `N, f(N), f(f(N)), ..` (with `f`
//! either [`cv`] or [`cls`]) is eventually periodic. This module splits
//! such a sequence into its pre-periodic prefix and its cycle, classifies
//! the seeds for which the sequence is undefined, and checks range-wide
//! claims about where the sequences end up.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::biography::{cls, cv, BiographyFailure};
use crate::digits::DigitString;

/// Safety net for trajectory iteration. Observed pre-periods are below 20.
pub const DEFAULT_MAX_STEPS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Cv,
    Cls,
}

impl MapKind {
    pub fn apply(self, s: &DigitString) -> Result<DigitString, BiographyFailure> {
        match self {
            MapKind::Cv => cv(s),
            MapKind::Cls => cls(s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Cv => "cv",
            MapKind::Cls => "cls",
        }
    }

    /// The cycles every infinite sequence of this map falls into, in
    /// canonical rotation.
    pub fn known_cycles(self) -> Vec<Vec<DigitString>> {
        let cycle = |members: &[&str]| -> Vec<DigitString> {
            members
                .iter()
                .map(|m| m.parse().expect("literal"))
                .collect()
        };
        match self {
            MapKind::Cv => vec![
                cycle(&["12", "011"]),
                cycle(&["03", "1001", "22", "002", "201", "111"]),
            ],
            MapKind::Cls => vec![cycle(&["6300000100", "7101001000"])],
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Infinite,
    /// Some digit occurs more than nine times.
    Category1,
    /// All ten digits occur, each the same number of times.
    Category2,
    /// The ten digit multiplicities are exactly `0, 1, .., 9` in some order.
    Category3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedClassification {
    pub verdict: Verdict,
    /// First step of the sequence that is undefined; `None` for infinite
    /// seeds.
    pub failure_depth: Option<u8>,
}

impl SeedClassification {
    pub fn is_infinite(&self) -> bool {
        self.verdict == Verdict::Infinite
    }
}

impl fmt::Display for SeedClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failure_depth {
            None => write!(f, "{:?}", self.verdict),
            Some(depth) => write!(f, "{:?} (fails at step {depth})", self.verdict),
        }
    }
}

/// Decides from the digit multiplicities alone whether the CV (equivalently
/// CLS) sequence of `s` is defined forever, and if not at which step it
/// breaks.
pub fn classify_seed(s: &DigitString) -> SeedClassification {
    let counts = s.count_vector();
    let counts = counts.counts();
    let (verdict, depth) = if counts.iter().any(|&c| c > 9) {
        (Verdict::Category1, 1)
    } else if counts.iter().all(|&c| c == counts[0]) {
        // counts[0] >= 1 because s is non-empty
        (Verdict::Category2, 2)
    } else {
        let mut sorted = *counts;
        sorted.sort_unstable();
        if sorted.iter().enumerate().all(|(i, &c)| c == i) {
            (Verdict::Category3, 3)
        } else {
            return SeedClassification {
                verdict: Verdict::Infinite,
                failure_depth: None,
            };
        }
    };
    SeedClassification {
        verdict,
        failure_depth: Some(depth),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DynamicsError {
    #[error("seed {seed} has no infinite sequence: {classification}")]
    SeedNotInfinite {
        seed: DigitString,
        classification: SeedClassification,
    },
    #[error("no cycle found from seed {seed} within {max_steps} steps")]
    StepBudgetExceeded { seed: DigitString, max_steps: usize },
    #[error(transparent)]
    Biography(#[from] BiographyFailure),
}

/// An eventually periodic sequence, split into prefix and cycle.
///
/// The cycle is stored in canonical rotation (shortest, then
/// lexicographically smallest member first), so the prefix generally enters
/// it part way round: the successor of the last prefix element (or the seed
/// itself when the prefix is empty) is `cycle[entry]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub seed: DigitString,
    pub prefix: Vec<DigitString>,
    pub cycle: Vec<DigitString>,
    pub entry: usize,
    pub map_kind: MapKind,
}

impl Trajectory {
    /// The `n`th term of the sequence; term 0 is the seed.
    pub fn term(&self, n: usize) -> &DigitString {
        if n < self.prefix.len() {
            &self.prefix[n]
        } else {
            let k = (self.entry + n - self.prefix.len()) % self.cycle.len();
            &self.cycle[k]
        }
    }

    pub fn pre_period(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    /// Terms from the seed up to the first repeat, in sequence order.
    pub fn terms_until_repeat(&self) -> impl Iterator<Item = &DigitString> {
        (0..self.prefix.len() + self.cycle.len() + 1).map(move |n| self.term(n))
    }

    /// A bound `H` such that checking `k < n < H` visits every distinct
    /// pair `(term(n), term(n + 1))` with `n > k`, for any `k < 5`.
    fn horizon(&self) -> usize {
        self.prefix.len().max(5) + self.cycle.len() + 1
    }
}

/// Rotates `cycle` so its smallest member comes first. Returns the rotation
/// offset: the old `cycle[0]` ends up at the returned index.
pub fn canonicalize_cycle(cycle: &mut [DigitString]) -> usize {
    let start = cycle
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(start);
    (cycle.len() - start) % cycle.len().max(1)
}

pub fn trajectory(
    map_kind: MapKind,
    seed: &DigitString,
    max_steps: usize,
) -> Result<Trajectory, DynamicsError> {
    let classification = classify_seed(seed);
    if !classification.is_infinite() {
        return Err(DynamicsError::SeedNotInfinite {
            seed: seed.clone(),
            classification,
        });
    }

    let mut terms = vec![seed.clone()];
    let mut seen = HashMap::new();
    seen.insert(seed.clone(), 0usize);
    for _ in 0..max_steps {
        let next = map_kind.apply(terms.last().expect("non-empty"))?;
        if let Some(&start) = seen.get(&next) {
            let mut cycle = terms.split_off(start);
            let entry = canonicalize_cycle(&mut cycle);
            return Ok(Trajectory {
                seed: seed.clone(),
                prefix: terms,
                cycle,
                entry,
                map_kind,
            });
        }
        seen.insert(next.clone(), terms.len());
        terms.push(next);
    }
    Err(DynamicsError::StepBudgetExceeded {
        seed: seed.clone(),
        max_steps,
    })
}

pub fn cv_trajectory(seed: &DigitString, max_steps: usize) -> Result<Trajectory, DynamicsError> {
    trajectory(MapKind::Cv, seed, max_steps)
}

pub fn cls_trajectory(seed: &DigitString, max_steps: usize) -> Result<Trajectory, DynamicsError> {
    trajectory(MapKind::Cls, seed, max_steps)
}

/// From `n = 3` on, the height never rises while above 5, and it drops
/// below 6 somewhere along the sequence.
pub fn check_height_descent(seed: &DigitString, max_steps: usize) -> Result<bool, DynamicsError> {
    let t = cv_trajectory(seed, max_steps)?;
    let non_increasing = (3..t.horizon()).all(|n| {
        let h = t.term(n).height();
        h <= 5 || t.term(n + 1).height() <= h
    });
    let drops = (0..t.horizon()).any(|n| t.term(n).height() < 6);
    Ok(non_increasing && drops)
}

/// From `n = 3` on, a CV whose digits are all equal has at most 5 digits.
pub fn check_repdigit_bound(seed: &DigitString, max_steps: usize) -> Result<bool, DynamicsError> {
    let t = cv_trajectory(seed, max_steps)?;
    Ok((3..t.horizon()).all(|n| {
        let s = t.term(n);
        !s.is_repdigit() || s.len() <= 5
    }))
}

/// From `n = 4` on, every CLS has at least six zeros; from `n = 5` on its
/// first digit is at least 6.
pub fn check_cls_zeroes(seed: &DigitString, max_steps: usize) -> Result<bool, DynamicsError> {
    let t = cls_trajectory(seed, max_steps)?;
    let zeros = (4..t.horizon()).all(|n| t.term(n).count_vector().get(0) >= 6);
    let leading = (5..t.horizon()).all(|n| t.term(n).first() >= 6);
    Ok(zeros && leading)
}

/// Where a single seed's sequence ends up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedOutcome {
    Skipped(SeedClassification),
    Cycle {
        prefix_len: usize,
        cycle: Vec<DigitString>,
    },
    BudgetExceeded,
}

pub fn trace_seed(map_kind: MapKind, seed: &DigitString, max_steps: usize) -> SeedOutcome {
    match trajectory(map_kind, seed, max_steps) {
        Ok(t) => SeedOutcome::Cycle {
            prefix_len: t.prefix.len(),
            cycle: t.cycle,
        },
        Err(DynamicsError::SeedNotInfinite { classification, .. }) => {
            SeedOutcome::Skipped(classification)
        }
        // Unreachable for infinite seeds; reported rather than unwrapped.
        Err(DynamicsError::Biography(_)) | Err(DynamicsError::StepBudgetExceeded { .. }) => {
            SeedOutcome::BudgetExceeded
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTally {
    pub members: Vec<DigitString>,
    pub absorbed: u64,
}

/// Summary of a range check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub map: MapKind,
    pub lo: u64,
    pub hi: u64,
    pub checked: u64,
    pub skipped: u64,
    /// Cycles reached, in canonical order.
    pub cycles: Vec<CycleTally>,
    pub max_prefix: usize,
    /// Seeds that hit the step budget or reached a cycle outside
    /// [`MapKind::known_cycles`], in increasing order.
    pub counterexamples: Vec<DigitString>,
}

impl VerificationReport {
    /// True iff every checked seed reached one of the known cycles.
    pub fn passes(&self) -> bool {
        let known = self.map.known_cycles();
        self.counterexamples.is_empty() && self.cycles.iter().all(|c| known.contains(&c.members))
    }

    pub fn absorbed_by(&self, members: &[DigitString]) -> u64 {
        self.cycles
            .iter()
            .find(|c| c.members == members)
            .map_or(0, |c| c.absorbed)
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    skipped: u64,
    histogram: BTreeMap<Vec<DigitString>, u64>,
    max_prefix: usize,
    counterexamples: Vec<DigitString>,
}

impl Partial {
    fn add(
        mut self,
        map_kind: MapKind,
        seed: u64,
        max_steps: usize,
        known: &[Vec<DigitString>],
    ) -> Self {
        let seed = DigitString::from_u64(seed);
        match trace_seed(map_kind, &seed, max_steps) {
            SeedOutcome::Skipped(_) => self.skipped += 1,
            SeedOutcome::BudgetExceeded => {
                self.checked += 1;
                self.counterexamples.push(seed);
            }
            SeedOutcome::Cycle { prefix_len, cycle } => {
                self.checked += 1;
                self.max_prefix = self.max_prefix.max(prefix_len);
                if !known.contains(&cycle) {
                    self.counterexamples.push(seed);
                }
                *self.histogram.entry(cycle).or_default() += 1;
            }
        }
        self
    }

    fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.skipped += other.skipped;
        for (cycle, n) in other.histogram {
            *self.histogram.entry(cycle).or_default() += n;
        }
        self.max_prefix = self.max_prefix.max(other.max_prefix);
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Traces every integer seed in `lo..=hi` (rendered without leading zeros)
/// and tallies the cycles reached. Seeds without an infinite sequence are
/// counted as skipped.
///
/// Work is spread over the current rayon pool; the report does not depend
/// on how it is split.
pub fn verify_cycles(map_kind: MapKind, lo: u64, hi: u64, max_steps: usize) -> VerificationReport {
    let known = map_kind.known_cycles();
    let partial = if lo > hi {
        Partial::default()
    } else {
        (lo..=hi)
            .into_par_iter()
            .fold(Partial::default, |acc, seed| {
                acc.add(map_kind, seed, max_steps, &known)
            })
            .reduce(Partial::default, Partial::merge)
    };
    let mut counterexamples = partial.counterexamples;
    counterexamples.sort();
    VerificationReport {
        map: map_kind,
        lo,
        hi,
        checked: partial.checked,
        skipped: partial.skipped,
        cycles: partial
            .histogram
            .into_iter()
            .map(|(members, absorbed)| CycleTally { members, absorbed })
            .collect(),
        max_prefix: partial.max_prefix,
        counterexamples,
    }
}

pub fn verify_cv_cycles(lo: u64, hi: u64, max_steps: usize) -> VerificationReport {
    verify_cycles(MapKind::Cv, lo, hi, max_steps)
}

pub fn verify_cls_cycles(lo: u64, hi: u64, max_steps: usize) -> VerificationReport {
    verify_cycles(MapKind::Cls, lo, hi, max_steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    fn strs(v: &[DigitString]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Independent oracle: iterate cv up to three times and report the
    /// step that fails, if any.
    fn failure_step(s: &DigitString) -> Option<u8> {
        let mut cur = s.clone();
        for step in 1..=3 {
            match cv(&cur) {
                Ok(next) => cur = next,
                Err(_) => return Some(step),
            }
        }
        None
    }

    fn category3_witness() -> DigitString {
        let digits = (1..=9u8)
            .flat_map(|d| std::iter::repeat_n(d, d as usize))
            .collect();
        DigitString::from_digits(digits).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = classify_seed(&DigitString::repdigit(9, 10));
        assert_eq!((c.verdict, c.failure_depth), (Verdict::Category1, Some(1)));

        let c = classify_seed(&ds("0123456789"));
        assert_eq!((c.verdict, c.failure_depth), (Verdict::Category2, Some(2)));

        let w = category3_witness();
        assert_eq!(w.len(), 45);
        assert_eq!(cv(&w).unwrap(), ds("0123456789"));
        let c = classify_seed(&w);
        assert_eq!((c.verdict, c.failure_depth), (Verdict::Category3, Some(3)));

        let c = classify_seed(&ds("42"));
        assert_eq!((c.verdict, c.failure_depth), (Verdict::Infinite, None));
    }

    #[test]
    fn classification_matches_iteration_on_witnesses() {
        let mut seeds = vec![category3_witness(), ds("9876543210"), ds("0")];
        for x in 1..=3 {
            let digits = (0..10u8).flat_map(|d| std::iter::repeat_n(d, x)).collect();
            seeds.push(DigitString::from_digits(digits).unwrap());
        }
        for d in 0..10 {
            for len in 8..=12 {
                seeds.push(DigitString::repdigit(d, len));
            }
        }
        for s in &seeds {
            assert_eq!(classify_seed(s).failure_depth, failure_step(s), "{s}");
        }
    }

    #[test]
    fn cv_trajectory_from_zero() {
        let t = cv_trajectory(&ds("0"), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(strs(&t.prefix), ["0", "1", "01", "11", "02", "101"]);
        assert_eq!(strs(&t.cycle), ["12", "011"]);
        assert_eq!(t.entry, 0);
        assert_eq!(
            strs(&t.terms_until_repeat().cloned().collect::<Vec<_>>()),
            ["0", "1", "01", "11", "02", "101", "12", "011", "12"]
        );
    }

    #[test]
    fn cv_trajectory_six_cycle() {
        let t = cv_trajectory(&ds("22"), DEFAULT_MAX_STEPS).unwrap();
        assert!(t.prefix.is_empty());
        assert_eq!(strs(&t.cycle), ["03", "1001", "22", "002", "201", "111"]);
        assert_eq!(t.term(0), &ds("22"));
        assert_eq!(t.term(1), &ds("002"));
        assert_eq!(t.term(6), &ds("22"));

        let t = cv_trajectory(&ds("12"), DEFAULT_MAX_STEPS).unwrap();
        assert!(t.prefix.is_empty());
        assert_eq!(strs(&t.cycle), ["12", "011"]);
    }

    #[test]
    fn cls_trajectories() {
        let t = cls_trajectory(&ds("0"), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(
            strs(&t.prefix),
            [
                "0",
                "1000000000",
                "9100000000",
                "8100000001",
                "7200000010",
                "7110000100"
            ]
        );
        assert_eq!(strs(&t.cycle), ["6300000100", "7101001000"]);

        let t = cls_trajectory(&ds("6300000100"), DEFAULT_MAX_STEPS).unwrap();
        assert!(t.prefix.is_empty());
        assert_eq!(t.cycle, MapKind::Cls.known_cycles()[0]);

        let t = cls_trajectory(&ds("1210"), 20).unwrap();
        assert_eq!(t.cycle, MapKind::Cls.known_cycles()[0]);
    }

    #[test]
    fn trajectory_errors() {
        assert!(matches!(
            cv_trajectory(&ds("0123456789"), 10),
            Err(DynamicsError::SeedNotInfinite { .. })
        ));
        assert_eq!(
            cv_trajectory(&ds("0"), 3),
            Err(DynamicsError::StepBudgetExceeded {
                seed: ds("0"),
                max_steps: 3
            })
        );
        // "0" needs exactly eight applications to see its first repeat
        assert!(cv_trajectory(&ds("0"), 8).is_ok());
        assert!(cv_trajectory(&ds("0"), 7).is_err());
    }

    #[test]
    fn trajectory_structure() {
        for seed in ["0", "5", "99", "1234567890123", "22", "7101001000"] {
            for kind in [MapKind::Cv, MapKind::Cls] {
                let t = trajectory(kind, &ds(seed), DEFAULT_MAX_STEPS).unwrap();
                for n in 0..t.horizon() + 10 {
                    assert_eq!(&kind.apply(t.term(n)).unwrap(), t.term(n + 1));
                }
                assert!(t.prefix.iter().all(|p| !t.cycle.contains(p)));
                let mut sorted = t.cycle.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), t.cycle.len());
                assert_eq!(&t.cycle[0], sorted.first().unwrap());
            }
        }
    }

    #[test]
    fn canonical_cycle_is_rotation_invariant() {
        let base = MapKind::Cv.known_cycles()[1].clone();
        for member in &base {
            let t = cv_trajectory(member, DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(t.cycle, base);
        }
    }

    #[test]
    fn known_cycles_close() {
        for kind in [MapKind::Cv, MapKind::Cls] {
            for cycle in kind.known_cycles() {
                for (i, s) in cycle.iter().enumerate() {
                    assert_eq!(kind.apply(s).unwrap(), cycle[(i + 1) % cycle.len()]);
                }
            }
        }
    }

    #[test]
    fn property_checks_examples() {
        for seed in ["0", "123456789", "6210001000"] {
            assert!(
                check_height_descent(&ds(seed), DEFAULT_MAX_STEPS).unwrap(),
                "{seed}"
            );
        }
        for seed in ["0", "111", "22"] {
            assert!(
                check_repdigit_bound(&ds(seed), DEFAULT_MAX_STEPS).unwrap(),
                "{seed}"
            );
        }
        for seed in ["0", "12", "99999"] {
            assert!(
                check_cls_zeroes(&ds(seed), DEFAULT_MAX_STEPS).unwrap(),
                "{seed}"
            );
        }
        assert_eq!(ds("7110000100").count_vector().get(0), 6);
        assert_eq!(ds("6300000100").count_vector().get(0), 7);
    }

    #[test]
    fn small_range_reports() {
        let r = verify_cv_cycles(0, 0, DEFAULT_MAX_STEPS);
        assert_eq!(r.checked, 1);
        assert_eq!(r.cycles.len(), 1);
        assert_eq!(r.cycles[0].members, MapKind::Cv.known_cycles()[0]);
        assert_eq!(r.cycles[0].absorbed, 1);
        assert_eq!(r.max_prefix, 6);

        let r = verify_cv_cycles(22, 22, DEFAULT_MAX_STEPS);
        assert_eq!(r.cycles[0].members, MapKind::Cv.known_cycles()[1]);
        assert_eq!(r.max_prefix, 0);
        assert!(r.passes());

        let r = verify_cls_cycles(6300000100, 6300000100, DEFAULT_MAX_STEPS);
        assert_eq!(r.max_prefix, 0);

        let r = verify_cls_cycles(0, 0, DEFAULT_MAX_STEPS);
        assert_eq!(r.max_prefix, 6);
    }

    #[test]
    fn range_report_counts_skips() {
        let seed = 1023456789u64;
        let r = verify_cv_cycles(seed, seed + 1, DEFAULT_MAX_STEPS);
        assert_eq!(r.skipped, 1);
        assert_eq!(r.checked, 1);
        assert!(r.passes());
    }

    #[test]
    fn budget_failures_become_counterexamples() {
        let r = verify_cv_cycles(0, 3, 2);
        assert!(!r.passes());
        assert!(r.counterexamples.contains(&ds("0")));
        let sorted = {
            let mut c = r.counterexamples.clone();
            c.sort();
            c
        };
        assert_eq!(r.counterexamples, sorted);
    }

    #[test]
    fn report_independent_of_pool_size() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| verify_cv_cycles(0, 5000, DEFAULT_MAX_STEPS))
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn report_json_schema() {
        let r = verify_cv_cycles(22, 22, DEFAULT_MAX_STEPS);
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for k in [
            "map",
            "lo",
            "hi",
            "checked",
            "skipped",
            "cycles",
            "max_prefix",
            "counterexamples",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
        assert_eq!(v["map"], "cv");
        assert_eq!(v["cycles"][0]["members"][3], "002");
        assert_eq!(v["cycles"][0]["absorbed"], 1);
    }
}
