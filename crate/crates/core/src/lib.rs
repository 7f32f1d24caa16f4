//! Digit-count biographies of decimal digit strings.
//!
//! The biography of a string `N` is a string `M` whose digit at position
//! `i` counts the occurrences of digit `i` in `N`. This crate provides the
//! relation itself ([`biography`]), the numbers that describe themselves
//! ([`selfdesc`]), the dynamics of iterating the shortest and longest
//! biography maps ([`dynamics`]), and pairs of strings that describe each
//! other ([`praise`]).

pub mod biography;
pub mod digits;
pub mod dynamics;
pub mod praise;
pub mod selfdesc;

pub use biography::{biographies, cls, cv, is_biography, BiographyFailure};
pub use digits::{parse, CountVector, DigitString, ParseError};
pub use dynamics::{
    classify_seed, cls_trajectory, cv_trajectory, trajectory, verify_cls_cycles, verify_cv_cycles,
    verify_cycles, DynamicsError, MapKind, SeedClassification, SeedOutcome, Trajectory, Verdict,
    VerificationReport, DEFAULT_MAX_STEPS,
};
pub use praise::{
    check_praise_properties, find_praising_pairs, is_mutually_praising, PraisingPair,
};
pub use selfdesc::{
    check_zoomin_facts, enumerate_autobiographical, is_autobiographical, AutobioCatalog,
};
