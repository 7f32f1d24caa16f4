//! Benchmark inputs shared by the bench targets.

use lifestory_core::DigitString;

/// A few seeds of varied length, including the largest autobiographical
/// number.
pub fn sample_seeds() -> Vec<DigitString> {
    ["0", "123456789", "6210001000", "98765432101234567890"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect()
}
