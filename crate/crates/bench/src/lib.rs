//! Shared inputs for the criterion benchmarks in `benches/`.

use slgt_core::Partition;

/// Partitions of increasing dimension: 8, 15, 64, 140.
pub const SIZES: [&str; 4] = ["2,1,0", "3,2,0", "3,2,1,0", "4,2,1,0"];

pub fn partitions() -> Vec<Partition> {
    SIZES.iter().map(|s| s.parse().expect("fixture partition")).collect()
}
