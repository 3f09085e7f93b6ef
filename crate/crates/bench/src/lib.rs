//! Benchmark-only crate; see `benches/ops.rs`.
//!
//! Shared inputs live here so the bench target and any future profiling
//! binaries agree on what "typical" workloads look like.

use cutset_core::{Profile, Subset};

/// The widest inputs the benches exercise.
pub const BENCH_N: u32 = 100;

/// A mid-band profile over `[BENCH_N]` whose sweep touches every level:
/// the band `[m, l] = [4, 50]` filled with a constant count.
pub fn mid_band_profile() -> Profile {
    let mut counts = vec![0u64; BENCH_N as usize + 1];
    for c in counts.iter_mut().take(51).skip(4) {
        *c = 1_000_000;
    }
    Profile::from_counts(BENCH_N, &counts).expect("counts fit their levels")
}

/// A scattered 6-element subset of `[BENCH_N]` with a large rank.
pub fn scattered_subset() -> Subset {
    Subset::new(vec![3, 17, 41, 59, 83, 97]).expect("strictly increasing")
}
