//! Seeded fixtures shared by the benchmarks.

use twolevel_cli::{generate_instance, Distribution};
use twolevel_core::{Instance, Point};

pub const EXTENT: u32 = 1_000_000;

/// `n` terminals in groups of `group_size`, uniform over the extent.
pub fn uniform_instance(n: usize, group_size: usize, seed: u64) -> Instance {
    let per_group = group_size.clamp(1, n.max(1));
    generate_instance(seed, (n / per_group).max(1), per_group, Distribution::Uniform, EXTENT)
}

/// All terminals of a single-group uniform instance.
pub fn uniform_points(n: usize, seed: u64) -> Vec<Point> {
    uniform_instance(n, n, seed).all_points()
}

/// Small instance for the exact solvers: `k` groups, `per_group` points each,
/// on a 10 x 10 grid.
pub fn small_instance(k: usize, per_group: usize, seed: u64) -> Instance {
    generate_instance(seed, k, per_group, Distribution::Uniform, 10)
}
