use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twolevel_core::{Instance, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    Uniform,
    /// Each group inside its own random window a quarter of the extent wide.
    Clustered,
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "clustered" => Ok(Distribution::Clustered),
            other => Err(format!("unknown distribution `{other}` (expected uniform or clustered)")),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distribution::Uniform => "uniform",
            Distribution::Clustered => "clustered",
        })
    }
}

/// Integer coordinates in `[0, extent)`, reproducible for a fixed seed.
///
/// # Panics
///
/// If `k`, `points_per_group` or `extent` is zero.
pub fn generate_instance(
    seed: u64,
    k: usize,
    points_per_group: usize,
    distribution: Distribution,
    extent: u32,
) -> Instance {
    assert!(k >= 1 && points_per_group >= 1 && extent >= 1, "generator parameters must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extent = i64::from(extent);
    let groups = (0..k)
        .map(|_| {
            let (ox, oy, side) = match distribution {
                Distribution::Uniform => (0, 0, extent),
                Distribution::Clustered => {
                    let side = (extent / 4).max(1);
                    (rng.gen_range(0..=extent - side), rng.gen_range(0..=extent - side), side)
                }
            };
            (0..points_per_group)
                .map(|_| Point::int(ox + rng.gen_range(0..side), oy + rng.gen_range(0..side)))
                .collect()
        })
        .collect();
    Instance::new(groups).expect("generated groups are non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use twolevel_core::bounding_box;

    #[test]
    fn deterministic() {
        let a = generate_instance(1, 2, 2, Distribution::Uniform, 100);
        let b = generate_instance(1, 2, 2, Distribution::Uniform, 100);
        assert_eq!(a, b);
        assert_eq!(a.total_terminals(), 4);
        assert_ne!(a, generate_instance(2, 2, 2, Distribution::Uniform, 100));
    }

    #[test]
    fn singleton_groups() {
        let i = generate_instance(7, 5, 1, Distribution::Uniform, 50);
        assert!(i.groups().iter().all(|g| g.len() == 1));
    }

    #[test]
    fn clustered_groups_fit_their_window() {
        let i = generate_instance(3, 6, 20, Distribution::Clustered, 400);
        for g in i.groups() {
            let b = bounding_box(g).unwrap();
            assert!(b.width() < twolevel_core::Coord::from_int(100));
            assert!(b.height() < twolevel_core::Coord::from_int(100));
        }
    }

    #[test]
    fn parses_names() {
        assert_eq!("clustered".parse::<Distribution>(), Ok(Distribution::Clustered));
        assert!("gaussian".parse::<Distribution>().is_err());
    }
}
