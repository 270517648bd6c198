use crate::error::Result;
use crate::geometry::Coord;

use super::{check_beta, check_range};

/// Guarantee of the adjusted-center algorithm for a subroutine factor
/// `alpha` and offset parameter `beta`: the largest of three affine terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorBreakdown {
    pub alpha: Coord,
    pub beta: Coord,
    /// `11/8 a + 1/4`, `11/8 a + 3/8 a b` and `3/2 a - 1/4 b + 1/4`.
    pub terms: [Coord; 3],
    pub value: Coord,
}

fn check_alpha(alpha: &Coord) -> Result<()> {
    check_range("alpha", alpha, &Coord::one(), &Coord::ratio(3, 2))
}

pub fn factor_f(alpha: &Coord, beta: &Coord) -> Result<FactorBreakdown> {
    check_alpha(alpha)?;
    check_beta(beta)?;
    let base = Coord::ratio(11, 8) * alpha;
    let terms = [
        &base + Coord::ratio(1, 4),
        &base + Coord::ratio(3, 8) * alpha * beta,
        Coord::ratio(3, 2) * alpha - Coord::ratio(1, 4) * beta + Coord::ratio(1, 4),
    ];
    let value = terms.iter().max().expect("three terms").clone();
    Ok(FactorBreakdown { alpha: alpha.clone(), beta: beta.clone(), terms, value })
}

/// Exact minimizer over `beta` in `[0, 1]`.
///
/// The second term rises and the third falls in `beta`, so the optimum is
/// where they meet, `beta = (a + 2) / (3a + 2)`, with the first term as a
/// floor.
pub fn optimize_beta(alpha: &Coord) -> Result<(Coord, Coord)> {
    check_alpha(alpha)?;
    let beta = (alpha + Coord::from_int(2)) / (Coord::from_int(3) * alpha + Coord::from_int(2));
    let beta = beta.clamp_to(&Coord::zero(), &Coord::one());
    let spec = factor_f(alpha, &beta)?;
    Ok((beta, spec.value))
}
