//! Two-level rectilinear Steiner trees: the data model, the solving engine
//! over fixed connection points, and the connection-point strategies.

mod factor;
mod frame;
mod refine;
mod small_top;

use std::fmt;

pub use factor::{factor_f, optimize_beta, FactorBreakdown};
pub use frame::{
    adjusted_connection_point, bbox_center_point, canonicalize, is_complete, thresholds, CanonicalFrame, Isometry,
    Thresholds,
};
pub use refine::refine_subtree;
pub use small_top::{solve_small_top, solve_small_top_with_certificate, top_level_bbox, SmallTopCertificate};

use crate::error::{Error, Result};
use crate::geometry::{validate_tree, Coord, EmbeddedTree, Point, Violation};
use crate::rsmt::{approx_steiner, SteinerSubroutine};

/// Terminals partitioned into `k >= 1` non-empty groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    groups: Vec<Vec<Point>>,
}

impl Instance {
    /// Removes repeated points inside each group, keeping first occurrences.
    /// The same point may appear in several groups.
    pub fn new(groups: Vec<Vec<Point>>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::NoGroups);
        }
        let groups = groups
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                if g.is_empty() {
                    return Err(Error::EmptyGroup(i));
                }
                let mut seen = std::collections::BTreeSet::new();
                Ok(g.into_iter().filter(|p| seen.insert(p.clone())).collect())
            })
            .collect::<Result<Vec<Vec<Point>>>>()?;
        Ok(Instance { groups })
    }

    pub fn k(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<Point>] {
        &self.groups
    }

    /// Every terminal of every group; points shared by groups repeat.
    pub fn all_points(&self) -> Vec<Point> {
        self.groups.iter().flatten().cloned().collect()
    }

    pub fn total_terminals(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }
}

/// Which tree of a two-level solution a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeRole {
    Top,
    /// Zero-based group index.
    Subtree(usize),
}

impl fmt::Display for TreeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeRole::Top => write!(f, "top tree"),
            TreeRole::Subtree(i) => write!(f, "subtree {}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoLevelViolation {
    GroupCount { expected: usize, got: usize },
    ConnectionPointCount { expected: usize, got: usize },
    Tree { role: TreeRole, violation: Violation },
}

impl fmt::Display for TwoLevelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoLevelViolation::GroupCount { expected, got } => write!(f, "expected {expected} subtrees, got {got}"),
            TwoLevelViolation::ConnectionPointCount { expected, got } => {
                write!(f, "expected {expected} connection points, got {got}")
            }
            TwoLevelViolation::Tree { role, violation } => write!(f, "{role}: {violation}"),
        }
    }
}

/// A top-level tree, one subtree per group, and the connection point `q_i`
/// shared by the top tree and subtree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLevelTree {
    top: EmbeddedTree,
    subtrees: Vec<EmbeddedTree>,
    connection_points: Vec<Point>,
}

impl TwoLevelTree {
    pub fn new(top: EmbeddedTree, subtrees: Vec<EmbeddedTree>, connection_points: Vec<Point>) -> Self {
        TwoLevelTree { top, subtrees, connection_points }
    }

    pub fn top(&self) -> &EmbeddedTree {
        &self.top
    }

    pub fn subtrees(&self) -> &[EmbeddedTree] {
        &self.subtrees
    }

    pub fn connection_points(&self) -> &[Point] {
        &self.connection_points
    }

    pub fn top_length(&self) -> Coord {
        self.top.length()
    }

    pub fn subtree_lengths(&self) -> Vec<Coord> {
        self.subtrees.iter().map(EmbeddedTree::length).collect()
    }

    /// Recomputed from the embeddings on every call.
    pub fn total_length(&self) -> Coord {
        self.top.length() + self.subtrees.iter().map(EmbeddedTree::length).sum::<Coord>()
    }

    /// Checks that the top tree spans every `q_i` and subtree `i` spans
    /// `P_i` and `q_i`.
    pub fn validate(&self, instance: &Instance) -> Result<(), Vec<TwoLevelViolation>> {
        let k = instance.k();
        let mut out = Vec::new();
        if self.subtrees.len() != k {
            out.push(TwoLevelViolation::GroupCount { expected: k, got: self.subtrees.len() });
        }
        if self.connection_points.len() != k {
            out.push(TwoLevelViolation::ConnectionPointCount { expected: k, got: self.connection_points.len() });
        }
        if !out.is_empty() {
            return Err(out);
        }
        let tag = |role: TreeRole| move |v: Violation| TwoLevelViolation::Tree { role, violation: v };
        if let Err(v) = validate_tree(&self.top, &self.connection_points) {
            out.extend(v.into_iter().map(tag(TreeRole::Top)));
        }
        for (i, (sub, group)) in self.subtrees.iter().zip(instance.groups()).enumerate() {
            let mut required = group.clone();
            required.push(self.connection_points[i].clone());
            if let Err(v) = validate_tree(sub, &required) {
                out.extend(v.into_iter().map(tag(TreeRole::Subtree(i))));
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}

fn spanning_tree(points: &[Point], sub: &SteinerSubroutine) -> Result<EmbeddedTree> {
    let mut t = approx_steiner(points, sub)?;
    assert!(t.mark_terminals(points), "subroutine output spans its input");
    Ok(t)
}

/// Top tree over the connection points.
fn top_tree(q: &[Point], sub: &SteinerSubroutine) -> Result<EmbeddedTree> {
    spanning_tree(q, sub)
}

/// Builds the top tree on `q` and subtree `i` on `P_i` plus `q_i`.
pub fn solve_with_connection_points(instance: &Instance, q: &[Point], sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    if q.len() != instance.k() {
        return Err(Error::ArityMismatch { expected: instance.k(), got: q.len() });
    }
    let top = top_tree(q, sub)?;
    let subtrees = instance
        .groups()
        .iter()
        .zip(q)
        .map(|(g, qi)| {
            let mut pts = g.clone();
            pts.push(qi.clone());
            spanning_tree(&pts, sub)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwoLevelTree::new(top, subtrees, q.to_vec()))
}

/// With a single group the problem is an ordinary Steiner tree problem:
/// the subtree is `sub(P_1)` and the top tree is one vertex on it.
fn solve_single_group(instance: &Instance, sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    let group = &instance.groups()[0];
    let q = group.iter().min().expect("groups are non-empty").clone();
    let subtree = spanning_tree(group, sub)?;
    Ok(TwoLevelTree::new(EmbeddedTree::single(q.clone()), vec![subtree], vec![q]))
}

/// Connection point = lexicographically smallest terminal of each group.
pub fn solve_simple(instance: &Instance, sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    if instance.k() == 1 {
        return solve_single_group(instance, sub);
    }
    let q: Vec<Point> =
        instance.groups().iter().map(|g| g.iter().min().expect("groups are non-empty").clone()).collect();
    solve_with_connection_points(instance, &q, sub)
}

/// Connection point = center of each group's bounding box.
pub fn solve_bbox_center(instance: &Instance, sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    if instance.k() == 1 {
        return solve_single_group(instance, sub);
    }
    let q: Vec<Point> = instance.groups().iter().map(|g| bbox_center_point(g)).collect();
    solve_with_connection_points(instance, &q, sub)
}

/// Connection points shifted off the box center along the diagonal of the
/// empty quadrant, and each subtree replaced by the cheaper of `sub(P_i +
/// q_i)` and `sub(P_i)` plus a spur to `q_i`.
pub fn solve_adjusted(instance: &Instance, beta: &Coord, sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    check_beta(beta)?;
    if instance.k() == 1 {
        return solve_single_group(instance, sub);
    }
    let q = instance.groups().iter().map(|g| adjusted_connection_point(g, beta)).collect::<Result<Vec<Point>>>()?;
    let top = top_tree(&q, sub)?;
    let subtrees =
        instance.groups().iter().zip(&q).map(|(g, qi)| refine_subtree(g, qi, sub)).collect::<Result<Vec<_>>>()?;
    Ok(TwoLevelTree::new(top, subtrees, q))
}

pub(crate) fn check_beta(beta: &Coord) -> Result<()> {
    check_range("beta", beta, &Coord::zero(), &Coord::one())
}

pub(crate) fn check_range(name: &'static str, value: &Coord, lo: &Coord, hi: &Coord) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            name,
            value: Box::new(value.clone()),
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_two_level;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    fn two_segments() -> Instance {
        Instance::new(vec![pts(&[(0, 0), (1, 0)]), pts(&[(0, 0), (-1, 0)])]).unwrap()
    }

    fn two_corners() -> Instance {
        Instance::new(vec![pts(&[(0, 0), (1, 0), (0, 1)]), pts(&[(0, 0), (-1, 0), (0, -1)])]).unwrap()
    }

    fn exact() -> SteinerSubroutine {
        SteinerSubroutine::exact()
    }

    #[test]
    fn instance_validation() {
        assert_eq!(Instance::new(vec![]), Err(Error::NoGroups));
        assert_eq!(Instance::new(vec![pts(&[(0, 0)]), vec![]]), Err(Error::EmptyGroup(1)));
        let i = Instance::new(vec![pts(&[(1, 1), (0, 0), (1, 1)]), pts(&[(0, 0)])]).unwrap();
        assert_eq!(i.groups()[0], pts(&[(1, 1), (0, 0)]));
        assert_eq!(i.total_terminals(), 3);
        assert_eq!(i.all_points().len(), 3);
    }

    #[test]
    fn fixed_connection_points_on_two_segments() {
        let t = solve_with_connection_points(&two_segments(), &pts(&[(1, 0), (-1, 0)]), &exact()).unwrap();
        assert_eq!(t.total_length(), Coord::from_int(4));
        assert_eq!(t.validate(&two_segments()), Ok(()));
        let t = solve_with_connection_points(&two_segments(), &pts(&[(0, 0), (0, 0)]), &exact()).unwrap();
        assert_eq!(t.total_length(), Coord::from_int(2));
        assert_eq!(t.top_length(), Coord::zero());
        assert_eq!(
            solve_with_connection_points(&two_segments(), &pts(&[(0, 0)]), &exact()).unwrap_err(),
            Error::ArityMismatch { expected: 2, got: 1 }
        );
    }

    #[test]
    fn single_group_has_degenerate_top() {
        let inst = Instance::new(vec![pts(&[(0, 0), (2, 1), (1, 3)])]).unwrap();
        let q = pts(&[(0, 0)]);
        let t = solve_with_connection_points(&inst, &q, &exact()).unwrap();
        assert_eq!(t.top().vertices().len(), 1);
        assert_eq!(t.total_length(), t.subtrees()[0].length());
        for t in [
            solve_simple(&inst, &exact()).unwrap(),
            solve_bbox_center(&inst, &exact()).unwrap(),
            solve_adjusted(&inst, &Coord::ratio(3, 5), &exact()).unwrap(),
        ] {
            assert_eq!(t.top_length(), Coord::zero());
            assert_eq!(t.total_length(), exact_two_level(&inst).unwrap().1);
            assert_eq!(t.validate(&inst), Ok(()));
        }
    }

    #[test]
    fn simple_on_two_segments() {
        let t = solve_simple(&two_segments(), &exact()).unwrap();
        assert_eq!(t.connection_points(), pts(&[(0, 0), (-1, 0)]).as_slice());
        assert_eq!(t.total_length(), Coord::from_int(3));
    }

    #[test]
    fn singleton_groups_reduce_to_one_steiner_tree() {
        let inst = Instance::new(vec![pts(&[(0, 0)]), pts(&[(2, 0)]), pts(&[(1, 1)])]).unwrap();
        for t in [solve_simple(&inst, &exact()).unwrap(), solve_adjusted(&inst, &Coord::ratio(3, 5), &exact()).unwrap()]
        {
            assert_eq!(t.total_length(), Coord::from_int(3));
            assert!(t.subtree_lengths().iter().all(Coord::is_zero));
        }
    }

    #[test]
    fn bbox_center_examples() {
        let t = solve_bbox_center(&two_corners(), &exact()).unwrap();
        assert_eq!(t.total_length(), Coord::from_int(7));
        let t = solve_bbox_center(&two_segments(), &exact()).unwrap();
        assert_eq!(
            t.connection_points(),
            [Point::new(Coord::ratio(1, 2), Coord::zero()), Point::new(Coord::ratio(-1, 2), Coord::zero())]
        );
        assert_eq!(t.total_length(), Coord::from_int(3));
    }

    #[test]
    fn adjusted_examples() {
        let beta = Coord::ratio(3, 5);
        let t = solve_adjusted(&two_segments(), &beta, &exact()).unwrap();
        assert!(t.total_length() <= Coord::ratio(13, 4));
        assert_eq!(t.validate(&two_segments()), Ok(()));
        let t = solve_adjusted(&two_corners(), &beta, &exact()).unwrap();
        assert!(t.total_length() <= Coord::ratio(13, 2));
        assert!(t.total_length() < Coord::from_int(7));
        assert_eq!(t.validate(&two_corners()), Ok(()));
    }

    #[test]
    fn adjusted_with_zero_beta_uses_box_centers() {
        let a = solve_adjusted(&two_corners(), &Coord::zero(), &exact()).unwrap();
        let b = solve_bbox_center(&two_corners(), &exact()).unwrap();
        assert_eq!(a.connection_points(), b.connection_points());
    }

    #[test]
    fn beta_out_of_range() {
        assert!(matches!(
            solve_adjusted(&two_segments(), &Coord::from_int(2), &exact()),
            Err(Error::OutOfRange { name: "beta", .. })
        ));
    }

    #[test]
    fn validation_reports_uncovered_connection_point() {
        let t = solve_simple(&two_segments(), &exact()).unwrap();
        let broken = TwoLevelTree::new(
            EmbeddedTree::single(Point::int(5, 5)),
            t.subtrees().to_vec(),
            t.connection_points().to_vec(),
        );
        let errs = broken.validate(&two_segments()).unwrap_err();
        assert!(errs.iter().all(|e| matches!(e, TwoLevelViolation::Tree { role: TreeRole::Top, .. })));
        assert!(!errs.is_empty());
        let short = TwoLevelTree::new(t.top().clone(), vec![], vec![]);
        assert_eq!(short.validate(&two_segments()).unwrap_err().len(), 2);
    }
}
