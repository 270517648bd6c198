use crate::error::Result;
use crate::geometry::{Coord, Point, Rect};
use crate::oracle::u_bound;
use crate::rsmt::SteinerSubroutine;

use super::{solve_with_connection_points, Instance, TwoLevelTree};

/// The smallest box (by semiperimeter, then area, then lexicographic
/// `(xmin, ymin, xmax, ymax)`) meeting every group, and the lexicographically
/// smallest terminal of each group inside it.
///
/// Every pair of terminal x-coordinates bounds a vertical strip; a sliding
/// window over the strip's terminals in y order finds the shortest y-range
/// covering all groups. O(n^3) overall.
pub fn top_level_bbox(instance: &Instance) -> (Rect, Vec<Point>) {
    let k = instance.k();
    let mut tagged: Vec<(Point, usize)> =
        instance.groups().iter().enumerate().flat_map(|(i, g)| g.iter().map(move |p| (p.clone(), i))).collect();
    tagged.sort_by(|a, b| (&a.0.y, &a.0.x).cmp(&(&b.0.y, &b.0.x)));
    let mut xs: Vec<&Coord> = tagged.iter().map(|(p, _)| &p.x).collect();
    xs.sort();
    xs.dedup();

    type Key = (Coord, Coord, Coord, Coord, Coord, Coord);
    let mut best: Option<(Key, Rect)> = None;
    let mut counts = vec![0usize; k];
    for (li, &xmin) in xs.iter().enumerate() {
        for &xmax in &xs[li..] {
            let strip: Vec<&(Point, usize)> = tagged.iter().filter(|(p, _)| &p.x >= xmin && &p.x <= xmax).collect();
            counts.iter_mut().for_each(|c| *c = 0);
            let mut covered = 0;
            let mut hi = 0;
            for lo in 0..strip.len() {
                while covered < k && hi < strip.len() {
                    let g = strip[hi].1;
                    counts[g] += 1;
                    if counts[g] == 1 {
                        covered += 1;
                    }
                    hi += 1;
                }
                if covered < k {
                    break;
                }
                let rect = Rect::new(xmin.clone(), xmax.clone(), strip[lo].0.y.clone(), strip[hi - 1].0.y.clone());
                let key = (
                    rect.semiperimeter(),
                    rect.area(),
                    rect.xmin.clone(),
                    rect.ymin.clone(),
                    rect.xmax.clone(),
                    rect.ymax.clone(),
                );
                if best.as_ref().map_or(true, |(b, _)| key < *b) {
                    best = Some((key, rect));
                }
                let g = strip[lo].1;
                counts[g] -= 1;
                if counts[g] == 0 {
                    covered -= 1;
                }
            }
        }
    }
    let (_, rect) = best.expect("every group is non-empty");
    let witnesses = instance
        .groups()
        .iter()
        .map(|g| g.iter().filter(|p| rect.contains(p)).min().expect("box meets every group").clone())
        .collect();
    (rect, witnesses)
}

/// Ingredients of the small-top-box guarantee
/// `l(T) <= U(k) l(B_top) + alpha * sum_i l(T*_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallTopCertificate {
    pub bbox: Rect,
    /// `None` for `k < 2`, where the top tree is a single point.
    pub u_k: Option<Coord>,
    pub alpha: Coord,
    pub top_length: Coord,
    pub subtree_lengths: Vec<Coord>,
}

impl SmallTopCertificate {
    /// The bound on the top tree alone, `U(k) l(B_top)`.
    pub fn top_bound(&self) -> Coord {
        self.u_k.as_ref().map_or_else(Coord::zero, |u| u * self.bbox.semiperimeter())
    }

    /// The right-hand side of the guarantee, given optimal subtree lengths
    /// (for instance from an exact solver).
    pub fn bound(&self, optimal_subtrees: &[Coord]) -> Coord {
        self.top_bound() + &self.alpha * optimal_subtrees.iter().cloned().sum::<Coord>()
    }
}

/// Connection points are the witnesses of [`top_level_bbox`].
pub fn solve_small_top(instance: &Instance, sub: &SteinerSubroutine) -> Result<TwoLevelTree> {
    solve_small_top_with_certificate(instance, sub).map(|(t, _)| t)
}

pub fn solve_small_top_with_certificate(
    instance: &Instance,
    sub: &SteinerSubroutine,
) -> Result<(TwoLevelTree, SmallTopCertificate)> {
    let (bbox, q) = top_level_bbox(instance);
    let t = solve_with_connection_points(instance, &q, sub)?;
    let u_k = if instance.k() >= 2 { Some(u_bound(instance.k())?) } else { None };
    let cert = SmallTopCertificate {
        bbox,
        u_k,
        alpha: sub.alpha(),
        top_length: t.top_length(),
        subtree_lengths: t.subtree_lengths(),
    };
    Ok((t, cert))
}
