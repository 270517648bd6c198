//! Approximate rectilinear Steiner trees: the rectilinear minimum spanning
//! tree (within 3/2 of optimal) with an optional length-reducing
//! steinerization pass, plus a uniform subroutine interface that the exact
//! oracle also satisfies.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{dedup_points, l1_dist, Coord, EmbeddedTree, Embedding, Point, TreeEdge};
use crate::oracle;
use crate::util::{IntegerScale, UnionFind};

/// Below this size the candidate set is simply all pairs.
const ALL_PAIRS_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubroutineMode {
    Rmst,
    Exact,
}

/// A Steiner tree subroutine together with its approximation guarantee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSubroutine {
    mode: SubroutineMode,
    steinerize: bool,
    exact_limit: usize,
}

impl SteinerSubroutine {
    pub fn rmst() -> Self {
        SteinerSubroutine { mode: SubroutineMode::Rmst, steinerize: false, exact_limit: 0 }
    }

    /// Rectilinear MST followed by [`steinerize`].
    pub fn rmst_steinerized() -> Self {
        SteinerSubroutine { mode: SubroutineMode::Rmst, steinerize: true, exact_limit: 0 }
    }

    pub fn exact() -> Self {
        Self::exact_with_limit(oracle::DEFAULT_EXACT_LIMIT)
    }

    pub fn exact_with_limit(limit: usize) -> Self {
        SteinerSubroutine { mode: SubroutineMode::Exact, steinerize: false, exact_limit: limit }
    }

    pub fn mode(&self) -> SubroutineMode {
        self.mode
    }

    pub fn steinerizes(&self) -> bool {
        self.steinerize
    }

    pub fn exact_limit(&self) -> Option<usize> {
        (self.mode == SubroutineMode::Exact).then_some(self.exact_limit)
    }

    /// Worst-case ratio to the optimum Steiner tree.
    pub fn alpha(&self) -> Coord {
        match self.mode {
            SubroutineMode::Rmst => Coord::ratio(3, 2),
            SubroutineMode::Exact => Coord::one(),
        }
    }

    pub fn name(&self) -> &'static str {
        match (self.mode, self.steinerize) {
            (SubroutineMode::Rmst, false) => "rmst",
            (SubroutineMode::Rmst, true) => "rmst+steinerize",
            (SubroutineMode::Exact, _) => "exact",
        }
    }
}

/// Runs `sub` on the (deduplicated) point set.
pub fn approx_steiner(points: &[Point], sub: &SteinerSubroutine) -> Result<EmbeddedTree> {
    match sub.mode {
        SubroutineMode::Rmst => {
            let t = rectilinear_mst(points)?;
            Ok(if sub.steinerize { steinerize(&t) } else { t })
        }
        SubroutineMode::Exact => oracle::exact_rsmt_with_limit(points, sub.exact_limit),
    }
}

/// Minimum spanning tree under the L1 metric, on the distinct input points.
///
/// Candidate edges come from per-octant nearest neighbours (a sweep in each
/// of four rotated frames), which always contain an MST; Kruskal then runs on
/// those O(n) candidates. Ties are broken by (length, lower index, higher
/// index) over the lexicographically sorted points.
pub fn rectilinear_mst(points: &[Point]) -> Result<EmbeddedTree> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let pts = dedup_points(points);
    let n = pts.len();
    let scale = IntegerScale::for_values(pts.iter().flat_map(|p| [&p.x, &p.y]));
    let small: Option<(Vec<i128>, Vec<i128>)> = pts
        .iter()
        .map(|p| Some((scale.scale_i128(&p.x)?, scale.scale_i128(&p.y)?)))
        .collect::<Option<Vec<_>>>()
        .map(|v| v.into_iter().unzip());
    let pairs = match small {
        Some((xs, ys)) => mst_pairs(xs, ys),
        None => {
            let (xs, ys): (Vec<BigInt>, Vec<BigInt>) =
                pts.iter().map(|p| (scale.scale_big(&p.x), scale.scale_big(&p.y))).unzip();
            mst_pairs(xs, ys)
        }
    };
    debug_assert_eq!(pairs.len(), n - 1);
    let edges = pairs.into_iter().map(|(i, j)| TreeEdge::new(i, j, default_embedding(&pts[i], &pts[j]))).collect();
    Ok(EmbeddedTree::from_parts(pts, edges, (0..n).collect()))
}

fn default_embedding(a: &Point, b: &Point) -> Embedding {
    if a.is_axis_aligned_with(b) {
        Embedding::Straight
    } else {
        Embedding::HorizontalFirst
    }
}

fn mst_pairs<T>(xs: Vec<T>, ys: Vec<T>) -> Vec<(usize, usize)>
where
    T: Clone + Ord + Add<Output = T> + Sub<Output = T> + Neg<Output = T>,
{
    let n = xs.len();
    let dist = |i: usize, j: usize| -> T {
        let dx = if xs[i] >= xs[j] { xs[i].clone() - xs[j].clone() } else { xs[j].clone() - xs[i].clone() };
        let dy = if ys[i] >= ys[j] { ys[i].clone() - ys[j].clone() } else { ys[j].clone() - ys[i].clone() };
        dx + dy
    };
    let candidates = if n <= ALL_PAIRS_LIMIT {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    } else {
        octant_candidates(xs.clone(), ys.clone())
    };
    let mut weighted: Vec<(T, usize, usize)> =
        candidates.into_iter().map(|(i, j)| (dist(i, j), i.min(j), i.max(j))).collect();
    weighted.sort();
    weighted.dedup();
    let mut uf = UnionFind::new(n);
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for (_, i, j) in weighted {
        if uf.union(i, j) {
            out.push((i, j));
            if out.len() + 1 == n {
                break;
            }
        }
    }
    out
}

/// For every point, its nearest neighbour in each octant, found by sweeping
/// points in order of `x + y` over four reflected frames.
fn octant_candidates<T>(mut xs: Vec<T>, mut ys: Vec<T>) -> Vec<(usize, usize)>
where
    T: Clone + Ord + Add<Output = T> + Sub<Output = T> + Neg<Output = T>,
{
    let n = xs.len();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(4 * n);
    for _ in 0..2 {
        for _ in 0..2 {
            idx.sort_by_key(|&i| xs[i].clone() + ys[i].clone());
            let mut sweep: BTreeMap<T, usize> = BTreeMap::new();
            for &i in &idx {
                let key = -ys[i].clone();
                while let Some((k, &j)) = sweep.range(key.clone()..).next() {
                    if xs[i].clone() - xs[j].clone() < ys[i].clone() - ys[j].clone() {
                        break;
                    }
                    out.push((i, j));
                    let k = k.clone();
                    sweep.remove(&k);
                }
                sweep.insert(key, i);
            }
            std::mem::swap(&mut xs, &mut ys);
        }
        for x in xs.iter_mut() {
            *x = -x.clone();
        }
    }
    out
}

/// Merges overlapping parts of edges that leave a common vertex.
///
/// For a vertex `v` with neighbours `a` and `b`, the two edges are replaced
/// by a star through the coordinate-wise median of `{v, a, b}`, which is the
/// shortest tree on those three points. The most profitable pair is applied
/// repeatedly until no pair gains. Length never increases.
pub fn steinerize(t: &EmbeddedTree) -> EmbeddedTree {
    let mut vertices = t.vertices().to_vec();
    let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.a, e.b)).collect();
    loop {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let mut improved = false;
        let mut touched = vec![false; vertices.len()];
        for v in 0..vertices.len() {
            if touched[v] || incident[v].len() < 2 {
                continue;
            }
            let mut best: Option<(Coord, usize, usize, Point)> = None;
            for (x, &e1) in incident[v].iter().enumerate() {
                for &e2 in &incident[v][x + 1..] {
                    let a = other_end(edges[e1], v);
                    let b = other_end(edges[e2], v);
                    if touched[a] || touched[b] {
                        continue;
                    }
                    let s = median_point(&vertices[v], &vertices[a], &vertices[b]);
                    let before = l1_dist(&vertices[v], &vertices[a]) + l1_dist(&vertices[v], &vertices[b]);
                    let after = l1_dist(&vertices[v], &s) + l1_dist(&s, &vertices[a]) + l1_dist(&s, &vertices[b]);
                    let gain = before - after;
                    if !gain.is_zero() && !gain.is_negative() && best.as_ref().map_or(true, |(g, ..)| gain > *g) {
                        best = Some((gain, e1, e2, s));
                    }
                }
            }
            let Some((_, e1, e2, s)) = best else { continue };
            let a = other_end(edges[e1], v);
            let b = other_end(edges[e2], v);
            if s == vertices[a] {
                edges[e2] = (a, b);
            } else if s == vertices[b] {
                edges[e1] = (b, a);
            } else {
                let sv = vertices.len();
                vertices.push(s);
                edges[e1] = (v, sv);
                edges[e2] = (sv, a);
                edges.push((sv, b));
            }
            for u in [v, a, b] {
                touched[u] = true;
            }
            touched.push(true);
            improved = true;
        }
        if !improved {
            break;
        }
    }
    let tree_edges =
        edges.into_iter().map(|(a, b)| TreeEdge::new(a, b, default_embedding(&vertices[a], &vertices[b]))).collect();
    EmbeddedTree::from_parts(vertices, tree_edges, t.terminal_indices().to_vec())
}

fn other_end(e: (usize, usize), v: usize) -> usize {
    if e.0 == v {
        e.1
    } else {
        e.0
    }
}

fn median(a: &Coord, b: &Coord, c: &Coord) -> Coord {
    let mut v = [a, b, c];
    v.sort();
    v[1].clone()
}

fn median_point(a: &Point, b: &Point, c: &Point) -> Point {
    Point::new(median(&a.x, &b.x, &c.x), median(&a.y, &b.y, &c.y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_tree;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    /// O(n^2) Prim on the complete L1 graph.
    fn prim_length(points: &[Point]) -> Coord {
        let p = dedup_points(points);
        let n = p.len();
        let mut in_tree = vec![false; n];
        let mut best: Vec<Option<Coord>> = vec![None; n];
        best[0] = Some(Coord::zero());
        let mut total = Coord::zero();
        for _ in 0..n {
            let u =
                (0..n).filter(|&i| !in_tree[i] && best[i].is_some()).min_by(|&a, &b| best[a].cmp(&best[b])).unwrap();
            in_tree[u] = true;
            total += best[u].as_ref().unwrap();
            for v in 0..n {
                let d = l1_dist(&p[u], &p[v]);
                if !in_tree[v] && best[v].as_ref().map_or(true, |b| d < *b) {
                    best[v] = Some(d);
                }
            }
        }
        total
    }

    #[test]
    fn mst_examples() {
        assert_eq!(rectilinear_mst(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap().length(), Coord::from_int(2));
        let single = rectilinear_mst(&pts(&[(0, 0)])).unwrap();
        assert_eq!((single.vertices().len(), single.length()), (1, Coord::zero()));
        // Three spanning trees, all of length 4.
        assert_eq!(rectilinear_mst(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap().length(), Coord::from_int(4));
        assert_eq!(rectilinear_mst(&[]), Err(Error::EmptyPointSet));
    }

    #[test]
    fn steinerize_examples() {
        let t = rectilinear_mst(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap();
        let s = steinerize(&t);
        assert_eq!(s.length(), Coord::from_int(3));
        assert!(s.vertices().contains(&Point::int(1, 0)));
        assert_eq!(validate_tree(&s, &pts(&[(0, 0), (2, 0), (1, 1)])), Ok(()));

        let line = rectilinear_mst(&pts(&[(0, 0), (1, 0), (2, 0)])).unwrap();
        assert_eq!(steinerize(&line).length(), line.length());
        let edge = rectilinear_mst(&pts(&[(0, 0), (3, 5)])).unwrap();
        assert_eq!(steinerize(&edge), edge);
    }

    #[test]
    fn approx_steiner_modes() {
        let p = pts(&[(0, 0), (2, 0), (1, 1)]);
        assert_eq!(approx_steiner(&p, &SteinerSubroutine::exact()).unwrap().length(), Coord::from_int(3));
        let r = approx_steiner(&p, &SteinerSubroutine::rmst()).unwrap().length();
        assert!(r <= Coord::ratio(9, 2) && r == Coord::from_int(4));
        let two = pts(&[(1, 2), (4, -2)]);
        for sub in [SteinerSubroutine::rmst(), SteinerSubroutine::rmst_steinerized(), SteinerSubroutine::exact()] {
            assert_eq!(approx_steiner(&two, &sub).unwrap().length(), Coord::from_int(7));
        }
        let many: Vec<Point> = (0..4).flat_map(|x| (0..3).map(move |y| Point::int(x, y))).collect();
        assert_eq!(approx_steiner(&many, &SteinerSubroutine::exact()), Err(Error::SizeLimit { limit: 9, got: 12 }));
    }

    #[test]
    fn sweep_matches_prim_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for round in 0..60 {
            let n = rng.gen_range(65..=200);
            // Small ranges force many ties and shared coordinates.
            let range = if round % 2 == 0 { 12 } else { 1000 };
            let p: Vec<Point> = (0..n).map(|_| Point::int(rng.gen_range(0..range), rng.gen_range(0..range))).collect();
            let t = rectilinear_mst(&p).unwrap();
            assert_eq!(t.length(), prim_length(&p), "round {round}");
            assert_eq!(validate_tree(&t, &p), Ok(()));
        }
    }

    #[test]
    fn sweep_handles_fractional_and_huge_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p: Vec<Point> = (0..90)
            .map(|_| Point::new(Coord::ratio(rng.gen_range(-500..500), 7), Coord::ratio(rng.gen_range(-500..500), 3)))
            .collect();
        assert_eq!(rectilinear_mst(&p).unwrap().length(), prim_length(&p));
        // Forces the arbitrary-precision path.
        let big = Coord::from_big(BigInt::from(10).pow(40), BigInt::from(1));
        let q: Vec<Point> =
            (0..80i64).map(|i| Point::new(&big * Coord::from_int(i % 9), Coord::ratio(i * 37 % 101, 1))).collect();
        assert_eq!(rectilinear_mst(&q).unwrap().length(), prim_length(&q));
    }

    proptest! {
        #[test]
        fn steinerize_never_lengthens(raw in prop::collection::vec((0i64..8, 0i64..8), 1..12)) {
            let p = pts(&raw);
            let t = rectilinear_mst(&p).unwrap();
            let s = steinerize(&t);
            prop_assert!(s.length() <= t.length());
            prop_assert_eq!(validate_tree(&s, &p), Ok(()));
        }
    }
}
