//! Exact solvers for desk-scale instances.
//!
//! Both solvers run Dreyfus–Wagner over a grid graph: the Hanan grid for a
//! plain rectilinear Steiner tree, and `k + 1` stacked copies of it joined
//! by vertical edges of weight `K` for the two-level problem. Coordinates
//! are scaled to a common denominator so the dynamic program runs on
//! integers.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num::{BigInt, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::{bounding_box, dedup_points, hanan_grid, Coord, EmbeddedTree, Embedding, Point, TreeEdge};
use crate::lifting::{self, FlatTree, LiftedPoint, LiftedTree, LiftedVertex};
use crate::twolevel::{Instance, TwoLevelTree};
use crate::util::{IntegerScale, UnionFind};

pub const DEFAULT_EXACT_LIMIT: usize = 9;
pub const DEFAULT_GROUP_LIMIT: usize = 4;

const INF: u128 = u128::MAX;

/// A weighted undirected graph over Hanan-grid points, possibly replicated
/// over several layers.
#[derive(Clone, Debug)]
pub struct GridGraph {
    /// Position and layer of every vertex.
    pub vertices: Vec<(Point, usize)>,
    adjacency: Vec<Vec<(usize, u128)>>,
    scale: IntegerScale,
}

impl GridGraph {
    fn new(vertices: Vec<(Point, usize)>, scale: IntegerScale) -> Self {
        let n = vertices.len();
        GridGraph { vertices, adjacency: vec![Vec::new(); n], scale }
    }

    fn add_edge(&mut self, a: usize, b: usize, w: &Coord) -> Result<()> {
        let w = self.scale.scale_i128(w).and_then(|v| v.to_u128()).ok_or(Error::CoordinateOverflow)?;
        self.adjacency[a].push((b, w));
        self.adjacency[b].push((a, w));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.len());
        for (a, list) in self.adjacency.iter().enumerate() {
            for &(b, _) in list {
                uf.union(a, b);
            }
        }
        uf.components() <= 1
    }
}

#[derive(Clone, Copy, Debug)]
enum Back {
    None,
    Leaf,
    Edge(usize),
    Split(usize),
}

/// Minimum Steiner tree of `terminals` in `g`: total scaled weight and the
/// tree's edges as vertex pairs.
fn dreyfus_wagner(g: &GridGraph, terminals: &[usize]) -> (u128, Vec<(usize, usize)>) {
    let m = terminals.len();
    if m <= 1 {
        return (0, Vec::new());
    }
    let n = g.len();
    let q = m - 1;
    let root = terminals[q];
    let full = (1usize << q) - 1;
    let mut dp = vec![vec![INF; n]; full + 1];
    let mut back = vec![vec![Back::None; n]; full + 1];

    let relax = |dist: &mut Vec<u128>, back: &mut Vec<Back>| {
        let mut heap: BinaryHeap<Reverse<(u128, usize)>> =
            dist.iter().enumerate().filter(|(_, &d)| d != INF).map(|(v, &d)| Reverse((d, v))).collect();
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &(v, w) in &g.adjacency[u] {
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    back[v] = Back::Edge(u);
                    heap.push(Reverse((nd, v)));
                }
            }
        }
    };

    for (i, &t) in terminals[..q].iter().enumerate() {
        let mask = 1 << i;
        dp[mask][t] = 0;
        back[mask][t] = Back::Leaf;
        let (d, b) = (&mut dp[mask], &mut back[mask]);
        relax(d, b);
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        for v in 0..n {
            let mut sub = (mask - 1) & mask;
            while sub > 0 {
                if sub & low != 0 {
                    let (a, b) = (dp[sub][v], dp[mask ^ sub][v]);
                    if a != INF && b != INF && a + b < dp[mask][v] {
                        dp[mask][v] = a + b;
                        back[mask][v] = Back::Split(sub);
                    }
                }
                sub = (sub - 1) & mask;
            }
        }
        let (d, b) = (&mut dp[mask], &mut back[mask]);
        relax(d, b);
    }

    let cost = dp[full][root];
    let mut edges = BTreeSet::new();
    let mut stack = vec![(full, root)];
    while let Some((mask, v)) = stack.pop() {
        match back[mask][v] {
            Back::Leaf => {}
            Back::Edge(u) => {
                edges.insert((u.min(v), u.max(v)));
                stack.push((mask, u));
            }
            Back::Split(sub) => {
                stack.push((sub, v));
                stack.push((mask ^ sub, v));
            }
            Back::None => unreachable!("unreachable terminal in a connected grid graph"),
        }
    }
    (cost, edges.into_iter().collect())
}

/// Spanning-forest cleanup of a DP edge set, followed by Steiner-leaf pruning.
fn as_tree(edges: Vec<(usize, usize)>, n: usize, terminals: &[usize]) -> Vec<(usize, usize)> {
    let mut uf = UnionFind::new(n);
    let mut kept: Vec<(usize, usize)> = edges.into_iter().filter(|&(a, b)| uf.union(a, b)).collect();
    loop {
        let mut deg = vec![0usize; n];
        for &(a, b) in &kept {
            deg[a] += 1;
            deg[b] += 1;
        }
        let before = kept.len();
        kept.retain(|&(a, b)| {
            let leaf = |v: usize| deg[v] == 1 && !terminals.contains(&v);
            !(leaf(a) || leaf(b))
        });
        if kept.len() == before {
            return kept;
        }
    }
}

pub fn exact_rsmt(points: &[Point]) -> Result<EmbeddedTree> {
    exact_rsmt_with_limit(points, DEFAULT_EXACT_LIMIT)
}

/// Minimum rectilinear Steiner tree, with all vertices on the Hanan grid.
pub fn exact_rsmt_with_limit(points: &[Point], limit: usize) -> Result<EmbeddedTree> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let pts = dedup_points(points);
    if pts.len() > limit {
        return Err(Error::SizeLimit { limit, got: pts.len() });
    }
    if pts.len() == 1 {
        return Ok(EmbeddedTree::single(pts[0].clone()));
    }
    let grid = hanan_grid(&pts)?;
    let scale = IntegerScale::for_values(grid.xs.iter().chain(grid.ys.iter()));
    let mut g = GridGraph::new((0..grid.len()).map(|i| (grid.vertex(i), 0)).collect(), scale);
    for (a, b, w) in grid.edges() {
        g.add_edge(a, b, &w)?;
    }
    let terminals: Vec<usize> = pts.iter().map(|p| grid.locate(p).expect("terminal on its grid")).collect();
    let (_, edges) = dreyfus_wagner(&g, &terminals);
    let edges = as_tree(edges, g.len(), &terminals);
    Ok(grid_edges_to_tree(&g, &edges, &terminals))
}

fn grid_edges_to_tree(g: &GridGraph, edges: &[(usize, usize)], terminals: &[usize]) -> EmbeddedTree {
    let mut local = vec![usize::MAX; g.len()];
    let mut vertices = Vec::new();
    let mut id = |v: usize, vertices: &mut Vec<Point>| {
        if local[v] == usize::MAX {
            local[v] = vertices.len();
            vertices.push(g.vertices[v].0.clone());
        }
        local[v]
    };
    let term_ids: Vec<usize> = terminals.iter().map(|&t| id(t, &mut vertices)).collect();
    let tree_edges: Vec<TreeEdge> = edges
        .iter()
        .map(|&(a, b)| TreeEdge::new(id(a, &mut vertices), id(b, &mut vertices), Embedding::Straight))
        .collect();
    EmbeddedTree::from_parts(vertices, tree_edges, term_ids).merge_collinear()
}

pub fn exact_two_level(instance: &Instance) -> Result<(TwoLevelTree, Coord)> {
    exact_two_level_with_limits(instance, DEFAULT_EXACT_LIMIT, DEFAULT_GROUP_LIMIT)
}

/// Inter-layer edge weight used by the oracle: one more than the
/// semiperimeter of the instance's bounding box, so every minimum tree uses
/// exactly one vertical edge per group.
pub fn oracle_height(instance: &Instance) -> Coord {
    bounding_box(&instance.all_points()).expect("instances are non-empty").semiperimeter() + Coord::one()
}

/// Optimum two-level tree, via a minimum Steiner tree over the lifted
/// terminals in the layered Hanan-grid graph, projected back to the plane.
pub fn exact_two_level_with_limits(
    instance: &Instance,
    limit: usize,
    group_limit: usize,
) -> Result<(TwoLevelTree, Coord)> {
    let total = instance.total_terminals();
    if total > limit {
        return Err(Error::SizeLimit { limit, got: total });
    }
    let k = instance.k();
    if k > group_limit {
        return Err(Error::GroupLimit { limit: group_limit, got: k });
    }
    if k == 1 {
        let group = &instance.groups()[0];
        let sub = exact_rsmt_with_limit(group, limit)?;
        let q = group.iter().min().expect("groups are non-empty").clone();
        let t = TwoLevelTree::new(EmbeddedTree::single(q.clone()), vec![sub], vec![q]);
        let len = t.total_length();
        return Ok((t, len));
    }

    let all = instance.all_points();
    let grid = hanan_grid(&all)?;
    let height = oracle_height(instance);
    let scale = IntegerScale::for_values(grid.xs.iter().chain(grid.ys.iter()).chain([&height]));
    let cells = grid.len();
    let vertices = (0..=k).flat_map(|layer| (0..cells).map(move |c| (layer, c)));
    let mut g = GridGraph::new(vertices.map(|(layer, c)| (grid.vertex(c), layer)).collect(), scale);
    let grid_edges = grid.edges();
    for layer in 0..=k {
        for (a, b, w) in &grid_edges {
            g.add_edge(layer * cells + a, layer * cells + b, w)?;
        }
    }
    for layer in 1..=k {
        for c in 0..cells {
            g.add_edge(c, layer * cells + c, &height)?;
        }
    }
    debug_assert!(g.is_connected());

    let mut terminals = Vec::with_capacity(total);
    let mut lifted_terminals = Vec::with_capacity(total);
    for (i, group) in instance.groups().iter().enumerate() {
        for p in group {
            terminals.push((i + 1) * cells + grid.locate(p).expect("terminal on its grid"));
            lifted_terminals.push(LiftedPoint::new(p.clone(), i + 1));
        }
    }
    let (_, edges) = dreyfus_wagner(&g, &terminals);
    let edges = as_tree(edges, g.len(), &terminals);

    let mut local = vec![usize::MAX; g.len()];
    let mut lifted_vertices = Vec::new();
    let mut id = |v: usize, out: &mut Vec<LiftedVertex>| {
        if local[v] == usize::MAX {
            local[v] = out.len();
            let (p, layer) = &g.vertices[v];
            out.push(LiftedVertex::at_layer(p.clone(), *layer, k, &height));
        }
        local[v]
    };
    for &t in &terminals {
        id(t, &mut lifted_vertices);
    }
    let lifted_edges: Vec<(usize, usize)> =
        edges.iter().map(|&(a, b)| (id(a, &mut lifted_vertices), id(b, &mut lifted_vertices))).collect();
    let tree = LiftedTree::new(k, lifted_vertices, lifted_edges, lifted_terminals)?;
    let flat = FlatTree::new(tree, &height)?;
    let flat = lifting::normalize_single_edges(&flat, &height)?;
    let two = lifting::project_to_two_level(&flat, &height)?;
    let len = two.total_length();
    Ok((two, len))
}

/// Upper bound on minimum rectilinear Steiner tree length over bounding-box
/// semiperimeter for `k` terminals: `ceil(sqrt(k - 2)) / 2 + 3/4`.
pub fn u_bound(k: usize) -> Result<Coord> {
    if k < 2 {
        return Err(Error::TooFewGroups(k));
    }
    let r = k - 2;
    let mut s = (r as f64).sqrt() as usize;
    while s * s < r {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= r {
        s -= 1;
    }
    Ok(Coord::from_big(BigInt::from(s), BigInt::from(2)) + Coord::ratio(3, 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{l1_dist, validate_tree, Rect};
    use crate::rsmt::rectilinear_mst;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    /// Brute force: the minimum spanning tree length over the terminals plus
    /// every subset of Hanan-grid points, pruned of Steiner leaves. A
    /// minimum Steiner tree is an MST over its own vertex set, and some
    /// minimum tree has all Steiner points on the Hanan grid.
    fn brute_force_rsmt(points: &[Point]) -> Coord {
        let p = dedup_points(points);
        let grid = hanan_grid(&p).unwrap();
        let extra: Vec<Point> = (0..grid.len()).map(|i| grid.vertex(i)).filter(|v| !p.contains(v)).collect();
        let mut best: Option<Coord> = None;
        for mask in 0u32..(1 << extra.len()) {
            if mask.count_ones() as usize > p.len().saturating_sub(2) {
                continue;
            }
            let mut set = p.clone();
            set.extend((0..extra.len()).filter(|i| mask & (1 << i) != 0).map(|i| extra[i].clone()));
            let l = rectilinear_mst(&set).unwrap().length();
            if best.as_ref().map_or(true, |b| l < *b) {
                best = Some(l);
            }
        }
        best.unwrap()
    }

    #[test]
    fn exact_rsmt_examples() {
        let t = exact_rsmt(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap();
        assert_eq!(t.length(), Coord::from_int(3));
        assert_eq!(brute_force_rsmt(&pts(&[(0, 0), (2, 0), (1, 1)])), Coord::from_int(3));

        let half = Coord::ratio(1, 2);
        let p = vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1), Point::new(half.clone(), half)];
        assert_eq!(exact_rsmt(&p).unwrap().length(), Coord::ratio(5, 2));
        assert_eq!(brute_force_rsmt(&p), Coord::ratio(5, 2));

        let two = pts(&[(-3, 1), (4, 7)]);
        assert_eq!(exact_rsmt(&two).unwrap().length(), l1_dist(&two[0], &two[1]));
        assert_eq!(exact_rsmt(&pts(&[(2, 2)])).unwrap().length(), Coord::zero());
    }

    #[test]
    fn size_limit_is_reported() {
        let p: Vec<Point> = (0..10).map(|i| Point::int(i, i * i % 7)).collect();
        let err = exact_rsmt(&p).unwrap_err();
        assert_eq!(err, Error::SizeLimit { limit: 9, got: 10 });
        assert!(err.to_string().contains('9'));
        assert!(exact_rsmt_with_limit(&p, 10).is_ok());
    }

    #[test]
    fn exact_rsmt_matches_brute_force_and_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..120 {
            let n = rng.gen_range(1..=5);
            let p: Vec<Point> = (0..n).map(|_| Point::int(rng.gen_range(0..6), rng.gen_range(0..6))).collect();
            let t = exact_rsmt(&p).unwrap();
            assert_eq!(validate_tree(&t, &p), Ok(()));
            let grid = hanan_grid(&p).unwrap();
            assert!(t.vertices().iter().all(|v| grid.contains(v)));
            assert_eq!(t.length(), brute_force_rsmt(&p));
            assert!(t.length() <= rectilinear_mst(&p).unwrap().length());
        }
    }

    #[test]
    fn u_bound_values() {
        assert_eq!(u_bound(2).unwrap(), Coord::ratio(3, 4));
        assert_eq!(u_bound(3).unwrap(), Coord::ratio(5, 4));
        assert_eq!(u_bound(4).unwrap(), Coord::ratio(7, 4));
        assert_eq!(u_bound(6).unwrap(), Coord::ratio(7, 4));
        assert_eq!(u_bound(7).unwrap(), Coord::ratio(9, 4));
        assert_eq!(u_bound(11).unwrap(), Coord::ratio(9, 4));
        assert_eq!(u_bound(1), Err(Error::TooFewGroups(1)));
    }

    #[test]
    fn u_bound_does_not_hold_for_two_terminals() {
        // Two points: the tree is their L1 distance, which equals the box
        // semiperimeter, while the bound claims 3/4 of it.
        let p = pts(&[(0, 0), (1, 0)]);
        let semi = bounding_box(&p).unwrap().semiperimeter();
        assert!(exact_rsmt(&p).unwrap().length() > u_bound(2).unwrap() * semi);
    }

    #[test]
    fn u_bound_holds_from_three_terminals() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..150 {
            let k = rng.gen_range(3..=6);
            let p: Vec<Point> = (0..k).map(|_| Point::int(rng.gen_range(0..10), rng.gen_range(0..10))).collect();
            let semi = bounding_box(&p).unwrap().semiperimeter();
            let t = exact_rsmt(&p).unwrap();
            assert!(t.length() <= u_bound(k).unwrap() * semi, "{p:?}");
        }
    }

    fn two_segments() -> Instance {
        Instance::new(vec![pts(&[(0, 0), (1, 0)]), pts(&[(0, 0), (-1, 0)])]).unwrap()
    }

    fn two_corners() -> Instance {
        Instance::new(vec![pts(&[(0, 0), (1, 0), (0, 1)]), pts(&[(0, 0), (-1, 0), (0, -1)])]).unwrap()
    }

    #[test]
    fn exact_two_level_examples() {
        let (t, len) = exact_two_level(&two_segments()).unwrap();
        assert_eq!(len, Coord::from_int(2));
        assert_eq!(t.validate(&two_segments()), Ok(()));
        let (t, len) = exact_two_level(&two_corners()).unwrap();
        assert_eq!(len, Coord::from_int(4));
        assert_eq!(t.validate(&two_corners()), Ok(()));

        let single = Instance::new(vec![pts(&[(0, 0), (3, 3)])]).unwrap();
        let (t, len) = exact_two_level(&single).unwrap();
        assert_eq!(len, Coord::from_int(6));
        assert_eq!(t.top().length(), Coord::zero());
        assert_eq!(t.top().vertices().len(), 1);
    }

    #[test]
    fn exact_two_level_limits() {
        let big = Instance::new(vec![
            pts(&[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)]),
            pts(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
        ])
        .unwrap();
        assert_eq!(exact_two_level(&big).unwrap_err(), Error::SizeLimit { limit: 9, got: 10 });
        let many = Instance::new((0..5).map(|i| pts(&[(i, 0)])).collect()).unwrap();
        assert_eq!(exact_two_level(&many).unwrap_err(), Error::GroupLimit { limit: 4, got: 5 });
    }

    #[test]
    fn exact_two_level_single_group_equals_rsmt() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let p: Vec<Point> = (0..n).map(|_| Point::int(rng.gen_range(-4..4), rng.gen_range(-4..4))).collect();
            let inst = Instance::new(vec![p.clone()]).unwrap();
            assert_eq!(exact_two_level(&inst).unwrap().1, exact_rsmt(&p).unwrap().length());
        }
    }

    #[test]
    fn two_level_solutions_live_on_the_hanan_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let k = rng.gen_range(2..=3);
            let groups: Vec<Vec<Point>> = (0..k)
                .map(|_| {
                    (0..rng.gen_range(1..=2)).map(|_| Point::int(rng.gen_range(0..5), rng.gen_range(0..5))).collect()
                })
                .collect();
            let inst = Instance::new(groups).unwrap();
            let (t, _) = exact_two_level(&inst).unwrap();
            let grid = hanan_grid(&inst.all_points()).unwrap();
            for tree in std::iter::once(t.top()).chain(t.subtrees()) {
                assert!(tree.vertices().iter().all(|v| grid.contains(v)));
            }
            let b: Rect = bounding_box(&inst.all_points()).unwrap();
            assert!(t.connection_points().iter().all(|q| b.contains(q)));
        }
    }
}
