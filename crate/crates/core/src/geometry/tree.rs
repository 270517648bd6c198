use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use super::{l1_dist, Coord, Point, Rect};

/// How an edge between two vertices is drawn in the plane.
///
/// Edges whose endpoints share a coordinate are a single segment whatever
/// the tag; otherwise the tag picks which of the two L-shapes is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Embedding {
    Straight,
    /// Along x first, bending at `(b.x, a.y)`.
    HorizontalFirst,
    /// Along y first, bending at `(a.x, b.y)`.
    VerticalFirst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub embedding: Embedding,
}

impl TreeEdge {
    pub fn new(a: usize, b: usize, embedding: Embedding) -> Self {
        TreeEdge { a, b, embedding }
    }
}

/// An axis-parallel segment (possibly a single point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn length(&self) -> Coord {
        l1_dist(&self.a, &self.b)
    }

    pub fn bbox(&self) -> Rect {
        Rect::spanning(&self.a, &self.b)
    }

    /// Closest point to `q`; unique because the segment is axis-parallel.
    pub fn nearest(&self, q: &Point) -> Point {
        self.bbox().clamp(q)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.bbox().contains(p)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }
}

/// A structural defect reported by [`validate_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    EdgeOutOfRange { edge: usize },
    NotAxisAligned { edge: usize },
    EdgeCountMismatch { vertices: usize, edges: usize },
    NotConnected,
    Cycle,
    TerminalUncovered(Point),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "tree has no vertices"),
            Violation::EdgeOutOfRange { edge } => write!(f, "edge {edge} references a missing vertex"),
            Violation::NotAxisAligned { edge } => {
                write!(f, "edge {edge} is tagged straight but is not axis-aligned")
            }
            Violation::EdgeCountMismatch { vertices, edges } => {
                write!(f, "{edges} edges for {vertices} vertices")
            }
            Violation::NotConnected => write!(f, "not connected"),
            Violation::Cycle => write!(f, "contains a cycle"),
            Violation::TerminalUncovered(p) => write!(f, "terminal uncovered: {p}"),
        }
    }
}

/// A rectilinear Steiner tree with explicit coordinates and edge embeddings.
///
/// `terminals` lists the vertex indices that must not be removed or merged
/// away by simplification passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedTree {
    vertices: Vec<Point>,
    edges: Vec<TreeEdge>,
    terminals: Vec<usize>,
}

impl EmbeddedTree {
    /// Assembles a tree without checking it; see [`validate_tree`].
    pub fn from_parts(vertices: Vec<Point>, edges: Vec<TreeEdge>, terminals: Vec<usize>) -> Self {
        EmbeddedTree { vertices, edges, terminals }
    }

    pub fn single(p: Point) -> Self {
        EmbeddedTree { vertices: vec![p], edges: Vec::new(), terminals: vec![0] }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn terminal_indices(&self) -> &[usize] {
        &self.terminals
    }

    pub fn terminal_points(&self) -> impl Iterator<Item = &Point> {
        self.terminals.iter().map(|&i| &self.vertices[i])
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn edge_length(&self, e: &TreeEdge) -> Coord {
        l1_dist(&self.vertices[e.a], &self.vertices[e.b])
    }

    /// Sum of edge L1 lengths, recomputed from the coordinates.
    pub fn length(&self) -> Coord {
        self.edges.iter().map(|e| self.edge_length(e)).sum()
    }

    pub fn bend(&self, e: &TreeEdge) -> Option<Point> {
        let (a, b) = (&self.vertices[e.a], &self.vertices[e.b]);
        if a.is_axis_aligned_with(b) {
            return None;
        }
        match e.embedding {
            Embedding::Straight => None,
            Embedding::HorizontalFirst => Some(Point::new(b.x.clone(), a.y.clone())),
            Embedding::VerticalFirst => Some(Point::new(a.x.clone(), b.y.clone())),
        }
    }

    /// The one or two axis-parallel pieces of edge `e`.
    pub fn edge_segments(&self, e: &TreeEdge) -> Vec<Segment> {
        let (a, b) = (&self.vertices[e.a], &self.vertices[e.b]);
        match self.bend(e) {
            Some(c) => vec![Segment { a: a.clone(), b: c.clone() }, Segment { a: c, b: b.clone() }],
            None => vec![Segment { a: a.clone(), b: b.clone() }],
        }
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.edges.iter().flat_map(|e| self.edge_segments(e)).collect()
    }

    /// True if `p` is a vertex or lies on an embedded segment.
    pub fn covers(&self, p: &Point) -> bool {
        self.vertices.iter().any(|v| v == p) || self.segments().iter().any(|s| s.contains(p))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg
    }

    fn terminal_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.vertices.len()];
        for &t in &self.terminals {
            mask[t] = true;
        }
        mask
    }

    /// Adds a vertex at `p` and returns its index. Reuses an existing vertex,
    /// or splits the edge whose embedding passes through `p`. Returns `None`
    /// if `p` is not on the tree.
    pub fn ensure_vertex(&mut self, p: &Point) -> Option<usize> {
        if let Some(i) = self.vertex_index(p) {
            return Some(i);
        }
        for ei in 0..self.edges.len() {
            let e = self.edges[ei].clone();
            let segs = self.edge_segments(&e);
            let Some(pos) = segs.iter().position(|s| s.contains(p)) else {
                continue;
            };
            let v = self.vertices.len();
            self.vertices.push(p.clone());
            // Keep each half on the original polyline.
            let (first, second) = match (segs.len(), pos) {
                (1, _) => (Embedding::Straight, Embedding::Straight),
                (_, 0) => (Embedding::Straight, e.embedding),
                _ => (e.embedding, Embedding::Straight),
            };
            self.edges[ei] = TreeEdge::new(e.a, v, first);
            self.edges.push(TreeEdge::new(v, e.b, second));
            return Some(v);
        }
        None
    }

    /// Marks the vertex at `p` as a terminal, inserting it if needed.
    pub fn mark_terminal(&mut self, p: &Point) -> Option<usize> {
        let v = self.ensure_vertex(p)?;
        if !self.terminals.contains(&v) {
            self.terminals.push(v);
        }
        Some(v)
    }

    /// Marks every point as a terminal. Returns `false` if one is off the tree.
    pub fn mark_terminals(&mut self, points: &[Point]) -> bool {
        let mut index: HashMap<&Point, usize> = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            index.entry(v).or_insert(i);
        }
        let mut marked: HashSet<usize> = self.terminals.iter().copied().collect();
        let mut missing = Vec::new();
        for p in points {
            match index.get(p) {
                Some(&v) => {
                    if marked.insert(v) {
                        self.terminals.push(v);
                    }
                }
                None => missing.push(p.clone()),
            }
        }
        missing.iter().all(|p| self.mark_terminal(p).is_some())
    }

    /// Adds a new vertex joined to `anchor` by one edge.
    pub fn attach(&mut self, anchor: usize, p: Point, embedding: Embedding) -> usize {
        let v = self.vertices.len();
        self.vertices.push(p);
        self.edges.push(TreeEdge::new(anchor, v, embedding));
        v
    }

    /// Replaces every maximal run of degree-2 Steiner vertices lying on one
    /// axis-parallel line by a single straight edge.
    pub fn merge_collinear(&self) -> EmbeddedTree {
        self.contract_where(|u, v, w, e1, e2| {
            let straight = |e: &TreeEdge| self.vertices[e.a].is_axis_aligned_with(&self.vertices[e.b]);
            straight(e1)
                && straight(e2)
                && ((u.x == v.x && v.x == w.x) || (u.y == v.y && v.y == w.y))
                && l1_dist(u, v) + l1_dist(v, w) == l1_dist(u, w)
        })
    }

    /// Replaces every degree-2 Steiner vertex that sits inside the bounding
    /// box of its two neighbours by a direct edge. Length is unchanged, and
    /// the resulting edges are free to be re-embedded anywhere in their box.
    pub fn contract_monotone_chains(&self) -> EmbeddedTree {
        self.contract_where(|u, v, w, _, _| l1_dist(u, v) + l1_dist(v, w) == l1_dist(u, w))
    }

    fn contract_where<F>(&self, pred: F) -> EmbeddedTree
    where
        F: Fn(&Point, &Point, &Point, &TreeEdge, &TreeEdge) -> bool,
    {
        let mut edges: Vec<Option<TreeEdge>> = self.edges.iter().cloned().map(Some).collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.a].push(i);
            incident[e.b].push(i);
        }
        let is_terminal = self.terminal_mask();
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..self.vertices.len() {
                if is_terminal[v] || incident[v].len() != 2 {
                    continue;
                }
                let (i1, i2) = (incident[v][0], incident[v][1]);
                let (Some(e1), Some(e2)) = (edges[i1].clone(), edges[i2].clone()) else {
                    continue;
                };
                let u = if e1.a == v { e1.b } else { e1.a };
                let w = if e2.a == v { e2.b } else { e2.a };
                if u == w {
                    continue;
                }
                if !pred(&self.vertices[u], &self.vertices[v], &self.vertices[w], &e1, &e2) {
                    continue;
                }
                let emb = if self.vertices[u].is_axis_aligned_with(&self.vertices[w]) {
                    Embedding::Straight
                } else {
                    Embedding::HorizontalFirst
                };
                edges[i1] = Some(TreeEdge::new(u, w, emb));
                edges[i2] = None;
                incident[v].clear();
                for x in incident[w].iter_mut() {
                    if *x == i2 {
                        *x = i1;
                    }
                }
                changed = true;
            }
        }
        let kept: Vec<TreeEdge> = edges.into_iter().flatten().collect();
        EmbeddedTree::from_parts(self.vertices.clone(), kept, self.terminals.clone()).compact()
    }

    /// Repeatedly removes Steiner vertices of degree one.
    pub fn prune_steiner_leaves(&self) -> EmbeddedTree {
        let is_terminal = self.terminal_mask();
        let mut edges = self.edges.clone();
        loop {
            let deg = {
                let mut d = vec![0usize; self.vertices.len()];
                for e in &edges {
                    d[e.a] += 1;
                    d[e.b] += 1;
                }
                d
            };
            let before = edges.len();
            edges.retain(|e| {
                let leaf = |v: usize| deg[v] == 1 && !is_terminal[v];
                !(leaf(e.a) || leaf(e.b))
            });
            if edges.len() == before {
                break;
            }
        }
        EmbeddedTree::from_parts(self.vertices.clone(), edges, self.terminals.clone()).compact()
    }

    /// Drops vertices that are neither terminals nor edge endpoints.
    pub fn compact(&self) -> EmbeddedTree {
        let mut used = vec![false; self.vertices.len()];
        for &t in &self.terminals {
            used[t] = true;
        }
        for e in &self.edges {
            used[e.a] = true;
            used[e.b] = true;
        }
        if used.iter().all(|&u| u) {
            return self.clone();
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, p) in self.vertices.iter().enumerate() {
            if used[i] {
                remap[i] = vertices.len();
                vertices.push(p.clone());
            }
        }
        let edges = self.edges.iter().map(|e| TreeEdge::new(remap[e.a], remap[e.b], e.embedding)).collect();
        let terminals = self.terminals.iter().map(|&t| remap[t]).collect();
        EmbeddedTree::from_parts(vertices, edges, terminals)
    }

    /// Same tree with every edge embedding replaced.
    pub fn with_embeddings(&self, f: impl Fn(usize, &TreeEdge) -> Embedding) -> EmbeddedTree {
        let edges = self.edges.iter().enumerate().map(|(i, e)| TreeEdge::new(e.a, e.b, f(i, e))).collect();
        EmbeddedTree::from_parts(self.vertices.clone(), edges, self.terminals.clone())
    }

    /// Adjacency lists (neighbour, edge index).
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, i));
            adj[e.b].push((e.a, i));
        }
        adj
    }

    /// Deduplicates vertices at equal coordinates, then keeps a minimum
    /// spanning forest of the merged multigraph (longest edge of every cycle
    /// dropped, ties broken by endpoint order) and drops zero-length edges.
    pub fn merge_coincident(&self) -> EmbeddedTree {
        let mut index: BTreeMap<&Point, usize> = BTreeMap::new();
        let mut remap = Vec::with_capacity(self.vertices.len());
        let mut vertices = Vec::new();
        for p in &self.vertices {
            let id = *index.entry(p).or_insert_with(|| {
                vertices.push(p.clone());
                vertices.len() - 1
            });
            remap.push(id);
        }
        let mut candidates: Vec<(Coord, usize, usize, Embedding)> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (remap[e.a], remap[e.b]);
                (self.edge_length(e), a.min(b), a.max(b), e.embedding)
            })
            .filter(|(_, a, b, _)| a != b)
            .collect();
        candidates.sort_by(|x, y| (&x.0, x.1, x.2).cmp(&(&y.0, y.1, y.2)));
        let mut uf = crate::util::UnionFind::new(vertices.len());
        let mut edges = Vec::new();
        for (_, a, b, emb) in candidates {
            if uf.union(a, b) {
                edges.push(TreeEdge::new(a, b, emb));
            }
        }
        let mut terminals: Vec<usize> = self.terminals.iter().map(|&t| remap[t]).collect();
        terminals.sort_unstable();
        terminals.dedup();
        EmbeddedTree::from_parts(vertices, edges, terminals)
    }
}

/// Checks the structural tree invariants and that every required terminal
/// is a vertex or lies on an embedded segment.
pub fn validate_tree(t: &EmbeddedTree, required_terminals: &[Point]) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    let n = t.vertices.len();
    if n == 0 {
        violations.push(Violation::Empty);
        violations.extend(required_terminals.iter().cloned().map(Violation::TerminalUncovered));
        return Err(violations);
    }
    let mut in_range = true;
    for (i, e) in t.edges.iter().enumerate() {
        if e.a >= n || e.b >= n {
            violations.push(Violation::EdgeOutOfRange { edge: i });
            in_range = false;
        } else if e.embedding == Embedding::Straight && !t.vertices[e.a].is_axis_aligned_with(&t.vertices[e.b]) {
            violations.push(Violation::NotAxisAligned { edge: i });
        }
    }
    if !in_range {
        return Err(violations);
    }
    if t.edges.len() + 1 != n {
        violations.push(Violation::EdgeCountMismatch { vertices: n, edges: t.edges.len() });
    }
    let mut uf = crate::util::UnionFind::new(n);
    let mut cycle = false;
    for e in &t.edges {
        if !uf.union(e.a, e.b) {
            cycle = true;
        }
    }
    if cycle {
        violations.push(Violation::Cycle);
    }
    if uf.components() != 1 {
        violations.push(Violation::NotConnected);
    }
    let segments = t.segments();
    for p in required_terminals {
        let on_vertex = t.vertices.iter().any(|v| v == p);
        if !on_vertex && !segments.iter().any(|s| s.contains(p)) {
            violations.push(Violation::TerminalUncovered(p.clone()));
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

pub fn tree_length(t: &EmbeddedTree) -> Coord {
    t.length()
}

/// A point of the tree closest to `q` in L1 and its distance. Ties go to the
/// lexicographically smallest point.
pub fn nearest_point_on_tree(t: &EmbeddedTree, q: &Point) -> (Point, Coord) {
    let mut best: Option<(Coord, Point)> = None;
    let mut consider = |p: Point| {
        let d = l1_dist(&p, q);
        let better = match &best {
            None => true,
            Some((bd, bp)) => d < *bd || (d == *bd && p < *bp),
        };
        if better {
            best = Some((d, p));
        }
    };
    for v in &t.vertices {
        consider(v.clone());
    }
    for s in t.segments() {
        consider(s.nearest(q));
    }
    let (d, p) = best.expect("nearest point on an empty tree");
    (p, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(points: &[(i64, i64)]) -> EmbeddedTree {
        let vertices: Vec<Point> = points.iter().map(|&(x, y)| Point::int(x, y)).collect();
        let edges = (1..vertices.len()).map(|i| TreeEdge::new(i - 1, i, Embedding::HorizontalFirst)).collect();
        let terminals = (0..vertices.len()).collect();
        EmbeddedTree::from_parts(vertices, edges, terminals)
    }

    #[test]
    fn lengths() {
        assert_eq!(EmbeddedTree::single(Point::int(3, 3)).length(), Coord::zero());
        assert_eq!(path(&[(0, 0), (1, 0), (1, 1)]).length(), Coord::from_int(2));
        assert_eq!(path(&[(0, 0), (2, 3)]).length(), Coord::from_int(5));
    }

    #[test]
    fn nearest_point_examples() {
        let seg = path(&[(0, 0), (4, 0)]);
        assert_eq!(nearest_point_on_tree(&seg, &Point::int(2, 3)), (Point::int(2, 0), Coord::from_int(3)));
        assert_eq!(nearest_point_on_tree(&seg, &Point::int(3, 0)), (Point::int(3, 0), Coord::zero()));

        let l = path(&[(0, 0), (2, 2)]);
        assert_eq!(l.bend(&l.edges()[0]), Some(Point::int(2, 0)));
        assert_eq!(nearest_point_on_tree(&l, &Point::int(0, 2)), (Point::int(0, 0), Coord::from_int(2)));
    }

    /// Dense sampling of every segment at spacing 1/8; an independent check
    /// of the nearest-point query on integer trees.
    fn sampled_min_distance(t: &EmbeddedTree, q: &Point) -> Coord {
        let mut best: Option<Coord> = None;
        for s in t.segments() {
            let len = s.length();
            let steps = (len.to_f64() * 8.0).round() as i64;
            for i in 0..=steps.max(0) {
                let f = if steps == 0 { Coord::zero() } else { Coord::ratio(i, steps) };
                let p = Point::new(&s.a.x + (&s.b.x - &s.a.x) * &f, &s.a.y + (&s.b.y - &s.a.y) * &f);
                let d = l1_dist(&p, q);
                if best.as_ref().map_or(true, |b| d < *b) {
                    best = Some(d);
                }
            }
        }
        best.unwrap_or_else(|| l1_dist(&t.vertices()[0], q))
    }

    #[test]
    fn nearest_point_matches_sampling_on_l_shape() {
        let l = path(&[(0, 0), (2, 2)]);
        let q = Point::int(0, 2);
        assert_eq!(sampled_min_distance(&l, &q), Coord::from_int(2));
    }

    #[test]
    fn validation() {
        let star = EmbeddedTree::from_parts(
            vec![Point::int(0, 0), Point::int(2, 0), Point::int(0, 2)],
            vec![TreeEdge::new(0, 1, Embedding::Straight), TreeEdge::new(0, 2, Embedding::Straight)],
            vec![0, 1, 2],
        );
        let terms = [Point::int(0, 0), Point::int(2, 0), Point::int(0, 2)];
        assert_eq!(validate_tree(&star, &terms), Ok(()));
        // Terminals on a segment interior also count.
        assert_eq!(validate_tree(&star, &[Point::int(1, 0)]), Ok(()));

        let two = EmbeddedTree::from_parts(
            vec![Point::int(0, 0), Point::int(1, 0), Point::int(5, 5), Point::int(6, 5)],
            vec![TreeEdge::new(0, 1, Embedding::Straight), TreeEdge::new(2, 3, Embedding::Straight)],
            vec![],
        );
        let v = validate_tree(&two, &[]).unwrap_err();
        assert!(v.contains(&Violation::NotConnected));
        assert!(v.iter().any(|x| x.to_string() == "not connected"));

        let v = validate_tree(&star, &[Point::int(1, 1)]).unwrap_err();
        assert_eq!(v, vec![Violation::TerminalUncovered(Point::int(1, 1))]);
        assert!(v[0].to_string().starts_with("terminal uncovered"));

        let bad = EmbeddedTree::from_parts(
            vec![Point::int(0, 0), Point::int(1, 1)],
            vec![TreeEdge::new(0, 1, Embedding::Straight), TreeEdge::new(0, 7, Embedding::Straight)],
            vec![],
        );
        assert!(validate_tree(&bad, &[]).unwrap_err().contains(&Violation::EdgeOutOfRange { edge: 1 }));
    }

    #[test]
    fn split_preserves_length_and_shape() {
        let mut t = path(&[(0, 0), (4, 2)]);
        let before = t.length();
        let v = t.ensure_vertex(&Point::int(4, 1)).unwrap();
        assert_eq!(t.length(), before);
        assert_eq!(t.vertices()[v], Point::int(4, 1));
        assert!(t.covers(&Point::int(4, 0)));
        assert_eq!(validate_tree(&t, &[Point::int(2, 0)]), Ok(()));
        assert_eq!(t.ensure_vertex(&Point::int(1, 1)), None);
    }

    #[test]
    fn contraction_keeps_length() {
        let t = path(&[(0, 0), (1, 0), (3, 0), (3, 2)]);
        let t = EmbeddedTree::from_parts(t.vertices().to_vec(), t.edges().to_vec(), vec![0, 3]);
        let c = t.merge_collinear();
        assert_eq!(c.vertices().len(), 3);
        assert_eq!(c.length(), t.length());
        let m = t.contract_monotone_chains();
        assert_eq!(m.vertices().len(), 2);
        assert_eq!(m.length(), t.length());
        assert_eq!(validate_tree(&m, &[Point::int(0, 0), Point::int(3, 2)]), Ok(()));
    }

    fn random_tree() -> impl Strategy<Value = EmbeddedTree> {
        prop::collection::vec((-10i64..10, -10i64..10, any::<bool>(), any::<prop::sample::Index>()), 1..10).prop_map(
            |raw| {
                let vertices: Vec<Point> = raw.iter().map(|&(x, y, _, _)| Point::int(x, y)).collect();
                let edges = raw
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, (_, _, h, parent))| {
                        let emb = if *h { Embedding::HorizontalFirst } else { Embedding::VerticalFirst };
                        TreeEdge::new(parent.index(i), i, emb)
                    })
                    .collect();
                EmbeddedTree::from_parts(vertices, edges, vec![])
            },
        )
    }

    proptest! {
        #[test]
        fn length_ignores_orientation(t in random_tree()) {
            let flipped = t.with_embeddings(|_, e| match e.embedding {
                Embedding::HorizontalFirst => Embedding::VerticalFirst,
                _ => Embedding::HorizontalFirst,
            });
            prop_assert_eq!(t.length(), flipped.length());
            let seg_total: Coord = t.segments().iter().map(|s| s.length()).sum();
            prop_assert_eq!(seg_total, t.length());
        }

        #[test]
        fn nearest_point_beats_every_vertex(t in random_tree(), qx in -12i64..12, qy in -12i64..12) {
            let q = Point::int(qx, qy);
            let (p, d) = nearest_point_on_tree(&t, &q);
            prop_assert_eq!(l1_dist(&p, &q), d.clone());
            prop_assert!(t.covers(&p));
            for v in t.vertices() {
                prop_assert!(d <= l1_dist(&q, v));
            }
            prop_assert!(d <= sampled_min_distance(&t, &q));
        }
    }
}
