//! Reductions between two-level trees in the plane and ordinary rectilinear
//! Steiner trees in `2 + k` dimensions.
//!
//! Group `i`'s terminals are lifted to height `K` along their own extra
//! axis; the top level lives at height zero. A lifted tree whose Steiner
//! points sit at height zero or at `K` along a single axis is *flat*, and a
//! flat tree with one vertical edge per axis projects back to a two-level
//! tree of length `l - kK`.

mod flow;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use flow::{max_flow_min_cut, FlowGraph, MinCut, INFINITE};

use crate::error::{Error, Result};
use crate::geometry::{bounding_box, l1_dist, Coord, EmbeddedTree, Embedding, Point, Rect, TreeEdge};
use crate::twolevel::{Instance, TwoLevelTree};
use crate::util::UnionFind;

/// A lifted terminal: `layer == 0` is the top level, `layer == i` means the
/// point sits at height `K` on axis `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftedPoint {
    pub base: Point,
    pub layer: usize,
}

impl LiftedPoint {
    pub fn new(base: Point, layer: usize) -> Self {
        LiftedPoint { base, layer }
    }

    pub fn to_vertex(&self, k: usize, height: &Coord) -> LiftedVertex {
        LiftedVertex::at_layer(self.base.clone(), self.layer, k, height)
    }
}

/// Distance between two lifted terminals.
pub fn lifted_distance(a: &LiftedPoint, b: &LiftedPoint, height: &Coord) -> Coord {
    let base = l1_dist(&a.base, &b.base);
    match (a.layer, b.layer) {
        (x, y) if x == y => base,
        (0, _) | (_, 0) => base + height,
        _ => base + height + height,
    }
}

/// A point of `R^(2+k)`: plane coordinates plus one height per lifted axis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftedVertex {
    pub base: Point,
    pub lift: Vec<Coord>,
}

impl fmt::Debug for LiftedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {:?})", self.base.x, self.base.y, self.lift)
    }
}

/// One coordinate axis of `R^(2+k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Lift(usize),
}

impl LiftedVertex {
    pub fn at_layer(base: Point, layer: usize, k: usize, height: &Coord) -> Self {
        let mut lift = vec![Coord::zero(); k];
        if layer > 0 {
            lift[layer - 1] = height.clone();
        }
        LiftedVertex { base, lift }
    }

    pub fn dist(&self, other: &LiftedVertex) -> Coord {
        let lifted: Coord = self.lift.iter().zip(&other.lift).map(|(a, b)| (a - b).abs()).sum();
        l1_dist(&self.base, &other.base) + lifted
    }

    /// Axes along which the two vertices differ.
    pub fn differing_axes(&self, other: &LiftedVertex) -> Vec<Axis> {
        let mut out = Vec::new();
        if self.base.x != other.base.x {
            out.push(Axis::X);
        }
        if self.base.y != other.base.y {
            out.push(Axis::Y);
        }
        out.extend((0..self.lift.len()).filter(|&j| self.lift[j] != other.lift[j]).map(Axis::Lift));
        out
    }

    /// Layer of a flat position, or `None` if the vertex is not flat.
    pub fn layer(&self, height: &Coord) -> Option<usize> {
        let mut layer = 0;
        for (j, h) in self.lift.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            if h != height || layer != 0 {
                return None;
            }
            layer = j + 1;
        }
        Some(layer)
    }
}

/// A Steiner tree in `R^(2+k)` whose edges are axis-parallel segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedTree {
    k: usize,
    vertices: Vec<LiftedVertex>,
    edges: Vec<(usize, usize)>,
    terminals: Vec<LiftedPoint>,
}

impl LiftedTree {
    /// Checks dimensions and that every edge moves along at most one axis.
    /// Tree structure is checked separately by [`LiftedTree::validate`].
    pub fn new(
        k: usize,
        vertices: Vec<LiftedVertex>,
        edges: Vec<(usize, usize)>,
        terminals: Vec<LiftedPoint>,
    ) -> Result<Self> {
        if let Some(v) = vertices.iter().find(|v| v.lift.len() != k) {
            return Err(Error::InvalidLiftedTree(format!("vertex {v:?} is not in {} dimensions", k + 2)));
        }
        if let Some(t) = terminals.iter().find(|t| t.layer > k) {
            return Err(Error::InvalidLiftedTree(format!("terminal layer {} exceeds k = {k}", t.layer)));
        }
        for &(a, b) in &edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidLiftedTree(format!("edge ({a}, {b}) out of range")));
            }
            if vertices[a].differing_axes(&vertices[b]).len() > 1 {
                return Err(Error::InvalidLiftedTree(format!(
                    "edge {:?} - {:?} is not axis-parallel",
                    vertices[a], vertices[b]
                )));
            }
        }
        Ok(LiftedTree { k, vertices, edges, terminals })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[LiftedVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn terminals(&self) -> &[LiftedPoint] {
        &self.terminals
    }

    pub fn length(&self) -> Coord {
        self.edges.iter().map(|&(a, b)| self.vertices[a].dist(&self.vertices[b])).sum()
    }

    /// Edges that move along lifted axis `j` (zero-based).
    pub fn edges_along(&self, j: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| {
                let (a, b) = self.edges[i];
                self.vertices[a].differing_axes(&self.vertices[b]) == [Axis::Lift(j)]
            })
            .collect()
    }

    fn covers(&self, p: &LiftedVertex) -> bool {
        if self.vertices.contains(p) {
            return true;
        }
        self.edges.iter().any(|&(a, b)| {
            let (u, v) = (&self.vertices[a], &self.vertices[b]);
            let within = |lo: &Coord, hi: &Coord, x: &Coord| (lo <= x && x <= hi) || (hi <= x && x <= lo);
            within(&u.base.x, &v.base.x, &p.base.x)
                && within(&u.base.y, &v.base.y, &p.base.y)
                && (0..self.k).all(|j| within(&u.lift[j], &v.lift[j], &p.lift[j]))
        })
    }

    /// Tree structure and terminal coverage, given the lifting height.
    pub fn validate(&self, height: &Coord) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::InvalidLiftedTree("no vertices".into()));
        }
        if self.edges.len() + 1 != n {
            return Err(Error::InvalidLiftedTree(format!("{} edges for {n} vertices", self.edges.len())));
        }
        let mut uf = UnionFind::new(n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        if uf.components() != 1 {
            return Err(Error::InvalidLiftedTree("not connected".into()));
        }
        for t in &self.terminals {
            if !self.covers(&t.to_vertex(self.k, height)) {
                return Err(Error::InvalidLiftedTree(format!("terminal {t:?} uncovered")));
            }
        }
        Ok(())
    }

    fn terminal_positions(&self, height: &Coord) -> BTreeSet<LiftedVertex> {
        self.terminals.iter().map(|t| t.to_vertex(self.k, height)).collect()
    }

    /// Projection of every vertex into `B(P) x [0, K]^k`, where `B(P)` is the
    /// terminals' bounding box. Never lengthens an edge and keeps every
    /// edge axis-parallel.
    fn clamped(&self, height: &Coord) -> Result<LiftedTree> {
        let bases: Vec<Point> = self.terminals.iter().map(|t| t.base.clone()).collect();
        let bbox: Rect = bounding_box(&bases).map_err(|_| Error::InvalidLiftedTree("no terminals".into()))?;
        let zero = Coord::zero();
        let vertices = self
            .vertices
            .iter()
            .map(|v| LiftedVertex {
                base: bbox.clamp(&v.base),
                lift: v.lift.iter().map(|h| h.clamp_to(&zero, height)).collect(),
            })
            .collect();
        Ok(LiftedTree { k: self.k, vertices, edges: self.edges.clone(), terminals: self.terminals.clone() })
            .map(|t| t.cleaned(height))
    }

    /// Merges coincident vertices, drops zero-length edges, keeps a minimum
    /// spanning forest (the longest edge of any cycle goes, ties by vertex
    /// order) and prunes Steiner leaves.
    fn cleaned(&self, height: &Coord) -> LiftedTree {
        let terminal_pos = self.terminal_positions(height);
        let mut index: BTreeMap<&LiftedVertex, usize> = BTreeMap::new();
        for v in &self.vertices {
            let next = index.len();
            index.entry(v).or_insert(next);
        }
        let mut merged: Vec<LiftedVertex> = vec![LiftedVertex { base: Point::default(), lift: vec![] }; index.len()];
        for (v, &i) in &index {
            merged[i] = (*v).clone();
        }
        let remap: Vec<usize> = self.vertices.iter().map(|v| index[v]).collect();
        let mut candidates: Vec<(Coord, &LiftedVertex, &LiftedVertex, usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (remap[a], remap[b]))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| {
                let (a, b) = if merged[a] <= merged[b] { (a, b) } else { (b, a) };
                (merged[a].dist(&merged[b]), &merged[a], &merged[b], a, b)
            })
            .collect();
        candidates.sort();
        let mut uf = UnionFind::new(merged.len());
        let mut edges: Vec<(usize, usize)> =
            candidates.into_iter().filter(|c| uf.union(c.3, c.4)).map(|c| (c.3, c.4)).collect();
        loop {
            let mut deg = vec![0usize; merged.len()];
            for &(a, b) in &edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            let before = edges.len();
            edges.retain(|&(a, b)| {
                let leaf = |v: usize| deg[v] == 1 && !terminal_pos.contains(&merged[v]);
                !(leaf(a) || leaf(b))
            });
            if edges.len() == before {
                break;
            }
        }
        let mut used = vec![false; merged.len()];
        for &(a, b) in &edges {
            used[a] = true;
            used[b] = true;
        }
        for (i, v) in merged.iter().enumerate() {
            if terminal_pos.contains(v) {
                used[i] = true;
            }
        }
        if edges.is_empty() && !used.iter().any(|&u| u) {
            used[0] = true;
        }
        let mut compact = vec![usize::MAX; merged.len()];
        let mut vertices = Vec::new();
        for (i, v) in merged.into_iter().enumerate() {
            if used[i] {
                compact[i] = vertices.len();
                vertices.push(v);
            }
        }
        let edges = edges.into_iter().map(|(a, b)| (compact[a], compact[b])).collect();
        LiftedTree { k: self.k, vertices, edges, terminals: self.terminals.clone() }
    }
}

/// A lifted tree whose every vertex is at height zero or at height `K` on
/// exactly one lifted axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTree {
    tree: LiftedTree,
    layers: Vec<usize>,
}

impl FlatTree {
    pub fn new(tree: LiftedTree, height: &Coord) -> Result<Self> {
        let layers = tree
            .vertices
            .iter()
            .map(|v| v.layer(height).ok_or_else(|| Error::InvalidLiftedTree(format!("vertex {v:?} is not flat"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FlatTree { tree, layers })
    }

    pub fn tree(&self) -> &LiftedTree {
        &self.tree
    }

    pub fn into_tree(self) -> LiftedTree {
        self.tree
    }

    pub fn layer(&self, v: usize) -> usize {
        self.layers[v]
    }

    pub fn length(&self) -> Coord {
        self.tree.length()
    }

    /// Number of vertical edges joining the top level to layer `i`.
    pub fn vertical_edge_count(&self, layer: usize) -> usize {
        self.tree.edges_along(layer - 1).len()
    }
}

fn check_height(terminal_bases: &[Point], height: &Coord) -> Result<()> {
    let min = bounding_box(terminal_bases)?.semiperimeter();
    if *height < min {
        return Err(Error::LiftTooSmall { k: Box::new(height.clone()), min: Box::new(min) });
    }
    Ok(())
}

/// Lifted terminal set: every terminal of group `i` (1-based) at layer `i`.
pub fn lift_instance(instance: &Instance, height: &Coord) -> Result<Vec<LiftedPoint>> {
    if instance.k() < 2 {
        return Err(Error::TooFewGroups(instance.k()));
    }
    check_height(&instance.all_points(), height)?;
    Ok(instance
        .groups()
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.iter().map(move |p| LiftedPoint::new(p.clone(), i + 1)))
        .collect())
}

/// Embeds the top tree at height zero and subtree `i` at layer `i`, joined
/// by a vertical edge of length `K` at each connection point. L-shaped edges
/// are split at their bends so that every lifted edge is axis-parallel.
pub fn lift_tree(instance: &Instance, t: &TwoLevelTree, height: &Coord) -> Result<LiftedTree> {
    let terminals = lift_instance(instance, height)?;
    let k = instance.k();
    if t.subtrees().len() != k || t.connection_points().len() != k {
        return Err(Error::ArityMismatch { expected: k, got: t.subtrees().len() });
    }
    let mut vertices: Vec<LiftedVertex> = Vec::new();
    let mut edges = Vec::new();
    let mut anchors = Vec::with_capacity(k);
    let mut top = t.top().clone();
    let top_anchor: Vec<usize> = t
        .connection_points()
        .iter()
        .map(|q| top.ensure_vertex(q).ok_or_else(|| Error::InvalidLiftedTree(format!("{q} not on the top tree"))))
        .collect::<Result<_>>()?;
    let top_offset = embed_layer(&top, 0, k, height, &mut vertices, &mut edges);
    for (i, sub) in t.subtrees().iter().enumerate() {
        let mut sub = sub.clone();
        let q = &t.connection_points()[i];
        let at =
            sub.ensure_vertex(q).ok_or_else(|| Error::InvalidLiftedTree(format!("{q} not on subtree {}", i + 1)))?;
        let offset = embed_layer(&sub, i + 1, k, height, &mut vertices, &mut edges);
        anchors.push(offset + at);
    }
    for (i, &a) in anchors.iter().enumerate() {
        edges.push((top_offset + top_anchor[i], a));
    }
    LiftedTree::new(k, vertices, edges, terminals)
}

/// Appends `t`'s vertices at `layer`, plus any bend points; returns the
/// index of `t`'s first vertex.
fn embed_layer(
    t: &EmbeddedTree,
    layer: usize,
    k: usize,
    height: &Coord,
    vertices: &mut Vec<LiftedVertex>,
    edges: &mut Vec<(usize, usize)>,
) -> usize {
    let offset = vertices.len();
    vertices.extend(t.vertices().iter().map(|p| LiftedVertex::at_layer(p.clone(), layer, k, height)));
    for e in t.edges() {
        match t.bend(e) {
            Some(c) => {
                let b = vertices.len();
                vertices.push(LiftedVertex::at_layer(c, layer, k, height));
                edges.push((offset + e.a, b));
                edges.push((b, offset + e.b));
            }
            None => edges.push((offset + e.a, offset + e.b)),
        }
    }
    offset
}

/// Turns any lifted Steiner tree into a flat one of no greater length.
///
/// For each lifted axis, the tree minus its segments along that axis falls
/// apart into pieces at fixed heights. A minimum cut between the pieces at
/// height zero and those at height `K` (cut edges = segments along the
/// axis) decides which pieces drop to zero and which rise to `K`; segments
/// inside a side collapse, cut segments grow to `K`. Afterwards any vertex
/// raised on two or more axes is lowered to the top level.
pub fn flatten(t: &LiftedTree, height: &Coord) -> Result<FlatTree> {
    t.validate(height)?;
    let mut cur = t.clamped(height)?;
    for j in 0..cur.k {
        cur = flatten_axis(&cur, j, height)?;
    }
    let lowered = cur
        .vertices
        .iter()
        .map(|v| {
            let raised = v.lift.iter().filter(|h| !h.is_zero()).count();
            if raised >= 2 {
                LiftedVertex { base: v.base.clone(), lift: vec![Coord::zero(); cur.k] }
            } else {
                v.clone()
            }
        })
        .collect();
    let cur = LiftedTree { k: cur.k, vertices: lowered, edges: cur.edges.clone(), terminals: cur.terminals.clone() }
        .cleaned(height);
    FlatTree::new(cur, height)
}

fn flatten_axis(t: &LiftedTree, j: usize, height: &Coord) -> Result<LiftedTree> {
    let n = t.vertices.len();
    let straight: BTreeSet<usize> = t.edges_along(j).into_iter().collect();
    let mut uf = UnionFind::new(n);
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        if !straight.contains(&i) {
            uf.union(a, b);
        }
    }
    let mut piece_of = vec![usize::MAX; n];
    let mut piece_ids: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, piece) in piece_of.iter_mut().enumerate() {
        let root = uf.find(v);
        let next = piece_ids.len();
        *piece = *piece_ids.entry(root).or_insert(next);
    }
    let pieces = piece_ids.len();
    let (s, sink) = (pieces, pieces + 1);
    let mut g = FlowGraph::new(pieces + 2);
    let mut attached = vec![false; pieces];
    for (v, &p) in piece_of.iter().enumerate() {
        if attached[p] {
            continue;
        }
        attached[p] = true;
        let h = &t.vertices[v].lift[j];
        if h.is_zero() {
            g.add_edge_with_capacity(s, p, INFINITE);
        } else if h == height {
            g.add_edge_with_capacity(p, sink, INFINITE);
        }
    }
    for &i in &straight {
        let (a, b) = t.edges[i];
        g.add_edge(piece_of[a], piece_of[b]);
    }
    let cut = max_flow_min_cut(&g, s, sink)?;
    if cut.value >= INFINITE {
        return Err(Error::InvalidLiftedTree(format!("a connected piece spans both ends of axis {j}")));
    }
    let vertices = t
        .vertices
        .iter()
        .enumerate()
        .map(|(v, x)| {
            let mut x = x.clone();
            x.lift[j] = if cut.source_side[piece_of[v]] { Coord::zero() } else { height.clone() };
            x
        })
        .collect();
    let out = LiftedTree { k: t.k, vertices, edges: t.edges.clone(), terminals: t.terminals.clone() };
    Ok(out.cleaned(height))
}

/// Reduces a flat tree to one vertical edge per lifted axis.
///
/// While an axis has two vertical edges `e` and `e'`, `e'` is removed and
/// the two halves are rejoined inside the top level or the raised layer by
/// an edge between the endpoint of `e'` on the far side and the endpoint of
/// `e` in the same layer. That edge is at most the base box semiperimeter,
/// which does not exceed `K`.
pub fn normalize_single_edges(t: &FlatTree, height: &Coord) -> Result<FlatTree> {
    let bases: Vec<Point> = t.tree.terminals.iter().map(|p| p.base.clone()).collect();
    check_height(&bases, height)?;
    let mut cur = t.tree.clamped(height)?;
    for j in 0..cur.k {
        loop {
            let mut vertical = cur.edges_along(j);
            if vertical.len() < 2 {
                break;
            }
            // Lowest base point first, so the retained edge is deterministic.
            let low_end = |i: usize| {
                let (a, b) = cur.edges[i];
                if cur.vertices[a].lift[j].is_zero() {
                    (a, b)
                } else {
                    (b, a)
                }
            };
            vertical.sort_by(|&x, &y| cur.vertices[low_end(x).0].base.cmp(&cur.vertices[low_end(y).0].base));
            let (keep, drop) = (vertical[0], vertical[1]);
            let mut uf = UnionFind::new(cur.vertices.len());
            for (i, &(a, b)) in cur.edges.iter().enumerate() {
                if i != drop {
                    uf.union(a, b);
                }
            }
            let (keep_low, keep_high) = low_end(keep);
            let (drop_low, drop_high) = low_end(drop);
            let (from, to) =
                if uf.find(drop_low) != uf.find(keep_low) { (keep_low, drop_low) } else { (keep_high, drop_high) };
            let mut vertices = cur.vertices.clone();
            let mut edges: Vec<(usize, usize)> =
                cur.edges.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &e)| e).collect();
            let (u, v) = (&vertices[from], &vertices[to]);
            if u.base.is_axis_aligned_with(&v.base) {
                edges.push((from, to));
            } else {
                let bend = LiftedVertex { base: Point::new(u.base.x.clone(), v.base.y.clone()), lift: u.lift.clone() };
                let b = vertices.len();
                vertices.push(bend);
                edges.push((from, b));
                edges.push((b, to));
            }
            cur = LiftedTree { k: cur.k, vertices, edges, terminals: cur.terminals.clone() }.cleaned(height);
        }
    }
    FlatTree::new(cur, height)
}

/// Removes the `k` vertical edges of a normalized flat tree and projects the
/// `k + 1` remaining pieces to the plane. Connection point `q_i` is the base
/// of the vertical edge on axis `i`.
pub fn project_to_two_level(t: &FlatTree, height: &Coord) -> Result<TwoLevelTree> {
    let tree = &t.tree;
    let k = tree.k;
    let mut vertical = Vec::with_capacity(k);
    for j in 0..k {
        let along = tree.edges_along(j);
        if along.len() != 1 {
            return Err(Error::InvalidLiftedTree(format!(
                "layer {} has {} vertical edges, expected exactly one",
                j + 1,
                along.len()
            )));
        }
        let (a, b) = tree.edges[along[0]];
        if tree.vertices[a].dist(&tree.vertices[b]) != *height {
            return Err(Error::InvalidLiftedTree(format!(
                "vertical edge of layer {} is not of height {height}",
                j + 1
            )));
        }
        vertical.push(along[0]);
    }
    let vertical_set: BTreeSet<usize> = vertical.iter().copied().collect();
    let mut uf = UnionFind::new(tree.vertices.len());
    for (i, &(a, b)) in tree.edges.iter().enumerate() {
        if !vertical_set.contains(&i) {
            uf.union(a, b);
        }
    }
    let connection_points: Vec<Point> = vertical.iter().map(|&i| tree.vertices[tree.edges[i].0].base.clone()).collect();

    let mut layers: Vec<EmbeddedTree> = Vec::with_capacity(k + 1);
    for layer in 0..=k {
        let members: Vec<usize> = (0..tree.vertices.len()).filter(|&v| t.layers[v] == layer).collect();
        if members.is_empty() {
            return Err(Error::InvalidLiftedTree(format!("layer {layer} is empty")));
        }
        let root = uf.find(members[0]);
        if members.iter().any(|&v| uf.find(v) != root) {
            return Err(Error::InvalidLiftedTree(format!("layer {layer} is not connected")));
        }
        let mut local = BTreeMap::new();
        let mut points = Vec::with_capacity(members.len());
        for &v in &members {
            local.insert(v, points.len());
            points.push(tree.vertices[v].base.clone());
        }
        let edges = tree
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !vertical_set.contains(i))
            .filter_map(|(_, &(a, b))| Some(TreeEdge::new(*local.get(&a)?, *local.get(&b)?, Embedding::Straight)))
            .collect();
        let mut sub = EmbeddedTree::from_parts(points, edges, Vec::new());
        let required: Vec<Point> = if layer == 0 {
            connection_points.clone()
        } else {
            let mut r: Vec<Point> =
                tree.terminals.iter().filter(|p| p.layer == layer).map(|p| p.base.clone()).collect();
            r.push(connection_points[layer - 1].clone());
            r
        };
        for p in &required {
            sub.mark_terminal(p)
                .ok_or_else(|| Error::InvalidLiftedTree(format!("{p} not covered in layer {layer}")))?;
        }
        layers.push(sub.merge_collinear());
    }
    let top = layers.remove(0);
    Ok(TwoLevelTree::new(top, layers, connection_points))
}
