use crate::error::Result;
use crate::geometry::{l1_dist, Coord, EmbeddedTree, Embedding, Point, Rect, TreeEdge};
use crate::rsmt::{approx_steiner, SteinerSubroutine};
use crate::util::IntegerScale;

use super::spanning_tree;

/// Cheaper of two subtrees for `group` with connection point `q`:
/// `sub(group + q)`, or `sub(group)` with one edge re-embedded to pass as
/// close to `q` as possible plus a spur from there to `q`. Ties keep the
/// first.
///
/// Monotone runs of degree-2 Steiner vertices are contracted first. Each
/// remaining edge may then be re-embedded as any staircase inside its
/// endpoints' box at no cost, so the closest reachable point of edge `e` is
/// `q` clamped to that box.
pub fn refine_subtree(group: &[Point], q: &Point, sub: &SteinerSubroutine) -> Result<EmbeddedTree> {
    let mut with_q = group.to_vec();
    with_q.push(q.clone());
    let direct = spanning_tree(&with_q, sub)?;
    if group.contains(q) {
        return Ok(direct);
    }
    let spur = spur_tree(group, q, sub)?;
    Ok(if spur.length() < direct.length() { spur } else { direct })
}

fn spur_tree(group: &[Point], q: &Point, sub: &SteinerSubroutine) -> Result<EmbeddedTree> {
    let base = approx_steiner(group, sub)?.contract_monotone_chains();
    let (p, edge) = closest_reachable(&base, q);
    let mut t = match edge {
        Some(i) => split_through(&base, i, &p),
        None => base,
    };
    let at = t.ensure_vertex(&p).expect("split point is on the tree");
    if p != *q {
        let emb = if p.is_axis_aligned_with(q) { Embedding::Straight } else { Embedding::HorizontalFirst };
        t.attach(at, q.clone(), emb);
    }
    t.mark_terminal(q);
    Ok(t)
}

/// The point nearest `q` over every vertex and every edge's box, smallest
/// first on ties, with the edge it came from.
fn closest_reachable(base: &EmbeddedTree, q: &Point) -> (Point, Option<usize>) {
    let scale = IntegerScale::for_values(base.vertices().iter().chain([q]).flat_map(|p| [&p.x, &p.y]));
    let scaled: Option<Vec<(i128, i128)>> =
        base.vertices().iter().chain([q]).map(|p| Some((scale.scale_i128(&p.x)?, scale.scale_i128(&p.y)?))).collect();
    let Some(mut scaled) = scaled else {
        return closest_reachable_exact(base, q);
    };
    let (qx, qy) = scaled.pop().expect("q was appended");
    let dist = |(x, y): (i128, i128)| (x - qx).abs() + (y - qy).abs();
    let mut best: Option<(i128, (i128, i128), Option<usize>)> = None;
    let mut consider = |p: (i128, i128), edge: Option<usize>| {
        let d = dist(p);
        if best.map_or(true, |(bd, bp, _)| (d, p) < (bd, bp)) {
            best = Some((d, p, edge));
        }
    };
    for &v in &scaled {
        consider(v, None);
    }
    for (i, e) in base.edges().iter().enumerate() {
        let (a, b) = (scaled[e.a], scaled[e.b]);
        consider((qx.clamp(a.0.min(b.0), a.0.max(b.0)), qy.clamp(a.1.min(b.1), a.1.max(b.1))), Some(i));
    }
    let (_, p, edge) = best.expect("trees have a vertex");
    match edge {
        Some(i) => {
            let e = &base.edges()[i];
            (Rect::spanning(&base.vertices()[e.a], &base.vertices()[e.b]).clamp(q), Some(i))
        }
        None => {
            let v = scaled.iter().position(|&s| s == p).expect("candidate is a vertex");
            (base.vertices()[v].clone(), None)
        }
    }
}

fn closest_reachable_exact(base: &EmbeddedTree, q: &Point) -> (Point, Option<usize>) {
    let mut best: Option<(Coord, Point, Option<usize>)> = None;
    let mut consider = |p: Point, edge: Option<usize>| {
        let d = l1_dist(&p, q);
        if best.as_ref().map_or(true, |(bd, bp, _)| (&d, &p) < (bd, bp)) {
            best = Some((d, p, edge));
        }
    };
    for v in base.vertices() {
        consider(v.clone(), None);
    }
    for (i, e) in base.edges().iter().enumerate() {
        let (a, b) = (&base.vertices()[e.a], &base.vertices()[e.b]);
        consider(Rect::spanning(a, b).clamp(q), Some(i));
    }
    let (_, p, edge) = best.expect("trees have a vertex");
    (p, edge)
}

/// Re-embeds edge `i` as a staircase through `p`, which must lie in the box
/// spanned by the edge's endpoints.
fn split_through(t: &EmbeddedTree, i: usize, p: &Point) -> EmbeddedTree {
    let e = &t.edges()[i];
    let (a, b) = (&t.vertices()[e.a], &t.vertices()[e.b]);
    if p == a || p == b {
        return t.clone();
    }
    let mut vertices = t.vertices().to_vec();
    let v = vertices.len();
    vertices.push(p.clone());
    let emb = |x: &Point| if x.is_axis_aligned_with(p) { Embedding::Straight } else { Embedding::HorizontalFirst };
    let mut edges = t.edges().to_vec();
    edges[i] = TreeEdge::new(e.a, v, emb(a));
    edges.push(TreeEdge::new(v, e.b, emb(b)));
    EmbeddedTree::from_parts(vertices, edges, t.terminal_indices().to_vec())
}
